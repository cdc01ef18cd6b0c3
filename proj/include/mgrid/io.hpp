#pragma once

#include "mgrid/metrics.hpp"
#include "mgrid/state.hpp"
#include "mgrid/topology.hpp"

#include <string>

namespace mgrid {

inline constexpr const char* kVersion = "mgrid 0.1.0";

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CSV with columns t,n,P_all,signal,price; with per_agent also S_i and a_i
// blocks. Doubles printed with 17 significant digits so reloads are exact.
void export_timeseries(const Trace& trace, const std::string& path, bool per_agent);

// Reads a per-agent timeseries CSV back into a trace (circuit parameters are
// not recoverable from the file; power_unit is rebuilt from P_all / n).
Trace load_timeseries(const std::string& path);

// Portable pixmap (P3), one row per time step, one column per agent:
// defect red, cooperate white, ignore black.
void export_state_raster(const Trace& trace, const std::string& path);

// One "i j" pair per line, i < j, agents 0-based.
void export_edge_list(const Topology& topo, const std::string& path);

// JSON sidecar with the full config, seed, version and summary stats.
void export_run_summary(const Trace& trace, const SummaryStats& stats, const std::string& path);

// Config (de)serialization used by sidecars and the config-file loader.
// Unknown keys are an error.
SystemConfig config_from_json_file(const std::string& path);
std::string config_to_json(const SystemConfig& cfg);

} // namespace mgrid
