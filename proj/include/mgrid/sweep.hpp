#pragma once

#include "mgrid/config.hpp"
#include "mgrid/metrics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mgrid {

// Cross-product sweep over a subset of {N, topology, policy, p_err,
// lambda_min} around a base config. Points are enumerated in a fixed order:
// N outermost, then topology, policy, p_err, lambda_min. Replicate r of
// point p runs with seed derive_seed(base_seed, p * replicates + r), so
// results do not depend on scheduling.
struct SweepSpec {
    SystemConfig base;
    std::vector<int> N_axis;
    std::vector<TopologyKind> topology_axis;
    std::vector<PolicyKind> policy_axis;
    std::vector<double> p_err_axis;
    std::vector<double> lambda_min_axis;
    int replicates = 20;
    std::uint64_t base_seed = 1;
    std::string out_dir = ".";
};

struct MetricAggregate {
    double mean = 0.0;
    double stddev = 0.0; // sample convention, 0 for a single replicate
};

struct PointResult {
    std::size_t index = 0;
    SystemConfig config; // point config; per-replicate seeds below
    std::vector<std::uint64_t> seeds;
    std::vector<SummaryStats> stats; // one per completed replicate
    MetricAggregate c_avg, P_util, fairness, n_mean, n_std, n_cv;
    bool failed = false;
    std::string error;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<PointResult> points;
    bool any_failed = false;
};

// Reads a sweep spec from JSON. Plain SystemConfig keys at the top level
// overlay the defaults; "axes", "replicates", "base_seed" and "out_dir" are
// the sweep-specific keys. Unknown keys anywhere are an error.
SweepSpec parse_sweep_file(const std::string& path);

// Expands the cross product without running anything.
std::vector<SystemConfig> enumerate_points(const SweepSpec& spec);

// Runs every point x replicate (optionally across threads), reduces each
// trace to SummaryStats, aggregates per point. Per-point failures are
// recorded and the remaining points continue.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 1);

// summary.csv (one row per replicate), aggregate.csv (one row per point)
// and summary.json sidecar (spec + seeds + version) under out_dir.
void export_summary(const SweepResult& result, const std::string& out_dir);

} // namespace mgrid
