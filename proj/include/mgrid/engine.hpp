#pragma once

#include "mgrid/config.hpp"
#include "mgrid/rng.hpp"
#include "mgrid/state.hpp"
#include "mgrid/topology.hpp"

namespace mgrid {

// Stream indices hung off the run seed via derive_seed; keeps the agent-init
// stream unaffected by how many draws topology construction consumes.
enum : std::uint64_t {
    kStreamTopology = 0,
    kStreamInit = 1,
    kStreamRounds = 2,
};

// a_i = 1 for every agent; per agent in index order draw s_i, omega_i, S_i;
// obj_prev is the objective of the initial configuration, lambda_prev = 0.
SimState init_state(const SystemConfig& cfg, RandomStream& rng);

// Synchronous round-based simulation. One instance owns the topology, the
// round RNG stream and the evolving state.
class Simulator {
public:
    explicit Simulator(const SystemConfig& cfg);

    const SystemConfig& config() const { return cfg_; }
    const Topology& topology() const { return topo_; }
    const CircuitParams& circuit() const { return cp_; }
    double n_opt() const { return n_opt_; }
    const SimState& state() const { return state_; }

    // One synchronous round: signal from n[t-1], all decisions on round
    // t-1 information, actions applied simultaneously, then price (from the
    // new n unless price_on_previous_n), powers, objectives and gains.
    StepRecord step();

    // Record of the current state without advancing.
    StepRecord snapshot() const;

private:
    SystemConfig cfg_;
    CircuitParams cp_;
    double n_opt_;
    Topology topo_;
    RandomStream rounds_rng_;
    SimState state_;
    long prev_n_ = 0;

    double power_unit_for(long n) const;
    void refresh_objectives(bool first);
};

// init_state then T steps; the trace carries config + seed.
Trace run(const SystemConfig& cfg);

} // namespace mgrid
