#include "mgrid/engine.hpp"

#include "mgrid/channel.hpp"
#include "mgrid/decision.hpp"

#include <numeric>

namespace mgrid {

SimState init_state(const SystemConfig& cfg, RandomStream& rng) {
    require_valid(cfg);
    SimState st;
    st.t = 0;
    st.agents.resize(static_cast<std::size_t>(cfg.N));
    for (auto& ag : st.agents) {
        ag.a = 1;
        ag.s = rng.uniform01();
        // omega is always drawn so the s/S streams do not shift when the
        // policy changes under the same seed.
        ag.omega = rng.uniform(cfg.omega_center - cfg.omega_halfwidth,
                               cfg.omega_center + cfg.omega_halfwidth);
        ag.S = static_cast<int>(rng.uniform_below(3)) - 1;
        ag.lambda_prev = 0.0;
    }
    st.recompute_n();
    st.signal_active = false;
    return st;
}

static Topology build_topology(const SystemConfig& cfg, std::uint64_t seed) {
    if (cfg.topology == TopologyKind::Ring) return Topology::ring(cfg.N);
    RandomStream topo_rng(derive_seed(seed, kStreamTopology));
    return Topology::watts_strogatz(cfg.N, cfg.ws_k, cfg.ws_beta, topo_rng);
}

Simulator::Simulator(const SystemConfig& cfg)
    : cfg_(cfg),
      cp_(CircuitParams::from_config(cfg)),
      n_opt_(optimal_resistors(cp_)),
      topo_(build_topology(cfg, cfg.seed)),
      rounds_rng_(derive_seed(cfg.seed, kStreamRounds)) {
    require_valid(cfg_);
    RandomStream init_rng(derive_seed(cfg_.seed, kStreamInit));
    state_ = init_state(cfg_, init_rng);
    refresh_objectives(/*first=*/true);
}

double Simulator::power_unit_for(long n) const {
    const double denom = static_cast<double>(n) * cp_.R_V + cp_.R;
    return cp_.V_eff * cp_.V_eff * cp_.R / (denom * denom);
}

void Simulator::refresh_objectives(bool first) {
    const double unit = power_unit_for(state_.n);
    state_.price_now = cfg_.policy == PolicyKind::Pricing
                           ? price(cfg_.price_on_previous_n && !first ? prev_n_ : state_.n,
                                   n_opt_, cfg_.p1, cfg_.p2)
                           : 0.0;
    for (auto& ag : state_.agents) {
        const double P_i = static_cast<double>(ag.a) * unit;
        const double obj = objective(cfg_, P_i, ag.omega, state_.price_now);
        if (first) {
            ag.lambda_prev = 0.0;
        } else if (cfg_.policy == PolicyKind::Pricing) {
            ag.lambda_prev = benefit_gain(obj, ag.obj_prev, kBenefitGainEps);
        } else {
            ag.lambda_prev = relative_gain(obj, ag.obj_prev);
        }
        ag.obj_prev = obj;
    }
}

StepRecord Simulator::snapshot() const {
    StepRecord rec;
    rec.t = state_.t;
    rec.n = state_.n;
    rec.power_unit = power_unit_for(state_.n);
    rec.signal = state_.signal_active;
    rec.price = state_.price_now;
    rec.states.reserve(state_.agents.size());
    rec.a.reserve(state_.agents.size());
    for (const auto& ag : state_.agents) {
        rec.states.push_back(static_cast<std::int8_t>(ag.S));
        rec.a.push_back(static_cast<std::int32_t>(ag.a));
    }
    return rec;
}

StepRecord Simulator::step() {
    const long n_prev = state_.n;
    state_.signal_active =
        cfg_.policy == PolicyKind::GlobalSignal && static_cast<double>(n_prev) > n_opt_;

    std::vector<int> prev_states;
    prev_states.reserve(state_.agents.size());
    for (const auto& ag : state_.agents) prev_states.push_back(ag.S);

    // All decisions on round t-1 information; draw order is fixed: per agent
    // ascending, its channel draws then its decision draws.
    std::vector<int> new_states(state_.agents.size());
    for (std::size_t i = 0; i < state_.agents.size(); ++i) {
        const auto received = gather_neighbor_states(static_cast<int>(i), topo_, prev_states,
                                                     cfg_.p_err, rounds_rng_);
        const int nb_sum = std::accumulate(received.begin(), received.end(), 0);
        const auto& ag = state_.agents[i];
        new_states[i] = decide({ag.lambda_prev, nb_sum, state_.signal_active, ag.s, ag.S},
                               cfg_.lambda_min, rounds_rng_);
    }

    for (std::size_t i = 0; i < state_.agents.size(); ++i) {
        state_.agents[i].S = new_states[i];
        state_.agents[i].a = apply_action(state_.agents[i].a, new_states[i]);
    }
    state_.recompute_n();
    prev_n_ = n_prev;
    refresh_objectives(/*first=*/false);
    ++state_.t;
    return snapshot();
}

Trace run(const SystemConfig& cfg) {
    Simulator sim(cfg);
    Trace trace;
    trace.config = cfg;
    trace.seed = cfg.seed;
    trace.cp = sim.circuit();
    trace.n_opt = sim.n_opt();
    trace.records.reserve(static_cast<std::size_t>(cfg.T) + 1);
    trace.records.push_back(sim.snapshot());
    for (long t = 0; t < cfg.T; ++t) trace.records.push_back(sim.step());
    return trace;
}

} // namespace mgrid
