#pragma once

#include "mgrid/config.hpp"
#include "mgrid/physics.hpp"

#include <cstdint>
#include <vector>

namespace mgrid {

struct AgentState {
    long a = 1;               // active resistors, >= 1 always
    int S = 0;                // strategy: -1 cooperate, 0 ignore, +1 defect
    double s = 0.0;           // selfishness gene, fixed at init
    double omega = 0.0;       // valuation parameter (consumed under Pricing)
    double obj_prev = 0.0;    // objective at the previous step
    double lambda_prev = 0.0; // gain formed at the end of the previous step
};

struct SimState {
    long t = 0;
    std::vector<AgentState> agents;
    long n = 0;                 // total active resistors, = sum a_i
    bool signal_active = false; // aggregator signal for the current round
    double price_now = 0.0;     // current price under Pricing, 0 otherwise

    long recompute_n() {
        long sum = 0;
        for (const auto& ag : agents) sum += ag.a;
        n = sum;
        return n;
    }
};

// One row of a trace. Per-agent powers are a_i * power_unit exactly, with
// power_unit = V_eff^2 * R / (n*R_V + R)^2 the watts delivered per resistor
// at this step's n.
struct StepRecord {
    long t = 0;
    std::vector<std::int8_t> states;
    std::vector<std::int32_t> a;
    long n = 0;
    double power_unit = 0.0;
    bool signal = false;
    double price = 0.0;

    double power(int i) const { return static_cast<double>(a[static_cast<std::size_t>(i)]) * power_unit; }
    double total_power() const { return static_cast<double>(n) * power_unit; }
};

// Full provenance of one run: the initial record (t = 0) plus T step records.
struct Trace {
    SystemConfig config;
    std::uint64_t seed = 0;
    CircuitParams cp{};
    double n_opt = 0.0;
    std::vector<StepRecord> records;

    int N() const { return config.N; }
    long steps() const { return static_cast<long>(records.size()) - 1; }
};

} // namespace mgrid
