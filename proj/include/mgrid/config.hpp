#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgrid {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TopologyKind { Ring, WattsStrogatz };
enum class PolicyKind { Baseline, GlobalSignal, Pricing };

std::string to_string(TopologyKind k);
std::string to_string(PolicyKind p);
TopologyKind topology_from_string(const std::string& s);
PolicyKind policy_from_string(const std::string& s);

// Every physical, network, policy and run parameter of a single simulation.
// The actual load resistor value is R = N * R_0.
struct SystemConfig {
    int N = 10;                 // number of agents
    double V = 1.0;             // source voltage [V]
    double R_V = 2.0;           // source resistor [ohm]
    double R_0 = 200.0;         // per-size-normalized load resistance [ohm]
    double lambda_min = 0.005;  // minimum gain threshold
    double p_err = 0.01;        // link error probability

    TopologyKind topology = TopologyKind::Ring;
    int ws_k = 4;               // Watts-Strogatz mean degree (even)
    double ws_beta = 0.1;       // Watts-Strogatz rewiring probability

    PolicyKind policy = PolicyKind::Baseline;
    double alpha = 0.2;         // utility curvature (Pricing)
    double omega_center = 2.05; // valuation distribution center (Pricing)
    double omega_halfwidth = 0.05;
    double p1 = 0.2;            // price while n <= n_opt
    double p2 = 5.0;            // price while n > n_opt

    bool scale_voltage_with_sqrt_N = false; // effective voltage V * sqrt(N)
    bool price_on_previous_n = false;       // settle price on n[t-1] instead of n[t]

    long T = 5000;              // simulation steps
    long burn_in = 1000;        // steps excluded from time averages
    std::uint64_t seed = 1;
};

// Collects every violated invariant; empty result means the config is valid.
std::vector<std::string> validate_config(const SystemConfig& cfg);

// Throws ConfigError listing all violations.
void require_valid(const SystemConfig& cfg);

} // namespace mgrid
