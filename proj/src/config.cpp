#include "mgrid/config.hpp"

#include <sstream>

namespace mgrid {

std::string to_string(TopologyKind k) {
    return k == TopologyKind::Ring ? "ring" : "watts-strogatz";
}

std::string to_string(PolicyKind p) {
    switch (p) {
    case PolicyKind::Baseline: return "baseline";
    case PolicyKind::GlobalSignal: return "signal";
    case PolicyKind::Pricing: return "pricing";
    }
    return "?";
}

TopologyKind topology_from_string(const std::string& s) {
    if (s == "ring") return TopologyKind::Ring;
    if (s == "watts-strogatz" || s == "ws") return TopologyKind::WattsStrogatz;
    throw ConfigError("unknown topology '" + s + "' (expected ring | watts-strogatz)");
}

PolicyKind policy_from_string(const std::string& s) {
    if (s == "baseline") return PolicyKind::Baseline;
    if (s == "signal") return PolicyKind::GlobalSignal;
    if (s == "pricing") return PolicyKind::Pricing;
    throw ConfigError("unknown policy '" + s + "' (expected baseline | signal | pricing)");
}

std::vector<std::string> validate_config(const SystemConfig& cfg) {
    std::vector<std::string> v;
    if (cfg.N < 2) v.push_back("N must be >= 2");
    if (!(cfg.V > 0)) v.push_back("V must be > 0");
    if (!(cfg.R_V > 0)) v.push_back("R_V must be > 0");
    if (!(cfg.R_0 > 0)) v.push_back("R_0 must be > 0");
    if (cfg.p_err < 0 || cfg.p_err > 1) v.push_back("p_err out of [0,1]");
    if (cfg.topology == TopologyKind::WattsStrogatz) {
        if (cfg.ws_k <= 0 || cfg.ws_k % 2 != 0) v.push_back("ws_k must be a positive even integer");
        if (cfg.ws_k >= cfg.N) v.push_back("ws_k must be < N");
        if (cfg.ws_beta < 0 || cfg.ws_beta > 1) v.push_back("ws_beta out of [0,1]");
    }
    if (cfg.policy == PolicyKind::Pricing) {
        if (!(cfg.alpha > 0)) v.push_back("alpha must be > 0");
        if (!(cfg.p2 > cfg.p1)) v.push_back("p2 must be > p1");
        if (cfg.p1 < 0) v.push_back("p1 must be >= 0");
        if (cfg.omega_halfwidth < 0) v.push_back("omega_halfwidth must be >= 0");
    }
    if (cfg.T < 0) v.push_back("T must be >= 0");
    if (cfg.burn_in < 0) v.push_back("burn_in must be >= 0");
    if (cfg.T > 0 && cfg.burn_in >= cfg.T) v.push_back("burn_in must be < T");
    return v;
}

void require_valid(const SystemConfig& cfg) {
    const auto v = validate_config(cfg);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid configuration:";
    for (const auto& msg : v) os << "\n  - " << msg;
    throw ConfigError(os.str());
}

} // namespace mgrid
