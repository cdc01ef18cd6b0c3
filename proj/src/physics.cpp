#include "mgrid/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace mgrid {

CircuitParams CircuitParams::make(double V_eff, double R_V, double R_0, int N) {
    CircuitParams cp;
    cp.V_eff = V_eff;
    cp.R_V = R_V;
    cp.R = static_cast<double>(N) * R_0;
    cp.N = N;
    cp.mu0 = R_0 / R_V;
    cp.P_typ = V_eff * V_eff / R_V;
    return cp;
}

CircuitParams CircuitParams::from_config(const SystemConfig& cfg) {
    const double v = cfg.scale_voltage_with_sqrt_N
                         ? cfg.V * std::sqrt(static_cast<double>(cfg.N))
                         : cfg.V;
    return make(v, cfg.R_V, cfg.R_0, cfg.N);
}

double agent_power_exact(long a_i, long n, const CircuitParams& cp) {
    if (a_i < 1 || a_i > n) throw std::domain_error("agent_power_exact: need 1 <= a_i <= n");
    const double denom = static_cast<double>(n) * cp.R_V + cp.R;
    return static_cast<double>(a_i) * cp.V_eff * cp.V_eff * cp.R / (denom * denom);
}

double total_power_exact(long n, const CircuitParams& cp) {
    if (n < 1) throw std::domain_error("total_power_exact: need n >= 1");
    const double denom = static_cast<double>(n) * cp.R_V + cp.R;
    return static_cast<double>(n) * cp.V_eff * cp.V_eff * cp.R / (denom * denom);
}

double power_eq1(long a_i, double a_avg, const CircuitParams& cp) {
    if (a_i < 1 || !(a_avg > 0)) throw std::domain_error("power_eq1: non-positive input");
    const double s = a_avg + cp.mu0;
    return cp.P_typ * static_cast<double>(a_i) * cp.mu0 / (s * s);
}

double optimal_resistors(const CircuitParams& cp) {
    return cp.R / cp.R_V;
}

double relative_gain(double obj_now, double obj_prev) {
    if (obj_prev == 0.0) throw std::domain_error("relative_gain: zero reference");
    return (obj_now - obj_prev) / obj_prev;
}

double approx_gain(long delta_a, long a_i, long delta_r, double a_avg, const CircuitParams& cp) {
    const double own = static_cast<double>(delta_a) / static_cast<double>(a_i);
    const double crowd = (2.0 / static_cast<double>(cp.N)) *
                         static_cast<double>(delta_r + delta_a) / (a_avg + cp.mu0);
    return own - crowd;
}

} // namespace mgrid
