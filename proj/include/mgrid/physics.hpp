#pragma once

#include "mgrid/config.hpp"

namespace mgrid {

// DC circuit constants for a given system size. R = N * R_0 exactly;
// mu0 = R_0 / R_V; P_typ = V_eff^2 / R_V.
struct CircuitParams {
    double V_eff;
    double R_V;
    double R;
    int N;
    double mu0;
    double P_typ;

    static CircuitParams from_config(const SystemConfig& cfg);
    static CircuitParams make(double V_eff, double R_V, double R_0, int N);
};

// Power consumed by an agent holding a_i of the n parallel resistors:
//   P_i = a_i * V_eff^2 * R / (n * R_V + R)^2
double agent_power_exact(long a_i, long n, const CircuitParams& cp);

// Total delivered power with n resistors active. Unimodal in n with maximum
// P_typ / 4 at n = R / R_V (maximum power transfer).
double total_power_exact(long n, const CircuitParams& cp);

// Normalized per-agent power P_typ * a_i * mu0 / (a_avg + mu0)^2, with
// a_avg = n / N. Equals N * agent_power_exact for the same state; kept for
// documentation and cross-checks, the engine uses the exact form.
double power_eq1(long a_i, double a_avg, const CircuitParams& cp);

// n_opt = R / R_V = N * mu0, as a real number.
double optimal_resistors(const CircuitParams& cp);

// (now - prev) / prev. prev must be nonzero; powers always are.
double relative_gain(double obj_now, double obj_prev);

// First-order approximation of the relative power gain under simultaneous
// changes delta_a (own resistors) and delta_r (everyone else's):
//   delta_a / a_i - (2 / N) * (delta_r + delta_a) / (a_avg + mu0)
double approx_gain(long delta_a, long a_i, long delta_r, double a_avg, const CircuitParams& cp);

} // namespace mgrid
