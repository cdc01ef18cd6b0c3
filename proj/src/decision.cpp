#include "mgrid/decision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgrid {

int decide(const DecisionInputs& in, double lambda_min, RandomStream& rng) {
    if (in.lambda_prev >= lambda_min) return in.S_prev;
    if (in.signal_active) return -1;
    if (in.neighbor_sum < 0) return -1;
    const double u1 = rng.uniform01();
    if (u1 >= in.s_i) return -1;
    const double u2 = rng.uniform01();
    return u2 < in.s_i ? +1 : 0;
}

long apply_action(long a_i, int S) {
    if (S == +1) return a_i + 1;
    if (S == -1) return std::max(a_i - 1, 1L);
    return a_i;
}

double utility(double P, double omega, double alpha) {
    if (P < 0) throw std::domain_error("utility: negative consumption");
    if (!(alpha > 0)) throw std::domain_error("utility: alpha must be > 0");
    if (P < omega / alpha) return omega * P - 0.5 * alpha * P * P;
    return omega * omega / (2.0 * alpha);
}

double price(long n, double n_opt, double p1, double p2) {
    return static_cast<double>(n) <= n_opt ? p1 : p2;
}

double cost(double p, double P) {
    return p * P;
}

double benefit(double U, double c) {
    return U - c;
}

double benefit_gain(double b_now, double b_prev, double eps) {
    if (!(eps > 0)) throw std::domain_error("benefit_gain: eps must be > 0");
    return (b_now - b_prev) / std::max(std::abs(b_prev), eps);
}

double objective(const SystemConfig& cfg, double P_i, double omega_i, double p_now) {
    if (cfg.policy != PolicyKind::Pricing) return P_i;
    return benefit(utility(P_i, omega_i, cfg.alpha), cost(p_now, P_i));
}

} // namespace mgrid
