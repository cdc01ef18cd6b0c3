#pragma once

#include "mgrid/config.hpp"
#include "mgrid/rng.hpp"

namespace mgrid {

// Default guard for the benefit-based gain denominator.
inline constexpr double kBenefitGainEps = 1e-9;

struct DecisionInputs {
    double lambda_prev;  // gain experienced from the previous round
    int neighbor_sum;    // sum of received neighbor states
    bool signal_active;  // aggregator overuse signal for this round
    double s_i;          // selfishness gene
    int S_prev;          // previous strategy
};

// Per-round strategy choice:
//   1. gain >= lambda_min          -> keep the previous strategy (no draws)
//   2. overuse signal present      -> cooperate
//   3. neighborhood majority < 0   -> cooperate
//   4. draw u1: u1 >= s_i          -> cooperate
//      else draw u2: u2 < s_i      -> defect, otherwise ignore
int decide(const DecisionInputs& in, double lambda_min, RandomStream& rng);

// +1 adds a resistor, -1 removes one (floored at 1), 0 keeps.
long apply_action(long a_i, int S);

// Saturating-marginal-benefit utility: omega*P - (alpha/2)*P^2 below the
// knee P = omega/alpha, flat omega^2/(2*alpha) above it.
double utility(double P, double omega, double alpha);

// Two-stage step tariff: p1 while n <= n_opt, p2 beyond.
double price(long n, double n_opt, double p1, double p2);

double cost(double p, double P);

double benefit(double U, double c);

// Relative benefit change with an absolute-value, eps-guarded denominator so
// that improvement stays positive when benefits are negative.
double benefit_gain(double b_now, double b_prev, double eps);

// The quantity each agent maximizes: delivered power under Baseline and
// GlobalSignal, benefit under Pricing.
double objective(const SystemConfig& cfg, double P_i, double omega_i, double p_now);

} // namespace mgrid
