#pragma once

#include "mgrid/state.hpp"

#include <vector>

namespace mgrid {

struct SummaryStats {
    double c_avg = 0.0;         // time-averaged cooperating fraction
    double P_util = 0.0;        // delivered power / (P_typ / 4)
    double fairness = 0.0;      // Jain's index over time-averaged P_i
    double n_mean = 0.0;
    double n_std = 0.0;         // population convention
    double n_cv = 0.0;          // n_std / n_mean
    std::vector<double> P_i_avg;
};

// All time averages run over records with t in [burn_in, T).

double cooperation_average(const Trace& trace, long burn_in);

// (4 / P_typ) * sum_i mean(P_i[t]); 1 exactly when n is pinned at n_opt.
double power_utilization(const Trace& trace, long burn_in);

std::vector<double> per_agent_power_average(const Trace& trace, long burn_in);

// Jain's index (sum x)^2 / (N * sum x^2); needs at least one positive entry.
double fairness_jain(const std::vector<double>& P_i_avg);

struct OscillationStats {
    double n_mean, n_std, n_cv;
};
OscillationStats oscillation_stats(const Trace& trace, long burn_in);

SummaryStats summarize(const Trace& trace, long burn_in);
inline SummaryStats summarize(const Trace& trace) { return summarize(trace, trace.config.burn_in); }

} // namespace mgrid
