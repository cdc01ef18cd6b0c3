#include "mgrid/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace mgrid {

namespace {

// Indices of records with burn_in <= t < T.
struct Window {
    std::size_t begin, end;
};

Window window_of(const Trace& trace, long burn_in) {
    const long T = trace.steps();
    if (burn_in < 0 || burn_in >= T)
        throw std::domain_error("metrics: empty averaging window");
    std::size_t b = 0, e = 0;
    for (std::size_t k = 0; k < trace.records.size(); ++k) {
        const long t = trace.records[k].t;
        if (t == burn_in) b = k;
        if (t == T) e = k;
    }
    return {b, e};
}

} // namespace

double cooperation_average(const Trace& trace, long burn_in) {
    const auto w = window_of(trace, burn_in);
    double acc = 0.0;
    for (std::size_t k = w.begin; k < w.end; ++k) {
        long coop = 0;
        for (auto s : trace.records[k].states)
            if (s == -1) ++coop;
        acc += static_cast<double>(coop) / static_cast<double>(trace.N());
    }
    return acc / static_cast<double>(w.end - w.begin);
}

std::vector<double> per_agent_power_average(const Trace& trace, long burn_in) {
    const auto w = window_of(trace, burn_in);
    std::vector<double> avg(static_cast<std::size_t>(trace.N()), 0.0);
    for (std::size_t k = w.begin; k < w.end; ++k) {
        const auto& rec = trace.records[k];
        for (std::size_t i = 0; i < avg.size(); ++i)
            avg[i] += static_cast<double>(rec.a[i]) * rec.power_unit;
    }
    const double m = static_cast<double>(w.end - w.begin);
    for (auto& x : avg) x /= m;
    return avg;
}

double power_utilization(const Trace& trace, long burn_in) {
    const auto avg = per_agent_power_average(trace, burn_in);
    double total = 0.0;
    for (double x : avg) total += x;
    return 4.0 / trace.cp.P_typ * total;
}

double fairness_jain(const std::vector<double>& P_i_avg) {
    double sum = 0.0, sq = 0.0;
    for (double x : P_i_avg) {
        sum += x;
        sq += x * x;
    }
    if (!(sq > 0.0)) throw std::domain_error("fairness_jain: all-zero vector");
    return sum * sum / (static_cast<double>(P_i_avg.size()) * sq);
}

OscillationStats oscillation_stats(const Trace& trace, long burn_in) {
    const auto w = window_of(trace, burn_in);
    const double m = static_cast<double>(w.end - w.begin);
    double mean = 0.0;
    for (std::size_t k = w.begin; k < w.end; ++k)
        mean += static_cast<double>(trace.records[k].n);
    mean /= m;
    double var = 0.0;
    for (std::size_t k = w.begin; k < w.end; ++k) {
        const double d = static_cast<double>(trace.records[k].n) - mean;
        var += d * d;
    }
    var /= m;
    const double sd = std::sqrt(var);
    return {mean, sd, sd / mean};
}

SummaryStats summarize(const Trace& trace, long burn_in) {
    SummaryStats s;
    s.c_avg = cooperation_average(trace, burn_in);
    s.P_i_avg = per_agent_power_average(trace, burn_in);
    double total = 0.0;
    for (double x : s.P_i_avg) total += x;
    s.P_util = 4.0 / trace.cp.P_typ * total;
    s.fairness = fairness_jain(s.P_i_avg);
    const auto osc = oscillation_stats(trace, burn_in);
    s.n_mean = osc.n_mean;
    s.n_std = osc.n_std;
    s.n_cv = osc.n_cv;
    return s;
}

} // namespace mgrid
