#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgrid/engine.hpp"
#include "mgrid/metrics.hpp"

#include <cmath>

using namespace mgrid;

namespace {

// Synthetic trace: per-step total n and per-agent splits given explicitly.
Trace synthetic(int N, const std::vector<std::vector<std::int32_t>>& a_per_step,
                const std::vector<std::vector<std::int8_t>>& s_per_step) {
    Trace tr;
    tr.config.N = N;
    tr.config.T = static_cast<long>(a_per_step.size()) - 1;
    tr.cp = CircuitParams::make(1.0, 2.0, 200.0, N);
    tr.n_opt = optimal_resistors(tr.cp);
    for (std::size_t k = 0; k < a_per_step.size(); ++k) {
        StepRecord rec;
        rec.t = static_cast<long>(k);
        rec.a = a_per_step[k];
        rec.states = s_per_step[k];
        rec.n = 0;
        for (auto a : rec.a) rec.n += a;
        const double denom = static_cast<double>(rec.n) * tr.cp.R_V + tr.cp.R;
        rec.power_unit = tr.cp.V_eff * tr.cp.V_eff * tr.cp.R / (denom * denom);
        tr.records.push_back(std::move(rec));
    }
    return tr;
}

Trace constant_n_trace(int N, long n, long steps) {
    // n split as evenly as integers allow
    std::vector<std::int32_t> a(static_cast<std::size_t>(N), static_cast<std::int32_t>(n / N));
    for (long i = 0; i < n % N; ++i) ++a[static_cast<std::size_t>(i)];
    std::vector<std::vector<std::int32_t>> as(static_cast<std::size_t>(steps) + 1, a);
    std::vector<std::vector<std::int8_t>> ss(static_cast<std::size_t>(steps) + 1,
                                             std::vector<std::int8_t>(static_cast<std::size_t>(N), 0));
    return synthetic(N, as, ss);
}

} // namespace

TEST_CASE("cooperation average on synthetic traces") {
    const int N = 4;
    std::vector<std::int8_t> coop(N, -1), ignore(N, 0);
    std::vector<std::vector<std::int8_t>> ss;
    std::vector<std::vector<std::int32_t>> as;
    for (int k = 0; k <= 8; ++k) {
        ss.push_back(k % 2 == 0 ? coop : ignore);
        as.push_back(std::vector<std::int32_t>(N, 1));
    }
    const Trace alternating = synthetic(N, as, ss);
    CHECK(cooperation_average(alternating, 0) == doctest::Approx(0.5)); // window [0,8): 4+4

    const Trace all_coop = synthetic(N, as, std::vector<std::vector<std::int8_t>>(9, coop));
    CHECK(cooperation_average(all_coop, 0) == 1.0);
    const Trace none = synthetic(N, as, std::vector<std::vector<std::int8_t>>(9, ignore));
    CHECK(cooperation_average(none, 0) == 0.0);
}

TEST_CASE("P_util is 1 at the optimum for any split") {
    const int N = 10;
    const long n_opt = 1000;
    const Trace even = constant_n_trace(N, n_opt, 20);
    CHECK(std::abs(power_utilization(even, 0) - 1.0) < 1e-12);

    // lopsided split, same n
    std::vector<std::int32_t> a(N, 1);
    a[0] = static_cast<std::int32_t>(n_opt - (N - 1));
    std::vector<std::vector<std::int32_t>> as(11, a);
    std::vector<std::vector<std::int8_t>> ss(11, std::vector<std::int8_t>(N, 0));
    CHECK(std::abs(power_utilization(synthetic(N, as, ss), 0) - 1.0) < 1e-12);
}

TEST_CASE("P_util at twice the optimum is 8/9") {
    const Trace tr = constant_n_trace(10, 2000, 20);
    CHECK(power_utilization(tr, 0) == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("P_util vanishes under extreme overload") {
    const Trace tr = constant_n_trace(10, 1000000, 5);
    CHECK(power_utilization(tr, 0) < 0.005);
}

TEST_CASE("P_util from per-agent averages equals the total-power route") {
    SystemConfig cfg;
    cfg.N = 15;
    cfg.T = 300;
    cfg.burn_in = 30;
    cfg.seed = 6;
    const Trace tr = run(cfg);
    double total_route = 0.0;
    long count = 0;
    for (const auto& rec : tr.records) {
        if (rec.t < cfg.burn_in || rec.t >= cfg.T) continue;
        total_route += rec.total_power();
        ++count;
    }
    total_route = 4.0 / tr.cp.P_typ * total_route / static_cast<double>(count);
    CHECK(power_utilization(tr, cfg.burn_in) == doctest::Approx(total_route).epsilon(1e-12));
}

TEST_CASE("voltage scaling flag leaves the trajectory and P_util unchanged") {
    // gains are relative, so baseline decisions are voltage-invariant
    SystemConfig cfg;
    cfg.N = 12;
    cfg.T = 400;
    cfg.burn_in = 50;
    cfg.seed = 31;
    const Trace plain = run(cfg);
    cfg.scale_voltage_with_sqrt_N = true;
    const Trace scaled = run(cfg);
    for (std::size_t k = 0; k < plain.records.size(); ++k) {
        CHECK(plain.records[k].n == scaled.records[k].n);
        CHECK(plain.records[k].a == scaled.records[k].a);
    }
    CHECK(power_utilization(plain, cfg.burn_in) ==
          doctest::Approx(power_utilization(scaled, cfg.burn_in)).epsilon(1e-12));
}

TEST_CASE("Jain fairness") {
    CHECK(fairness_jain({3.0, 3.0, 3.0, 3.0}) == doctest::Approx(1.0));
    std::vector<double> monopoly(10, 0.0);
    monopoly[4] = 7.0;
    CHECK(fairness_jain(monopoly) == doctest::Approx(0.1));
    CHECK(fairness_jain({1.0, 3.0}) == doctest::Approx(0.8));
    CHECK_THROWS_AS(fairness_jain({0.0, 0.0}), std::domain_error);
}

TEST_CASE("oscillation stats") {
    const Trace flat = constant_n_trace(5, 40, 12);
    const auto fs = oscillation_stats(flat, 0);
    CHECK(fs.n_mean == doctest::Approx(40.0));
    CHECK(fs.n_std == 0.0);
    CHECK(fs.n_cv == 0.0);

    // n alternates 30, 50 -> std = 10 (population convention)
    std::vector<std::vector<std::int32_t>> as;
    std::vector<std::vector<std::int8_t>> ss;
    for (int k = 0; k <= 8; ++k) {
        as.push_back(std::vector<std::int32_t>(5, k % 2 == 0 ? 6 : 10));
        ss.push_back(std::vector<std::int8_t>(5, 0));
    }
    const auto alt = oscillation_stats(synthetic(5, as, ss), 0);
    CHECK(alt.n_mean == doctest::Approx(40.0));
    CHECK(alt.n_std == doctest::Approx(10.0));
    CHECK(alt.n_cv == doctest::Approx(0.25));

    // sawtooth 10,20,30,10,20,30 over window [0,6)
    as.clear();
    ss.clear();
    for (int k = 0; k <= 6; ++k) {
        as.push_back(std::vector<std::int32_t>(5, static_cast<std::int32_t>(2 + (k % 3) * 2)));
        ss.push_back(std::vector<std::int8_t>(5, 0));
    }
    const auto saw = oscillation_stats(synthetic(5, as, ss), 0);
    CHECK(saw.n_mean == doctest::Approx(20.0));
    CHECK(saw.n_std == doctest::Approx(std::sqrt(200.0 / 3.0)));
    CHECK(saw.n_cv == doctest::Approx(std::sqrt(200.0 / 3.0) / 20.0));
}

TEST_CASE("empty window is a domain error") {
    const Trace tr = constant_n_trace(5, 40, 4);
    CHECK_THROWS_AS(cooperation_average(tr, 4), std::domain_error);
    CHECK_THROWS_AS(power_utilization(tr, 9), std::domain_error);
    CHECK_THROWS_AS(oscillation_stats(tr, -1), std::domain_error);
}

TEST_CASE("summary fields stay in range on real traces") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        SystemConfig cfg;
        cfg.N = 25;
        cfg.topology = TopologyKind::WattsStrogatz;
        cfg.ws_k = 4;
        cfg.T = 400;
        cfg.burn_in = 100;
        cfg.seed = seed;
        const auto s = summarize(run(cfg));
        CHECK(s.c_avg >= 0.0);
        CHECK(s.c_avg <= 1.0);
        CHECK(s.P_util > 0.0);
        CHECK(s.P_util <= 1.0 + 1e-12);
        CHECK(s.fairness > 0.0);
        CHECK(s.fairness <= 1.0 + 1e-12);
        CHECK(s.n_cv == doctest::Approx(s.n_std / s.n_mean));
    }
}
