#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgrid/engine.hpp"

#include <cstdlib>
#include <unordered_set>

using namespace mgrid;

namespace {

bool same_trace(const Trace& a, const Trace& b) {
    if (a.records.size() != b.records.size()) return false;
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        const auto& x = a.records[k];
        const auto& y = b.records[k];
        if (x.t != y.t || x.n != y.n || x.signal != y.signal || x.price != y.price ||
            x.power_unit != y.power_unit || x.states != y.states || x.a != y.a)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("same (config, seed) gives an identical trace") {
    SystemConfig cfg;
    cfg.N = 30;
    cfg.topology = TopologyKind::WattsStrogatz;
    cfg.ws_k = 4;
    cfg.T = 300;
    cfg.burn_in = 50;
    cfg.seed = 2024;
    CHECK(same_trace(run(cfg), run(cfg)));
    SystemConfig other = cfg;
    other.seed = 2025;
    CHECK(!same_trace(run(cfg), run(other)));
}

TEST_CASE("bookkeeping conservation on every step") {
    for (auto policy : {PolicyKind::Baseline, PolicyKind::GlobalSignal, PolicyKind::Pricing}) {
        SystemConfig cfg;
        cfg.N = 20;
        cfg.policy = policy;
        cfg.T = 500;
        cfg.burn_in = 10;
        cfg.seed = 5;
        const Trace trace = run(cfg);
        REQUIRE(trace.records.size() == 501);
        for (std::size_t k = 1; k < trace.records.size(); ++k) {
            const auto& prev = trace.records[k - 1];
            const auto& cur = trace.records[k];
            CHECK(cur.t == prev.t + 1);
            long n_from_a = 0, delta_sum = 0;
            for (std::size_t i = 0; i < cur.a.size(); ++i) {
                CHECK(cur.a[i] >= 1);
                CHECK(std::abs(cur.a[i] - prev.a[i]) <= 1);
                CHECK(cur.states[i] >= -1);
                CHECK(cur.states[i] <= 1);
                n_from_a += cur.a[i];
                delta_sum += cur.a[i] - prev.a[i];
            }
            CHECK(cur.n == n_from_a);
            CHECK(cur.n - prev.n == delta_sum);
        }
    }
}

TEST_CASE("signal fires exactly when the previous n exceeds n_opt") {
    SystemConfig cfg;
    cfg.N = 10;
    cfg.R_0 = 2.0; // n_opt = 10, reachable quickly
    cfg.policy = PolicyKind::GlobalSignal;
    cfg.T = 400;
    cfg.burn_in = 10;
    cfg.seed = 9;
    const Trace trace = run(cfg);
    bool fired = false;
    for (std::size_t k = 1; k < trace.records.size(); ++k) {
        const bool expected = static_cast<double>(trace.records[k - 1].n) > trace.n_opt;
        CHECK(trace.records[k].signal == expected);
        fired |= expected;
    }
    CHECK(fired); // the scenario actually exercises the signal
    // baseline never signals
    cfg.policy = PolicyKind::Baseline;
    for (const auto& rec : run(cfg).records) CHECK(!rec.signal);
}

TEST_CASE("initial gain is zero, forcing exploration at t=1") {
    SystemConfig cfg;
    cfg.N = 6;
    cfg.seed = 3;
    Simulator sim(cfg);
    for (const auto& ag : sim.state().agents) CHECK(ag.lambda_prev == 0.0);
}

TEST_CASE("lambda_min = -inf pins every strategy forever") {
    SystemConfig cfg;
    cfg.N = 12;
    cfg.lambda_min = -1e18; // every gain clears the bar; branch 1 always taken
    cfg.T = 50;
    cfg.burn_in = 1;
    cfg.seed = 8;
    const Trace trace = run(cfg);
    const auto& first = trace.records.front().states;
    for (const auto& rec : trace.records) CHECK(rec.states == first);
}

TEST_CASE("two defectors grow n by 2 per round, power follows the exact curve") {
    SystemConfig cfg;
    cfg.N = 2;
    cfg.R_0 = 20.0; // n_opt = 20
    cfg.lambda_min = -1e18;
    cfg.T = 60;
    cfg.burn_in = 1;
    // find a seed whose initial strategies are defect/defect
    for (std::uint64_t seed = 1;; ++seed) {
        cfg.seed = seed;
        Simulator sim(cfg);
        const auto& ags = sim.state().agents;
        if (ags[0].S == 1 && ags[1].S == 1) break;
    }
    const Trace trace = run(cfg);
    double peak = 0.0;
    long peak_n = 0;
    for (std::size_t k = 0; k < trace.records.size(); ++k) {
        const auto& rec = trace.records[k];
        CHECK(rec.n == 2 + 2 * static_cast<long>(k));
        CHECK(rec.total_power() == doctest::Approx(total_power_exact(rec.n, trace.cp)).epsilon(1e-12));
        if (rec.total_power() > peak) {
            peak = rec.total_power();
            peak_n = rec.n;
        }
    }
    CHECK(peak_n == 20); // rises to n_opt, declines past it
    CHECK(trace.records.back().total_power() < peak);
}

TEST_CASE("T=0 run is just the initial record") {
    SystemConfig cfg;
    cfg.N = 4;
    cfg.T = 0;
    cfg.burn_in = 0;
    const Trace trace = run(cfg);
    CHECK(trace.records.size() == 1);
    CHECK(trace.records[0].t == 0);
    CHECK(trace.records[0].n == 4);
}

TEST_CASE("derive_seed: pure, spread, base-sensitive") {
    CHECK(derive_seed(42, 7) == derive_seed(42, 7));
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 100000; ++i) seen.insert(derive_seed(1, i));
    CHECK(seen.size() == 100000);
    int clashes = 0;
    for (std::uint64_t b = 0; b < 10000; ++b)
        if (derive_seed(b, 5) == derive_seed(b + 1, 5)) ++clashes;
    CHECK(clashes == 0);
}

TEST_CASE("pricing price settles on the new n by default, previous n when asked") {
    SystemConfig cfg;
    cfg.N = 4;
    cfg.R_0 = 2.0; // n_opt = 4: any defection pushes past it
    cfg.policy = PolicyKind::Pricing;
    cfg.T = 200;
    cfg.burn_in = 10;
    cfg.seed = 21;
    const Trace now = run(cfg);
    for (std::size_t k = 1; k < now.records.size(); ++k) {
        const double expect = static_cast<double>(now.records[k].n) <= now.n_opt ? cfg.p1 : cfg.p2;
        CHECK(now.records[k].price == expect);
    }
    cfg.price_on_previous_n = true;
    const Trace prev = run(cfg);
    for (std::size_t k = 1; k < prev.records.size(); ++k) {
        const double expect = static_cast<double>(prev.records[k - 1].n) <= prev.n_opt ? cfg.p1 : cfg.p2;
        CHECK(prev.records[k].price == expect);
    }
}
