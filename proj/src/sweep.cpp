#include "mgrid/sweep.hpp"

#include "mgrid/config_json.hpp"
#include "mgrid/engine.hpp"
#include "mgrid/io.hpp"
#include "mgrid/rng.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

namespace mgrid {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

MetricAggregate aggregate(const std::vector<SummaryStats>& stats, double SummaryStats::* field) {
    MetricAggregate agg;
    const auto n = stats.size();
    if (n == 0) return agg;
    for (const auto& s : stats) agg.mean += s.*field;
    agg.mean /= static_cast<double>(n);
    if (n > 1) {
        double acc = 0.0;
        for (const auto& s : stats) {
            const double d = s.*field - agg.mean;
            acc += d * d;
        }
        agg.stddev = std::sqrt(acc / static_cast<double>(n - 1));
    }
    return agg;
}

} // namespace

SweepSpec parse_sweep_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open sweep spec: " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("parse error in " + path + ": " + e.what());
    }

    SweepSpec spec;
    nlohmann::json config_keys = nlohmann::json::object();
    for (const auto& [key, value] : j.items()) {
        if (key == "replicates") spec.replicates = value.get<int>();
        else if (key == "base_seed") spec.base_seed = value.get<std::uint64_t>();
        else if (key == "out_dir") spec.out_dir = value.get<std::string>();
        else if (key == "axes") {
            for (const auto& [axis, values] : value.items()) {
                if (axis == "N") spec.N_axis = values.get<std::vector<int>>();
                else if (axis == "p_err") spec.p_err_axis = values.get<std::vector<double>>();
                else if (axis == "lambda_min") spec.lambda_min_axis = values.get<std::vector<double>>();
                else if (axis == "topology") {
                    for (const auto& v : values)
                        spec.topology_axis.push_back(topology_from_string(v.get<std::string>()));
                } else if (axis == "policy") {
                    for (const auto& v : values)
                        spec.policy_axis.push_back(policy_from_string(v.get<std::string>()));
                } else {
                    throw ConfigError("unknown axis '" + axis + "' in " + path);
                }
            }
        } else {
            config_keys[key] = value; // plain config key; apply_config_json rejects typos
        }
    }
    spec.base = apply_config_json(spec.base, config_keys, path);
    if (spec.replicates < 1) throw ConfigError("replicates must be >= 1 in " + path);

    for (const auto& cfg : enumerate_points(spec)) require_valid(cfg);
    return spec;
}

std::vector<SystemConfig> enumerate_points(const SweepSpec& spec) {
    auto one_or = [](auto axis, auto fallback) {
        if (axis.empty()) axis.push_back(fallback);
        return axis;
    };
    const auto Ns = one_or(spec.N_axis, spec.base.N);
    const auto topos = one_or(spec.topology_axis, spec.base.topology);
    const auto policies = one_or(spec.policy_axis, spec.base.policy);
    const auto perrs = one_or(spec.p_err_axis, spec.base.p_err);
    const auto lmins = one_or(spec.lambda_min_axis, spec.base.lambda_min);

    std::vector<SystemConfig> points;
    for (int N : Ns)
        for (auto topo : topos)
            for (auto policy : policies)
                for (double pe : perrs)
                    for (double lm : lmins) {
                        SystemConfig cfg = spec.base;
                        cfg.N = N;
                        cfg.topology = topo;
                        cfg.policy = policy;
                        cfg.p_err = pe;
                        cfg.lambda_min = lm;
                        points.push_back(cfg);
                    }
    return points;
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
    SweepResult result;
    result.spec = spec;

    const auto configs = enumerate_points(spec);
    const auto reps = static_cast<std::size_t>(spec.replicates);
    result.points.resize(configs.size());
    for (std::size_t p = 0; p < configs.size(); ++p) {
        auto& pt = result.points[p];
        pt.index = p;
        pt.config = configs[p];
        pt.seeds.resize(reps);
        pt.stats.resize(reps);
        for (std::size_t r = 0; r < reps; ++r)
            pt.seeds[r] = derive_seed(spec.base_seed, p * reps + r);
    }

    struct Task {
        std::size_t point, rep;
    };
    std::vector<Task> tasks;
    tasks.reserve(configs.size() * reps);
    for (std::size_t p = 0; p < configs.size(); ++p)
        for (std::size_t r = 0; r < reps; ++r) tasks.push_back({p, r});

    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(configs.size());
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            const auto [p, r] = tasks[k];
            auto& pt = result.points[p];
            try {
                SystemConfig cfg = pt.config;
                cfg.seed = pt.seeds[r];
                const Trace trace = run(cfg);
                pt.stats[r] = summarize(trace);
            } catch (const std::exception& e) {
                errors[p] = e.what(); // last error wins; enough for the report
            }
        }
    };

    const int n_threads = std::max(1, jobs);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t p = 0; p < result.points.size(); ++p) {
        auto& pt = result.points[p];
        if (!errors[p].empty()) {
            pt.failed = true;
            pt.error = errors[p];
            result.any_failed = true;
            continue;
        }
        pt.c_avg = aggregate(pt.stats, &SummaryStats::c_avg);
        pt.P_util = aggregate(pt.stats, &SummaryStats::P_util);
        pt.fairness = aggregate(pt.stats, &SummaryStats::fairness);
        pt.n_mean = aggregate(pt.stats, &SummaryStats::n_mean);
        pt.n_std = aggregate(pt.stats, &SummaryStats::n_std);
        pt.n_cv = aggregate(pt.stats, &SummaryStats::n_cv);
    }
    return result;
}

namespace {

void point_key_columns(std::ostream& os, const SystemConfig& cfg) {
    os << cfg.N << ',' << to_string(cfg.topology) << ',' << to_string(cfg.policy) << ','
       << fmt(cfg.p_err) << ',' << fmt(cfg.lambda_min);
}

} // namespace

void export_summary(const SweepResult& result, const std::string& out_dir) {
    {
        std::ofstream os(out_dir + "/summary.csv");
        if (!os) throw IoError("cannot open for writing: " + out_dir + "/summary.csv");
        os << "point,replicate,seed,N,topology,policy,p_err,lambda_min,"
              "c_avg,P_util,fairness,n_mean,n_std,n_cv\n";
        for (const auto& pt : result.points) {
            if (pt.failed) continue;
            for (std::size_t r = 0; r < pt.stats.size(); ++r) {
                os << pt.index << ',' << r << ',' << pt.seeds[r] << ',';
                point_key_columns(os, pt.config);
                const auto& s = pt.stats[r];
                os << ',' << fmt(s.c_avg) << ',' << fmt(s.P_util) << ',' << fmt(s.fairness)
                   << ',' << fmt(s.n_mean) << ',' << fmt(s.n_std) << ',' << fmt(s.n_cv) << "\n";
            }
        }
        if (!os) throw IoError("write failed: summary.csv");
    }
    {
        std::ofstream os(out_dir + "/aggregate.csv");
        if (!os) throw IoError("cannot open for writing: " + out_dir + "/aggregate.csv");
        os << "point,replicates,N,topology,policy,p_err,lambda_min,"
              "c_avg_mean,c_avg_std,P_util_mean,P_util_std,fairness_mean,fairness_std,"
              "n_mean_mean,n_mean_std,n_cv_mean,n_cv_std,status\n";
        for (const auto& pt : result.points) {
            os << pt.index << ',' << pt.stats.size() << ',';
            point_key_columns(os, pt.config);
            if (pt.failed) {
                os << ",,,,,,,,,," << "failed: " << pt.error << "\n";
                continue;
            }
            os << ',' << fmt(pt.c_avg.mean) << ',' << fmt(pt.c_avg.stddev) << ','
               << fmt(pt.P_util.mean) << ',' << fmt(pt.P_util.stddev) << ','
               << fmt(pt.fairness.mean) << ',' << fmt(pt.fairness.stddev) << ','
               << fmt(pt.n_mean.mean) << ',' << fmt(pt.n_mean.stddev) << ','
               << fmt(pt.n_cv.mean) << ',' << fmt(pt.n_cv.stddev) << ",ok\n";
        }
        if (!os) throw IoError("write failed: aggregate.csv");
    }
    {
        nlohmann::json j;
        j["version"] = kVersion;
        j["base_config"] = nlohmann::json::parse(config_to_json(result.spec.base));
        j["base_seed"] = result.spec.base_seed;
        j["replicates"] = result.spec.replicates;
        nlohmann::json points = nlohmann::json::array();
        for (const auto& pt : result.points) {
            nlohmann::json p;
            p["index"] = pt.index;
            p["N"] = pt.config.N;
            p["topology"] = to_string(pt.config.topology);
            p["policy"] = to_string(pt.config.policy);
            p["p_err"] = pt.config.p_err;
            p["lambda_min"] = pt.config.lambda_min;
            p["seeds"] = pt.seeds;
            if (pt.failed) p["error"] = pt.error;
            points.push_back(p);
        }
        j["points"] = points;
        std::ofstream os(out_dir + "/summary.json");
        if (!os) throw IoError("cannot open for writing: " + out_dir + "/summary.json");
        os << j.dump(2) << "\n";
        if (!os) throw IoError("write failed: summary.json");
    }
}

} // namespace mgrid
