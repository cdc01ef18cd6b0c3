#include "mgrid/engine.hpp"
#include "mgrid/io.hpp"
#include "mgrid/metrics.hpp"
#include "mgrid/sweep.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

namespace {

// Flags for every SystemConfig field; a --config JSON file gives the base
// values and flags given on the command line win.
struct ConfigFlags {
    std::string config_file;
    std::string topology, policy;

    void attach(CLI::App& app, mgrid::SystemConfig& cfg) {
        app.add_option("--config", config_file, "JSON config file (flags override it)");
        app.add_option("-N,--agents", cfg.N, "number of agents");
        app.add_option("--V", cfg.V, "source voltage [V]");
        app.add_option("--R-V", cfg.R_V, "source resistor [ohm]");
        app.add_option("--R-0", cfg.R_0, "per-size-normalized load resistance [ohm]");
        app.add_option("--lambda-min", cfg.lambda_min, "minimum gain threshold");
        app.add_option("--p-err", cfg.p_err, "link error probability");
        app.add_option("--topology", topology, "ring | watts-strogatz");
        app.add_option("--ws-k", cfg.ws_k, "Watts-Strogatz mean degree (even)");
        app.add_option("--ws-beta", cfg.ws_beta, "Watts-Strogatz rewiring probability");
        app.add_option("--policy", policy, "baseline | signal | pricing");
        app.add_option("--alpha", cfg.alpha, "utility curvature (pricing)");
        app.add_option("--omega-center", cfg.omega_center, "valuation center (pricing)");
        app.add_option("--omega-halfwidth", cfg.omega_halfwidth, "valuation halfwidth (pricing)");
        app.add_option("--p1", cfg.p1, "price while n <= n_opt");
        app.add_option("--p2", cfg.p2, "price while n > n_opt");
        app.add_flag("--scale-voltage-sqrt-N", cfg.scale_voltage_with_sqrt_N,
                     "use effective voltage V*sqrt(N)");
        app.add_flag("--price-on-previous-n", cfg.price_on_previous_n,
                     "settle price on n[t-1] instead of n[t]");
        app.add_option("-T,--steps", cfg.T, "simulation steps");
        app.add_option("--burn-in", cfg.burn_in, "steps excluded from time averages");
        app.add_option("--seed", cfg.seed, "RNG seed");
    }

    mgrid::SystemConfig resolve(const CLI::App& app, mgrid::SystemConfig flags_cfg) const {
        mgrid::SystemConfig cfg = flags_cfg;
        if (!config_file.empty()) {
            cfg = mgrid::config_from_json_file(config_file);
            // Re-overlay only the flags the user actually passed.
            auto overlay = [&](const std::string& flag, auto member) {
                if (app.count(flag)) cfg.*member = flags_cfg.*member;
            };
            overlay("--agents", &mgrid::SystemConfig::N);
            overlay("--V", &mgrid::SystemConfig::V);
            overlay("--R-V", &mgrid::SystemConfig::R_V);
            overlay("--R-0", &mgrid::SystemConfig::R_0);
            overlay("--lambda-min", &mgrid::SystemConfig::lambda_min);
            overlay("--p-err", &mgrid::SystemConfig::p_err);
            overlay("--ws-k", &mgrid::SystemConfig::ws_k);
            overlay("--ws-beta", &mgrid::SystemConfig::ws_beta);
            overlay("--alpha", &mgrid::SystemConfig::alpha);
            overlay("--omega-center", &mgrid::SystemConfig::omega_center);
            overlay("--omega-halfwidth", &mgrid::SystemConfig::omega_halfwidth);
            overlay("--p1", &mgrid::SystemConfig::p1);
            overlay("--p2", &mgrid::SystemConfig::p2);
            overlay("--scale-voltage-sqrt-N", &mgrid::SystemConfig::scale_voltage_with_sqrt_N);
            overlay("--price-on-previous-n", &mgrid::SystemConfig::price_on_previous_n);
            overlay("--steps", &mgrid::SystemConfig::T);
            overlay("--burn-in", &mgrid::SystemConfig::burn_in);
            overlay("--seed", &mgrid::SystemConfig::seed);
        }
        if (app.count("--topology")) cfg.topology = mgrid::topology_from_string(topology);
        if (app.count("--policy")) cfg.policy = mgrid::policy_from_string(policy);
        return cfg;
    }
};

std::string default_out_dir() {
    if (const char* env = std::getenv("MGRID_OUT_DIR")) return env;
    return ".";
}

void ensure_dir(const std::string& dir) {
    std::filesystem::create_directories(dir);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mgrid: DC micro-grid demand-management simulator"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "single trace + exports");
    mgrid::SystemConfig run_cfg;
    ConfigFlags run_flags;
    run_flags.attach(*run_cmd, run_cfg);
    std::string run_out = default_out_dir();
    bool per_agent = false;
    bool want_raster = false;
    run_cmd->add_option("-o,--out", run_out, "output directory");
    run_cmd->add_flag("--per-agent", per_agent, "include per-agent columns in the timeseries");
    run_cmd->add_flag("--raster", want_raster, "also write the state raster image");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run a sweep spec file");
    std::string spec_path;
    std::string sweep_out;
    int replicates_override = 0;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    sweep_cmd->add_option("spec", spec_path, "sweep spec JSON file")->required();
    sweep_cmd->add_option("-o,--out", sweep_out, "output directory (overrides spec)");
    sweep_cmd->add_option("--replicates", replicates_override, "override replicate count");
    sweep_cmd->add_option("-j,--jobs", jobs, "worker threads");

    // raster
    auto* raster_cmd = app.add_subcommand("raster", "per-agent timeseries CSV -> PPM image");
    std::string raster_in, raster_out;
    raster_cmd->add_option("input", raster_in, "per-agent timeseries CSV")->required();
    raster_cmd->add_option("output", raster_out, "output PPM path")->required();

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "emit the topology edge list");
    mgrid::SystemConfig graph_cfg;
    ConfigFlags graph_flags;
    graph_flags.attach(*graph_cmd, graph_cfg);
    std::string graph_out = "edges.txt";
    graph_cmd->add_option("-o,--out", graph_out, "edge list output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const auto cfg = run_flags.resolve(*run_cmd, run_cfg);
            mgrid::require_valid(cfg);
            ensure_dir(run_out);
            const auto trace = mgrid::run(cfg);
            mgrid::export_timeseries(trace, run_out + "/timeseries.csv", per_agent);
            if (want_raster) mgrid::export_state_raster(trace, run_out + "/raster.ppm");
            const auto stats = mgrid::summarize(trace);
            mgrid::export_run_summary(trace, stats, run_out + "/summary.json");
            std::cout << "N=" << cfg.N << " T=" << cfg.T << " seed=" << cfg.seed
                      << "  c_avg=" << stats.c_avg << "  P_util=" << stats.P_util
                      << "  fairness=" << stats.fairness << "  n_mean=" << stats.n_mean
                      << "  n_cv=" << stats.n_cv << "\n";
        } else if (sweep_cmd->parsed()) {
            auto spec = mgrid::parse_sweep_file(spec_path);
            if (replicates_override > 0) spec.replicates = replicates_override;
            const std::string out = !sweep_out.empty() ? sweep_out
                                    : spec.out_dir != "." ? spec.out_dir
                                                          : default_out_dir();
            ensure_dir(out);
            const auto result = mgrid::run_sweep(spec, jobs);
            mgrid::export_summary(result, out);
            std::cout << result.points.size() << " points x " << spec.replicates
                      << " replicates -> " << out << "/summary.csv\n";
            if (result.any_failed) {
                for (const auto& pt : result.points)
                    if (pt.failed)
                        std::cerr << "point " << pt.index << " failed: " << pt.error << "\n";
                return 2;
            }
        } else if (raster_cmd->parsed()) {
            const auto trace = mgrid::load_timeseries(raster_in);
            mgrid::export_state_raster(trace, raster_out);
        } else if (graph_cmd->parsed()) {
            const auto cfg = graph_flags.resolve(*graph_cmd, graph_cfg);
            mgrid::require_valid(cfg);
            mgrid::Simulator sim(cfg);
            mgrid::export_edge_list(sim.topology(), graph_out);
        }
    } catch (const mgrid::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
