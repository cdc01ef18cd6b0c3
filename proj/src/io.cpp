#include "mgrid/io.hpp"

#include "mgrid/config_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mgrid {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path);
    return os;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

void export_timeseries(const Trace& trace, const std::string& path, bool per_agent) {
    auto os = open_out(path);
    os << "t,n,P_all,signal,price";
    if (per_agent) {
        for (int i = 0; i < trace.N(); ++i) os << ",S_" << i;
        for (int i = 0; i < trace.N(); ++i) os << ",a_" << i;
    }
    os << "\n";
    for (const auto& rec : trace.records) {
        os << rec.t << ',' << rec.n << ',' << fmt(rec.total_power()) << ','
           << (rec.signal ? 1 : 0) << ',' << fmt(rec.price);
        if (per_agent) {
            for (auto s : rec.states) os << ',' << static_cast<int>(s);
            for (auto a : rec.a) os << ',' << a;
        }
        os << "\n";
    }
    if (!os) throw IoError("write failed: " + path);
}

Trace load_timeseries(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open: " + path);
    std::string line;
    if (!std::getline(is, line)) throw IoError("empty timeseries file: " + path);

    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) header.push_back(col);
    }
    int n_agents = 0;
    for (const auto& col : header)
        if (col.rfind("S_", 0) == 0) ++n_agents;
    if (n_agents == 0)
        throw IoError("timeseries has no per-agent columns (exported without --per-agent?): " + path);
    const std::size_t expected = 5 + 2 * static_cast<std::size_t>(n_agents);
    if (header.size() != expected) throw IoError("unexpected column layout: " + path);

    Trace trace;
    trace.config.N = n_agents;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != expected) throw IoError("bad row in " + path + ": " + line);
        StepRecord rec;
        rec.t = std::stol(cells[0]);
        rec.n = std::stol(cells[1]);
        const double p_all = std::stod(cells[2]);
        rec.power_unit = p_all / static_cast<double>(rec.n);
        rec.signal = cells[3] == "1";
        rec.price = std::stod(cells[4]);
        for (int i = 0; i < n_agents; ++i)
            rec.states.push_back(static_cast<std::int8_t>(std::stoi(cells[5 + static_cast<std::size_t>(i)])));
        for (int i = 0; i < n_agents; ++i)
            rec.a.push_back(std::stoi(cells[5 + static_cast<std::size_t>(n_agents + i)]));
        trace.records.push_back(std::move(rec));
    }
    trace.config.T = trace.steps();
    return trace;
}

void export_state_raster(const Trace& trace, const std::string& path) {
    auto os = open_out(path);
    os << "P3\n" << trace.N() << ' ' << trace.records.size() << "\n255\n";
    for (const auto& rec : trace.records) {
        for (std::size_t i = 0; i < rec.states.size(); ++i) {
            if (i) os << ' ';
            switch (rec.states[i]) {
            case +1: os << "255 0 0"; break;     // defect
            case -1: os << "255 255 255"; break; // cooperate
            default: os << "0 0 0"; break;       // ignore
            }
        }
        os << "\n";
    }
    if (!os) throw IoError("write failed: " + path);
}

void export_edge_list(const Topology& topo, const std::string& path) {
    auto os = open_out(path);
    for (const auto& [i, j] : topo.edges()) os << i << ' ' << j << "\n";
    if (!os) throw IoError("write failed: " + path);
}

namespace {

nlohmann::json config_json(const SystemConfig& cfg) {
    nlohmann::json j;
    j["N"] = cfg.N;
    j["V"] = cfg.V;
    j["R_V"] = cfg.R_V;
    j["R_0"] = cfg.R_0;
    j["lambda_min"] = cfg.lambda_min;
    j["p_err"] = cfg.p_err;
    j["topology"] = to_string(cfg.topology);
    j["ws_k"] = cfg.ws_k;
    j["ws_beta"] = cfg.ws_beta;
    j["policy"] = to_string(cfg.policy);
    j["alpha"] = cfg.alpha;
    j["omega_center"] = cfg.omega_center;
    j["omega_halfwidth"] = cfg.omega_halfwidth;
    j["p1"] = cfg.p1;
    j["p2"] = cfg.p2;
    j["scale_voltage_with_sqrt_N"] = cfg.scale_voltage_with_sqrt_N;
    j["price_on_previous_n"] = cfg.price_on_previous_n;
    j["T"] = cfg.T;
    j["burn_in"] = cfg.burn_in;
    j["seed"] = cfg.seed;
    return j;
}

} // namespace

SystemConfig apply_config_json(SystemConfig cfg, const nlohmann::json& j,
                               const std::string& context) {
    for (const auto& [key, value] : j.items()) {
        if (key == "N") cfg.N = value.get<int>();
        else if (key == "V") cfg.V = value.get<double>();
        else if (key == "R_V") cfg.R_V = value.get<double>();
        else if (key == "R_0") cfg.R_0 = value.get<double>();
        else if (key == "lambda_min") cfg.lambda_min = value.get<double>();
        else if (key == "p_err") cfg.p_err = value.get<double>();
        else if (key == "topology") cfg.topology = topology_from_string(value.get<std::string>());
        else if (key == "ws_k") cfg.ws_k = value.get<int>();
        else if (key == "ws_beta") cfg.ws_beta = value.get<double>();
        else if (key == "policy") cfg.policy = policy_from_string(value.get<std::string>());
        else if (key == "alpha") cfg.alpha = value.get<double>();
        else if (key == "omega_center") cfg.omega_center = value.get<double>();
        else if (key == "omega_halfwidth") cfg.omega_halfwidth = value.get<double>();
        else if (key == "p1") cfg.p1 = value.get<double>();
        else if (key == "p2") cfg.p2 = value.get<double>();
        else if (key == "scale_voltage_with_sqrt_N") cfg.scale_voltage_with_sqrt_N = value.get<bool>();
        else if (key == "price_on_previous_n") cfg.price_on_previous_n = value.get<bool>();
        else if (key == "T") cfg.T = value.get<long>();
        else if (key == "burn_in") cfg.burn_in = value.get<long>();
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else throw ConfigError("unknown key '" + key + "' in " + context);
    }
    return cfg;
}

SystemConfig config_from_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("parse error in " + path + ": " + e.what());
    }
    SystemConfig cfg = apply_config_json(SystemConfig{}, j, path);
    require_valid(cfg);
    return cfg;
}

std::string config_to_json(const SystemConfig& cfg) {
    return config_json(cfg).dump(2);
}

void export_run_summary(const Trace& trace, const SummaryStats& stats, const std::string& path) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["config"] = config_json(trace.config);
    j["seed"] = trace.seed;
    j["n_opt"] = trace.n_opt;
    j["P_typ"] = trace.cp.P_typ;
    j["stats"] = {
        {"c_avg", stats.c_avg},       {"P_util", stats.P_util}, {"fairness", stats.fairness},
        {"n_mean", stats.n_mean},     {"n_std", stats.n_std},   {"n_cv", stats.n_cv},
    };
    auto os = open_out(path);
    os << j.dump(2) << "\n";
    if (!os) throw IoError("write failed: " + path);
}

} // namespace mgrid
