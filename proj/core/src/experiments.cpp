#include "hl/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hl/errors.hpp"
#include "hl/io.hpp"

namespace hl {

namespace {

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

BoundVerdict make_verdict(GreedyMode mode, const TrialStats& stats, int k,
                          double log2f) {
    BoundVerdict v;
    v.mode = mode;
    v.stats = stats;
    v.report = closed_form::bound_report(k, log2f);
    double bound = mode == GreedyMode::Heavy ? v.report.heavy_bound
                                             : v.report.light_bound;
    double se = stats.std_error > 0 ? stats.std_error : 1e-300;
    // Signed so that >= -3 always means pass.
    v.margin_se = mode == GreedyMode::Heavy ? (stats.mean - bound) / se
                                            : (bound - stats.mean) / se;
    v.pass = v.margin_se >= -3.0;
    return v;
}

}  // namespace

Graph make_instance(const InstanceSpec& spec, Vertex* start) {
    Vertex s = 0;
    Graph g;
    if (spec.kind == "tree") {
        auto [t, root] = gen_binary_tree(spec.depth);
        g = std::move(t);
        s = root;
    } else if (spec.kind == "path") {
        auto [p, end] = gen_path_graph(spec.n);
        g = std::move(p);
        s = end;
    } else if (spec.kind == "cycle") {
        g = gen_cycle_graph(spec.n);
    } else if (spec.kind == "cubic") {
        g = gen_random_cubic(spec.n, {spec.instance_seed, 0});
    } else if (spec.kind == "file") {
        g = read_edge_list_file(spec.file).graph;
    } else {
        throw std::invalid_argument("unknown instance kind: " + spec.kind);
    }
    if (start != nullptr) *start = s;
    return g;
}

ExperimentConfig parse_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::vector<std::string> errors;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back("line " + std::to_string(lineno) + ": expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    ExperimentConfig cfg;
    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) return std::string();
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto as_long = [&](const std::string& key, const std::string& v, long& out) {
        try {
            out = std::stol(v);
        } catch (...) {
            errors.push_back(key + ": not an integer: " + v);
        }
    };

    if (auto v = take("name"); !v.empty()) cfg.name = v;
    std::string gen = take("generator");
    if (gen.empty()) {
        errors.push_back("generator: required (tree|path|cycle|cubic|file)");
    } else if (gen != "tree" && gen != "path" && gen != "cycle" && gen != "cubic" &&
               gen != "file") {
        errors.push_back("generator: unknown kind '" + gen + "'");
    }
    cfg.instance.kind = gen;
    long tmp;
    if (auto v = take("depth"); !v.empty()) {
        as_long("depth", v, tmp);
        cfg.instance.depth = static_cast<int>(tmp);
    }
    if (auto v = take("n"); !v.empty()) {
        as_long("n", v, tmp);
        cfg.instance.n = static_cast<int>(tmp);
    }
    if (auto v = take("file"); !v.empty()) cfg.instance.file = v;
    if (auto v = take("instance_seed"); !v.empty()) {
        as_long("instance_seed", v, tmp);
        cfg.instance.instance_seed = static_cast<uint64_t>(tmp);
    }
    if (auto v = take("u0"); !v.empty()) {
        as_long("u0", v, tmp);
        cfg.u0 = static_cast<Vertex>(tmp);
    } else {
        cfg.u0 = -1;  // resolved to the generator's start vertex
    }
    bool has_k = false;
    if (auto v = take("k"); !v.empty()) {
        as_long("k", v, tmp);
        cfg.k = static_cast<int>(tmp);
        has_k = true;
    }
    if (std::string v = take("mode"); v == "heavy" || v.empty()) {
        cfg.mode = GreedyMode::Heavy;
    } else if (v == "light") {
        cfg.mode = GreedyMode::Light;
    } else {
        errors.push_back("mode: must be heavy or light, got '" + v + "'");
    }
    std::string oracle = take("oracle");
    if (oracle == "sampling") {
        long walks = 1000, groups = 10, oseed = 0;
        if (auto v = take("walks"); !v.empty()) as_long("walks", v, walks);
        if (auto v = take("groups"); !v.empty()) as_long("groups", v, groups);
        if (auto v = take("oracle_seed"); !v.empty()) as_long("oracle_seed", v, oseed);
        if (walks < groups || groups < 1)
            errors.push_back("oracle: need walks >= groups >= 1");
        cfg.oracle = CountOracle::sampling(walks, static_cast<int>(groups),
                                           {static_cast<uint64_t>(oseed), 0});
    } else if (!oracle.empty() && oracle != "exact") {
        errors.push_back("oracle: must be exact or sampling, got '" + oracle + "'");
    }
    if (auto v = take("trials"); !v.empty()) {
        as_long("trials", v, cfg.trials);
    }
    if (cfg.trials < 2) errors.push_back("trials: M >= 2 required");
    if (auto v = take("weight_seed"); !v.empty()) {
        as_long("weight_seed", v, tmp);
        cfg.weight_seed = static_cast<uint64_t>(tmp);
    }
    if (auto v = take("out"); !v.empty()) cfg.out_dir = v;
    if (std::string v = take("hamilton"); v == "1" || v == "true") {
        cfg.hamilton = true;
        if (cfg.instance.kind != "cubic")
            errors.push_back("hamilton: requires generator=cubic");
    } else if (!v.empty() && v != "0" && v != "false") {
        errors.push_back("hamilton: must be 0 or 1, got '" + v + "'");
    }
    if (std::string v = take("graph_average"); v == "1" || v == "true") {
        cfg.graph_average = true;
        if (cfg.instance.kind != "cubic")
            errors.push_back("graph_average: requires generator=cubic");
        if (cfg.hamilton)
            errors.push_back("graph_average: not supported with hamilton");
    } else if (!v.empty() && v != "0" && v != "false") {
        errors.push_back("graph_average: must be 0 or 1, got '" + v + "'");
    }
    if (cfg.hamilton) {
        if (!has_k) cfg.k = cfg.instance.n;
    } else if (!has_k) {
        errors.push_back("k: required");
    }

    for (const auto& [key, val] : kv)
        errors.push_back("unknown key: " + key);
    if (!errors.empty()) {
        std::string msg = "config errors:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw std::invalid_argument(msg);
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

// Annealed variant: trial t draws its own cubic instance from
// instance_seed stream t (regenerating on infeasible starts) and is
// judged against that instance's own bound; the pass decision uses the
// per-trial signed margins so the 3 SE rule keeps its meaning.
CampaignResult run_graph_average_campaign(const ExperimentConfig& cfg) {
    CampaignResult res;
    res.config = cfg;
    if (res.config.u0 < 0) res.config.u0 = 0;
    Vertex u0 = res.config.u0;
    int k = cfg.k;

    RunningStats weight_stats, margin_stats, log2f_stats;
    res.trials.reserve(cfg.trials);
    for (long t = 0; t < cfg.trials; ++t) {
        Graph g;
        uint64_t attempt = 0;
        do {
            g = gen_random_cubic(
                cfg.instance.n,
                {cfg.instance.instance_seed,
                 (static_cast<uint64_t>(t) << 16) | attempt});
            ++attempt;
        } while (!path_of_length_exists(g, u0, k));
        res.instance_attempts += static_cast<int>(attempt) - 1;

        Graph gp = preprocess_g_prime(g, u0, k);
        double log2f = log2_count(count_paths_exact(gp, u0, k));
        auto rep = closed_form::bound_report(k, log2f);
        double bound = cfg.mode == GreedyMode::Heavy ? rep.heavy_bound
                                                     : rep.light_bound;

        uint64_t stream = static_cast<uint64_t>(t) + 1;
        WeightAssignment w = sample_weights(g, {cfg.weight_seed, stream});
        auto [path, trace] = run_greedy(g, w, u0, k, cfg.mode, cfg.oracle);
        weight_stats.push(trace.weight);
        log2f_stats.push(log2f);
        margin_stats.push(cfg.mode == GreedyMode::Heavy
                              ? trace.weight - bound
                              : bound - trace.weight);
        res.trials.push_back({t, stream, trace.weight, trace.choice_steps()});
    }

    res.log2f_gprime = log2f_stats.mean();
    res.verdict.mode = cfg.mode;
    res.verdict.stats = weight_stats.snapshot();
    res.verdict.report = closed_form::bound_report(k, res.log2f_gprime);
    double se = margin_stats.std_error() > 0 ? margin_stats.std_error() : 1e-300;
    res.verdict.margin_se = margin_stats.mean() / se;
    res.verdict.pass = res.verdict.margin_se >= -3.0;
    if (!cfg.out_dir.empty()) emit_results(res, cfg.out_dir);
    return res;
}

}  // namespace

CampaignResult run_campaign(const ExperimentConfig& cfg) {
    if (cfg.trials < 2) throw std::invalid_argument("M >= 2 required");
    if (cfg.graph_average) return run_graph_average_campaign(cfg);
    CampaignResult res;
    res.config = cfg;
    Vertex natural = 0;
    Graph g = make_instance(cfg.instance, &natural);
    if (res.config.u0 < 0) res.config.u0 = natural;
    Vertex u0 = res.config.u0;
    int k = cfg.k;
    if (g.max_degree() > 3)
        throw std::invalid_argument("maximum degree exceeds 3");
    if (!path_of_length_exists(g, u0, k)) throw InfeasibleError("no such path");

    Graph gp = preprocess_g_prime(g, u0, k);
    if (cfg.oracle.strategy == CountOracle::Strategy::Sampling) {
        auto est = estimate_paths_sampling(gp, u0, k, cfg.oracle.walks,
                                           cfg.oracle.groups, cfg.oracle.seed);
        res.log2f_gprime = std::log2(est.estimate);
        res.log2f_estimated = true;
    } else {
        res.log2f_gprime = log2_count(count_paths_exact(gp, u0, k));
    }

    RunningStats stats;
    res.trials.reserve(cfg.trials);
    for (long t = 0; t < cfg.trials; ++t) {
        uint64_t stream = static_cast<uint64_t>(t) + 1;
        WeightAssignment w = sample_weights(g, {cfg.weight_seed, stream});
        auto [path, trace] = run_greedy(g, w, u0, k, cfg.mode, cfg.oracle);
        stats.push(trace.weight);
        res.trials.push_back({t, stream, trace.weight, trace.choice_steps()});
    }
    res.verdict = make_verdict(cfg.mode, stats.snapshot(), k, res.log2f_gprime);
    if (!cfg.out_dir.empty()) emit_results(res, cfg.out_dir);
    return res;
}

CampaignResult run_hamilton_campaign(int n, uint64_t instance_seed,
                                     GreedyMode mode, long trials,
                                     uint64_t weight_seed,
                                     const std::string& name,
                                     const std::string& out_dir) {
    if (trials < 2) throw std::invalid_argument("M >= 2 required");
    CampaignResult res;
    res.hamilton = true;
    res.config.name = name;
    res.config.instance = {"cubic", 0, n, instance_seed, ""};
    res.config.u0 = 0;
    res.config.k = n;
    res.config.mode = mode;
    res.config.trials = trials;
    res.config.weight_seed = weight_seed;
    res.config.out_dir = out_dir;

    Graph g;
    PathCount h = 0;
    int attempts = 0;
    do {
        g = gen_random_cubic(n, {instance_seed, static_cast<uint64_t>(attempts)});
        ++attempts;
        h = count_hamilton_cycles(g);
    } while (h == 0);
    res.instance_attempts = attempts;
    res.log2h = log2_count(h);
    // Conservative start-edge discount: the chosen edge carries at
    // least h/3 of the cycles.
    double log2f = std::max(0.0, res.log2h - std::log2(3.0));

    RunningStats path_stats;
    RunningStats cycle_stats;
    res.trials.reserve(trials);
    for (long t = 0; t < trials; ++t) {
        uint64_t stream = static_cast<uint64_t>(t) + 1;
        WeightAssignment w = sample_weights(g, {weight_seed, stream});
        HamiltonResult hr = run_greedy_hamilton(g, w, 0, mode);
        path_stats.push(hr.path_weight);
        cycle_stats.push(hr.cycle_weight);
        res.trials.push_back({t, stream, hr.cycle_weight, hr.trace.choice_steps()});
    }
    res.verdict = make_verdict(mode, path_stats.snapshot(), n, log2f);
    res.per_vertex_rate = cycle_stats.mean() / static_cast<double>(n);
    if (!out_dir.empty()) emit_results(res, out_dir);
    return res;
}

ConcentrationSummary concentration_report(const ExperimentConfig& cfg) {
    ConcentrationSummary sum;
    sum.config = cfg;
    Vertex natural = 0;
    Graph g = make_instance(cfg.instance, &natural);
    Vertex u0 = cfg.u0 >= 0 ? cfg.u0 : natural;
    sum.config.u0 = u0;
    double n = static_cast<double>(g.vertex_count());
    sum.deviation_threshold = std::sqrt(n) * std::pow(std::log(n), 2);
    sum.edge_tail_threshold = 2.0 * std::log(n);
    sum.expected_edge_exceed_rate = 1.0 / (n * n);

    RunningStats stats;
    std::vector<double> weights_per_trial;
    weights_per_trial.reserve(cfg.trials);
    for (long t = 0; t < cfg.trials; ++t) {
        uint64_t stream = static_cast<uint64_t>(t) + 1;
        WeightAssignment w = sample_weights(g, {cfg.weight_seed, stream});
        for (auto& [e, wt] : w.sorted_entries()) {
            ++sum.total_edge_draws;
            if (wt > sum.edge_tail_threshold) ++sum.edge_draws_above;
            if (wt > sum.max_edge_weight) sum.max_edge_weight = wt;
        }
        auto [path, trace] = run_greedy(g, w, u0, cfg.k, cfg.mode, cfg.oracle);
        stats.push(trace.weight);
        weights_per_trial.push_back(trace.weight);
    }
    sum.weight_stats = stats.snapshot();
    for (double x : weights_per_trial)
        if (std::abs(x - sum.weight_stats.mean) > sum.deviation_threshold)
            ++sum.trials_beyond_threshold;
    double p = sum.expected_edge_exceed_rate;
    sum.edge_exceed_rate =
        static_cast<double>(sum.edge_draws_above) / sum.total_edge_draws;
    sum.exceed_rate_se = std::sqrt(p * (1.0 - p) / sum.total_edge_draws);
    return sum;
}

std::string campaign_csv(const CampaignResult& result) {
    std::ostringstream out;
    out << "trial,seed,weight,choice_steps\n";
    for (const auto& t : result.trials)
        out << t.trial << "," << t.stream << "," << fmt_double(t.weight) << ","
            << t.choice_steps << "\n";
    return out.str();
}

std::string campaign_json(const CampaignResult& result) {
    nlohmann::ordered_json j;
    const auto& cfg = result.config;
    j["name"] = cfg.name;
    j["config"] = {{"generator", cfg.instance.kind},
                   {"depth", cfg.instance.depth},
                   {"n", cfg.instance.n},
                   {"file", cfg.instance.file},
                   {"instance_seed", cfg.instance.instance_seed},
                   {"u0", cfg.u0},
                   {"k", cfg.k},
                   {"mode", mode_name(cfg.mode)},
                   {"oracle", cfg.oracle.strategy == CountOracle::Strategy::Exact
                                  ? "exact"
                                  : "sampling"},
                   {"trials", cfg.trials},
                   {"weight_seed", cfg.weight_seed},
                   {"graph_average", cfg.graph_average}};
    j["log2f_gprime"] = result.log2f_gprime;
    j["log2f_estimated"] = result.log2f_estimated;
    const auto& s = result.verdict.stats;
    j["stats"] = {{"count", s.count},     {"mean", s.mean},
                  {"variance", s.variance}, {"std_error", s.std_error},
                  {"min", s.min},         {"max", s.max}};
    const auto& r = result.verdict.report;
    j["bounds"] = {{"k", r.k},
                   {"log2f", r.log2f},
                   {"heavy_bound", r.heavy_bound},
                   {"light_bound", r.light_bound},
                   {"asymptotic_heavy", r.asymptotic_heavy},
                   {"asymptotic_light", r.asymptotic_light}};
    j["verdict"] = {{"margin_se", result.verdict.margin_se},
                    {"pass", result.verdict.pass}};
    if (result.hamilton) {
        j["hamilton"] = {{"log2h", result.log2h},
                         {"per_vertex_rate", result.per_vertex_rate},
                         {"instance_attempts", result.instance_attempts}};
    }
    j["version"] = "heavylight 0.1.0";
    return j.dump(2) + "\n";
}

EmittedFiles emit_results(const CampaignResult& result, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    std::string base = result.config.name + "-" +
                       std::to_string(result.config.instance.instance_seed) + "-" +
                       mode_name(result.config.mode);
    EmittedFiles files;
    files.csv_path = (fs::path(dir) / (base + ".csv")).string();
    files.json_path = (fs::path(dir) / (base + ".json")).string();
    auto write = [](const std::string& path, const std::string& data) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open " + path + " for writing");
        out << data;
        if (!out) throw IoError("write failed: " + path);
    };
    write(files.csv_path, campaign_csv(result));
    write(files.json_path, campaign_json(result));
    return files;
}

}  // namespace hl
