// Command-line front end: graph generation, path counting, single
// greedy runs, Monte Carlo campaigns, and the closed-form tables.
//
// Exit codes: 0 ok, 2 usage/config error, 3 infeasible instance, 4 I/O.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "hl/closed_form.hpp"
#include "hl/counting.hpp"
#include "hl/errors.hpp"
#include "hl/experiments.hpp"
#include "hl/greedy.hpp"
#include "hl/io.hpp"

namespace {

using namespace hl;

int cmd_gen(const std::string& kind, int depth, int n, uint64_t seed,
            const std::string& out) {
    Graph g;
    if (kind == "tree") {
        g = gen_binary_tree(depth).first;
    } else if (kind == "path") {
        g = gen_path_graph(n).first;
    } else if (kind == "cycle") {
        g = gen_cycle_graph(n);
    } else if (kind == "cubic") {
        g = gen_random_cubic(n, {seed, 0});
    } else {
        throw std::invalid_argument("unknown generator kind: " + kind);
    }
    if (!out.empty()) {
        write_edge_list_file(out, g);
    } else {
        std::cout << write_edge_list(g);
    }
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
              << " max_degree=" << g.max_degree() << "\n";
    return 0;
}

int cmd_count(const std::string& file, Vertex u0, int k, long estimate_walks,
              int groups, uint64_t seed) {
    Graph g = read_edge_list_file(file).graph;
    if (estimate_walks > 0) {
        auto est = estimate_paths_sampling(g, u0, k, estimate_walks, groups,
                                           {seed, 0});
        std::printf("f_estimate = %.6g (walks=%ld, groups=%d)\n", est.estimate,
                    est.walks, est.groups);
    } else {
        PathCount f = count_paths_exact(g, u0, k);
        std::cout << "f = " << f.get_str() << ", log2 = " << log2_count(f);
        if (f > 0 && k >= 2) {
            auto split = alpha_split(g, u0, k);
            std::cout << ", alpha = [";
            for (std::size_t i = 0; i < split.fractions.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << split.fractions[i].second.get_str();
            }
            std::cout << "]";
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_run(const std::string& file, Vertex u0, int k, const std::string& mode_s,
            uint64_t seed, bool hamilton, const std::string& trace_out) {
    auto data = read_edge_list_file(file);
    const Graph& g = data.graph;
    GreedyMode mode = mode_s == "light" ? GreedyMode::Light : GreedyMode::Heavy;
    WeightAssignment w;
    if (data.weights.has_value()) {
        w = *data.weights;
        if (seed != 0)
            std::cerr << "warning: edge-list weights present; --seed ignored\n";
    } else {
        w = sample_weights(g, {seed, 0});
    }
    GreedyTrace trace;
    if (hamilton) {
        auto res = run_greedy_hamilton(g, w, u0, mode);
        trace = res.trace;
        std::cout << "cycle:";
        for (Vertex v : res.cycle.vertices) std::cout << " " << v;
        std::cout << "\npath_weight = " << res.path_weight
                  << "\ncycle_weight = " << res.cycle_weight << "\n";
        PathCount h = count_hamilton_cycles(g);
        auto rep = closed_form::bound_report(g.vertex_count(),
                                             std::max(0.0, log2_count(h) - std::log2(3.0)));
        std::cout << "expectation_bound (" << mode_s << ") = "
                  << (mode == GreedyMode::Heavy ? rep.heavy_bound : rep.light_bound)
                  << "\n";
    } else {
        if (k > 0 && path_of_length_exists(g, u0, k)) {
            Graph gp = preprocess_g_prime(g, u0, k);
            auto rep = closed_form::bound_report(
                k, log2_count(count_paths_exact(gp, u0, k)));
            auto res = run_greedy(g, w, u0, k, mode);
            trace = res.trace;
            std::cout << "path:";
            for (Vertex v : res.path.vertices) std::cout << " " << v;
            std::cout << "\nweight = " << res.trace.weight << "\nexpectation_bound ("
                      << mode_s << ") = "
                      << (mode == GreedyMode::Heavy ? rep.heavy_bound
                                                    : rep.light_bound)
                      << "\n";
        } else {
            throw InfeasibleError("no path of " + std::to_string(k) +
                                  " vertices from " + std::to_string(u0));
        }
    }
    std::cout << "choice_steps = " << trace.choice_steps() << "\n";
    if (!trace_out.empty()) {
        std::ofstream out(trace_out, std::ios::binary);
        if (!out) throw IoError("cannot open " + trace_out + " for writing");
        out << trace.to_json_string() << "\n";
    }
    return 0;
}

int cmd_experiment(const std::string& config_path) {
    ExperimentConfig cfg = parse_config_file(config_path);
    CampaignResult res;
    if (cfg.hamilton) {
        res = run_hamilton_campaign(cfg.instance.n, cfg.instance.instance_seed,
                                    cfg.mode, cfg.trials, cfg.weight_seed,
                                    cfg.name, cfg.out_dir);
    } else {
        res = run_campaign(cfg);
    }
    std::printf("%s margin=%+.2f SE (mean=%.4f bound=%.4f, M=%ld)\n",
                res.verdict.pass ? "PASS" : "FAIL", res.verdict.margin_se,
                res.verdict.stats.mean,
                res.config.mode == GreedyMode::Heavy
                    ? res.verdict.report.heavy_bound
                    : res.verdict.report.light_bound,
                res.verdict.stats.count);
    if (res.hamilton)
        std::printf("per_vertex_rate = %.4f (log2h = %.3f)\n",
                    res.per_vertex_rate, res.log2h);
    return res.verdict.pass ? 0 : 1;
}

int cmd_analyze(int grid) {
    if (grid < 2) throw std::invalid_argument("--grid must be >= 2");
    std::printf("%10s %12s %12s %12s\n", "alpha", "c", "g", "g_tilde");
    double g_min = 1e300, gt_max = -1e300;
    double g_min_a = 0, gt_max_a = 0;
    for (int i = 0; i < grid; ++i) {
        double a = 0.5 * static_cast<double>(i) / (grid - 1);
        double c = a > 0 ? hl::closed_form::c_alpha(a) : 0.0;
        double gv = hl::closed_form::g_heavy(a);
        double gt = hl::closed_form::g_light(a);
        if (gv < g_min) { g_min = gv; g_min_a = a; }
        if (gt > gt_max) { gt_max = gt; gt_max_a = a; }
        std::printf("%10.6f %12.6f %12.6f %12.6f\n", a, c, gv, gt);
    }
    std::printf("min g = %.12f at alpha = %.6f\n", g_min, g_min_a);
    std::printf("max g_tilde = %.12f at alpha = %.6f\n", gt_max, gt_max_a);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heavy/light greedy paths in subcubic graphs with exp(1) weights"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a graph as an edge list");
    std::string gen_kind;
    int gen_depth = 0, gen_n = 0;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "tree|path|cycle|cubic")->required();
    gen->add_option("--depth", gen_depth, "tree depth");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--seed", gen_seed, "generator seed (cubic)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    auto* count = app.add_subcommand("count", "count paths from a vertex");
    std::string count_file;
    int count_u0 = 0, count_k = 0, count_groups = 10;
    long count_walks = 0;
    uint64_t count_seed = 0;
    count->add_option("graph", count_file, "edge-list file")->required();
    count->add_option("--from", count_u0, "start vertex")->required();
    count->add_option("--k", count_k, "path length in vertices")->required();
    count->add_option("--estimate", count_walks, "sampling walks (0 = exact)");
    count->add_option("--groups", count_groups, "median-of-means groups");
    count->add_option("--seed", count_seed, "sampling seed");

    auto* run = app.add_subcommand("run", "run the greedy once");
    std::string run_file, run_mode = "heavy", run_trace;
    int run_u0 = 0, run_k = 0;
    uint64_t run_seed = 0;
    bool run_ham = false;
    run->add_option("graph", run_file, "edge-list file")->required();
    run->add_option("--from", run_u0, "start vertex");
    run->add_option("--k", run_k, "path length in vertices");
    run->add_option("--mode", run_mode, "heavy|light")
        ->check(CLI::IsMember({"heavy", "light"}));
    run->add_option("--seed", run_seed, "weight seed (unless file has weights)");
    run->add_flag("--hamilton", run_ham, "Hamilton-cycle variant (cubic input)");
    run->add_option("--trace", run_trace, "write JSON trace here");

    auto* exp = app.add_subcommand("experiment", "run a campaign from a config");
    std::string exp_config;
    exp->add_option("config", exp_config, "flat key=value config file")->required();

    auto* analyze = app.add_subcommand("analyze", "closed-form grid table");
    int an_grid = 21;
    analyze->add_option("--grid", an_grid, "grid points on [0, 1/2]");

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_depth, gen_n, gen_seed, gen_out);
        if (count->parsed())
            return cmd_count(count_file, count_u0, count_k, count_walks,
                             count_groups, count_seed);
        if (run->parsed())
            return cmd_run(run_file, run_u0, run_k, run_mode, run_seed, run_ham,
                           run_trace);
        if (exp->parsed()) return cmd_experiment(exp_config);
        if (analyze->parsed()) return cmd_analyze(an_grid);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const hl::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hl::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
