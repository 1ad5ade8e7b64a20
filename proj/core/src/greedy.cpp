#include "hl/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hl/errors.hpp"

namespace hl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_subcubic(const Graph& g) {
    if (g.max_degree() > 3)
        throw std::invalid_argument("maximum degree exceeds 3");
}

double candidate_score(GreedyMode mode, double w, double log2a) {
    if (std::isinf(log2a) && log2a < 0)
        return mode == GreedyMode::Heavy ? -kInf : kInf;
    return mode == GreedyMode::Heavy ? w + 0.5 * log2a : w - 0.5 * log2a;
}

bool better(GreedyMode mode, double a, double b) {
    return mode == GreedyMode::Heavy ? a > b : a < b;
}

// Per-(step, neighbor) substream for the sampling oracle.
RngSeed step_seed(const CountOracle& o, int step, Vertex v) {
    uint64_t st = o.seed.stream;
    uint64_t mix = st ^ (0x632be59bd9b4e019ULL + static_cast<uint64_t>(step) * 0x100000001b3ULL +
                         static_cast<uint64_t>(v));
    return {o.seed.seed, splitmix64(mix)};
}

}  // namespace

const char* mode_name(GreedyMode m) {
    return m == GreedyMode::Heavy ? "heavy" : "light";
}

int GreedyTrace::choice_steps() const {
    int n = 0;
    for (const auto& s : steps) {
        int adm = 0;
        for (const auto& c : s.candidates) adm += c.admissible ? 1 : 0;
        if (adm >= 2) ++n;
    }
    return n;
}

std::string GreedyTrace::to_text() const {
    std::ostringstream out;
    out << "mode " << mode_name(mode) << "\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        out << "step " << i << " end " << s.end << " chosen " << s.chosen;
        for (const auto& c : s.candidates)
            out << " | " << c.to << " w=" << c.edge_weight
                << " log2a=" << c.log2_alpha << " score=" << c.score
                << (c.admissible ? "" : " (dead)");
        out << "\n";
    }
    out << "path";
    for (Vertex v : path.vertices) out << " " << v;
    out << "\nweight " << weight << "\n";
    return out.str();
}

std::string GreedyTrace::to_json_string() const {
    nlohmann::json j;
    j["mode"] = mode_name(mode);
    j["steps"] = nlohmann::json::array();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        nlohmann::json js;
        js["step"] = i;
        js["end"] = s.end;
        js["chosen"] = s.chosen;
        js["candidates"] = nlohmann::json::array();
        for (const auto& c : s.candidates) {
            js["candidates"].push_back({{"to", c.to},
                                        {"weight", c.edge_weight},
                                        {"log2_alpha", c.log2_alpha},
                                        {"score", c.score},
                                        {"admissible", c.admissible}});
        }
        j["steps"].push_back(std::move(js));
    }
    j["path"] = path.vertices;
    j["weight"] = weight;
    j["cycle_weight"] = cycle_weight;
    return j.dump(2);
}

Graph preprocess_g_prime(const Graph& g, Vertex u0, int k) {
    check_subcubic(g);
    if (!path_of_length_exists(g, u0, k))
        throw InfeasibleError("no such path");
    if (g.degree(u0) != 3 || k < 2) return g;
    auto split = alpha_split(g, u0, k);
    Vertex drop = split.fractions.front().first;
    mpq_class best = split.fractions.front().second;
    for (const auto& [v, a] : split.fractions) {
        if (a < best) {  // ties keep the smallest id (ascending order)
            best = a;
            drop = v;
        }
    }
    return g.without_edge(u0, drop);
}

GreedyResult run_greedy(const Graph& g, const WeightAssignment& w, Vertex u0,
                        int k, GreedyMode mode, const CountOracle& oracle) {
    check_subcubic(g);
    if (u0 < 0 || u0 >= g.vertex_count())
        throw std::invalid_argument("start vertex out of range");
    if (k < 1 || k > g.vertex_count())
        throw std::invalid_argument("k out of range");
    if (!w.defined_on(g))
        throw std::invalid_argument("weights are not defined on the graph's edge set");
    if (!path_of_length_exists(g, u0, k)) throw InfeasibleError("no such path");

    Graph gp = preprocess_g_prime(g, u0, k);
    GreedyTrace trace;
    trace.mode = mode;
    std::vector<char> visited(gp.vertex_count(), 0);
    Path path;
    path.vertices.push_back(u0);
    visited[u0] = 1;

    for (int m = 1; m < k; ++m) {
        Vertex u = path.back();
        int remaining = k - m;  // vertices still needed, counting the next one
        GreedyStep step;
        step.end = u;
        // Exact residual counts (or estimates) per unvisited neighbor.
        double total = 0.0;
        std::vector<double> counts;
        std::vector<char> feas;
        std::vector<Vertex> cand;
        for (Vertex v : gp.neighbors(u)) {
            if (visited[v]) continue;
            cand.push_back(v);
            bool feasible = path_of_length_exists(gp, v, remaining, visited);
            double cv = 0.0;
            if (feasible) {
                if (oracle.strategy == CountOracle::Strategy::Exact) {
                    cv = count_paths_exact(gp, v, remaining, visited).get_d();
                } else {
                    cv = estimate_paths_sampling(gp, v, remaining, oracle.walks,
                                                 oracle.groups,
                                                 step_seed(oracle, m, v), visited)
                             .estimate;
                }
            }
            feas.push_back(feasible ? 1 : 0);
            counts.push_back(cv);
            total += cv;
        }
        Vertex chosen = -1;
        double chosen_score = 0.0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            Vertex v = cand[i];
            GreedyCandidate c;
            c.to = v;
            c.edge_weight = w.weight(u, v);
            bool feasible = feas[i] != 0;
            c.admissible = feasible;
            c.log2_alpha = (feasible && counts[i] > 0.0 && total > 0.0)
                               ? std::log2(counts[i] / total)
                               : -kInf;
            c.score = candidate_score(mode, c.edge_weight, c.log2_alpha);
            step.candidates.push_back(c);
            if (!feasible) continue;
            if (chosen < 0 || better(mode, c.score, chosen_score)) {
                chosen = v;
                chosen_score = c.score;
            }
        }
        if (chosen < 0) throw InfeasibleError("greedy step had no admissible edge");
        step.chosen = chosen;
        trace.steps.push_back(std::move(step));
        path.vertices.push_back(chosen);
        visited[chosen] = 1;
    }
    trace.path = path;
    trace.weight = path_weight(path, w);
    trace.cycle_weight = trace.weight;
    return {path, trace};
}

HamiltonResult run_greedy_hamilton(const Graph& g, const WeightAssignment& w,
                                   Vertex u0, GreedyMode mode) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("Hamilton variant needs n >= 3");
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument("graph is not cubic");
    if (u0 < 0 || u0 >= n) throw std::invalid_argument("start vertex out of range");
    if (!w.defined_on(g))
        throw std::invalid_argument("weights are not defined on the graph's edge set");

    PathCount h_total = count_hamilton_cycles(g);
    if (h_total == 0) throw InfeasibleError("no Hamilton cycle");

    GreedyTrace trace;
    trace.mode = mode;
    Path path;
    path.vertices.push_back(u0);

    // Starting edge: largest h(G, {u0 v}); pigeonhole gives >= 2h/3.
    {
        GreedyStep step;
        step.end = u0;
        Vertex chosen = -1;
        PathCount best = 0;
        double h_log2 = log2_count(h_total);
        for (Vertex v : g.neighbors(u0)) {
            Path e;
            e.vertices = {u0, v};
            PathCount hv = count_hamilton_through(g, e);
            GreedyCandidate c;
            c.to = v;
            c.edge_weight = w.weight(u0, v);
            c.log2_alpha = log2_count(hv) - h_log2;
            c.score = c.log2_alpha;  // both modes maximize the count here
            c.admissible = hv > 0;
            step.candidates.push_back(c);
            if (hv > best) {
                best = hv;
                chosen = v;
            }
        }
        step.chosen = chosen;
        trace.steps.push_back(std::move(step));
        path.vertices.push_back(chosen);
    }

    std::vector<char> on_path(n, 0);
    on_path[path.vertices[0]] = 1;
    on_path[path.vertices[1]] = 1;
    PathCount h_path = count_hamilton_through(g, path);

    while (path.length() < n) {
        Vertex u = path.back();
        GreedyStep step;
        step.end = u;
        double h_log2 = log2_count(h_path);
        Vertex chosen = -1;
        double chosen_score = 0.0;
        PathCount chosen_count = 0;
        for (Vertex v : g.neighbors(u)) {
            if (on_path[v]) continue;
            Path ext = path;
            ext.vertices.push_back(v);
            PathCount hv = count_hamilton_through(g, ext);
            GreedyCandidate c;
            c.to = v;
            c.edge_weight = w.weight(u, v);
            c.log2_alpha = hv > 0 ? log2_count(hv) - h_log2 : -kInf;
            c.score = candidate_score(mode, c.edge_weight, c.log2_alpha);
            c.admissible = hv > 0;
            step.candidates.push_back(c);
            if (!c.admissible) continue;
            if (chosen < 0 || better(mode, c.score, chosen_score)) {
                chosen = v;
                chosen_score = c.score;
                chosen_count = hv;
            }
        }
        if (chosen < 0) throw InfeasibleError("Hamilton greedy step had no admissible edge");
        step.chosen = chosen;
        trace.steps.push_back(std::move(step));
        path.vertices.push_back(chosen);
        on_path[chosen] = 1;
        h_path = chosen_count;
    }

    HamiltonResult res;
    res.cycle = path;
    res.path_weight = path_weight(path, w);
    res.cycle_weight = res.path_weight + w.weight(path.back(), path.front());
    trace.path = path;
    trace.weight = res.path_weight;
    trace.cycle_weight = res.cycle_weight;
    res.trace = std::move(trace);
    return res;
}

namespace {

void extreme_dfs(const Graph& g, const WeightAssignment& w,
                 std::vector<char>& vis, std::vector<Vertex>& cur, double acc,
                 int k, GreedyMode mode, bool& found, double& best_weight,
                 std::vector<Vertex>& best) {
    if (static_cast<int>(cur.size()) == k) {
        // Ascending DFS order: the first path reaching a given weight is
        // lexicographically smallest, so strict comparison keeps it.
        if (!found || better(mode, acc, best_weight)) {
            found = true;
            best_weight = acc;
            best = cur;
        }
        return;
    }
    Vertex u = cur.back();
    for (Vertex v : g.neighbors(u)) {
        if (vis[v]) continue;
        vis[v] = 1;
        cur.push_back(v);
        extreme_dfs(g, w, vis, cur, acc + w.weight(u, v), k, mode, found,
                    best_weight, best);
        cur.pop_back();
        vis[v] = 0;
    }
}

}  // namespace

Path brute_force_extreme_path(const Graph& g, const WeightAssignment& w,
                              Vertex u0, int k, GreedyMode mode) {
    PathCount f = count_paths_exact(g, u0, k);
    if (f == 0) throw InfeasibleError("no such path");
    if (f > 10000000) throw std::invalid_argument("instance too large for oracle");
    std::vector<char> vis(g.vertex_count(), 0);
    std::vector<Vertex> cur{u0}, best;
    vis[u0] = 1;
    bool found = false;
    double best_weight = 0.0;
    extreme_dfs(g, w, vis, cur, 0.0, k, mode, found, best_weight, best);
    Path p;
    p.vertices = std::move(best);
    return p;
}

namespace {

void ham_extreme_dfs(const Graph& g, const WeightAssignment& w,
                     std::vector<char>& vis, Vertex u, Vertex anchor, double acc,
                     int remaining, HamiltonExtremes& out) {
    if (remaining == 0) {
        if (!g.has_edge(u, anchor)) return;
        double total = acc + w.weight(u, anchor);
        if (out.cycles == 0 || total < out.min_weight) out.min_weight = total;
        if (out.cycles == 0 || total > out.max_weight) out.max_weight = total;
        out.cycles += 1;
        return;
    }
    vis[u] = 1;
    for (Vertex v : g.neighbors(u))
        if (!vis[v])
            ham_extreme_dfs(g, w, vis, v, anchor, acc + w.weight(u, v),
                            remaining - 1, out);
    vis[u] = 0;
}

}  // namespace

HamiltonExtremes brute_force_hamilton_extremes(const Graph& g,
                                               const WeightAssignment& w) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("Hamilton cycles need n >= 3");
    HamiltonExtremes out;
    std::vector<char> vis(n, 0);
    ham_extreme_dfs(g, w, vis, 0, 0, 0.0, n - 1, out);
    out.cycles /= 2;  // each undirected cycle seen once per direction
    return out;
}

}  // namespace hl
