#include "hl/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "hl/errors.hpp"

namespace hl {

Graph::Graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.assign(n, {});
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("vertex id out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        Edge e = normalize_edge(u, v);
        if (!seen.insert(e).second)
            throw std::invalid_argument("parallel edge (" + std::to_string(e.first) +
                                        "," + std::to_string(e.second) + ")");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    edge_count_ = static_cast<int>(seen.size());
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= vertex_count()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    auto es = edges();
    Edge target = normalize_edge(u, v);
    std::erase(es, target);
    return Graph(vertex_count(), es);
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

std::pair<Graph, Vertex> gen_binary_tree(int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    int n = (1 << (depth + 1)) - 1;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
    return {Graph(n, edges), 0};
}

std::pair<Graph, Vertex> gen_path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return {Graph(n, edges), 0};
}

Graph gen_cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph gen_random_cubic(int n, RngSeed seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("no cubic graph exists for n = " + std::to_string(n));
    Rng rng(seed);
    std::vector<int> stubs(3 * n);
    for (;;) {
        for (int i = 0; i < 3 * n; ++i) stubs[i] = i / 3;
        // Fisher-Yates; consecutive pairs of the shuffled stubs form the
        // matching.
        for (int i = 3 * n - 1; i > 0; --i) {
            int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
            std::swap(stubs[i], stubs[j]);
        }
        std::set<Edge> edges;
        bool simple = true;
        for (int i = 0; i < 3 * n && simple; i += 2) {
            Vertex u = stubs[i], v = stubs[i + 1];
            if (u == v || !edges.insert(normalize_edge(u, v)).second) simple = false;
        }
        if (simple)
            return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    }
}

bool validate_graph(const Graph& g) {
    int maxd = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto& nb = g.neighbors(u);
        if (!std::is_sorted(nb.begin(), nb.end())) return false;
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
        for (Vertex v : nb) {
            if (v == u || !g.has_edge(v, u)) return false;
        }
        maxd = std::max(maxd, static_cast<int>(nb.size()));
    }
    return maxd == g.max_degree();
}

}  // namespace hl
