#include "hl/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hl/errors.hpp"

namespace hl {

namespace {

// Counts reachable by enumeration fit comfortably in 64 bits; the
// public arbitrary-precision type is populated from these.
using u64 = unsigned long;  // matches the gmpxx constructor overload set

u64 dfs_count(const Graph& g, std::vector<char>& vis, Vertex u, int remaining) {
    if (remaining == 1) return 1;
    vis[u] = 1;
    u64 total = 0;
    for (Vertex v : g.neighbors(u))
        if (!vis[v]) total += dfs_count(g, vis, v, remaining - 1);
    vis[u] = 0;
    return total;
}

void dfs_count_all(const Graph& g, std::vector<char>& vis, Vertex u, int depth,
                   std::vector<u64>& out) {
    out[depth] += 1;
    vis[u] = 1;
    for (Vertex v : g.neighbors(u))
        if (!vis[v]) dfs_count_all(g, vis, v, depth + 1, out);
    vis[u] = 0;
}

bool dfs_exists(const Graph& g, std::vector<char>& vis, Vertex u, int remaining) {
    if (remaining == 1) return true;
    vis[u] = 1;
    for (Vertex v : g.neighbors(u)) {
        if (!vis[v] && dfs_exists(g, vis, v, remaining - 1)) {
            vis[u] = 0;
            return true;
        }
    }
    vis[u] = 0;
    return false;
}

std::vector<char> init_mask(const Graph& g, std::span<const char> removed) {
    if (removed.empty()) return std::vector<char>(g.vertex_count(), 0);
    if (removed.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("removed mask size mismatch");
    return std::vector<char>(removed.begin(), removed.end());
}

void check_start(const Graph& g, Vertex u0, std::span<const char> removed) {
    if (u0 < 0 || u0 >= g.vertex_count())
        throw std::invalid_argument("start vertex out of range");
    if (!removed.empty() && removed[u0])
        throw std::invalid_argument("start vertex is removed");
}

// Directed Hamilton traversals anchored at `anchor`; each undirected
// cycle is seen once per direction.
u64 ham_dfs(const Graph& g, std::vector<char>& vis, Vertex u, Vertex anchor,
            int remaining) {
    if (remaining == 0) return g.has_edge(u, anchor) ? 1 : 0;
    vis[u] = 1;
    u64 total = 0;
    for (Vertex v : g.neighbors(u))
        if (!vis[v]) total += ham_dfs(g, vis, v, anchor, remaining - 1);
    vis[u] = 0;
    return total;
}

// Self-avoiding traversals from `u` that visit every unvisited vertex
// and end adjacent to `target`.
u64 ham_dfs_to(const Graph& g, std::vector<char>& vis, Vertex u, Vertex target,
               int remaining) {
    if (remaining == 0) return g.has_edge(u, target) ? 1 : 0;
    vis[u] = 1;
    u64 total = 0;
    for (Vertex v : g.neighbors(u))
        if (!vis[v]) total += ham_dfs_to(g, vis, v, target, remaining - 1);
    vis[u] = 0;
    return total;
}

}  // namespace

double log2_count(const PathCount& c) {
    if (c == 0) return -std::numeric_limits<double>::infinity();
    long exp2;
    double d = mpz_get_d_2exp(&exp2, c.get_mpz_t());  // d in [0.5, 1)
    return static_cast<double>(exp2) + std::log2(d);
}

PathCount count_paths_exact(const Graph& g, Vertex u0, int k,
                            std::span<const char> removed) {
    check_start(g, u0, removed);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k > g.vertex_count()) return 0;
    auto vis = init_mask(g, removed);
    return PathCount(dfs_count(g, vis, u0, k));
}

std::vector<PathCount> count_paths_by_length(const Graph& g, Vertex u0,
                                             std::span<const char> removed) {
    check_start(g, u0, removed);
    auto vis = init_mask(g, removed);
    std::vector<u64> counts(g.vertex_count(), 0);
    dfs_count_all(g, vis, u0, 0, counts);
    std::vector<PathCount> out(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) out[i] = PathCount(counts[i]);
    return out;
}

bool path_of_length_exists(const Graph& g, Vertex u0, int k,
                           std::span<const char> removed) {
    check_start(g, u0, removed);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k > g.vertex_count()) return false;
    auto vis = init_mask(g, removed);
    return dfs_exists(g, vis, u0, k);
}

AlphaSplit alpha_split(const Graph& g, Vertex u0, int k,
                       std::span<const char> removed) {
    check_start(g, u0, removed);
    if (k < 2) throw std::invalid_argument("alpha_split needs k >= 2");
    auto vis = init_mask(g, removed);
    vis[u0] = 1;
    AlphaSplit split;
    split.total = 0;
    std::vector<PathCount> per_neighbor;
    for (Vertex v : g.neighbors(u0)) {
        if (vis[v]) continue;
        PathCount f_v(k - 1 <= g.vertex_count()
                          ? dfs_count(g, vis, v, k - 1)
                          : 0UL);
        split.total += f_v;
        split.fractions.emplace_back(v, mpq_class(0));
        per_neighbor.push_back(std::move(f_v));
    }
    if (split.total == 0)
        throw InfeasibleError("no path of requested length");
    for (std::size_t i = 0; i < per_neighbor.size(); ++i) {
        mpq_class a(per_neighbor[i], split.total);
        a.canonicalize();
        split.fractions[i].second = a;
    }
    return split;
}

CountEstimate estimate_paths_sampling(const Graph& g, Vertex u0, int k,
                                      long walks, int groups, RngSeed seed,
                                      std::span<const char> removed) {
    check_start(g, u0, removed);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (groups < 1 || walks < groups)
        throw std::invalid_argument("need walks >= groups >= 1");
    auto base_mask = init_mask(g, removed);
    Rng rng(seed);
    std::vector<double> group_sum(groups, 0.0);
    std::vector<long> group_n(groups, 0);
    std::vector<char> vis;
    std::vector<Vertex> options;
    for (long w = 0; w < walks; ++w) {
        int gi = static_cast<int>(w % groups);
        group_n[gi] += 1;
        vis = base_mask;
        Vertex cur = u0;
        vis[cur] = 1;
        double product = 1.0;
        bool alive = true;
        for (int step = 1; step < k; ++step) {
            options.clear();
            for (Vertex v : g.neighbors(cur))
                if (!vis[v]) options.push_back(v);
            if (options.empty()) {
                alive = false;
                break;
            }
            product *= static_cast<double>(options.size());
            cur = options[rng.below(options.size())];
            vis[cur] = 1;
        }
        if (alive) group_sum[gi] += product;
    }
    std::vector<double> means(groups);
    for (int i = 0; i < groups; ++i) means[i] = group_sum[i] / group_n[i];
    std::sort(means.begin(), means.end());
    double est = (groups % 2 == 1)
                     ? means[groups / 2]
                     : 0.5 * (means[groups / 2 - 1] + means[groups / 2]);
    return {est, walks, groups};
}

PathCount count_hamilton_cycles(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("Hamilton cycles need n >= 3");
    std::vector<char> vis(n, 0);
    u64 directed = ham_dfs(g, vis, 0, 0, n - 1);
    return PathCount(directed / 2);
}

PathCount count_hamilton_through(const Graph& g, const Path& p) {
    if (!is_valid_path(g, p)) throw std::invalid_argument("invalid path");
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("Hamilton cycles need n >= 3");
    if (p.length() == 1) return count_hamilton_cycles(g);
    // Force p's edges by pre-visiting its interior and walking the
    // complementary path from back to front.
    std::vector<char> vis(n, 0);
    for (Vertex v : p.vertices) vis[v] = 1;
    vis[p.back()] = 0;
    return PathCount(ham_dfs_to(g, vis, p.back(), p.front(), n - p.length()));
}

}  // namespace hl
