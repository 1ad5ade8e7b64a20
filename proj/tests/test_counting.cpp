#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hl/counting.hpp"
#include "hl/errors.hpp"
#include "hl/graph.hpp"

using namespace hl;

namespace {

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// Independent brute-force oracle: enumerate vertex sequences by plain
// recursion over raw adjacency, no pruning, no shared code path.
long oracle_count(const Graph& g, Vertex u0, int k, std::vector<char>& used) {
    if (k == 1) return 1;
    used[u0] = 1;
    long total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!used[v] && g.has_edge(u0, v)) total += oracle_count(g, v, k - 1, used);
    used[u0] = 0;
    return total;
}

long oracle_count(const Graph& g, Vertex u0, int k) {
    std::vector<char> used(g.vertex_count(), 0);
    return oracle_count(g, u0, k, used);
}

}  // namespace

TEST_CASE("count_paths_exact on fixtures") {
    auto [p5, e] = gen_path_graph(5);
    CHECK(count_paths_exact(p5, e, 5) == 1);
    CHECK(count_paths_exact(k4(), 0, 4) == 6);
    CHECK(count_paths_exact(k4(), 2, 4) == 6);
    auto [t3, root] = gen_binary_tree(3);
    CHECK(count_paths_exact(t3, root, 4) == 8);
    CHECK(count_paths_exact(t3, root, 4) == oracle_count(t3, root, 4));
    Graph c6 = gen_cycle_graph(6);
    CHECK(count_paths_exact(c6, 1, 4) == 2);

    CHECK(count_paths_exact(c6, 0, 1) == 1);
    CHECK_THROWS_AS(count_paths_exact(c6, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_paths_exact(c6, 9, 2), std::invalid_argument);
}

TEST_CASE("recursion identity and degree bound on random subcubic instances") {
    for (uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
        Graph g = gen_random_cubic(10, {seed, 0});
        for (Vertex u0 = 0; u0 < 10; ++u0) {
            auto by_len = count_paths_by_length(g, u0);
            std::vector<char> removed(10, 0);
            removed[u0] = 1;
            for (int k = 2; k <= 10; ++k) {
                PathCount rhs = 0;
                for (Vertex v : g.neighbors(u0))
                    rhs += count_paths_exact(g, v, k - 1, removed);
                CHECK(by_len[k - 1] == rhs);
                // f <= 3 * 2^(k-1) for max degree 3
                PathCount bound = 3 * (PathCount(1) << (k - 1));
                CHECK(by_len[k - 1] <= bound);
            }
        }
    }
}

TEST_CASE("alpha_split") {
    auto [t3, root] = gen_binary_tree(3);
    auto s = alpha_split(t3, root, 4);
    REQUIRE(s.fractions.size() == 2);
    CHECK(s.fractions[0].second == mpq_class(1, 2));
    CHECK(s.fractions[1].second == mpq_class(1, 2));
    CHECK(s.total == 8);

    auto s2 = alpha_split(k4(), 0, 4);
    for (auto& [v, a] : s2.fractions) CHECK(a == mpq_class(1, 3));

    // Interior path vertex: the short side cannot host 3 more vertices.
    auto [p5, e] = gen_path_graph(5);
    auto s3 = alpha_split(p5, 1, 4);
    REQUIRE(s3.fractions.size() == 2);
    CHECK(s3.fractions[0].first == 0);
    CHECK(s3.fractions[0].second == 0);
    CHECK(s3.fractions[1].second == 1);

    // Sum is exactly 1 in rational arithmetic.
    mpq_class sum = 0;
    for (auto& [v, a] : s3.fractions) sum += a;
    CHECK(sum == 1);

    CHECK_THROWS_AS(alpha_split(p5, 2, 5), InfeasibleError);
}

TEST_CASE("log2_count") {
    CHECK(log2_count(PathCount(1)) == 0.0);
    CHECK(log2_count(PathCount(8)) == 3.0);
    CHECK(log2_count(PathCount(6)) == doctest::Approx(std::log2(6.0)));
    CHECK(std::isinf(log2_count(PathCount(0))));
    PathCount big = PathCount(1) << 200;
    CHECK(log2_count(big) == 200.0);
}

TEST_CASE("sampling estimator vs exact oracle") {
    auto [p5, e] = gen_path_graph(5);
    auto est = estimate_paths_sampling(p5, e, 5, 100, 4, {1, 0});
    CHECK(est.estimate == 1.0);

    auto [t8, root] = gen_binary_tree(8);
    auto est2 = estimate_paths_sampling(t8, root, 9, 10000, 10, {2, 0});
    CHECK(est2.estimate == doctest::Approx(256.0).epsilon(0.10));

    auto est3 = estimate_paths_sampling(k4(), 0, 4, 10000, 10, {3, 0});
    CHECK(est3.estimate == doctest::Approx(6.0).epsilon(0.10));

    CHECK_THROWS_AS(estimate_paths_sampling(k4(), 0, 4, 5, 10, {1, 0}),
                    std::invalid_argument);
}

TEST_CASE("sampling estimator is unbiased within 3 SE") {
    Graph g = gen_random_cubic(12, {11, 0});
    double exact = count_paths_exact(g, 0, 12).get_d();
    const long walks = 100000;
    // Grand mean over all walks = single-group mean.
    auto est = estimate_paths_sampling(g, 0, 12, walks, 1, {12, 0});
    // SE of the per-walk contribution, conservatively bounded by the
    // max product 2^11.
    double se = std::pow(2.0, 11) / std::sqrt(static_cast<double>(walks));
    CHECK(std::abs(est.estimate - exact) <= 3 * se);
}

TEST_CASE("hamilton cycle counts") {
    CHECK(count_hamilton_cycles(k4()) == 3);
    CHECK(count_hamilton_cycles(gen_cycle_graph(6)) == 1);
    auto [p5, e] = gen_path_graph(5);
    CHECK(count_hamilton_cycles(p5) == 0);

    Path edge;
    edge.vertices = {0, 1};
    CHECK(count_hamilton_through(k4(), edge) == 2);
    Path c6edge;
    c6edge.vertices = {2, 3};
    CHECK(count_hamilton_through(gen_cycle_graph(6), c6edge) == 1);

    Path single;
    single.vertices = {2};
    CHECK(count_hamilton_through(k4(), single) == 3);

    Path bogus;
    bogus.vertices = {0, 0};
    CHECK_THROWS_AS(count_hamilton_through(k4(), bogus), std::invalid_argument);
}

TEST_CASE("hamilton identities on random cubic graphs") {
    for (uint64_t seed : {5ULL, 6ULL, 7ULL}) {
        Graph g = gen_random_cubic(10, {seed, 0});
        PathCount h = count_hamilton_cycles(g);

        // Edge-sum identity: each cycle uses exactly 2 of u0's edges.
        for (Vertex u0 = 0; u0 < 10; ++u0) {
            PathCount sum = 0;
            for (Vertex v : g.neighbors(u0)) {
                Path e;
                e.vertices = {u0, v};
                sum += count_hamilton_through(g, e);
            }
            CHECK(sum == 2 * h);
        }

        // Extension recursion: h(G,P) = sum over end extensions.
        Path p;
        p.vertices = {0, g.neighbors(0)[0]};
        for (int grow = 0; grow < 4; ++grow) {
            PathCount hp = count_hamilton_through(g, p);
            PathCount sum = 0;
            Vertex best = -1;
            PathCount best_h = -1;
            for (Vertex v : g.neighbors(p.back())) {
                bool on_path = false;
                for (Vertex x : p.vertices) on_path |= (x == v);
                if (on_path) continue;
                Path ext = p;
                ext.vertices.push_back(v);
                PathCount hv = count_hamilton_through(g, ext);
                sum += hv;
                if (hv > best_h) {
                    best_h = hv;
                    best = v;
                }
            }
            CHECK(sum == hp);
            if (best < 0 || best_h == 0) break;
            p.vertices.push_back(best);
        }
    }
}

TEST_CASE("hamilton count vs permutation brute force at n=10") {
    Graph g = gen_random_cubic(10, {8, 0});
    // Fix vertex 0 first; count cyclic orders that are g-cycles, each
    // counted twice (two directions).
    std::vector<Vertex> perm{1, 2, 3, 4, 5, 6, 7, 8, 9};
    long directed = 0;
    do {
        bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
            ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) ++directed;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count_hamilton_cycles(g) == directed / 2);
}
