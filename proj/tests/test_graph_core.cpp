#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hl/counting.hpp"
#include "hl/errors.hpp"
#include "hl/graph.hpp"
#include "hl/io.hpp"
#include "hl/weights.hpp"

using namespace hl;

TEST_CASE("build_graph basics") {
    Graph g(2, {{0, 1}});
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
    CHECK(g.max_degree() == 1);

    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.max_degree() == 3);
    CHECK(k4.edge_count() == 6);
    CHECK(validate_graph(k4));

    CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {0, 1}}),
                         doctest::Contains("parallel edge"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {1, 0}}),
                         doctest::Contains("parallel edge"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("binary tree generator") {
    auto [g0, r0] = gen_binary_tree(0);
    CHECK(g0.vertex_count() == 1);
    CHECK(g0.edge_count() == 0);

    auto [g2, r2] = gen_binary_tree(2);
    CHECK(g2.vertex_count() == 7);
    CHECK(g2.edge_count() == 6);
    CHECK(g2.degree(r2) == 2);
    CHECK(validate_graph(g2));

    // 8 root-to-leaf prefixes of 4 vertices at depth 3.
    auto [g3, r3] = gen_binary_tree(3);
    CHECK(count_paths_exact(g3, r3, 4) == 8);
}

TEST_CASE("path and cycle generators") {
    auto [p5, end] = gen_path_graph(5);
    CHECK(end == 0);
    std::vector<int> degs;
    for (int v = 0; v < 5; ++v) degs.push_back(p5.degree(v));
    CHECK(degs == std::vector<int>{1, 2, 2, 2, 1});

    Graph c3 = gen_cycle_graph(3);
    for (int v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);
    CHECK_THROWS_AS(gen_cycle_graph(2), std::invalid_argument);

    Graph c6 = gen_cycle_graph(6);
    CHECK(count_paths_exact(c6, 2, 4) == 2);
}

TEST_CASE("random cubic generator") {
    // n=4 has a unique simple cubic graph: K4.
    Graph g4 = gen_random_cubic(4, {123, 0});
    CHECK(g4.edge_count() == 6);

    for (uint64_t seed : {1ULL, 7ULL, 42ULL}) {
        Graph g = gen_random_cubic(6, {seed, 0});
        CHECK(validate_graph(g));
        for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 3);
    }
    CHECK_THROWS_WITH_AS(gen_random_cubic(5, {1, 0}),
                         doctest::Contains("no cubic graph exists"),
                         std::invalid_argument);
    CHECK_THROWS_AS(gen_random_cubic(2, {1, 0}), std::invalid_argument);

    // Determinism.
    Graph a = gen_random_cubic(12, {9, 3});
    Graph b = gen_random_cubic(12, {9, 3});
    CHECK(a.edges() == b.edges());
}

TEST_CASE("weight sampling: mean, determinism, tail") {
    Graph g(2, {{0, 1}});
    Rng rng(RngSeed{5, 0});
    double sum = 0;
    const int N = 1000000;
    for (int i = 0; i < N; ++i) sum += rng.exponential();
    CHECK(sum / N == doctest::Approx(1.0).epsilon(0.01));

    auto [tree, root] = gen_binary_tree(4);
    WeightAssignment w1 = sample_weights(tree, {17, 2});
    WeightAssignment w2 = sample_weights(tree, {17, 2});
    CHECK(w1.sorted_entries() == w2.sorted_entries());
    WeightAssignment w3 = sample_weights(tree, {17, 3});
    CHECK(w1.sorted_entries() != w3.sorted_entries());

    // P(w > 2 ln n) = n^-2; with n = 1000 expect about 1 in 10^6.
    Rng tail_rng(RngSeed{99, 0});
    double thr = 2.0 * std::log(1000.0);
    int above = 0;
    for (int i = 0; i < N; ++i)
        if (tail_rng.exponential() > thr) ++above;
    CHECK(above <= 8);  // expectation 1, generous Poisson tail
}

TEST_CASE("weight sampling: KS statistic vs exp(1) below 1% critical value") {
    const int N = 100000;
    std::vector<double> xs(N);
    Rng rng(RngSeed{31, 0});
    for (auto& x : xs) x = rng.exponential();
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (int i = 0; i < N; ++i) {
        double cdf = 1.0 - std::exp(-xs[i]);
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i + 1) / N));
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / N));
    }
    double critical = 1.628 / std::sqrt(static_cast<double>(N));
    CHECK(ks < critical);
}

TEST_CASE("edge list round trip") {
    auto data = read_edge_list("2\n0 1 0.5\n");
    CHECK(data.graph.vertex_count() == 2);
    REQUIRE(data.weights.has_value());
    CHECK(data.weights->weight(0, 1) == 0.5);

    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    WeightAssignment w = sample_weights(k4, {3, 0});
    std::string text = write_edge_list(k4, &w);
    auto back = read_edge_list(text);
    CHECK(write_edge_list(back.graph, &*back.weights) == text);

    CHECK_THROWS_WITH_AS(read_edge_list("2\n0 2 1.0\n"),
                         doctest::Contains("out of range"), IoError);
    CHECK_THROWS_AS(read_edge_list("2\n0\n"), IoError);
    CHECK_THROWS_AS(read_edge_list("abc\n"), IoError);

    // Comments and unweighted lines.
    auto d2 = read_edge_list("# header\n3\n0 1\n1 2  # tail comment\n");
    CHECK(d2.graph.edge_count() == 2);
    CHECK_FALSE(d2.weights.has_value());
}

TEST_CASE("generator outputs survive serialization round trip") {
    std::vector<Graph> gs;
    gs.push_back(gen_binary_tree(4).first);
    gs.push_back(gen_path_graph(7).first);
    gs.push_back(gen_cycle_graph(9));
    gs.push_back(gen_random_cubic(10, {4, 0}));
    for (const auto& g : gs) {
        auto text = write_edge_list(g);
        auto back = read_edge_list(text);
        CHECK(back.graph.edges() == g.edges());
        CHECK(write_edge_list(back.graph) == text);
    }
}
