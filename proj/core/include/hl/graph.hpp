#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "hl/rng.hpp"

namespace hl {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized: first < second

inline Edge normalize_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Immutable simple undirected graph. Neighbor lists are kept sorted
// ascending so that every downstream tie-break is deterministic.
class Graph {
public:
    Graph() = default;
    // Throws std::invalid_argument on self-loops, parallel edges or
    // out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int max_degree() const { return max_degree_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    // Normalized edges in lexicographic order.
    std::vector<Edge> edges() const;

    Graph without_edge(Vertex u, Vertex v) const;

private:
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
    int max_degree_ = 0;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

// Complete binary tree, BFS labels, root = 0. 2^(depth+1)-1 vertices.
std::pair<Graph, Vertex> gen_binary_tree(int depth);

// Path 0-1-...-(n-1); returned vertex is the endpoint 0.
std::pair<Graph, Vertex> gen_path_graph(int n);

Graph gen_cycle_graph(int n);

// Uniform random simple 3-regular graph via the configuration model,
// restarting on loops or multi-edges. Requires n even, n >= 4.
Graph gen_random_cubic(int n, RngSeed seed);

// Asserts the representation invariants (symmetry, sortedness, cached
// max degree). Used by tests.
bool validate_graph(const Graph& g);

}  // namespace hl
