#pragma once
#include <unordered_set>
#include <vector>

#include "hl/graph.hpp"
#include "hl/weights.hpp"

namespace hl {

// Self-avoiding path; length convention is the number of vertices.
struct Path {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

// Distinct vertices, consecutive pairs adjacent in g.
inline bool is_valid_path(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    std::unordered_set<Vertex> seen;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        Vertex v = p.vertices[i];
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
        if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
    }
    return true;
}

// Sum over the consecutive edges; 0 for a single vertex. Throws if an
// edge is missing from w.
inline double path_weight(const Path& p, const WeightAssignment& w) {
    double total = 0.0;
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        total += w.weight(p.vertices[i - 1], p.vertices[i]);
    return total;
}

}  // namespace hl
