#pragma once
#include <unordered_map>
#include <vector>

#include "hl/graph.hpp"
#include "hl/rng.hpp"

namespace hl {

// Nonnegative weight per normalized edge of one host graph.
class WeightAssignment {
public:
    WeightAssignment() = default;

    void set(Vertex u, Vertex v, double w);
    bool has(Vertex u, Vertex v) const;
    // Throws std::invalid_argument if the edge has no weight.
    double weight(Vertex u, Vertex v) const;
    std::size_t size() const { return by_edge_.size(); }

    // Edges in normalized lexicographic order (the draw order of
    // sample_weights).
    std::vector<std::pair<Edge, double>> sorted_entries() const;

    // True iff defined on exactly g's edge set with all weights >= 0.
    bool defined_on(const Graph& g) const;

private:
    std::unordered_map<uint64_t, double> by_edge_;
};

// One independent exp(1) draw per edge, drawn in normalized-edge sort
// order so the result is bit-reproducible under (seed, stream).
WeightAssignment sample_weights(const Graph& g, RngSeed seed);

}  // namespace hl
