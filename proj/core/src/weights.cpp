#include "hl/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hl {

namespace {
uint64_t edge_key(Vertex u, Vertex v) {
    auto [a, b] = normalize_edge(u, v);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}
}  // namespace

void WeightAssignment::set(Vertex u, Vertex v, double w) {
    if (w < 0) throw std::invalid_argument("negative weight");
    by_edge_[edge_key(u, v)] = w;
}

bool WeightAssignment::has(Vertex u, Vertex v) const {
    return by_edge_.count(edge_key(u, v)) > 0;
}

double WeightAssignment::weight(Vertex u, Vertex v) const {
    auto it = by_edge_.find(edge_key(u, v));
    if (it == by_edge_.end())
        throw std::invalid_argument("no weight for edge (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
    return it->second;
}

std::vector<std::pair<Edge, double>> WeightAssignment::sorted_entries() const {
    std::vector<std::pair<Edge, double>> out;
    out.reserve(by_edge_.size());
    for (auto [key, w] : by_edge_) {
        Vertex u = static_cast<Vertex>(key >> 32);
        Vertex v = static_cast<Vertex>(key & 0xffffffffu);
        out.push_back({{u, v}, w});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool WeightAssignment::defined_on(const Graph& g) const {
    if (size() != static_cast<std::size_t>(g.edge_count())) return false;
    for (auto [u, v] : g.edges())
        if (!has(u, v)) return false;
    return true;
}

WeightAssignment sample_weights(const Graph& g, RngSeed seed) {
    Rng rng(seed);
    WeightAssignment w;
    for (auto [u, v] : g.edges()) w.set(u, v, rng.exponential());
    return w;
}

}  // namespace hl
