#pragma once
#include <iosfwd>
#include <optional>
#include <string>

#include "hl/graph.hpp"
#include "hl/weights.hpp"

namespace hl {

struct EdgeListData {
    Graph graph;
    std::optional<WeightAssignment> weights;
};

// Format: first line = n; then "u v [w]" with 0 <= u < v < n; '#'
// starts a comment line. Errors carry the 1-based line number.
EdgeListData read_edge_list(std::istream& in);
EdgeListData read_edge_list(const std::string& text);
EdgeListData read_edge_list_file(const std::string& path);

std::string write_edge_list(const Graph& g,
                            const WeightAssignment* w = nullptr);
void write_edge_list_file(const std::string& path, const Graph& g,
                          const WeightAssignment* w = nullptr);

}  // namespace hl
