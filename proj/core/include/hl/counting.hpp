#pragma once
#include <gmpxx.h>

#include <span>
#include <utility>
#include <vector>

#include "hl/graph.hpp"
#include "hl/path.hpp"
#include "hl/rng.hpp"

namespace hl {

// Exact self-avoiding path count; can reach 3*2^(k-1) so it is kept as
// an arbitrary-precision integer.
using PathCount = mpz_class;

// log2 of a positive count from its bit length plus mantissa
// correction, never from accumulated float products. log2(0) = -inf.
double log2_count(const PathCount& c);

struct AlphaSplit {
    // (neighbor id, exact fraction of paths through that edge),
    // neighbors in ascending id order. Fractions sum to 1 exactly when
    // total > 0; dead neighbors carry 0.
    std::vector<std::pair<Vertex, mpq_class>> fractions;
    PathCount total;
};

struct CountEstimate {
    double estimate = 0.0;
    long walks = 0;
    int groups = 1;
};

// Number of self-avoiding paths with exactly k vertices starting at u0.
// `removed`, when nonempty, marks vertices excluded from the graph.
PathCount count_paths_exact(const Graph& g, Vertex u0, int k,
                            std::span<const char> removed = {});

// f(g, u0, k) for every k = 1..n in a single traversal (index k-1).
std::vector<PathCount> count_paths_by_length(const Graph& g, Vertex u0,
                                             std::span<const char> removed = {});

// True iff a self-avoiding path of k vertices from u0 exists. Exact
// decision by pruned DFS; this is what admissibility checks use, never
// a noisy estimate.
bool path_of_length_exists(const Graph& g, Vertex u0, int k,
                           std::span<const char> removed = {});

// Per-neighbor path fractions alpha_i = f(g \ u0, v_i, k-1) / f(g, u0, k).
// Throws InfeasibleError when f(g, u0, k) = 0.
AlphaSplit alpha_split(const Graph& g, Vertex u0, int k,
                       std::span<const char> removed = {});

// Unbiased sequential-importance estimator: grow a uniform random
// self-avoiding walk, multiplying the running weight by the number of
// admissible next vertices at each step; dead walks contribute 0.
// Group means are combined by median-of-means.
CountEstimate estimate_paths_sampling(const Graph& g, Vertex u0, int k,
                                      long walks, int groups, RngSeed seed,
                                      std::span<const char> removed = {});

// Hamilton cycles up to rotation and reflection.
PathCount count_hamilton_cycles(const Graph& g);

// Hamilton cycles containing every edge of p; for |p| = 1 this equals
// count_hamilton_cycles.
PathCount count_hamilton_through(const Graph& g, const Path& p);

}  // namespace hl
