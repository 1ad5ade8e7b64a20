#pragma once
#include <string>
#include <vector>

#include "hl/counting.hpp"
#include "hl/graph.hpp"
#include "hl/path.hpp"
#include "hl/rng.hpp"
#include "hl/weights.hpp"

namespace hl {

enum class GreedyMode { Heavy, Light };

const char* mode_name(GreedyMode m);

// Path-count blackbox used by the greedy step. In Sampling mode the
// log2(alpha) scores come from the sequential-importance estimator but
// admissibility (alpha > 0 vs alpha = 0) is still decided by an exact
// existence DFS, so the output length contract holds regardless of
// estimator noise.
struct CountOracle {
    enum class Strategy { Exact, Sampling };
    Strategy strategy = Strategy::Exact;
    long walks = 0;
    int groups = 1;
    RngSeed seed;

    static CountOracle exact() { return {}; }
    static CountOracle sampling(long walks, int groups, RngSeed seed) {
        return {Strategy::Sampling, walks, groups, seed};
    }
};

struct GreedyCandidate {
    Vertex to = -1;
    double edge_weight = 0.0;
    double log2_alpha = 0.0;  // -inf when alpha = 0
    double score = 0.0;       // heavy: w + log2a/2; light: w - log2a/2
    bool admissible = false;
};

struct GreedyStep {
    Vertex end = -1;
    std::vector<GreedyCandidate> candidates;  // ascending neighbor id
    Vertex chosen = -1;
};

struct GreedyTrace {
    GreedyMode mode = GreedyMode::Heavy;
    std::vector<GreedyStep> steps;
    Path path;
    double weight = 0.0;        // sum over the path's edges
    double cycle_weight = 0.0;  // Hamilton variant: + closing edge; else = weight

    // Steps where at least two admissible candidates existed.
    int choice_steps() const;

    std::string to_text() const;
    std::string to_json_string() const;
};

// The G' step: at a degree-3 start vertex, remove the incident edge
// with smallest alpha (ties: smallest neighbor id). Guarantees
// f(G', u0, k) >= f(G, u0, k) / 3.
Graph preprocess_g_prime(const Graph& g, Vertex u0, int k);

struct GreedyResult {
    Path path;
    GreedyTrace trace;
};

// Heavy/Light greedy of the two-term score w(uv) +- log2(alpha)/2,
// applied to G' and deleting the departed vertex each step. Always
// returns a path of exactly k vertices when f(g, u0, k) >= 1.
GreedyResult run_greedy(const Graph& g, const WeightAssignment& w, Vertex u0,
                        int k, GreedyMode mode,
                        const CountOracle& oracle = CountOracle::exact());

struct HamiltonResult {
    Path cycle;  // n vertices; the closing edge back to front is implicit
    GreedyTrace trace;
    double path_weight = 0.0;
    double cycle_weight = 0.0;  // includes the closing edge
};

// Hamilton-cycle variant on cubic graphs: start with the incident edge
// carrying the largest Hamilton count (pigeonhole: >= 2/3 of the
// total), then run the greedy step rule with alpha defined through
// h(G, P ∪ {w_i}). Output is always a Hamilton cycle when one exists.
HamiltonResult run_greedy_hamilton(const Graph& g, const WeightAssignment& w,
                                   Vertex u0, GreedyMode mode);

// Exhaustive max/min-weight k-path oracle; ties resolved to the
// lexicographically smallest vertex sequence. Guarded by
// f(g, u0, k) <= 10^7.
Path brute_force_extreme_path(const Graph& g, const WeightAssignment& w,
                              Vertex u0, int k, GreedyMode mode);

struct HamiltonExtremes {
    PathCount cycles;
    double min_weight = 0.0;
    double max_weight = 0.0;
};

// Exhaustive Hamilton-cycle weight extremes (closing edge included).
HamiltonExtremes brute_force_hamilton_extremes(const Graph& g,
                                               const WeightAssignment& w);

}  // namespace hl
