#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "hl/closed_form.hpp"
#include "hl/graph.hpp"
#include "hl/greedy.hpp"
#include "hl/stats.hpp"

namespace hl {

struct InstanceSpec {
    std::string kind;  // tree | path | cycle | cubic | file
    int depth = 0;     // tree
    int n = 0;         // path / cycle / cubic
    uint64_t instance_seed = 0;
    std::string file;  // file
};

// Builds the instance; *start receives the natural start vertex
// (tree root / path endpoint / 0).
Graph make_instance(const InstanceSpec& spec, Vertex* start = nullptr);

struct ExperimentConfig {
    std::string name = "campaign";
    InstanceSpec instance;
    Vertex u0 = 0;
    int k = 0;
    GreedyMode mode = GreedyMode::Heavy;
    CountOracle oracle = CountOracle::exact();
    long trials = 2000;
    uint64_t weight_seed = 1;
    std::string out_dir;  // empty: no files written
    bool hamilton = false;
    // Annealed variant: a fresh cubic instance per trial instead of one
    // fixed graph; the verdict then compares each trial against its own
    // instance's bound.
    bool graph_average = false;
};

// Parses the flat key=value campaign config format; collects every
// schema violation into one error message.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

struct TrialRecord {
    long trial = 0;
    uint64_t stream = 0;  // weight substream id
    double weight = 0.0;
    int choice_steps = 0;
};

struct BoundVerdict {
    GreedyMode mode = GreedyMode::Heavy;
    TrialStats stats;
    closed_form::BoundReport report;
    double margin_se = 0.0;  // (mean - bound) / SE, signed toward pass
    bool pass = false;       // at 3 SE
};

struct CampaignResult {
    ExperimentConfig config;
    double log2f_gprime = 0.0;
    bool log2f_estimated = false;
    BoundVerdict verdict;
    std::vector<TrialRecord> trials;
    // Hamilton campaigns only:
    bool hamilton = false;
    double log2h = 0.0;
    double per_vertex_rate = 0.0;  // mean cycle weight / n
    int instance_attempts = 1;     // non-Hamiltonian draws discarded + 1
};

// Quenched setting: one instance, `trials` independent weight draws
// from substreams of weight_seed. The verdict tests the empirical mean
// against k + log2(f(G',u0,k))/2 - 1 (heavy) or k - log2(f(G'))/2
// (light) at 3 SE.
CampaignResult run_campaign(const ExperimentConfig& cfg);

// Hamilton variant on a random cubic instance. Hamiltonicity is
// verified exactly before the campaign; non-Hamiltonian draws are
// regenerated and counted. The verdict uses the n-vertex path weight
// against n +- log2(h(G,{u0})/3)/2 (- 1 for heavy); the per-vertex
// rate uses the full cycle weight.
CampaignResult run_hamilton_campaign(int n, uint64_t instance_seed,
                                     GreedyMode mode, long trials,
                                     uint64_t weight_seed = 1,
                                     const std::string& name = "hamilton",
                                     const std::string& out_dir = "");

struct ConcentrationSummary {
    ExperimentConfig config;
    TrialStats weight_stats;
    double deviation_threshold = 0.0;  // sqrt(n) * ln^2 n
    long trials_beyond_threshold = 0;
    double edge_tail_threshold = 0.0;  // 2 ln n
    long total_edge_draws = 0;
    long edge_draws_above = 0;
    double edge_exceed_rate = 0.0;
    double expected_edge_exceed_rate = 0.0;  // n^-2
    double exceed_rate_se = 0.0;
    double max_edge_weight = 0.0;
};

ConcentrationSummary concentration_report(const ExperimentConfig& cfg);

struct EmittedFiles {
    std::string csv_path;
    std::string json_path;
};

// CSV: "trial,seed,weight,choice_steps"; JSON: config echo + stats +
// verdict with deterministic field order. File names:
// {name}-{instanceseed}-{mode}.csv/json.
EmittedFiles emit_results(const CampaignResult& result, const std::string& dir);

std::string campaign_json(const CampaignResult& result);
std::string campaign_csv(const CampaignResult& result);

}  // namespace hl
