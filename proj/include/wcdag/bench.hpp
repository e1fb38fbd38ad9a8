#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wcdag/graph.hpp"

namespace wcdag {

struct RunRecord {
    int experiment = 0;
    std::string graph_class;
    int n = 0;
    std::uint64_t seed = 0;
    std::string weight_type;
    double alpha = 0;
    double beta = 1;
    int k = 1;
    std::string algorithm;
    int num_interventions = 0;
    double total_weight = 0;
    double generalized_cost = 0;
    int phases = 0;
    double wall_time_ms = 0;
};

struct ExperimentConfig {
    int experiment = 1;  // 1..5; picks graph class, sizes and tree parameters
    std::vector<int> ns;  // empty = experiment defaults (3 and 5 capped at 200)
    int num_seeds = 0;    // 0 = experiment default (100; 20 for experiments 3/5)
    std::uint64_t base_seed = 1;
    std::string weight_type = "type1";  // type1 | type2 | unit
    double p = 0.1;                     // heavy fraction for type2
    double alpha = 0;
    double beta = 1;
    std::vector<int> ks = {1};
    // Roster: weighted_separator, separator, naive, random, blackbox.
    // Algorithms without a bounded-size variant only run at k = 1.
    std::vector<std::string> algorithms = {"weighted_separator", "separator", "naive", "random"};
};

/// Fills in experiment-dependent defaults (sizes, seeds, class parameters).
ExperimentConfig resolve_config(ExperimentConfig cfg);

/// Builds the instance for one cell of the matrix. Deterministic in
/// (cfg.base_seed, cfg.experiment, n, seed_index).
WeightedInstance make_instance(const ExperimentConfig& cfg, int n, int seed_index);

/// Runs the full matrix. Rows are computed by a worker pool (BENCH_THREADS,
/// default hardware concurrency) and merged in sorted order, so the output
/// is independent of scheduling. Every ledger is re-validated against the
/// ground truth before the row is accepted.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

/// Exact schema:
/// experiment,graph_class,n,seed,weight_type,alpha,beta,k,algorithm,
/// num_interventions,total_weight,generalized_cost,phases,wall_time_ms
std::string to_csv(const std::vector<RunRecord>& rows);
std::vector<RunRecord> parse_csv(const std::string& text);

/// Seeds, version and every tunable knob of the run, as JSON.
std::string run_metadata_json(const ExperimentConfig& cfg);

struct PlotSpec {
    std::string value = "generalized_cost";  // or wall_time_ms / total_weight
    bool log_scale = false;                  // log10 y, clamped at 1e-3
    std::string title;
};

/// Line chart: x = n, y = per-(algorithm, k) median of the chosen value.
/// All rows must share one experiment id.
std::string render_plot_svg(const std::vector<RunRecord>& rows, const PlotSpec& spec);

}  // namespace wcdag
