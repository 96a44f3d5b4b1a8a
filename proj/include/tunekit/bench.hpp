#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tunekit/cache.hpp"
#include "tunekit/evaluate.hpp"
#include "tunekit/optimizers.hpp"
#include "tunekit/stats.hpp"

namespace tunekit {

struct CacheRef {
    std::string name;  // e.g. "convolution/A100"
    std::string path;
    bool used_for_tuning = false;  // excluded from competition counts
};

struct AlgorithmRef {
    std::string algorithm;
    // Explicit hyperparameters; empty object = resolve per budget from the
    // defaults table.
    Json hyperparams = Json::object();
};

struct ExperimentPlan {
    std::vector<CacheRef> caches;
    std::vector<AlgorithmRef> algorithms;
    std::vector<std::int64_t> budgets = {25, 50, 100, 200, 400, 800, 1600};
    int repetitions = 50;
    FitnessMode mode = FitnessMode::DeterministicMean;
    std::uint64_t base_seed = 0;
    // Shared-seed budget nesting: one run at the largest budget of a group
    // with identical hyperparameters also yields every smaller budget as a
    // trace prefix. When false every (budget, rep) runs independently with
    // its own derived seed.
    bool nested_budgets = true;
};

ExperimentPlan plan_from_json(const Json& j);
Json plan_to_json(const ExperimentPlan& plan);

struct ResultRecord {
    std::string cache;
    std::string algorithm;
    std::int64_t budget = 0;
    int rep = 0;
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    double fraction = 0.0;
    std::int64_t evals_used = 0;
};

// Runs the full (cache x algorithm x budget x repetition) tensor on a pool
// of `workers` threads. Output order is canonical and independent of the
// worker count. loaded_caches maps CacheRef.name to its cache.
std::vector<ResultRecord> run_experiment(
    const ExperimentPlan& plan,
    const std::map<std::string, const SearchSpaceCache*>& loaded_caches,
    int workers = 1);

void write_results_jsonl(const std::vector<ResultRecord>& results, std::ostream& out);
std::vector<ResultRecord> read_results_jsonl(std::istream& in);

struct FractionCurvePoint {
    std::int64_t budget;
    double mean_evals_used;
    double mean_fraction;     // f-tilde: mean of f_opt / f_j over repetitions
    double ci95_half_width;   // normal approximation
    int repetitions;
};
std::vector<FractionCurvePoint> fraction_curve(const std::vector<ResultRecord>& results,
                                               const std::string& cache,
                                               const std::string& algorithm);

struct CompetitionBand {
    std::string name;                     // "low" / "high"
    std::vector<std::int64_t> budgets;
    // wins[a][b] = count of (cache, budget) cells where algorithm a was
    // statistically better than algorithm b.
    std::vector<std::vector<int>> wins;
    std::vector<int> total_wins;
    std::vector<int> total_losses;
};

struct CompetitionResult {
    std::vector<std::string> algorithms;
    std::vector<CompetitionBand> bands;
    double alpha;
    std::int64_t band_split;
};

// Two bands: budgets <= band_split and budgets > band_split. Caches whose
// CacheRef is marked used_for_tuning are excluded via excluded_caches.
CompetitionResult competition_heatmaps(const std::vector<ResultRecord>& results,
                                       std::int64_t band_split = 200,
                                       double alpha = 0.05,
                                       const std::vector<std::string>& excluded_caches = {});

void write_heatmap_csv(const CompetitionResult& comp, const CompetitionBand& band,
                       std::ostream& out);
void write_totals_csv(const CompetitionResult& comp, std::ostream& out);

// --- hyperparameter selection -------------------------------------------

struct HyperparameterGrid {
    // Ordered setting ids; ties in selection break toward the earlier id.
    std::vector<std::string> setting_ids;
    std::map<std::string, Json> setting_params;
    std::vector<std::string> caches;
    std::vector<std::int64_t> budgets;
    // (setting, cache, budget) -> mean best fitness and stddev over reps.
    std::map<std::string, double> mean;
    std::map<std::string, double> stddev;

    static std::string cell_key(const std::string& setting, const std::string& cache,
                                std::int64_t budget);
    bool has_cell(const std::string& setting, const std::string& cache,
                  std::int64_t budget) const;
};

HyperparameterGrid grid_from_json(const Json& j);
Json grid_to_json(const HyperparameterGrid& grid);

struct SelectionEntry {
    std::int64_t budget;
    std::string setting_id;
    Json params;
    double k;  // smallest admitting threshold
};

struct SelectionDiagnostics {
    std::int64_t budget;
    std::string message;  // per-cache nearest-miss description
};

struct SelectionResult {
    std::vector<SelectionEntry> selected;
    std::vector<SelectionDiagnostics> failures;
};

// Per budget: admit settings whose mean is within k*sigma_best of the best
// per cache, intersect across caches, and binary-search the smallest k with
// a non-empty intersection. Multi-way ties break by lowest sum of per-cache
// mean-fitness ranks, then by setting order.
SelectionResult select_hyperparameters(const HyperparameterGrid& grid,
                                       double k_max = 16.0,
                                       double k_resolution = 1e-3);

// Emits the (algorithm, budget)-keyed defaults-file schema for one algorithm.
Json selection_to_defaults(const SelectionResult& sel, const std::string& algorithm);

// --- external traces ------------------------------------------------------

// CSV with header {algorithm, cache, budget, rep, best_fitness}. Fractions
// are computed against f_opt of the named cache. Malformed rows raise
// ParseError with the line number.
std::vector<ResultRecord> import_external_trace(
    std::istream& in, const std::map<std::string, double>& fopt_by_cache);

}  // namespace tunekit
