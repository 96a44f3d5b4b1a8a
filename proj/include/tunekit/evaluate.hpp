#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "tunekit/cache.hpp"
#include "tunekit/rng.hpp"

namespace tunekit {

enum class FitnessMode { DeterministicMean, StochasticDraw };

FitnessMode fitness_mode_from_string(const std::string& s);
std::string to_string(FitnessMode mode);

// Cooperative stop signal. Thrown by Evaluator when the next evaluation
// would exceed the budget; optimizers catch it and return best-so-far.
struct BudgetExhausted {};

struct EvalBudget {
    std::int64_t max_evals = 0;
    std::int64_t used = 0;
    std::unordered_set<std::uint64_t> visited;  // deterministic mode only
};

struct TraceEntry {
    std::uint64_t rank;
    double fitness;
};

// One optimization trajectory: best point found plus the sequence of
// budget-costing evaluations that produced it.
struct OptimizerRun {
    Configuration best_config;
    double best_fitness = kFailFitness;
    std::int64_t evals_used = 0;
    std::vector<TraceEntry> trace;
    std::uint64_t seed = 0;
};

// Budgeted access to a cache. Deterministic mode returns stored means and
// charges budget only for first visits; stochastic mode draws uniformly
// from the stored samples and charges every call.
class Evaluator {
public:
    Evaluator(const SearchSpaceCache& cache, FitnessMode mode,
              std::int64_t max_evals, std::uint64_t draw_seed);

    double evaluate_rank(std::uint64_t rank);
    double evaluate(const Configuration& x);

    const SearchSpaceCache& cache() const { return cache_; }
    const ParameterSpace& space() const { return cache_.space(); }
    FitnessMode mode() const { return mode_; }
    bool deterministic() const { return mode_ == FitnessMode::DeterministicMean; }

    bool seen(std::uint64_t rank) const {
        return deterministic() && budget_.visited.count(rank) != 0;
    }
    // True when no future call can cost budget: either used == max_evals is
    // about to be hit, or (deterministic, complete cache) every configuration
    // has been visited.
    bool space_exhausted() const {
        return deterministic() && cache_.complete() &&
               budget_.visited.size() == cache_.size();
    }
    std::int64_t used() const { return budget_.used; }
    std::int64_t max_evals() const { return budget_.max_evals; }
    std::int64_t remaining() const { return budget_.max_evals - budget_.used; }

    const std::vector<TraceEntry>& trace() const { return trace_; }
    double best_fitness() const { return best_fitness_; }
    std::uint64_t best_rank() const { return best_rank_; }

    OptimizerRun finish(std::uint64_t seed) const;

private:
    const SearchSpaceCache& cache_;
    FitnessMode mode_;
    EvalBudget budget_;
    Rng draw_rng_;
    std::vector<TraceEntry> trace_;
    double best_fitness_ = kFailFitness;
    std::uint64_t best_rank_ = 0;
    bool has_best_ = false;
    // Consecutive zero-cost evaluations. Once the reachable set is fully
    // cached an optimizer can no longer make budget progress; the signal
    // below ends the run instead of live-looping.
    std::int64_t stagnant_ = 0;
    static constexpr std::int64_t kStagnationLimit = 2'000'000;
};

}  // namespace tunekit
