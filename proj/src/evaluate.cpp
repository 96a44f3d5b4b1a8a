#include "tunekit/evaluate.hpp"

#include "tunekit/errors.hpp"

namespace tunekit {

FitnessMode fitness_mode_from_string(const std::string& s) {
    if (s == "deterministic" || s == "mean") return FitnessMode::DeterministicMean;
    if (s == "stochastic" || s == "draw") return FitnessMode::StochasticDraw;
    throw InvalidArgument("unknown fitness mode: " + s +
                          " (expected deterministic or stochastic)");
}

std::string to_string(FitnessMode mode) {
    return mode == FitnessMode::DeterministicMean ? "deterministic" : "stochastic";
}

Evaluator::Evaluator(const SearchSpaceCache& cache, FitnessMode mode,
                     std::int64_t max_evals, std::uint64_t draw_seed)
    : cache_(cache), mode_(mode), draw_rng_(Rng::stream(draw_seed, 0x5d10)) {
    if (max_evals < 1) throw InvalidArgument("budget must be at least 1 evaluation");
    budget_.max_evals = max_evals;
}

double Evaluator::evaluate_rank(std::uint64_t rank) {
    if (rank >= cache_.size()) throw InvalidArgument("configuration rank out of range");

    if (deterministic() && budget_.visited.count(rank)) {
        // Revisit: cached value, no budget cost, no trace entry.
        if (++stagnant_ > kStagnationLimit) throw BudgetExhausted{};
        return cache_.mean(rank);
    }

    if (budget_.used >= budget_.max_evals) throw BudgetExhausted{};
    if (!cache_.present(rank))
        throw MissingEntry("configuration " +
                           cache_.space().key_of(cache_.space().config_at(rank)) +
                           " is not in this partial cache");

    double f;
    if (deterministic()) {
        f = cache_.mean(rank);
        budget_.visited.insert(rank);
    } else {
        f = cache_.draw(rank, draw_rng_);
    }
    ++budget_.used;
    stagnant_ = 0;
    trace_.push_back({rank, f});
    if (!has_best_ || f < best_fitness_) {
        best_fitness_ = f;
        best_rank_ = rank;
        has_best_ = true;
    }
    return f;
}

double Evaluator::evaluate(const Configuration& x) {
    return evaluate_rank(cache_.space().rank_of(x));
}

OptimizerRun Evaluator::finish(std::uint64_t seed) const {
    if (!has_best_) throw Error("optimizer finished without a single evaluation");
    OptimizerRun run;
    run.best_config = cache_.space().config_at(best_rank_);
    run.best_fitness = best_fitness_;
    run.evals_used = budget_.used;
    run.trace = trace_;
    run.seed = seed;
    return run;
}

}  // namespace tunekit
