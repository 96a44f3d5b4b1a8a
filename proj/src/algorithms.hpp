#pragma once

// Internal: per-algorithm entry points wired into the registry. Each runs
// until the evaluator throws BudgetExhausted (or the algorithm's own stop
// condition fires) with a validated spec.

#include "tunekit/evaluate.hpp"
#include "tunekit/optimizers.hpp"
#include "tunekit/rng.hpp"

namespace tunekit::detail {

void run_random_sampling(const OptimizerSpec&, Evaluator&, Rng&);
void run_mls(const OptimizerSpec&, Evaluator&, Rng&, bool best_improvement);
void run_ils(const OptimizerSpec&, Evaluator&, Rng&, bool best_improvement);
void run_tabu(const OptimizerSpec&, Evaluator&, Rng&, bool best_improvement);
void run_simulated_annealing(const OptimizerSpec&, Evaluator&, Rng&);
void run_gls(const OptimizerSpec&, Evaluator&, Rng&);
void run_ga(const OptimizerSpec&, Evaluator&, Rng&);

void run_basin_hopping(const OptimizerSpec&, Evaluator&, Rng&);
void run_dual_annealing(const OptimizerSpec&, Evaluator&, Rng&);
void run_pso(const OptimizerSpec&, Evaluator&, Rng&);
void run_differential_evolution(const OptimizerSpec&, Evaluator&, Rng&);

}  // namespace tunekit::detail
