#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tunekit/evaluate.hpp"
#include "tunekit/rng.hpp"
#include "tunekit/space.hpp"

namespace tunekit {

// Continuous coordinates live in [0,1]^n. Each dimension is split into m
// equal cells with grid points B_i = (2i-1)/(2m); a coordinate maps to the
// nearest grid point, ties toward the lower index.

// Index of the snapped cell for a list of m values.
int snap_index(int m, double y);
// The snapped value itself.
const Value& snap(const std::vector<Value>& values, double y);
Configuration snap_config(const ParameterSpace& space, const std::vector<double>& point);
std::uint64_t snap_rank(const ParameterSpace& space, const std::vector<double>& point);

void clamp_unit(std::vector<double>& point);

enum class LocalMinimizerKind { NelderMead, PatternSearch };
// Map a requested minimizer name onto the supported derivative-free set:
// "Powell" -> PatternSearch, "Nelder-Mead" -> NelderMead, anything else ->
// NelderMead with a warning.
LocalMinimizerKind resolve_minimizer(const std::string& requested);

struct MinimizeResult {
    std::vector<double> point;
    double fitness;
};

// Derivative-free minimization of the snapped objective inside the unit box.
// BudgetExhausted from the evaluator propagates.
MinimizeResult local_minimize(LocalMinimizerKind kind, Evaluator& ev, Rng& rng,
                              const std::vector<double>& start);

// Heavy-tailed displacement draw used by the generalized annealing visitor.
double visiting_displacement(Rng& rng, double temperature, double visit_param);

// Generalized annealing temperature schedule; step = 0 gives t0.
double annealing_temperature(double t0, double visit_param, std::int64_t step);

}  // namespace tunekit
