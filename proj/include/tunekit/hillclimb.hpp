#pragma once

#include "tunekit/evaluate.hpp"
#include "tunekit/rng.hpp"

namespace tunekit {

enum class ClimbVariant { None, RandomFirst, BestImprovement };

ClimbVariant climb_variant_from_string(const std::string& s);

struct ClimbResult {
    std::uint64_t rank;
    double fitness;
};

// Descend from (start, f_start) to a local minimum under the given
// neighbourhood. RandomFirst scans neighbours in seeded-random order and
// moves at the first strictly better one; restart_scan re-randomizes the
// order after each move, otherwise the same cyclic order continues.
// BestImprovement evaluates all neighbours and moves to the strict best
// (ties resolved toward the lowest canonical scan index). Fitness ties are
// never improvements. BudgetExhausted propagates to the caller.
ClimbResult hill_climb(Evaluator& ev, Rng& rng, std::uint64_t start,
                       double f_start, ClimbVariant variant,
                       NeighbourhoodKind kind, bool restart_scan = true);

}  // namespace tunekit
