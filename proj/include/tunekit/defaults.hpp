#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tunekit/value.hpp"

namespace tunekit {

// Benchmark-selected default hyperparameters keyed by (algorithm, budget),
// for budgets 25, 50, 100, 200, 400, 800, 1600. Compiled into the library;
// data/defaults/table_defaults.json ships the same document.
const Json& builtin_defaults();
const std::vector<std::int64_t>& default_budgets();

// Exact lookup. Throws InvalidArgument naming the gap when the pair is
// not covered.
Json default_hyperparams(const std::string& algorithm, std::int64_t budget);
bool has_default_hyperparams(const std::string& algorithm, std::int64_t budget);

// Nearest listed budget (ties toward the smaller), for interactive use.
std::int64_t nearest_default_budget(std::int64_t budget);

// Defaults for (algorithm, budget) overlaid with explicit overrides.
Json resolve_hyperparams(const std::string& algorithm, std::int64_t budget,
                         const Json& overrides);

}  // namespace tunekit
