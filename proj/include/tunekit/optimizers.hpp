#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tunekit/evaluate.hpp"
#include "tunekit/value.hpp"

namespace tunekit {

// A fully specified optimizer invocation. Hyperparameters must satisfy the
// algorithm's schema (see hyperparameter_schema) before a run starts.
struct OptimizerSpec {
    std::string algorithm;
    Json hyperparams = Json::object();
    NeighbourhoodKind neighbourhood = NeighbourhoodKind::Hamming;
    std::uint64_t seed = 0;
};

struct HyperparamField {
    std::string name;
    std::string type;     // "bool" | "int" | "float" | "string" | "float_pair"
    bool required = true;
    Json default_value;   // used when !required
    std::vector<std::string> choices;  // for type == "string", empty = free
    double min = 0.0, max = 0.0;       // numeric range, inclusive; min>max = unbounded
};

// Names of all runnable algorithms, discrete then continuous.
const std::vector<std::string>& algorithm_names();
bool is_known_algorithm(const std::string& name);
// Reserved import-only names (external traces may carry them).
const std::vector<std::string>& external_algorithm_names();

const std::vector<HyperparamField>& hyperparameter_schema(const std::string& algorithm);
// Whether the algorithm consumes the neighbourhood setting.
bool algorithm_uses_neighbourhood(const std::string& algorithm);

// Validates against the schema, fills defaults for optional fields, and
// extracts a "neighbourhood" key into the spec field. Throws InvalidArgument
// on unknown algorithm, unknown key, wrong type, or out-of-range value.
OptimizerSpec validate_spec(const OptimizerSpec& spec);

// Runs the algorithm to budget exhaustion (or its own stop condition) and
// returns the completed trajectory. Validation happens first; no evaluation
// is spent on an invalid spec.
OptimizerRun run_optimizer(const OptimizerSpec& spec, const SearchSpaceCache& cache,
                           FitnessMode mode, std::int64_t max_evals);

}  // namespace tunekit
