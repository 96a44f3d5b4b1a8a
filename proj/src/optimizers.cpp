#include "tunekit/optimizers.hpp"

#include <algorithm>
#include <map>

#include "algorithms.hpp"
#include "tunekit/errors.hpp"

namespace tunekit {

namespace {

using AlgorithmFn = void (*)(const OptimizerSpec&, Evaluator&, Rng&);

struct AlgorithmEntry {
    AlgorithmFn fn;
    std::vector<HyperparamField> schema;
    bool uses_neighbourhood;
};

HyperparamField req_float(const char* name, double lo, double hi) {
    return {name, "float", true, {}, {}, lo, hi};
}
HyperparamField opt_float(const char* name, double value, double lo, double hi) {
    return {name, "float", false, value, {}, lo, hi};
}
HyperparamField req_int(const char* name, double lo, double hi) {
    return {name, "int", true, {}, {}, lo, hi};
}
HyperparamField req_bool(const char* name) { return {name, "bool", true, {}, {}, 1, 0}; }
HyperparamField req_choice(const char* name, std::vector<std::string> choices) {
    return {name, "string", true, {}, std::move(choices), 1, 0};
}
HyperparamField req_string(const char* name) { return {name, "string", true, {}, {}, 1, 0}; }
HyperparamField neighbourhood_field() {
    return {"neighbourhood", "string", true, {}, {"hamming", "adjacent", "Hamming", "Adjacent"}, 1, 0};
}

const std::map<std::string, AlgorithmEntry>& registry() {
    using namespace detail;
    static const std::map<std::string, AlgorithmEntry> reg = {
        {"random", {&run_random_sampling, {}, false}},
        {"first-mls",
         {[](const OptimizerSpec& s, Evaluator& e, Rng& r) { run_mls(s, e, r, false); },
          {req_bool("restart"), neighbourhood_field()},
          true}},
        {"best-mls",
         {[](const OptimizerSpec& s, Evaluator& e, Rng& r) { run_mls(s, e, r, true); },
          {neighbourhood_field()},
          true}},
        {"first-ils",
         {[](const OptimizerSpec& s, Evaluator& e, Rng& r) { run_ils(s, e, r, false); },
          {req_float("perturbation", 1e-9, 1.0), req_int("exit", 1, 1e9),
           req_bool("restart"), neighbourhood_field()},
          true}},
        {"best-ils",
         {[](const OptimizerSpec& s, Evaluator& e, Rng& r) { run_ils(s, e, r, true); },
          {req_float("perturbation", 1e-9, 1.0), req_int("exit", 1, 1e9),
           neighbourhood_field()},
          true}},
        {"first-tabu",
         {[](const OptimizerSpec& s, Evaluator& e, Rng& r) { run_tabu(s, e, r, false); },
          {req_int("tabu_size", 1, 1e9), neighbourhood_field()},
          true}},
        {"best-tabu",
         {[](const OptimizerSpec& s, Evaluator& e, Rng& r) { run_tabu(s, e, r, true); },
          {req_int("tabu_size", 1, 1e9), neighbourhood_field()},
          true}},
        {"simulated-annealing",
         {&run_simulated_annealing,
          {req_float("explore", 1e-9, 1.0),
           req_choice("hill_climber", {"none", "None", "random-first", "RandomFirst"}),
           opt_float("t0", 1.0, 1e-12, 1e12), opt_float("alpha", 0.95, 1e-6, 1.0),
           neighbourhood_field()},
          true}},
        {"gls",
         {&run_gls,
          {req_int("population", 2, 1e7),
           req_choice("reproduction", {"uniform", "1point", "2point"}),
           req_string("selection"),
           req_choice("hill_climber", {"random-first", "RandomFirst", "best",
                                       "BestImprovement"}),
           neighbourhood_field()},
          true}},
        {"ga",
         {&run_ga,
          {req_float("mutation", 0.0, 1.0), req_int("population", 2, 1e7),
           req_choice("reproduction", {"uniform", "1point", "2point"}),
           req_string("selection")},
          false}},
        {"basin-hopping",
         {&run_basin_hopping,
          {req_string("method"), req_float("temperature", 0.0, 1e12)},
          false}},
        {"dual-annealing",
         {&run_dual_annealing,
          {req_string("method"), opt_float("visit", 2.62, 1.0 + 1e-9, 3.0 - 1e-9),
           opt_float("accept", -5.0, -1e5, 1.0 - 1e-9),
           opt_float("t0", 5230.0, 1e-6, 1e12)},
          false}},
        {"pso",
         {&run_pso, {req_int("particles", 2, 1e7), req_int("neighbours", 1, 1e7)}, false}},
        {"differential-evolution",
         {&run_differential_evolution,
          {req_choice("method", {"best1bin", "best2bin", "best1exp"}),
           req_int("population", 1, 1e7), req_float("recombination", 0.0, 1.0),
           {"mutation", "float_pair", true, {}, {}, 0.0, 2.0}},
          false}},
    };
    return reg;
}

const AlgorithmEntry& entry_for(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::string known;
        for (const auto& [k, v] : reg) known += (known.empty() ? "" : ", ") + k;
        throw InvalidArgument("unknown algorithm '" + name + "' (known: " + known + ")");
    }
    return it->second;
}

void check_range(const HyperparamField& f, double v, const std::string& algorithm) {
    if (f.min <= f.max && (v < f.min || v > f.max))
        throw InvalidArgument(algorithm + ": hyperparameter '" + f.name + "' = " +
                              std::to_string(v) + " outside [" + std::to_string(f.min) +
                              ", " + std::to_string(f.max) + "]");
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, e] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

bool is_known_algorithm(const std::string& name) {
    return registry().count(name) != 0;
}

const std::vector<std::string>& external_algorithm_names() {
    static const std::vector<std::string> names = {"smac", "irace"};
    return names;
}

const std::vector<HyperparamField>& hyperparameter_schema(const std::string& algorithm) {
    return entry_for(algorithm).schema;
}

bool algorithm_uses_neighbourhood(const std::string& algorithm) {
    return entry_for(algorithm).uses_neighbourhood;
}

OptimizerSpec validate_spec(const OptimizerSpec& spec) {
    const AlgorithmEntry& entry = entry_for(spec.algorithm);
    if (!spec.hyperparams.is_object())
        throw InvalidArgument(spec.algorithm + ": hyperparameters must be an object");

    OptimizerSpec out = spec;
    for (auto it = spec.hyperparams.begin(); it != spec.hyperparams.end(); ++it) {
        const auto field = std::find_if(entry.schema.begin(), entry.schema.end(),
                                        [&](const auto& f) { return f.name == it.key(); });
        if (field == entry.schema.end())
            throw InvalidArgument(spec.algorithm + ": unknown hyperparameter '" +
                                  it.key() + "'");
        const Json& v = it.value();
        if (field->type == "bool") {
            if (!v.is_boolean())
                throw InvalidArgument(spec.algorithm + ": '" + field->name +
                                      "' must be a boolean");
        } else if (field->type == "int") {
            if (!v.is_number_integer())
                throw InvalidArgument(spec.algorithm + ": '" + field->name +
                                      "' must be an integer");
            check_range(*field, v.get<double>(), spec.algorithm);
        } else if (field->type == "float") {
            if (!v.is_number())
                throw InvalidArgument(spec.algorithm + ": '" + field->name +
                                      "' must be a number");
            check_range(*field, v.get<double>(), spec.algorithm);
        } else if (field->type == "float_pair") {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw InvalidArgument(spec.algorithm + ": '" + field->name +
                                      "' must be a [lo, hi] pair");
            const double lo = v[0].get<double>(), hi = v[1].get<double>();
            if (lo > hi)
                throw InvalidArgument(spec.algorithm + ": '" + field->name +
                                      "' pair must be ordered");
            check_range(*field, lo, spec.algorithm);
            check_range(*field, hi, spec.algorithm);
        } else {  // string
            if (!v.is_string())
                throw InvalidArgument(spec.algorithm + ": '" + field->name +
                                      "' must be a string");
            if (!field->choices.empty() &&
                std::find(field->choices.begin(), field->choices.end(),
                          v.get<std::string>()) == field->choices.end())
                throw InvalidArgument(spec.algorithm + ": '" + field->name + "' = " +
                                      v.get<std::string>() + " is not a valid choice");
        }
    }
    for (const auto& f : entry.schema) {
        if (!spec.hyperparams.contains(f.name)) {
            if (f.name == "neighbourhood") {
                out.hyperparams[f.name] = to_string(spec.neighbourhood);
            } else if (f.required) {
                throw InvalidArgument(spec.algorithm + ": missing hyperparameter '" +
                                      f.name + "'");
            } else {
                out.hyperparams[f.name] = f.default_value;
            }
        }
    }
    if (out.hyperparams.contains("neighbourhood"))
        out.neighbourhood =
            neighbourhood_from_string(out.hyperparams["neighbourhood"].get<std::string>());
    // selection strings are validated eagerly so a bad spec fails before any run
    if (out.hyperparams.contains("selection")) {
        const std::string s = out.hyperparams["selection"].get<std::string>();
        if (s != "RTS" && s != "rts" &&
            !(s.rfind("tour", 0) == 0 && std::atoi(s.c_str() + 4) >= 1))
            throw InvalidArgument(spec.algorithm + ": bad selection '" + s + "'");
    }
    return out;
}

OptimizerRun run_optimizer(const OptimizerSpec& spec, const SearchSpaceCache& cache,
                           FitnessMode mode, std::int64_t max_evals) {
    const OptimizerSpec validated = validate_spec(spec);
    const AlgorithmEntry& entry = entry_for(validated.algorithm);
    Evaluator ev(cache, mode, max_evals, validated.seed);
    Rng rng(validated.seed);
    try {
        entry.fn(validated, ev, rng);
    } catch (const BudgetExhausted&) {
        // cooperative stop: the trajectory below is complete
    }
    return ev.finish(validated.seed);
}

}  // namespace tunekit
