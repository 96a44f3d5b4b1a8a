#include "tunekit/cache_io.hpp"

#include <cmath>
#include <fstream>

#include "tunekit/errors.hpp"

namespace tunekit {

namespace {

// Published cache files carry the space as {"tune_params": {name: [values]}}
// with an optional key-order list.
ParameterSpace space_from_tune_params(const Json& j) {
    std::vector<Parameter> params;
    std::vector<std::string> order;
    if (j.contains("tune_params_keys")) {
        for (const auto& k : j["tune_params_keys"]) order.push_back(k.get<std::string>());
    } else {
        for (auto it = j["tune_params"].begin(); it != j["tune_params"].end(); ++it)
            order.push_back(it.key());
    }
    for (const auto& name : order) {
        Parameter p;
        p.name = name;
        for (const auto& vj : j["tune_params"].at(name))
            p.values.push_back(value_from_json(vj));
        params.push_back(std::move(p));
    }
    return ParameterSpace(std::move(params));
}

void import_entry(SearchSpaceCache& cache, const std::string& key, const Json& entry) {
    std::uint64_t rank;
    try {
        rank = cache.space().rank_of(cache.space().config_from_key(key));
    } catch (const Error& e) {
        throw ParseError("cache key '" + key + "': " + e.what());
    }
    if (entry.is_null()) {
        cache.set_failed(rank);
        return;
    }
    if (!entry.is_object())
        throw ParseError("cache entry '" + key + "' must be an object or null");

    if (entry.contains("times") && entry["times"].is_array() &&
        !entry["times"].empty()) {
        std::vector<double> times;
        bool numeric = true;
        for (const auto& t : entry["times"]) {
            if (!t.is_number()) {
                numeric = false;
                break;
            }
            times.push_back(t.get<double>());
        }
        if (numeric) {
            cache.set_ok(rank, std::move(times));
            return;
        }
    }
    if (entry.contains("time")) {
        const Json& t = entry["time"];
        if (t.is_number()) {
            cache.set_ok_mean(rank, t.get<double>());
            return;
        }
        // Kernel Tuner style: an error string ("CompilationFailedConfig",
        // "InvalidConfig", ...) marks a failed configuration.
        cache.set_failed(rank);
        return;
    }
    cache.set_failed(rank);
}

}  // namespace

SearchSpaceCache cache_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cache"))
        throw ParseError("cache file needs a 'cache' object");

    ParameterSpace space;
    if (j.contains("space")) {
        space = ParameterSpace::from_json(j["space"]);
    } else if (j.contains("tune_params")) {
        space = space_from_tune_params(j);
    } else {
        throw ParseError("cache file needs 'space' or 'tune_params'");
    }

    CacheMetadata meta;
    if (j.contains("metadata")) {
        const Json& m = j["metadata"];
        meta.kernel = m.value("kernel", "");
        meta.device = m.value("device", "");
        meta.units = m.value("units", "ms");
    } else {
        meta.kernel = j.value("kernel_name", "");
        meta.device = j.value("device_name", "");
    }

    SearchSpaceCache cache(std::move(space), std::move(meta));
    for (auto it = j["cache"].begin(); it != j["cache"].end(); ++it)
        import_entry(cache, it.key(), it.value());
    cache.finalize(/*require_complete=*/false);
    if (!cache.complete())
        warn("cache '" + cache.metadata().kernel + "' is partial: " +
             std::to_string(cache.present_count()) + " of " +
             std::to_string(cache.size()) + " configurations");
    return cache;
}

SearchSpaceCache load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cache file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return cache_from_json(j);
}

Json cache_to_json(const SearchSpaceCache& cache) {
    Json entries = Json::object();
    const auto& space = cache.space();
    std::uint64_t rank = 0;
    for (const auto& config : space) {
        if (cache.present(rank)) {
            if (!cache.ok(rank)) {
                entries[space.key_of(config)] = Json{{"times", nullptr}, {"time", nullptr}};
            } else {
                const auto& times = cache.raw_times(rank);
                Json tj = Json::array();
                if (times.empty()) {
                    tj.push_back(cache.mean(rank));
                } else {
                    for (double t : times) tj.push_back(t);
                }
                entries[space.key_of(config)] =
                    Json{{"times", tj}, {"time", cache.mean(rank)}};
            }
        }
        ++rank;
    }
    return Json{{"metadata", Json{{"kernel", cache.metadata().kernel},
                                  {"device", cache.metadata().device},
                                  {"units", cache.metadata().units}}},
                {"space", space.to_json()},
                {"cache", entries}};
}

void save_cache(const SearchSpaceCache& cache, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write cache file: " + path);
    out << cache_to_json(cache).dump() << '\n';
}

}  // namespace tunekit
