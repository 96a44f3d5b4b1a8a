#pragma once

#include <iosfwd>
#include <string>

#include "tunekit/cache.hpp"

namespace tunekit {

// Native cache file schema:
//   {"metadata": {"kernel": str, "device": str, "units": "ms"},
//    "space": {"parameters": [...]},
//    "cache": {"v1,v2,...,vn": {"times": [float...]|null, "time": float|null}}}
// null/absent time marks a failed configuration.
//
// The importer also accepts published Kernel Tuner style files: tune_params
// as the space, comma-joined value keys, "time" holding a mean or an error
// string (mapped to a failed entry).
SearchSpaceCache load_cache(const std::string& path);
SearchSpaceCache cache_from_json(const Json& j);
Json cache_to_json(const SearchSpaceCache& cache);
void save_cache(const SearchSpaceCache& cache, const std::string& path);

}  // namespace tunekit
