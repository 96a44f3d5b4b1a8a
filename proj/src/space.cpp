#include "tunekit/space.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "tunekit/errors.hpp"
#include "tunekit/rng.hpp"

namespace tunekit {

NeighbourhoodKind neighbourhood_from_string(const std::string& s) {
    if (s == "hamming" || s == "Hamming") return NeighbourhoodKind::Hamming;
    if (s == "adjacent" || s == "Adjacent") return NeighbourhoodKind::Adjacent;
    throw InvalidArgument("unknown neighbourhood: " + s +
                          " (expected hamming or adjacent)");
}

std::string to_string(NeighbourhoodKind kind) {
    return kind == NeighbourhoodKind::Hamming ? "hamming" : "adjacent";
}

ParameterSpace::ParameterSpace(std::vector<Parameter> params)
    : params_(std::move(params)) {
    if (params_.empty()) throw InvalidArgument("a space needs at least one parameter");
    std::unordered_set<std::string> names;
    for (auto& p : params_) {
        if (p.values.empty())
            throw InvalidArgument("parameter '" + p.name + "' has an empty value list");
        if (!names.insert(p.name).second)
            throw InvalidArgument("duplicate parameter name '" + p.name + "'");
        bool numeric = std::all_of(p.values.begin(), p.values.end(), value_is_numeric);
        if (numeric) {
            std::sort(p.values.begin(), p.values.end(),
                      [](const Value& a, const Value& b) {
                          return value_as_double(a) < value_as_double(b);
                      });
        }
        for (std::size_t i = 1; i < p.values.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (value_equal(p.values[i], p.values[j]))
                    throw InvalidArgument("parameter '" + p.name +
                                          "' has duplicate value " +
                                          value_to_string(p.values[i]));
            }
        }
    }
    strides_.assign(params_.size(), 1);
    for (std::size_t i = params_.size(); i-- > 0;) {
        if (i + 1 < params_.size())
            strides_[i] = strides_[i + 1] * params_[i + 1].values.size();
    }
    size_ = strides_[0] * params_[0].values.size();
}

bool ParameterSpace::valid(const Configuration& x) const {
    if (x.size() != params_.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] >= list_size(i)) return false;
    }
    return true;
}

void ParameterSpace::require_valid(const Configuration& x) const {
    if (!valid(x)) {
        std::string repr;
        for (auto v : x) repr += (repr.empty() ? "" : ",") + std::to_string(v);
        throw InvalidArgument("configuration [" + repr + "] is not valid in this space");
    }
}

std::uint64_t ParameterSpace::rank_of(const Configuration& x) const {
    require_valid(x);
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        r += static_cast<std::uint64_t>(x[i]) * strides_[i];
    return r;
}

Configuration ParameterSpace::config_at(std::uint64_t rank) const {
    if (rank >= size_) throw InvalidArgument("rank out of range");
    Configuration x(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) {
        x[i] = static_cast<std::int32_t>(rank / strides_[i]);
        rank %= strides_[i];
    }
    return x;
}

std::vector<Value> ParameterSpace::to_values(const Configuration& x) const {
    require_valid(x);
    std::vector<Value> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = params_[i].values[x[i]];
    return out;
}

Configuration ParameterSpace::from_values(const std::vector<Value>& values) const {
    if (values.size() != params_.size())
        throw InvalidArgument("value vector has " + std::to_string(values.size()) +
                              " entries, space has " + std::to_string(params_.size()));
    Configuration x(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& list = params_[i].values;
        auto it = std::find_if(list.begin(), list.end(), [&](const Value& v) {
            return value_equal(v, values[i]);
        });
        if (it == list.end())
            throw InvalidArgument("value " + value_to_string(values[i]) +
                                  " not in list of parameter '" + params_[i].name + "'");
        x[i] = static_cast<std::int32_t>(it - list.begin());
    }
    return x;
}

std::string ParameterSpace::key_of(const Configuration& x) const {
    require_valid(x);
    std::string key;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) key += ',';
        key += value_to_string(params_[i].values[x[i]]);
    }
    return key;
}

Configuration ParameterSpace::config_from_key(const std::string& key) const {
    std::vector<Value> values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = key.find(',', start);
        values.push_back(value_from_token(
            key.substr(start, comma == std::string::npos ? comma : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return from_values(values);
}

std::vector<Configuration> ParameterSpace::neighbours(const Configuration& x,
                                                      NeighbourhoodKind kind) const {
    require_valid(x);
    std::vector<Configuration> out;
    out.reserve(max_neighbours(kind));
    Configuration y = x;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        const std::int32_t m = list_size(i);
        if (kind == NeighbourhoodKind::Hamming) {
            for (std::int32_t j = 0; j < m; ++j) {
                if (j == x[i]) continue;
                y[i] = j;
                out.push_back(y);
            }
        } else {
            if (x[i] > 0) {
                y[i] = x[i] - 1;
                out.push_back(y);
            }
            if (x[i] + 1 < m) {
                y[i] = x[i] + 1;
                out.push_back(y);
            }
        }
        y[i] = x[i];
    }
    return out;
}

void ParameterSpace::neighbour_ranks(std::uint64_t rank, NeighbourhoodKind kind,
                                     std::vector<std::uint64_t>& out) const {
    out.clear();
    std::uint64_t rest = rank;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        const std::uint64_t s = strides_[i];
        const std::int64_t xi = static_cast<std::int64_t>(rest / s);
        rest %= s;
        const std::int64_t m = list_size(i);
        const std::uint64_t base = rank - static_cast<std::uint64_t>(xi) * s;
        if (kind == NeighbourhoodKind::Hamming) {
            for (std::int64_t j = 0; j < m; ++j) {
                if (j == xi) continue;
                out.push_back(base + static_cast<std::uint64_t>(j) * s);
            }
        } else {
            if (xi > 0) out.push_back(base + static_cast<std::uint64_t>(xi - 1) * s);
            if (xi + 1 < m) out.push_back(base + static_cast<std::uint64_t>(xi + 1) * s);
        }
    }
}

std::size_t ParameterSpace::max_neighbours(NeighbourhoodKind kind) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        n += kind == NeighbourhoodKind::Hamming
                 ? static_cast<std::size_t>(list_size(i) - 1)
                 : std::min<std::size_t>(2, list_size(i) - 1);
    }
    return n;
}

std::string ParameterSpace::bitstring_encode(const Configuration& x) const {
    require_valid(x);
    std::string bits;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        for (std::int32_t j = 0; j < list_size(i); ++j)
            bits += (j == x[i]) ? '1' : '0';
    }
    return bits;
}

Configuration ParameterSpace::bitstring_decode(const std::string& bits) const {
    std::size_t expected = 0;
    for (std::size_t i = 0; i < params_.size(); ++i) expected += list_size(i);
    if (bits.size() != expected)
        throw InvalidArgument("bitstring has " + std::to_string(bits.size()) +
                              " bits, expected " + std::to_string(expected));
    Configuration x(params_.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        int set_bits = 0;
        std::int32_t index = -1;
        for (std::int32_t j = 0; j < list_size(i); ++j, ++pos) {
            const char c = bits[pos];
            if (c == '1') {
                ++set_bits;
                index = j;
            } else if (c != '0') {
                throw InvalidArgument(std::string("bitstring contains '") + c + "'");
            }
        }
        if (set_bits != 1)
            throw InvalidArgument("segment " + std::to_string(i) + " has " +
                                  std::to_string(set_bits) + " set bits");
        x[i] = index;
    }
    return x;
}

ParameterSpace ParameterSpace::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("parameters") || !j["parameters"].is_array())
        throw ParseError("space definition needs a 'parameters' array");
    std::vector<Parameter> params;
    for (const auto& pj : j["parameters"]) {
        if (!pj.contains("name") || !pj.contains("values"))
            throw ParseError("each parameter needs 'name' and 'values'");
        Parameter p;
        p.name = pj["name"].get<std::string>();
        for (const auto& vj : pj["values"]) p.values.push_back(value_from_json(vj));
        params.push_back(std::move(p));
    }
    return ParameterSpace(std::move(params));
}

Json ParameterSpace::to_json() const {
    Json params = Json::array();
    for (const auto& p : params_) {
        Json values = Json::array();
        for (const auto& v : p.values) values.push_back(value_to_json(v));
        params.push_back(Json{{"name", p.name}, {"values", values}});
    }
    return Json{{"parameters", params}};
}

ParameterSpace load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open space file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return ParameterSpace::from_json(j);
}

void save_space(const ParameterSpace& space, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write space file: " + path);
    out << space.to_json().dump(2) << '\n';
}

Configuration random_configuration(const ParameterSpace& space, Rng& rng) {
    Configuration x(space.dims());
    for (std::size_t i = 0; i < space.dims(); ++i)
        x[i] = static_cast<std::int32_t>(rng.below(space.list_size(i)));
    return x;
}

}  // namespace tunekit
