#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

namespace tunekit {

using Json = nlohmann::ordered_json;

// One scalar parameter value. Integers and booleans are stored as int64,
// reals as double, everything else as a string.
using Value = std::variant<std::int64_t, double, std::string>;

bool value_is_numeric(const Value& v);
double value_as_double(const Value& v);
std::string value_to_string(const Value& v);
Value value_from_json(const Json& j);
Json value_to_json(const Value& v);

// Numeric values compare by magnitude across int/double; strings by equality.
bool value_equal(const Value& a, const Value& b);

// Parse a token from a comma-joined cache key into a Value.
Value value_from_token(const std::string& token);

}  // namespace tunekit
