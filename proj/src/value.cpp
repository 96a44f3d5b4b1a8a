#include "tunekit/value.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "tunekit/errors.hpp"

namespace tunekit {

void warn(const std::string& message) {
    std::fprintf(stderr, "[tunekit] warning: %s\n", message.c_str());
}

bool value_is_numeric(const Value& v) {
    return !std::holds_alternative<std::string>(v);
}

double value_as_double(const Value& v) {
    if (std::holds_alternative<std::int64_t>(v))
        return static_cast<double>(std::get<std::int64_t>(v));
    if (std::holds_alternative<double>(v)) return std::get<double>(v);
    throw InvalidArgument("non-numeric value: " + std::get<std::string>(v));
}

std::string value_to_string(const Value& v) {
    if (std::holds_alternative<std::int64_t>(v))
        return std::to_string(std::get<std::int64_t>(v));
    if (std::holds_alternative<double>(v)) {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(v));
        return std::string(buf, end);
    }
    return std::get<std::string>(v);
}

Value value_from_json(const Json& j) {
    if (j.is_boolean()) return static_cast<std::int64_t>(j.get<bool>() ? 1 : 0);
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return j.get<std::string>();
    throw ParseError("parameter value must be a scalar, got: " + j.dump());
}

Json value_to_json(const Value& v) {
    if (std::holds_alternative<std::int64_t>(v)) return std::get<std::int64_t>(v);
    if (std::holds_alternative<double>(v)) return std::get<double>(v);
    return std::get<std::string>(v);
}

bool value_equal(const Value& a, const Value& b) {
    if (value_is_numeric(a) && value_is_numeric(b))
        return value_as_double(a) == value_as_double(b);
    if (!value_is_numeric(a) && !value_is_numeric(b))
        return std::get<std::string>(a) == std::get<std::string>(b);
    return false;
}

Value value_from_token(const std::string& token) {
    if (!token.empty()) {
        std::int64_t i = 0;
        auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), i);
        if (ec == std::errc() && p == token.data() + token.size()) return i;
        char* end = nullptr;
        double d = std::strtod(token.c_str(), &end);
        if (end == token.c_str() + token.size() && !std::isnan(d)) return d;
    }
    return token;
}

}  // namespace tunekit
