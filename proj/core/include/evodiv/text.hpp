#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evodiv {

/// Shortest decimal form that parses back to the exact same double.
std::string format_double(double value);

/// Strict full-string parsers; throw ConfigError naming `field` on failure.
double parse_double(const std::string& text, const std::string& field);
long long parse_int(const std::string& text, const std::string& field);
std::uint64_t parse_u64(const std::string& text, const std::string& field);

std::vector<std::string> split(const std::string& text, char separator);
std::string trim(const std::string& text);

} // namespace evodiv
