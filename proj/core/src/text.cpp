#include "evodiv/text.hpp"

#include <charconv>

#include "evodiv/error.hpp"

namespace evodiv {

std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

namespace {
template <class T>
T parse_number(const std::string& text, const std::string& field) {
    T value{};
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end)
        throw ConfigError(field + ": cannot parse '" + text + "'");
    return value;
}
} // namespace

double parse_double(const std::string& text, const std::string& field) {
    return parse_number<double>(text, field);
}

long long parse_int(const std::string& text, const std::string& field) {
    return parse_number<long long>(text, field);
}

std::uint64_t parse_u64(const std::string& text, const std::string& field) {
    return parse_number<std::uint64_t>(text, field);
}

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(separator, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return "";
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

} // namespace evodiv
