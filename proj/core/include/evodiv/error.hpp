#pragma once

#include <stdexcept>
#include <string>

namespace evodiv {

/// Invalid user-facing configuration: bad hyperparameters, malformed files,
/// inconsistent experiment setups.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken caller contract: mismatched schemas, empty pools, out-of-range
/// arguments. Signals a programming error, not a user mistake.
class ContractViolation : public std::logic_error {
  public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
[[noreturn]] inline void throw_contract(const char* cond, const char* msg) {
    throw ContractViolation(std::string(msg) + " [" + cond + "]");
}
} // namespace detail

#define EVODIV_REQUIRE(cond, msg)                                                                  \
    do {                                                                                           \
        if (!(cond))                                                                               \
            ::evodiv::detail::throw_contract(#cond, msg);                                          \
    } while (0)

} // namespace evodiv
