#pragma once
#include <stdexcept>
#include <string>

namespace asn2t {

// Invalid configuration, scenario file, or parameter combination.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation is not supported for the given source /
// feature-map combination (e.g. exact moments of a non-enumerable source).
class CapabilityError : public ConfigError {
public:
    explicit CapabilityError(const std::string& what) : ConfigError(what) {}
};

// A runtime contract was violated (caller passed values outside the
// documented domain, or an internal invariant broke). Exit code 3.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

} // namespace asn2t
