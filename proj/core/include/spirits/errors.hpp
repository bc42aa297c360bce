#pragma once

#include <stdexcept>
#include <string>

namespace spirits {

// Exit codes used by the CLI; library errors map onto these.
enum class ExitCode : int {
    ok = 0,
    config_error = 2,
    domain_error = 3,
    insufficient_transitions = 4,
    numeric_failure = 5,
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct PhaseError : std::runtime_error {
    explicit PhaseError(const std::string& what) : std::runtime_error(what) {}
};

struct BasinError : std::runtime_error {
    explicit BasinError(const std::string& what) : std::runtime_error(what) {}
};

struct FitError : std::runtime_error {
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientTransitions : std::runtime_error {
    explicit InsufficientTransitions(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericOverflow : std::runtime_error {
    explicit NumericOverflow(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spirits
