#pragma once

#include <stdexcept>
#include <string>

namespace kring {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument: bad prime, malformed table, out-of-domain input.
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

/// Request is well-formed but outside the supported size envelope.
struct Unsupported : Error {
    explicit Unsupported(const std::string& msg) : Error(msg) {}
};

/// Enumeration refused because the estimated work exceeds the budget.
struct BudgetExceeded : Error {
    double estimate;
    double budget;
    BudgetExceeded(const std::string& msg, double est, double bud)
        : Error(msg + " (estimated " + std::to_string(est) + " units, budget " +
                std::to_string(bud) + ")"),
          estimate(est), budget(bud) {}
};

/// An internal invariant failed; indicates a bug, never a bad input.
struct InternalCheckFailure : Error {
    explicit InternalCheckFailure(const std::string& msg) : Error(msg) {}
};

}
