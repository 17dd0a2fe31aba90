#pragma once

#include <stdexcept>
#include <string>

namespace rigidlab {

// Error taxonomy mirrors the CLI exit codes: UsageError -> 2,
// BudgetError -> 3, HypothesisError -> 4. Anything else is a plain
// std::runtime_error and treated as an internal failure.

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rigidlab
