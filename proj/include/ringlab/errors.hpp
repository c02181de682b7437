#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

// Invalid construction request: bad arity, failed precondition, subset not
// closed, non-endomorphism sigma, and so on. Maps to the usage exit code.
class ConstructionError : public std::runtime_error {
  public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// A computation was refused (or aborted) because its estimated or actual cost
// exceeded the configured budget. Carries the numbers for the refusal report.
class BudgetRefusal : public std::runtime_error {
  public:
    BudgetRefusal(const std::string& what, std::uint64_t estimated, std::uint64_t budget)
        : std::runtime_error(what), estimated_cost(estimated), budget_limit(budget) {}

    std::uint64_t estimated_cost = 0;
    std::uint64_t budget_limit = 0;
};

// An internal invariant failed: the radical scan produced a non-ideal, a
// witness containment broke, an axiom check failed on a trusted construction.
// Always a bug in this program, never a user error.
class ConsistencyFault : public std::logic_error {
  public:
    explicit ConsistencyFault(const std::string& what) : std::logic_error(what) {}
};

// Ring-expression parse failure with the byte offset of the problem.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), position(offset) {}

    std::size_t position = 0;
};

}  // namespace ringlab
