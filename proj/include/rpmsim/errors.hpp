#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rpmsim {

// Invalid argument: precondition violated by the caller (maps to CLI exit 2).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical evaluation failed (quantile underflow, quadrature non-convergence);
// maps to CLI exit 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Epsilon-rule stick-breaking hit its term cap before the stopping condition.
class TruncationOverflow : public std::runtime_error {
public:
    TruncationOverflow(const std::string& msg, std::size_t partial_length)
        : std::runtime_error(msg), partial_length(partial_length) {}
    std::size_t partial_length;
};

}  // namespace rpmsim
