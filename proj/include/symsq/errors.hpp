#ifndef SYMSQ_ERRORS_HPP
#define SYMSQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symsq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the region an operation supports.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation at (or too close to) a pole.
struct PoleError : Error {
    using Error::Error;
};

// Iteration or truncation failed to reach its target.
struct ConvergenceError : Error {
    using Error::Error;
};

// Two independent methods disagree beyond their combined tolerance.
struct ConsistencyError : Error {
    using Error::Error;
};

// Malformed input file; carries a 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& msg, long line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    long line_number;
};

// A needed lambda(p) seed is not available.
struct SeedError : Error {
    SeedError(const std::string& msg, unsigned long long prime)
        : Error(msg + ": insufficient seed coefficients, missing prime " + std::to_string(prime)),
          missing_prime(prime) {}
    unsigned long long missing_prime;
};

// |zeta'(rho)| vanished at a refined zero; the simplicity hypothesis is in doubt.
struct MultipleZeroError : Error {
    using Error::Error;
};

} // namespace symsq

#endif
