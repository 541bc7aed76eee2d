#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace besselint {

using Complex = std::complex<double>;

// Truncation and tolerance policy shared by every series evaluator.
struct EvalConfig {
    double rel_tol = 1e-12;
    int max_terms = 500;

    void validate() const;
};

// Absolute snap distance: a value this close to a nonpositive integer is
// treated as that integer (gamma poles, series termination).
inline constexpr double kPoleSnapTol = 1e-12;

// Looser snap used when deciding whether a Bessel order is an integer.
inline constexpr double kIntegerOrderTol = 1e-8;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct TruncationError : Error { using Error::Error; };
struct IntegerOrderError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ResidualError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct UnsupportedError : Error { using Error::Error; };
struct NoMatchError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& expected, const std::string& msg)
        : Error(msg), position(pos), expected(expected) {}
    std::size_t position;
    std::string expected;
};

// True when z snaps to a nonpositive integer; *m receives the magnitude
// (z ~ -m with m >= 0).
bool is_nonpositive_integer(const Complex& z, int* m = nullptr);

// True when nu is within kIntegerOrderTol of an integer; *n receives it.
bool is_integer_order(double nu, int* n = nullptr);

double require_finite(double x, const char* what);
Complex require_finite(const Complex& z, const char* what);

using Diagnostics = std::map<std::string, std::string>;

}  // namespace besselint
