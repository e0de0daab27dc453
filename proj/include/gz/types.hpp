#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace gz {

using cplx = std::complex<double>;

// Result of a numerical evaluation: a value, an absolute-error estimate,
// and the amount of work (series terms or quadrature nodes) consumed.
struct EvalResult {
    cplx value{};
    double err_estimate = 0.0;     // >= 0
    long long work = 1;            // >= 1 for any completed evaluation
};

struct SeriesConfig {
    long long max_terms = 2'000'000;
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
};

struct QuadratureConfig {
    int max_subdivisions = 2000;
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
};

// Axis-aligned rectangle in the complex plane.
struct Rectangle {
    double re_min, re_max, im_min, im_max;

    bool valid() const { return re_min < re_max && im_min < im_max; }
    double width() const { return re_max - re_min; }
    double height() const { return im_max - im_min; }
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation requested exactly at (or within rounding distance of) a pole.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// Iteration/subdivision budget exhausted; carries the best estimate so far.
struct BudgetError : Error {
    EvalResult best;
    BudgetError(const std::string& msg, EvalResult b) : Error(msg), best(b) {}
};

// Contour for the argument principle passes too close to a zero of f.
struct ContourError : Error {
    using Error::Error;
};

// Argument-principle integral too far from an integer to trust the count.
struct UnreliableCountError : Error {
    double diagnostic;
    UnreliableCountError(const std::string& msg, double d) : Error(msg), diagnostic(d) {}
};

inline bool is_nonpositive_integer(cplx s, double tol = 1e-12) {
    if (s.real() > 0.5 || std::abs(s.imag()) > tol) return false;
    return std::abs(s.real() - std::round(s.real())) <= tol;
}

}  // namespace gz
