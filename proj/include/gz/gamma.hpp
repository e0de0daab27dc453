#pragma once

#include <variant>

#include "gz/types.hpp"

namespace gz {

enum class GammaKind {
    EulerLogIntegral,    // Gamma(s) = int_0^1 (log(1/t))^{s-1} dt
    EulerIntegral,       // Gamma(s) = int_0^inf t^{s-1} e^{-t} dt
    GaussProduct,        // lim n! n^s / (s(s+1)...(s+n))
    WeierstrassProduct,  // 1/Gamma(s) = s e^{gamma s} prod (1+s/n) e^{-s/n}
    ReferenceOracle,
};

const char* gamma_kind_name(GammaKind k);

// A construction paired with the configuration its evaluator consumes.
// Integral constructions carry a QuadratureConfig, series/product ones a
// SeriesConfig, the oracle nothing.
struct GammaConstruction {
    GammaKind kind;
    std::variant<std::monostate, SeriesConfig, QuadratureConfig> cfg;
};

GammaConstruction make_construction(GammaKind kind);

struct GammaValue {
    EvalResult result;
    GammaKind construction;
    cplx argument;
};

// Reference oracle: power x exponential x rational-series approximation
// (Lanczos coefficient set g = 607/128, n = 15) for Re s >= 0.5, reflection
// Gamma(s) = pi / (sin(pi s) Gamma(1-s)) otherwise. Measured worst relative
// error 4.8e-14 over [-40,50]x[-30,30] against a 40-digit reference.
// Throws PoleError at non-positive integers.
cplx gamma_reference(cplx s);

// log Gamma on the right half plane (principal value, no branch tracking
// needed there); real x > 0 accepts the full positive axis.
cplx loggamma_reference(cplx s);

// Digamma psi = Gamma'/Gamma by analytic differentiation of the same
// approximation; reflection psi(s) = psi(1-s) - pi cot(pi s) for Re s < 0.5.
cplx digamma_reference(cplx s);

// The four catalogued constructions. The integral forms require Re s > 0
// (DomainError otherwise); use extend_by_recursion for the left half plane.
EvalResult gamma_euler_log_integral(cplx s, const QuadratureConfig& cfg);
EvalResult gamma_euler_integral(cplx s, const QuadratureConfig& cfg);

// Finite Gauss partial product n! n^s / (s(s+1)...(s+n)), no limit taken;
// error decays like s(s+1)/(2n). Throws PoleError when a factor vanishes.
cplx gamma_gauss_product(cplx s, long long n);

// Gauss product accelerated by Richardson extrapolation over the ladder
// n = 64*2^k, k = 0..6 (top rung capped by cfg.max_terms).
EvalResult gamma_gauss_extrapolated(cplx s, const SeriesConfig& cfg);

// Product form accumulated as log(1/Gamma) = log s + gamma s +
// sum_{n<=N} [log(1+s/n) - s/n] plus the analytic tail
// -s^2/2 sum_{n>N} n^-2 + s^3/3 sum_{n>N} n^-3 (asymptotic forms), leaving
// O(|s|^4/N^3). N is chosen from cfg tolerances, capped by max_terms.
EvalResult gamma_weierstrass_product(cplx s, const SeriesConfig& cfg);

// Dispatch through a construction tag; rejects poles before evaluating.
GammaValue evaluate_gamma(const GammaConstruction& c, cplx s);

// Left-extension via Gamma(s) = Gamma(s+k)/(s(s+1)...(s+k-1)) with the
// smallest k making Re s + k > 1.
cplx extend_by_recursion(const GammaConstruction& base, cplx s);

// The normalization ratio Gamma(x+n)/((n-1)! n^x), which tends to 1.
// Computed in log space (recurrence from Gamma(x+1), real lgamma for
// (n-1)!) so no intermediate overflows; ratio - 1 behaves like x(x-1)/(2n).
cplx weierstrass_limit_check(const GammaConstruction& impl, cplx x, long long n);

}  // namespace gz
