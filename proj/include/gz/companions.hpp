#pragma once

#include "gz/types.hpp"

namespace gz {

// How the Euler-Mascheroni constant is obtained.
enum class GammaConstantMethod { IntegralForm, LimitForm };

struct GammaConstant {
    double value = 0.0;
    GammaConstantMethod method = GammaConstantMethod::LimitForm;
    double err_estimate = 0.0;
    long long work = 0;
};

// Polar/entire split of Gamma at one argument: P + Q = Gamma(at).
struct PrymPair {
    cplx P;
    cplx Q;
    cplx at;
    double err_estimate = 0.0;
};

// IntegralForm: gamma = int_0^1 (1/log t + 1/(1-t)) dt.
// LimitForm: H_n - log n corrected by 1/(2n) - 1/(12n^2); the residual is
// O(n^-4), so the default n = 1e6 (capped by cfg.max_terms) is exact to
// double precision.
GammaConstant euler_gamma_constant(GammaConstantMethod method,
                                   const SeriesConfig& cfg = SeriesConfig{});

// LimitForm value computed once at first use; other modules consume this.
double euler_gamma_cached();

// Uncorrected partial sum H_n - log n (the slowly converging raw limit).
double harmonic_minus_log(long long n);

// Fc(u) = 1/Gamma(1+u); entire, with zeros at u = -1, -2, ...
cplx factorielle(cplx u);

// psi(1+s) = -gamma + sum_{k>=1} (-1)^{k+1} binom(s,k)/k.
// Terms decay like k^{-Re s - 1}; the tail after term k is about
// |t_k| * k / (Re s + 1), which is what the stopping rule bounds.
// Requires Re s > 0 (real s in (-1,0] also accepted: the binomials then
// still decay or vanish).
EvalResult digamma_stern(cplx s, const SeriesConfig& cfg = SeriesConfig{});

// log Gamma(1+s) = sum_{n>=2} binom(s,n) c_n where c_n is the n-th forward
// difference of log(m!) at m=0 (c_2 = log 2, c_3 = log 3 - 2 log 2).
// The c_n are evaluated from the integral representation
//   c_n = (-1)^n int_0^1 (1-x)^{n-1} / (-log x) dx,
// which is numerically stable where the alternating difference sum is not.
EvalResult loggamma_hermite(cplx s, const SeriesConfig& cfg = SeriesConfig{});

// P(s) = sum_{n>=0} (-1)^n / (n! (s+n)), the pole-carrying part of Gamma;
// equals int_0^1 t^{s-1} e^{-t} dt for Re s > 0.
EvalResult prym_P(cplx s, const SeriesConfig& cfg = SeriesConfig{});

// Same function through the ascending-factorial series
// P(s) = (1/e) sum_{n>=0} 1 / (s (s+1) ... (s+n)).
EvalResult prym_P_ascending(cplx s, const SeriesConfig& cfg = SeriesConfig{});

// Q(s) = int_1^inf t^{s-1} e^{-t} dt; entire, finite even at the poles of
// Gamma and P.
EvalResult prym_Q(cplx s, const QuadratureConfig& cfg = QuadratureConfig{});

// Both halves at once; P + Q = Gamma(at) away from the poles.
PrymPair prym_decomposition(cplx s,
                            const SeriesConfig& series_cfg = SeriesConfig{},
                            const QuadratureConfig& quad_cfg = QuadratureConfig{});

// T(s) = e P(s) / Gamma(s); satisfies T(s+1) - T(s) = -1/Gamma(s+1).
cplx bourget_T(cplx s);

// Entire interpolation of the factorial:
//   H(s) = 1/(2 Gamma(1-s)) * [psi(1 - s/2) - psi((1-s)/2)],
// with H(n+1) = n! and H(s+1) = s H(s) + 1/Gamma(1-s).
// At integer s >= 1 the psi terms and 1/Gamma degenerate jointly; the value
// is recovered by averaging at s +- 1e-6, reflected in err_estimate.
EvalResult hadamard_H(cplx s);

// Piecewise-rational convex interpolation of the factorial:
// 1/s on (0,1), prod_{j=1}^{k-1} (s-j) on [k, k+1). Satisfies the
// functional equation f(s+1) = s f(s) exactly but is not log-convex.
double davis_pseudo_gamma(double s);

}  // namespace gz
