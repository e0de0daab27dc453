#pragma once

#include <functional>

#include "gz/types.hpp"

namespace gz {

// Adaptive Gauss-Kronrod (G7,K15) on (a,b). The rule is open: no node
// touches an endpoint, so integrable power/log endpoint singularities are
// never evaluated. Error per interval follows the QUADPACK resasc scaling;
// the worst interval is bisected first.
// Throws BudgetError (carrying the best estimate) when max_subdivisions is
// exhausted before reaching max(abs_tol, rel_tol*|I|), DomainError on NaN.
EvalResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, const QuadratureConfig& cfg);

// Double-exponential (tanh-sinh) quadrature on (a,b) for integrands with
// endpoint singularities too strong for bisection to resolve (e.g.
// (b-t)^(-0.9)). The integrand receives its distances to both endpoints,
// f(t, t-a, b-t), computed without cancellation even when they underflow
// the spacing of doubles near t; use them for expressions like log(b-t).
EvalResult integrate_de(const std::function<double(double, double, double)>& f,
                        double a, double b, const QuadratureConfig& cfg);
EvalResult integrate_de_c(const std::function<cplx(double, double, double)>& f,
                          double a, double b, const QuadratureConfig& cfg);

// Integral over (0, inf) via the substitution t = -log u, which maps the
// half-line onto (0,1) and is exact for pure e^{-t} factors. Requires f to
// decay integrably; growth detected by sampling t in {10,20,40} raises
// DomainError before any quadrature is attempted.
EvalResult integrate_halfline(const std::function<double(double)>& f,
                              const QuadratureConfig& cfg);
EvalResult integrate_halfline_c(const std::function<cplx(double)>& f,
                                const QuadratureConfig& cfg);

}  // namespace gz
