#pragma once

#include "gz/types.hpp"

namespace gz {

struct ZetaPair {
    EvalResult zeta;      // zeta(s,x)
    EvalResult dzeta_ds;  // d/ds zeta(s,x)
};

// Hurwitz zeta zeta(s,x) = sum_{n>=0} (x+n)^{-s} (analytically continued)
// together with its s-derivative, by Euler-Maclaurin: N direct terms, tail
// integral (x+N)^{1-s}/(s-1), half term, and Bernoulli corrections through
// B16. Every piece is differentiated analytically in s; no numerical
// differencing happens inside the engine.
//
// err_estimate combines the first omitted Bernoulli term with the roundoff
// floor eps * (largest intermediate); the floor grows like (x+N)^{1-Re s},
// which is what limits accuracy for strongly negative Re s.
//
// Throws DomainError for x <= 0, PoleError at s = 1.
ZetaPair hurwitz_zeta_with_derivative(cplx s, double x, const SeriesConfig& cfg);

}  // namespace gz
