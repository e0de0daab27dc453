#pragma once

#include <vector>

#include "gz/types.hpp"

namespace gz {

// R(s) = leading * prod_i (s - zeros[i]) / prod_j (s - poles[j]).
// Multiplicity is expressed by repeating an entry.
struct RationalFunctionSpec {
    cplx leading = 1.0;
    std::vector<cplx> zeros;
    std::vector<cplx> poles;
};

cplx rational_value(const RationalFunctionSpec& spec, cplx s);

// Gamma-factor solution of F(s+1) = R(s) F(s):
//   F(s) = normalization * leading^s * prod_i Gamma(s - a_i) / prod_j Gamma(s - b_j).
// Denominator Gamma poles make F vanish (computed through 1/Gamma, which is
// entire); numerator Gamma poles are poles of F and raise PoleError.
struct MellinGamma {
    RationalFunctionSpec spec;
    cplx normalization = 1.0;
    bool normalized_at_one = false;

    cplx evaluate(cplx s) const;
};

// Builds the evaluator. F(1) = 1 is imposed whenever s = 1 avoids every
// induced pole and zero; otherwise normalization stays 1 and
// normalized_at_one reports it.
MellinGamma mellin_gamma_from_rational(const RationalFunctionSpec& spec);

// Hierarchy level; the zeta engine's accuracy budget caps it at 8.
struct BenderskyLevel {
    int k = 0;
};

// log Gamma_k(x) = d/ds zeta(s,x)|_{s=-k} - d/ds zeta(s,1)|_{s=-k}.
// Gamma_k(1) = 1 by construction; k = 0 reproduces log Gamma.
EvalResult bendersky_log_gamma(BenderskyLevel level, double x,
                               const SeriesConfig& cfg = SeriesConfig{});

// |zeta'(0,x) - (log Gamma(x) - log(2 pi)/2)|, the k = 0 anchor identity.
double lerch_consistency(double x);

}  // namespace gz
