#include "gz/higher.hpp"

#include <cmath>
#include <sstream>

#include "gz/companions.hpp"
#include "gz/gamma.hpp"
#include "gz/hurwitz.hpp"

namespace gz {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;

cplx raw_mellin(const RationalFunctionSpec& spec, cplx s) {
    cplx val = std::exp(s * std::log(spec.leading));
    for (std::size_t i = 0; i < spec.zeros.size(); ++i) {
        const cplx arg = s - spec.zeros[i];
        if (is_nonpositive_integer(arg)) {
            std::ostringstream os;
            os << "mellin evaluate: numerator factor Gamma(s - a_" << i
               << ") at a pole, a_" << i << " = (" << spec.zeros[i].real() << ", "
               << spec.zeros[i].imag() << ")";
            throw PoleError(os.str());
        }
        val *= gamma_reference(arg);
    }
    // 1/Gamma is entire: a denominator pole just sends F to 0.
    for (const cplx& b : spec.poles) val *= factorielle(s - b - 1.0);
    return val;
}

}  // namespace

cplx rational_value(const RationalFunctionSpec& spec, cplx s) {
    cplx val = spec.leading;
    for (const cplx& a : spec.zeros) val *= s - a;
    for (const cplx& b : spec.poles) val /= s - b;
    return val;
}

cplx MellinGamma::evaluate(cplx s) const { return normalization * raw_mellin(spec, s); }

MellinGamma mellin_gamma_from_rational(const RationalFunctionSpec& spec) {
    if (spec.leading == cplx(0.0))
        throw DomainError("mellin_gamma_from_rational: leading coefficient must be nonzero");
    MellinGamma mg;
    mg.spec = spec;
    bool one_in_domain = true;
    for (const cplx& a : spec.zeros)
        if (is_nonpositive_integer(1.0 - a)) one_in_domain = false;
    for (const cplx& b : spec.poles)
        if (is_nonpositive_integer(1.0 - b)) one_in_domain = false;
    if (one_in_domain) {
        mg.normalization = 1.0 / raw_mellin(spec, cplx(1.0));
        mg.normalized_at_one = true;
    }
    return mg;
}

EvalResult bendersky_log_gamma(BenderskyLevel level, double x, const SeriesConfig& cfg) {
    if (level.k < 0 || level.k > 8)
        throw DomainError("bendersky_log_gamma: level must be in 0..8");
    if (!(x > 0.0)) throw DomainError("bendersky_log_gamma: requires x > 0");
    const cplx s(-static_cast<double>(level.k), 0.0);
    const ZetaPair at_x = hurwitz_zeta_with_derivative(s, x, cfg);
    const ZetaPair at_1 = hurwitz_zeta_with_derivative(s, 1.0, cfg);
    return {at_x.dzeta_ds.value - at_1.dzeta_ds.value,
            at_x.dzeta_ds.err_estimate + at_1.dzeta_ds.err_estimate,
            at_x.dzeta_ds.work + at_1.dzeta_ds.work};
}

double lerch_consistency(double x) {
    if (!(x > 0.0)) throw DomainError("lerch_consistency: requires x > 0");
    const ZetaPair z = hurwitz_zeta_with_derivative(cplx(0.0), x, SeriesConfig{});
    const double target = loggamma_reference(cplx(x)).real() - kHalfLog2Pi;
    return std::abs(z.dzeta_ds.value.real() - target);
}

}  // namespace gz
