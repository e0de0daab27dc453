#include "gz/registry.hpp"

#include <cmath>
#include <numbers>

#include "gz/companions.hpp"
#include "gz/gamma.hpp"

namespace gz {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double require_real(cplx s, const char* who) {
    if (s.imag() != 0.0)
        throw DomainError(std::string(who) + ": defined for real arguments only");
    return s.real();
}

EvalResult oracle_result(cplx v) { return {v, 1e-13 * (1.0 + std::abs(v)), 1}; }

std::vector<RegistryEntry> build() {
    std::vector<RegistryEntry> r;
    r.push_back({"gamma.euler-log-integral",
                 "Gamma(s) = int_0^1 (log(1/t))^(s-1) dt, Re s > 0", false,
                 [](cplx s, const EvalOptions& o) {
                     return gamma_euler_log_integral(s, o.quad);
                 }});
    r.push_back({"gamma.euler-integral",
                 "Gamma(s) = int_0^inf t^(s-1) e^(-t) dt, Re s > 0", false,
                 [](cplx s, const EvalOptions& o) {
                     return gamma_euler_integral(s, o.quad);
                 }});
    r.push_back({"gamma.gauss-product",
                 "limit of n! n^s / (s...(s+n)), Richardson-accelerated", false,
                 [](cplx s, const EvalOptions& o) {
                     return gamma_gauss_extrapolated(s, o.series);
                 }});
    r.push_back({"gamma.weierstrass-product",
                 "inverted product s e^(gamma s) prod (1+s/n) e^(-s/n)", false,
                 [](cplx s, const EvalOptions& o) {
                     return gamma_weierstrass_product(s, o.series);
                 }});
    r.push_back({"gamma.reference",
                 "reference oracle (rational-series approximation)", false,
                 [](cplx s, const EvalOptions&) { return oracle_result(gamma_reference(s)); }});
    r.push_back({"gamma.sin-perturbed",
                 "Gamma(s) (1 + sin 2 pi s): same recurrence, unbounded on strips", false,
                 [](cplx s, const EvalOptions&) {
                     return oracle_result(gamma_reference(s) * (1.0 + std::sin(kTwoPi * s)));
                 }});
    r.push_back({"psi.stern",
                 "psi(1+s) by the alternating binomial series", false,
                 [](cplx s, const EvalOptions& o) { return digamma_stern(s, o.series); }});
    r.push_back({"loggamma.hermite",
                 "log Gamma(1+s) by the Newton series over binom(s,n)", false,
                 [](cplx s, const EvalOptions& o) { return loggamma_hermite(s, o.series); }});
    r.push_back({"prym.P",
                 "polar part sum (-1)^n / (n! (s+n))", false,
                 [](cplx s, const EvalOptions& o) { return prym_P(s, o.series); }});
    r.push_back({"prym.Q",
                 "entire part int_1^inf t^(s-1) e^(-t) dt", false,
                 [](cplx s, const EvalOptions& o) { return prym_Q(s, o.quad); }});
    r.push_back({"bourget.T",
                 "T(s) = e P(s) / Gamma(s)", false,
                 [](cplx s, const EvalOptions&) { return oracle_result(bourget_T(s)); }});
    r.push_back({"hadamard.H",
                 "entire factorial interpolation via digamma differences", false,
                 [](cplx s, const EvalOptions&) { return hadamard_H(s); }});
    r.push_back({"davis.GS",
                 "piecewise-rational convex factorial interpolation, s > 0", true,
                 [](cplx s, const EvalOptions&) {
                     const double x = require_real(s, "davis.GS");
                     return EvalResult{cplx(davis_pseudo_gamma(x)), 0.0, 1};
                 }});
    r.push_back({"mellin",
                 "F(s) = c rho^s prod Gamma(s-a_i) / prod Gamma(s-b_j); needs --spec", false,
                 [](cplx s, const EvalOptions& o) {
                     if (!o.has_spec)
                         throw DomainError("mellin: a rational-function spec is required");
                     const MellinGamma mg = mellin_gamma_from_rational(o.spec);
                     const cplx v = mg.evaluate(s);
                     return EvalResult{v, 1e-12 * (1.0 + std::abs(v)), 1};
                 }});
    r.push_back({"bendersky",
                 "log Gamma_k(x) from Hurwitz zeta s-derivatives; needs --level", true,
                 [](cplx s, const EvalOptions& o) {
                     const double x = require_real(s, "bendersky");
                     return bendersky_log_gamma({o.level}, x, o.series);
                 }});
    r.push_back({"constants.gamma",
                 "Euler-Mascheroni constant; --method limit|integral", true,
                 [](cplx, const EvalOptions& o) {
                     GammaConstantMethod m;
                     if (o.method == "limit")
                         m = GammaConstantMethod::LimitForm;
                     else if (o.method == "integral")
                         m = GammaConstantMethod::IntegralForm;
                     else
                         throw DomainError("constants.gamma: method must be limit or integral");
                     const GammaConstant g = euler_gamma_constant(m, o.series);
                     return EvalResult{cplx(g.value), g.err_estimate, g.work};
                 }});
    return r;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = build();
    return entries;
}

const RegistryEntry* find_registry(const std::string& name) {
    for (const RegistryEntry& e : registry())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace gz
