#include "gz/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gz/companions.hpp"
#include "gz/quadrature.hpp"
#include "gz/sequences.hpp"

namespace gz {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

// Rational-series coefficients (g = 607/128, 15 terms).
constexpr double kG = 607.0 / 128.0;
constexpr double kC[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5};

// log Gamma(s) for Re s >= 0.5, principal value.
cplx loggamma_right(cplx s) {
    const cplx z = s - 1.0;
    cplx acc = kC[0];
    for (int k = 1; k < 15; ++k) acc += kC[k] / (z + static_cast<double>(k));
    const cplx t = z + kG + 0.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

cplx digamma_right(cplx s) {
    const cplx z = s - 1.0;
    cplx acc = kC[0], dacc = 0.0;
    for (int k = 1; k < 15; ++k) {
        const cplx d = z + static_cast<double>(k);
        acc += kC[k] / d;
        dacc -= kC[k] / (d * d);
    }
    const cplx t = z + kG + 0.5;
    return std::log(t) + (z + 0.5) / t - 1.0 + dacc / acc;
}

void reject_nonpositive_integer(cplx s, const char* who) {
    if (is_nonpositive_integer(s)) throw PoleError(std::string(who) + ": pole at non-positive integer");
}

}  // namespace

const char* gamma_kind_name(GammaKind k) {
    switch (k) {
        case GammaKind::EulerLogIntegral: return "euler-log-integral";
        case GammaKind::EulerIntegral: return "euler-integral";
        case GammaKind::GaussProduct: return "gauss-product";
        case GammaKind::WeierstrassProduct: return "weierstrass-product";
        case GammaKind::ReferenceOracle: return "reference";
    }
    return "unknown";
}

GammaConstruction make_construction(GammaKind kind) {
    switch (kind) {
        case GammaKind::EulerLogIntegral:
        case GammaKind::EulerIntegral:
            return {kind, QuadratureConfig{}};
        case GammaKind::GaussProduct:
        case GammaKind::WeierstrassProduct:
            return {kind, SeriesConfig{}};
        case GammaKind::ReferenceOracle:
        default:
            return {kind, std::monostate{}};
    }
}

cplx gamma_reference(cplx s) {
    reject_nonpositive_integer(s, "gamma_reference");
    if (s.real() >= 0.5) return std::exp(loggamma_right(s));
    // Reflection; sin(pi s) overflows for large |Im s|, so fold through logs
    // only when needed.
    const cplx sp = std::sin(kPi * s);
    if (std::isfinite(std::abs(sp)))
        return kPi / (sp * std::exp(loggamma_right(1.0 - s)));
    // |Im s| large: log sin(pi s) = -i pi s - log(2i) + log(1 - e^{2 i pi s})
    // for Im s > 0; conjugate-symmetric otherwise.
    const bool upper = s.imag() > 0.0;
    const cplx su = upper ? s : std::conj(s);
    const cplx logsin = cplx(0, -kPi) * su - std::log(cplx(0, 2)) +
                        std::log(1.0 - std::exp(cplx(0, 2 * kPi) * su));
    const cplx logv = std::log(cplx(kPi)) - (upper ? logsin : std::conj(logsin)) -
                      loggamma_right(1.0 - s);
    return std::exp(logv);
}

cplx loggamma_reference(cplx s) {
    if (s.imag() == 0.0 && s.real() > 0.0) {
        if (s.real() >= 0.5) return loggamma_right(s);
        // log Gamma(x) = log(pi / sin(pi x)) - log Gamma(1-x), real on (0,1/2).
        return std::log(kPi / std::sin(kPi * s.real())) - loggamma_right(1.0 - s).real();
    }
    if (s.real() >= 0.5) return loggamma_right(s);
    throw DomainError("loggamma_reference: defined for Re s >= 0.5 or real s > 0");
}

cplx digamma_reference(cplx s) {
    reject_nonpositive_integer(s, "digamma_reference");
    if (s.real() >= 0.5) return digamma_right(s);
    // psi(s) = psi(1-s) - pi cot(pi s); cot via exponentials for large |Im|.
    const cplx ps = kPi * s;
    cplx cot;
    const cplx sn = std::sin(ps);
    if (std::isfinite(std::abs(sn)) && std::abs(sn) > 0.0) {
        cot = std::cos(ps) / sn;
    } else {
        cot = (s.imag() > 0.0) ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
    }
    return digamma_right(1.0 - s) - kPi * cot;
}

EvalResult gamma_euler_log_integral(cplx s, const QuadratureConfig& cfg) {
    if (!(s.real() > 0.0))
        throw DomainError("gamma_euler_log_integral: requires Re s > 0");
    const cplx sm1 = s - 1.0;
    // L = log(1/t) is computed from the endpoint distances: near t=1 the
    // exact quantity is -log1p(-(1-t)).
    auto f = [sm1](double t, double da, double db) -> cplx {
        const double L = (t < 0.5) ? -std::log(da) : -std::log1p(-db);
        return std::exp(sm1 * std::log(L));
    };
    return integrate_de_c(f, 0.0, 1.0, cfg);
}

EvalResult gamma_euler_integral(cplx s, const QuadratureConfig& cfg) {
    if (!(s.real() > 0.0))
        throw DomainError("gamma_euler_integral: requires Re s > 0");
    const cplx sm1 = s - 1.0;
    auto f = [sm1](double t) -> cplx { return std::exp(sm1 * std::log(t) - t); };
    return integrate_halfline_c(f, cfg);
}

cplx gamma_gauss_product(cplx s, long long n) {
    if (n < 1) throw DomainError("gamma_gauss_product: n must be positive");
    if (s.imag() == 0.0 && s.real() <= 0.0) {
        const double r = std::round(s.real());
        if (std::abs(s.real() - r) < 1e-14 && r >= -static_cast<double>(n))
            throw PoleError("gamma_gauss_product: factor vanishes at this s");
    }
    // n^s / s * prod_{k=1..n} k/(s+k); the running product stays O(n^{-Re s}).
    cplx prod = 1.0;
    for (long long k = 1; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        prod *= kd / (s + kd);
    }
    const cplx lead = std::exp(s * std::log(static_cast<double>(n)));
    return lead * prod / s;
}

EvalResult gamma_gauss_extrapolated(cplx s, const SeriesConfig& cfg) {
    std::vector<std::pair<long long, double>> re_seq, im_seq;
    long long total = 0;
    for (long long n = 64; n <= 4096 && n <= cfg.max_terms; n *= 2) {
        const cplx v = gamma_gauss_product(s, n);
        re_seq.emplace_back(n, v.real());
        im_seq.emplace_back(n, v.imag());
        total += n;
    }
    if (re_seq.size() < 2)
        throw DomainError("gamma_gauss_extrapolated: max_terms leaves fewer than 2 rungs");
    const EvalResult re = richardson_extrapolate(re_seq);
    const EvalResult im = richardson_extrapolate(im_seq);
    return {cplx(re.value.real(), im.value.real()),
            std::hypot(re.err_estimate, im.err_estimate), total};
}

EvalResult gamma_weierstrass_product(cplx s, const SeriesConfig& cfg) {
    reject_nonpositive_integer(s, "gamma_weierstrass_product");
    const double gamma_const = euler_gamma_cached();
    // Truncation after the analytic tail leaves ~|s|^4/(3N^3).
    const double tol = std::max(cfg.abs_tol, 1e-14);
    const double smag = std::abs(s);
    long long N = static_cast<long long>(std::cbrt(std::pow(smag, 4.0) / (3.0 * tol))) + 1;
    N = std::clamp<long long>(N, 500, std::max<long long>(500, cfg.max_terms));

    cplx log_inv = std::log(s) + gamma_const * s;
    // Kahan-compensated accumulation: N is large and the terms decay.
    cplx comp = 0.0;
    for (long long n = 1; n <= N; ++n) {
        const cplx x = s / static_cast<double>(n);
        const cplx term = std::log(1.0 + x) - x;
        const cplx y = term - comp;
        const cplx t2 = log_inv + y;
        comp = (t2 - log_inv) - y;
        log_inv = t2;
    }
    const double Nd = static_cast<double>(N);
    const double sum2_tail = 1.0 / Nd - 1.0 / (2.0 * Nd * Nd) + 1.0 / (6.0 * Nd * Nd * Nd);
    const double sum3_tail = 1.0 / (2.0 * Nd * Nd) - 1.0 / (2.0 * Nd * Nd * Nd);
    log_inv += -0.5 * s * s * sum2_tail + (s * s * s / 3.0) * sum3_tail;

    const cplx value = std::exp(-log_inv);
    const double trunc = std::pow(smag, 4.0) / (3.0 * Nd * Nd * Nd);
    const double err = std::abs(value) * (trunc + Nd * 1e-18 + 1e-15);
    if (trunc > std::max(cfg.abs_tol, cfg.rel_tol))
        throw BudgetError("gamma_weierstrass_product: tolerance unreachable at max_terms",
                          EvalResult{value, err, N});
    return {value, err, N};
}

GammaValue evaluate_gamma(const GammaConstruction& c, cplx s) {
    reject_nonpositive_integer(s, "evaluate_gamma");
    EvalResult r;
    switch (c.kind) {
        case GammaKind::EulerLogIntegral:
            r = gamma_euler_log_integral(s, std::get<QuadratureConfig>(c.cfg));
            break;
        case GammaKind::EulerIntegral:
            r = gamma_euler_integral(s, std::get<QuadratureConfig>(c.cfg));
            break;
        case GammaKind::GaussProduct:
            r = gamma_gauss_extrapolated(s, std::get<SeriesConfig>(c.cfg));
            break;
        case GammaKind::WeierstrassProduct:
            r = gamma_weierstrass_product(s, std::get<SeriesConfig>(c.cfg));
            break;
        case GammaKind::ReferenceOracle:
            r = {gamma_reference(s), 1e-12, 1};
            break;
    }
    return {r, c.kind, s};
}

cplx extend_by_recursion(const GammaConstruction& base, cplx s) {
    reject_nonpositive_integer(s, "extend_by_recursion");
    long long k = 0;
    while (s.real() + static_cast<double>(k) <= 1.0) ++k;
    const GammaValue shifted = evaluate_gamma(base, s + static_cast<double>(k));
    cplx denom = 1.0;
    for (long long j = 0; j < k; ++j) denom *= s + static_cast<double>(j);
    return shifted.result.value / denom;
}

cplx weierstrass_limit_check(const GammaConstruction& impl, cplx x, long long n) {
    if (n < 2) throw DomainError("weierstrass_limit_check: n must be >= 2");
    const cplx base = (x.real() > 0.0)
                          ? evaluate_gamma(impl, x + 1.0).result.value
                          : extend_by_recursion(impl, x + 1.0);
    // log Gamma(x+n) = log Gamma(x+1) + sum_{j=1}^{n-1} log(x+j), each log
    // principal; the accumulated exponent minus lgamma(n) + x log n tends
    // to 0, so exp never overflows.
    cplx expo = std::log(base);
    cplx comp = 0.0;
    for (long long j = 1; j < n; ++j) {
        const cplx term = std::log(x + static_cast<double>(j));
        const cplx y = term - comp;
        const cplx t2 = expo + y;
        comp = (t2 - expo) - y;
        expo = t2;
    }
    expo -= std::lgamma(static_cast<double>(n));
    expo -= x * std::log(static_cast<double>(n));
    return std::exp(expo);
}

}  // namespace gz
