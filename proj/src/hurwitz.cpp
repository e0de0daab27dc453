#include "gz/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gz/gamma.hpp"

namespace gz {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// B_{2j}/(2j)! for 2j = 2,4,...,18; the last entry only feeds the error
// estimate.
constexpr double kBernoulliOverFact[9] = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0};

// zeta(s, x) = 2 Gamma(1-s)/(2 pi)^{1-s} *
//                [sin(pi s/2) sum cos(2 pi n x)/n^{1-s}
//               + cos(pi s/2) sum sin(2 pi n x)/n^{1-s}]   (Re s < 0, 0 < x <= 1),
// extended to x > 1 by peeling zeta(s, x) = zeta(s, x-1) - (x-1)^{-s}. The
// series terms decay like n^{Re s - 1} with no cancellation, so this branch
// keeps near-machine accuracy where the direct sum loses |Re s| log10(t)
// digits to cancellation. Used for Re s <= -4, where it needs < 3000 terms.
ZetaPair hurwitz_fourier(cplx s, double x, const SeriesConfig& cfg) {
    const double eps = std::numeric_limits<double>::epsilon();
    const long long m = static_cast<long long>(std::ceil(x)) - 1;  // x - m in (0, 1]
    const double frac = x - static_cast<double>(m);

    cplx peeled = 0.0, dpeeled = 0.0;
    double maxmag = 0.0;
    for (long long j = 1; j <= m; ++j) {
        const double t = x - static_cast<double>(j);
        const double lt = std::log(t);
        const cplx p = std::exp(-s * lt);
        peeled -= p;
        dpeeled += lt * p;
        maxmag = std::max(maxmag, std::abs(p) * std::max(1.0, std::abs(lt)));
    }

    const double sigma = s.real();
    cplx C = 0.0, S = 0.0, dC = 0.0, dS = 0.0;
    double tail = 0.0;
    long long n = 1;
    for (;; ++n) {
        if (n > cfg.max_terms)
            throw BudgetError("hurwitz_zeta: fourier series exceeds max_terms",
                              EvalResult{0.0, 1.0, n});
        const double ln = std::log(static_cast<double>(n));
        const cplx p = std::exp((s - 1.0) * ln);
        const double c = std::cos(kTwoPi * static_cast<double>(n) * frac);
        const double sn = std::sin(kTwoPi * static_cast<double>(n) * frac);
        C += c * p;
        S += sn * p;
        dC += c * ln * p;
        dS += sn * ln * p;
        const double lnext = std::log(static_cast<double>(n + 1));
        tail = std::pow(static_cast<double>(n + 1), sigma) * (1.0 + lnext) / (-sigma);
        if (n >= 8 && tail < 1e-15 * std::max(1.0, std::abs(C) + std::abs(S))) break;
    }

    const cplx w = 1.0 - s;
    const cplx A =
        2.0 * std::exp(loggamma_reference(w) - w * std::log(kTwoPi));
    const cplx dA = A * (std::log(kTwoPi) - digamma_reference(w));
    const cplx sh = std::sin(0.5 * std::numbers::pi * s);
    const cplx ch = std::cos(0.5 * std::numbers::pi * s);
    const cplx B = sh * C + ch * S;
    const cplx dB = 0.5 * std::numbers::pi * (ch * C - sh * S) + sh * dC + ch * dS;

    const cplx z = A * B + peeled;
    const cplx dz = dA * B + A * dB + dpeeled;
    maxmag = std::max(maxmag, std::abs(A) * (std::abs(sh) + std::abs(ch)));
    const double err = std::abs(A) * (std::abs(sh) + std::abs(ch)) * tail + 8.0 * eps * maxmag;
    const long long work = m + n + 2;
    ZetaPair out;
    out.zeta = {z, err, work};
    out.dzeta_ds = {dz, err * (1.0 + std::log(static_cast<double>(n))), work};
    return out;
}

}  // namespace

ZetaPair hurwitz_zeta_with_derivative(cplx s, double x, const SeriesConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("hurwitz_zeta: requires x > 0");
    if (std::abs(s - cplx(1.0)) < 1e-12) throw PoleError("hurwitz_zeta: pole at s = 1");
    if (s.real() <= -4.0) return hurwitz_fourier(s, x, cfg);

    const double eps = std::numeric_limits<double>::epsilon();
    const double reach = std::max(12.0, 1.1 * std::abs(s));
    long long N = 0;
    while (x + static_cast<double>(N) < reach) ++N;
    if (N + 10 > cfg.max_terms)
        throw BudgetError("hurwitz_zeta: direct-sum length exceeds max_terms",
                          EvalResult{0.0, std::abs(s), 1});

    cplx z = 0.0, dz = 0.0;
    double maxmag = 0.0;
    for (long long n = 0; n < N; ++n) {
        const double t = x + static_cast<double>(n);
        const double lt = std::log(t);
        const cplx p = std::exp(-s * lt);  // (x+n)^{-s}
        z += p;
        dz += -lt * p;
        maxmag = std::max(maxmag, std::abs(p) * std::max(1.0, lt));
    }

    const double t = x + static_cast<double>(N);
    const double lt = std::log(t);
    const cplx sm1 = s - 1.0;
    {
        // Tail integral t^{1-s}/(s-1); d/ds = t^{1-s} (-lt (s-1) - 1)/(s-1)^2.
        const cplx p1 = std::exp((1.0 - s) * lt);
        z += p1 / sm1;
        dz += p1 * (-lt * sm1 - 1.0) / (sm1 * sm1);
        maxmag = std::max(maxmag, std::abs(p1 / sm1) * std::max(1.0, lt));
        // Half term.
        const cplx p0 = std::exp(-s * lt);
        z += 0.5 * p0;
        dz += -0.5 * lt * p0;
    }

    // Bernoulli corrections: B_{2j}/(2j)! (s)_{2j-1} t^{-s-2j+1}; the
    // Pochhammer derivative accumulates by the product rule.
    double omitted = 0.0;
    for (int j = 1; j <= 9; ++j) {
        const int m = 2 * j - 1;
        cplx poch = 1.0, dpoch = 0.0;
        for (int i = 0; i < m; ++i) {
            dpoch = dpoch * (s + static_cast<double>(i)) + poch;
            poch *= s + static_cast<double>(i);
        }
        const cplx e = std::exp((-s - static_cast<double>(2 * j - 1)) * lt);
        const cplx term = kBernoulliOverFact[j - 1] * poch * e;
        const cplx dterm = kBernoulliOverFact[j - 1] * (dpoch - poch * lt) * e;
        if (j <= 8) {
            z += term;
            dz += dterm;
        } else {
            omitted = std::abs(term) + std::abs(dterm);
        }
    }

    const double floor = 8.0 * eps * maxmag;
    const long long work = N + 12;
    ZetaPair out;
    out.zeta = {z, omitted + floor, work};
    out.dzeta_ds = {dz, omitted + floor, work};
    return out;
}

}  // namespace gz
