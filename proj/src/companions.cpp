#include "gz/companions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "gz/gamma.hpp"
#include "gz/quadrature.hpp"

namespace gz {
namespace {

constexpr double kE = std::numbers::e;

struct KahanC {
    cplx sum = 0.0;
    cplx comp = 0.0;
    void add(cplx term) {
        const cplx y = term - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct KahanR {
    double sum = 0.0;
    double comp = 0.0;
    void add(double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Nodes for the Hermite coefficient integrals c_n, all sharing one
// tanh-sinh discretization of (0,1). Stored per node: w/(-log x) and the
// base (1-x); c_n then needs only a running power per node.
struct HermiteCache {
    std::vector<double> w_over_l;
    std::vector<double> base;
    std::vector<double> power;  // base^(n_done-1) per node
    std::vector<double> c;      // c[n], valid for 2 <= n <= n_done
    std::size_t n_done = 1;
    std::mutex mu;

    void init_nodes() {
        const double h = 1.0 / 32.0;
        for (int k = -192; k <= 192; ++k) {
            const double u = k * h;
            const double v = std::numbers::pi / 2.0 * std::sinh(u);
            const double av = std::abs(v);
            const double E = std::exp(-2.0 * av);
            if (E < 1e-300) continue;
            const double near_dist = E / (1.0 + E);       // distance to nearer endpoint
            const double far_dist = 1.0 / (1.0 + E);      // distance to farther endpoint
            const double x = (v >= 0.0) ? far_dist : near_dist;
            const double da = (v >= 0.0) ? far_dist : near_dist;
            const double db = (v >= 0.0) ? near_dist : far_dist;
            const double sech2 = 4.0 * E / ((1.0 + E) * (1.0 + E));
            const double w = h * 0.5 * sech2 * (std::numbers::pi / 2.0) * std::cosh(u);
            if (w < 1e-305) continue;
            const double L = (x < 0.5) ? -std::log(da) : -std::log1p(-db);
            w_over_l.push_back(w / L);
            base.push_back(db);
            power.push_back(1.0);
        }
    }

    double get(std::size_t n) {
        std::lock_guard<std::mutex> lock(mu);
        if (w_over_l.empty()) init_nodes();
        if (c.size() <= n) c.resize(std::max<std::size_t>(n + 1, 512), 0.0);
        while (n_done < n) {
            ++n_done;  // compute c[n_done] from power = base^(n_done-1)
            KahanR acc;
            for (std::size_t i = 0; i < base.size(); ++i) {
                power[i] *= base[i];
                acc.add(w_over_l[i] * power[i]);
            }
            c[n_done] = (n_done % 2 == 0) ? acc.sum : -acc.sum;
        }
        return c[n];
    }
};

HermiteCache& hermite_cache() {
    static HermiteCache cache;
    return cache;
}

void require_right_halfplane(cplx s, const char* who) {
    const bool ok = s.real() > 0.0 || (s.imag() == 0.0 && s.real() > -1.0);
    if (!ok) throw DomainError(std::string(who) + ": requires Re s > 0");
}

cplx hadamard_direct(cplx s) {
    const cplx dpsi = digamma_reference(1.0 - s / 2.0) - digamma_reference((1.0 - s) / 2.0);
    return 0.5 * factorielle(-s) * dpsi;
}

}  // namespace

double harmonic_minus_log(long long n) {
    if (n < 1) throw DomainError("harmonic_minus_log: n must be positive");
    KahanR h;
    for (long long k = 1; k <= n; ++k) h.add(1.0 / static_cast<double>(k));
    return h.sum - std::log(static_cast<double>(n));
}

GammaConstant euler_gamma_constant(GammaConstantMethod method, const SeriesConfig& cfg) {
    if (method == GammaConstantMethod::LimitForm) {
        const long long n = std::clamp<long long>(cfg.max_terms, 10, 1'000'000);
        const double nd = static_cast<double>(n);
        const double value =
            harmonic_minus_log(n) - 1.0 / (2.0 * nd) + 1.0 / (12.0 * nd * nd);
        const double err = 1.0 / (120.0 * nd * nd * nd * nd) + 4e-16;
        return {value, method, err, n};
    }
    // gamma = int_0^1 (1/log t + 1/(1-t)) dt. Near t=1 both terms blow up
    // and cancel; with u = 1-t the integrand is 1/2 + u/12 + u^2/24 +
    // 19u^3/720 + O(u^4), used directly for small u.
    auto f = [](double t, double da, double db) -> double {
        const double u = db;
        if (u < 1e-3) return 0.5 + u / 12.0 + u * u / 24.0 + 19.0 * u * u * u / 720.0;
        const double lg = (t < 0.5) ? std::log(da) : std::log1p(-db);
        return 1.0 / lg + 1.0 / u;
    };
    QuadratureConfig qcfg;
    const EvalResult r = integrate_de(f, 0.0, 1.0, qcfg);
    return {r.value.real(), method, r.err_estimate + 1e-13, r.work};
}

double euler_gamma_cached() {
    static const double value = euler_gamma_constant(GammaConstantMethod::LimitForm).value;
    return value;
}

cplx factorielle(cplx u) {
    if (is_nonpositive_integer(1.0 + u)) return 0.0;
    return 1.0 / gamma_reference(1.0 + u);
}

EvalResult digamma_stern(cplx s, const SeriesConfig& cfg) {
    require_right_halfplane(s, "digamma_stern");
    const double tail_scale = 1.0 / (s.real() + 1.0);
    KahanC acc;
    acc.add(cplx(-euler_gamma_cached()));
    cplx binom = 1.0;  // binom(s, k), updated in place
    double prev_mag = 0.0;
    int small_streak = 0;
    int growth_streak = 0;
    const double growth_horizon = 100.0 * (1.0 + std::abs(s));
    for (long long k = 1; k <= cfg.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        binom *= (s - (kd - 1.0)) / kd;
        const cplx term = (k % 2 == 1 ? 1.0 : -1.0) * binom / kd;
        acc.add(term);
        const double mag = std::abs(term);
        const double bound = mag * std::max(1.0, kd * tail_scale);
        const double tol = cfg.abs_tol + cfg.rel_tol * std::abs(acc.sum);
        small_streak = (bound < tol) ? small_streak + 1 : 0;
        if (small_streak >= 2) return {acc.sum, bound + 1e-15, k};
        if (kd > growth_horizon) {
            growth_streak = (mag > prev_mag) ? growth_streak + 1 : 0;
            if (growth_streak >= 64)
                throw DomainError("digamma_stern: terms are growing, series diverges here");
        }
        prev_mag = mag;
    }
    const double bound = prev_mag * std::max(1.0, static_cast<double>(cfg.max_terms) * tail_scale);
    throw BudgetError("digamma_stern: max_terms exhausted before tolerance",
                      {acc.sum, bound, cfg.max_terms});
}

EvalResult loggamma_hermite(cplx s, const SeriesConfig& cfg) {
    require_right_halfplane(s, "loggamma_hermite");
    const double tail_scale = 1.0 / (s.real() + 1.0);
    HermiteCache& cache = hermite_cache();
    KahanC acc;
    cplx binom = s * (s - 1.0) / 2.0;  // binom(s, 2)
    int small_streak = 0;
    for (long long n = 2; n <= cfg.max_terms; ++n) {
        const double nd = static_cast<double>(n);
        if (n > 2) binom *= (s - (nd - 1.0)) / nd;
        const cplx term = binom * cache.get(static_cast<std::size_t>(n));
        acc.add(term);
        const double bound = std::abs(term) * std::max(1.0, nd * tail_scale);
        const double tol = cfg.abs_tol + cfg.rel_tol * std::abs(acc.sum);
        small_streak = (bound < tol && n >= 5) ? small_streak + 1 : 0;
        if (small_streak >= 2) return {acc.sum, bound + 1e-12, n};
    }
    throw BudgetError("loggamma_hermite: max_terms exhausted before tolerance",
                      {acc.sum, 1.0, cfg.max_terms});
}

EvalResult prym_P(cplx s, const SeriesConfig& cfg) {
    if (is_nonpositive_integer(s)) throw PoleError("prym_P: pole at non-positive integer");
    KahanC acc;
    cplx a = 1.0;  // (-1)^n / n!
    const double pole_region = -s.real() + 1.0;
    for (long long n = 0; n <= cfg.max_terms; ++n) {
        const double nd = static_cast<double>(n);
        if (n > 0) a /= -nd;
        acc.add(a / (s + nd));
        const double next_mag = std::abs(a) / (nd + 1.0);
        if (nd > pole_region && 2.0 * next_mag < cfg.abs_tol + cfg.rel_tol * std::abs(acc.sum))
            return {acc.sum, 2.0 * next_mag + 1e-16, n + 1};
    }
    throw BudgetError("prym_P: max_terms exhausted", {acc.sum, 1.0, cfg.max_terms});
}

EvalResult prym_P_ascending(cplx s, const SeriesConfig& cfg) {
    if (is_nonpositive_integer(s))
        throw PoleError("prym_P_ascending: pole at non-positive integer");
    KahanC acc;
    cplx r = 1.0 / s;  // 1 / (s (s+1) ... (s+n))
    const double pole_region = -s.real() + 1.0;
    for (long long n = 0; n <= cfg.max_terms; ++n) {
        acc.add(r);
        const double nd = static_cast<double>(n);
        r /= s + (nd + 1.0);
        if (nd > pole_region &&
            2.0 * std::abs(r) < kE * (cfg.abs_tol + cfg.rel_tol * std::abs(acc.sum) / kE))
            return {acc.sum / kE, 2.0 * std::abs(r) / kE + 1e-16, n + 1};
    }
    throw BudgetError("prym_P_ascending: max_terms exhausted", {acc.sum / kE, 1.0, cfg.max_terms});
}

EvalResult prym_Q(cplx s, const QuadratureConfig& cfg) {
    const cplx sm1 = s - 1.0;
    // Q(s) = int_1^inf t^{s-1} e^{-t} dt = e^{-1} int_0^inf (1+u)^{s-1} e^{-u} du.
    auto f = [sm1](double u) -> cplx { return std::exp(sm1 * std::log1p(u) - u - 1.0); };
    return integrate_halfline_c(f, cfg);
}

PrymPair prym_decomposition(cplx s, const SeriesConfig& series_cfg,
                            const QuadratureConfig& quad_cfg) {
    const EvalResult p = prym_P(s, series_cfg);
    const EvalResult q = prym_Q(s, quad_cfg);
    return {p.value, q.value, s, p.err_estimate + q.err_estimate};
}

cplx bourget_T(cplx s) {
    const EvalResult p = prym_P(s);
    return kE * p.value / gamma_reference(s);
}

EvalResult hadamard_H(cplx s) {
    const double re_round = std::round(s.real());
    const bool degenerate = std::abs(s.imag()) < 1e-9 &&
                            std::abs(s.real() - re_round) < 1e-9 && re_round >= 1.0;
    if (degenerate) {
        const double eps = 1e-6;
        const cplx base(re_round, 0.0);
        const cplx avg = 0.5 * (hadamard_direct(base - eps) + hadamard_direct(base + eps));
        return {avg, 1e-8 * (1.0 + std::abs(avg)), 2};
    }
    const cplx v = hadamard_direct(s);
    return {v, 1e-12 * (1.0 + std::abs(v)), 1};
}

double davis_pseudo_gamma(double s) {
    if (!(s > 0.0)) throw DomainError("davis_pseudo_gamma: requires s > 0");
    if (s < 1.0) return 1.0 / s;
    const long long k = static_cast<long long>(std::floor(s));
    double prod = 1.0;
    for (long long j = 1; j < k; ++j) prod *= s - static_cast<double>(j);
    return prod;
}

}  // namespace gz
