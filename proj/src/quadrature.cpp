#include "gz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace gz {
namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
// Even-indexed abscissae are the embedded Gauss points.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkResult {
    double integral;
    double err;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    if (!std::isfinite(fc)) throw DomainError("integrand returned non-finite value");

    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        if (!std::isfinite(fv1[j]) || !std::isfinite(fv2[j]))
            throw DomainError("integrand returned non-finite value");
        const double fsum = fv1[j] + fv2[j];
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double integral = resk * h;
    resabs *= std::abs(h);
    resasc *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(eps * 50.0 * resabs, err);
    return {integral, err};
}

struct Interval {
    double a, b, integral, err;
    bool operator<(const Interval& o) const { return err < o.err; }
};

// Smallest interval bisection can still resolve at this location.
bool splittable(double a, double b) {
    const double mid = 0.5 * (a + b);
    return mid > a && mid < b;
}

// ---- tanh-sinh machinery, shared by the real and complex entry points ----

template <typename T>
struct DeSums {
    T total{};
    double abs_total = 0.0;
};

// One tanh-sinh node at parameter u: abscissa distances to both endpoints
// and the weight, all safe against cancellation for large |u|.
struct DeNode {
    double t, da, db, w;
    bool usable;
};

DeNode de_node(double u, double a, double b) {
    const double r = 0.5 * (b - a);
    const double v = 1.5707963267948966 * std::sinh(u);
    const double av = std::abs(v);
    if (av > 350.0) return {0, 0, 0, 0, false};
    const double E = std::exp(-2.0 * av);     // e^{-2|v|} in (0,1]
    const double near_dist = 2.0 * r * E / (1.0 + E);
    const double far_dist = 2.0 * r / (1.0 + E);
    const double w = r * 1.5707963267948966 * std::cosh(u) * 4.0 * E / ((1.0 + E) * (1.0 + E));
    if (near_dist < 1e-300 || w < 1e-305) return {0, 0, 0, 0, false};
    double t, da, db;
    if (v >= 0.0) {
        db = near_dist;
        da = far_dist;
        t = b - db;
    } else {
        da = near_dist;
        db = far_dist;
        t = a + da;
    }
    return {t, da, db, w, true};
}

template <typename T>
EvalResult integrate_de_impl(const std::function<T(double, double, double)>& f,
                             double a, double b, const QuadratureConfig& cfg) {
    if (!(a < b)) throw DomainError("integrate_de: requires a < b");
    const double eps = std::numeric_limits<double>::epsilon();
    const long long eval_budget = std::max(4000LL, 15LL * cfg.max_subdivisions);
    long long evals = 0;

    auto eval_at = [&](double u, T& out) -> bool {
        const DeNode nd = de_node(u, a, b);
        if (!nd.usable) return false;
        const T fv = f(nd.t, nd.da, nd.db);
        ++evals;
        if (!std::isfinite(std::abs(fv))) throw DomainError("integrand returned non-finite value");
        out = fv * nd.w;
        return std::abs(out) > 0.0;
    };

    const double umax = 6.5;
    T sum{};
    // Level 0: trapezoid in u with h=1, then each level halves h adding the
    // odd multiples only. The outward sweep on every level stops after two
    // consecutive negligible contributions.
    {
        T val{};
        if (eval_at(0.0, val)) sum += val;
        for (int dir = -1; dir <= 1; dir += 2) {
            int dead = 0;
            for (int k = 1; k * 1.0 <= umax; ++k) {
                T c{};
                const bool live = eval_at(dir * k * 1.0, c);
                sum += c;
                const double mag = std::abs(c);
                if (!live || mag <= eps * (std::abs(sum) + 1e-300)) {
                    if (++dead >= 2) break;
                } else {
                    dead = 0;
                }
            }
        }
    }
    T estimate = sum;  // h = 1
    double err = std::abs(estimate);

    const int max_level = 11;
    double h = 1.0;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        T add{};
        for (int dir = -1; dir <= 1; dir += 2) {
            int dead = 0;
            for (long long k = 1; k * h <= umax; k += 2) {
                T c{};
                const bool live = eval_at(dir * k * h, c);
                add += c;
                const double mag = std::abs(c);
                if (!live || mag <= eps * (std::abs(add) + std::abs(sum) + 1e-300)) {
                    if (++dead >= 2) break;
                } else {
                    dead = 0;
                }
            }
            if (evals > eval_budget) break;
        }
        sum += add;
        const T next = sum * h;
        err = std::abs(next - estimate);
        estimate = next;
        const double goal = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(estimate));
        if (level >= 2 && err <= goal) {
            return {estimate, std::max(err, 4.0 * eps * std::abs(estimate)), std::max(evals, 1LL)};
        }
        if (level >= 3 && err <= 8.0 * eps * std::abs(estimate)) {
            return {estimate, std::max(err, 4.0 * eps * std::abs(estimate)), std::max(evals, 1LL)};
        }
        if (evals > eval_budget) break;
    }
    throw BudgetError("integrate_de: tolerance not reached within budget",
                      EvalResult{estimate, err, std::max(evals, 1LL)});
}

// Growth probe for half-line integrands: flags discernibly non-decaying |f|.
template <typename T>
void check_halfline_decay(const std::function<T(double)>& f) {
    const double t0 = std::abs(f(10.0)), t1 = std::abs(f(20.0));
    const double t2 = std::abs(f(40.0)), t3 = std::abs(f(80.0));
    if (t0 <= t1 && t1 <= t2 && t2 <= t3 && t3 > std::max(1.0, t0))
        throw DomainError("integrate_halfline: integrand does not decay");
}

template <typename T>
EvalResult integrate_halfline_impl(const std::function<T(double)>& f,
                                   const QuadratureConfig& cfg) {
    check_halfline_decay<T>(f);
    // t = -log u maps (0,inf) to (0,1); du = -e^{-t} dt gives f(t)/u.
    std::function<T(double, double, double)> g =
        [&f](double u, double da, double db) -> T {
            const double t = (u < 0.5) ? -std::log(da) : -std::log1p(-db);
            return f(t) * (1.0 / u);
        };
    EvalResult r = integrate_de_impl<T>(g, 0.0, 1.0, cfg);
    r.work += 4;  // decay probes
    return r;
}

}  // namespace

EvalResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, const QuadratureConfig& cfg) {
    if (!(a < b)) throw DomainError("integrate_adaptive: requires a < b");
    std::priority_queue<Interval> q;
    GkResult first = gk15(f, a, b);
    q.push({a, b, first.integral, first.err});
    double total = first.integral;
    double total_err = first.err;
    long long evals = 15;
    int splits = 0;

    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (splits >= cfg.max_subdivisions)
            throw BudgetError("integrate_adaptive: subdivision budget exhausted",
                              EvalResult{total, total_err, evals});
        Interval worst = q.top();
        if (!splittable(worst.a, worst.b))
            throw BudgetError("integrate_adaptive: interval below representable width",
                              EvalResult{total, total_err, evals});
        q.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        GkResult left = gk15(f, worst.a, mid);
        GkResult right = gk15(f, mid, worst.b);
        evals += 30;
        ++splits;
        total += left.integral + right.integral - worst.integral;
        total_err += left.err + right.err - worst.err;
        q.push({worst.a, mid, left.integral, left.err});
        q.push({mid, worst.b, right.integral, right.err});
    }
    return {total, total_err, evals};
}

EvalResult integrate_de(const std::function<double(double, double, double)>& f,
                        double a, double b, const QuadratureConfig& cfg) {
    return integrate_de_impl<double>(f, a, b, cfg);
}

EvalResult integrate_de_c(const std::function<cplx(double, double, double)>& f,
                          double a, double b, const QuadratureConfig& cfg) {
    return integrate_de_impl<cplx>(f, a, b, cfg);
}

EvalResult integrate_halfline(const std::function<double(double)>& f,
                              const QuadratureConfig& cfg) {
    return integrate_halfline_impl<double>(f, cfg);
}

EvalResult integrate_halfline_c(const std::function<cplx(double)>& f,
                                const QuadratureConfig& cfg) {
    return integrate_halfline_impl<cplx>(f, cfg);
}

}  // namespace gz
