#include "gz/audits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "gz/companions.hpp"
#include "gz/contour.hpp"
#include "gz/quadrature.hpp"

namespace gz {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_near_integer(cplx s, double tol = 1e-9) {
    return std::abs(s.imag()) <= tol && std::abs(s.real() - std::round(s.real())) <= tol;
}

std::string locate(cplx s) {
    std::ostringstream os;
    os << " at s = (" << s.real() << ", " << s.imag() << ")";
    return os.str();
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

double point_to_rect_boundary(double px, double py, const Rectangle& r) {
    const double dx_out = std::max({r.re_min - px, px - r.re_max, 0.0});
    const double dy_out = std::max({r.im_min - py, py - r.im_max, 0.0});
    if (dx_out > 0.0 || dy_out > 0.0) return std::hypot(dx_out, dy_out);
    return std::min({px - r.re_min, r.re_max - px, py - r.im_min, r.im_max - py});
}

}  // namespace

const char* audit_criterion_name(AuditCriterion c) {
    return c == AuditCriterion::BohrMollerup ? "bohr-mollerup" : "wielandt";
}

const char* audit_verdict_name(AuditVerdict v) {
    switch (v) {
        case AuditVerdict::Pass: return "pass";
        case AuditVerdict::FailSideCondition: return "fail_side_condition";
        case AuditVerdict::FailFunctionalEq: return "fail_functional_eq";
        case AuditVerdict::FailNormalization: return "fail_normalization";
    }
    return "unknown";
}

double reflection_residual(const GammaConstruction& impl, cplx s) {
    if (is_near_integer(s))
        throw PoleError("reflection_residual: Gamma(s) or Gamma(1-s) is at a pole");
    const cplx lhs = extend_by_recursion(impl, s) * extend_by_recursion(impl, 1.0 - s);
    const cplx rhs = kPi / std::sin(kPi * s);
    return std::abs(lhs - rhs) / std::abs(rhs);
}

double multiplication_residual(const GammaConstruction& impl, cplx s, int n) {
    if (n < 2) throw DomainError("multiplication_residual: n must be >= 2");
    const cplx ns = static_cast<double>(n) * s;
    if (is_nonpositive_integer(ns, 1e-9))
        throw PoleError("multiplication_residual: Gamma(n s) at a pole");
    cplx lhs_log = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx sk = s + static_cast<double>(k) / n;
        if (is_nonpositive_integer(sk, 1e-9))
            throw PoleError("multiplication_residual: factor at a pole" + locate(sk));
        lhs_log += std::log(extend_by_recursion(impl, sk));
    }
    const double nd = static_cast<double>(n);
    const cplx rhs_log = 0.5 * (nd - 1.0) * std::log(kTwoPi) +
                         (0.5 - ns) * std::log(nd) +
                         std::log(extend_by_recursion(impl, ns));
    const cplx r = lhs_log - rhs_log;
    return std::abs(cplx(r.real(), std::remainder(r.imag(), kTwoPi)));
}

EvalResult malmsten_loggamma(cplx s, const QuadratureConfig& cfg) {
    if (!(s.real() > 0.0)) throw DomainError("malmsten_loggamma: requires Re s > 0");
    const cplx f12 = (s - 1.0) * (s - 2.0);
    const cplx a0 = f12 / 2.0;
    const cplx a1 = -f12 * (2.0 * s + 3.0) / 12.0;
    const cplx a2 = f12 * (s * s + s + 2.0) / 24.0;
    const cplx a3 = -f12 * (6.0 * s * s * s + 3.0 * s * s + 7.0 * s + 15.0) / 720.0;
    auto f = [=](double t) -> cplx {
        if (t < 1e-4) return a0 + t * (a1 + t * (a2 + t * a3));
        const double et = std::exp(-t);
        const cplx num = (s - 1.0) * et - (et - std::exp(-s * t)) / (-std::expm1(-t));
        return num / t;
    };
    return integrate_halfline_c(f, cfg);
}

EvalResult kummer_loggamma(double x, long long terms) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("kummer_loggamma: requires 0 < x < 1");
    if (terms < 1) throw DomainError("kummer_loggamma: need at least one term");
    double sum = 0.0, comp = 0.0;
    for (long long k = 1; k <= terms; ++k) {
        const double kd = static_cast<double>(k);
        const double term = std::log(kd) / kd * std::sin(kTwoPi * kd * x);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const double value = 0.5 * std::log(kPi / std::sin(kPi * x)) +
                         (euler_gamma_cached() + std::log(kTwoPi)) * (0.5 - x) +
                         sum / kPi;
    const double kd = static_cast<double>(terms);
    const double err = std::log(kd + 1.0) / (kd * kPi) / std::max(0.1, std::sin(kPi * x));
    return {cplx(value), err, terms};
}

EvalResult frullani_integral(const std::function<double(double)>& f, double a,
                             double b, const QuadratureConfig& cfg) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("frullani_integral: scale factors must be positive");
    if (a == b) return {0.0, 0.0, 1};
    const double f_inf = f(1e10);
    const double f_zero = f(1e-10);
    if (std::abs(f(1e8) - f_inf) > 1e-6 * (1.0 + std::abs(f_inf)))
        throw DomainError("frullani_integral: f does not settle at infinity");
    if (std::abs(f(1e-8) - f_zero) > 1e-6 * (1.0 + std::abs(f_zero)))
        throw DomainError("frullani_integral: f does not settle at 0");
    auto head = [&](double t) { return (f(a * t) - f(b * t)) / t; };
    // t -> 1/t maps the tail onto (0,1) with the same 1/t weight.
    auto tail = [&](double v) { return (f(a / v) - f(b / v)) / v; };
    const EvalResult h = integrate_adaptive(head, 0.0, 1.0, cfg);
    const EvalResult t = integrate_adaptive(tail, 0.0, 1.0, cfg);
    return {h.value + t.value, h.err_estimate + t.err_estimate, h.work + t.work + 4};
}

double frullani_rhs(const std::function<double(double)>& f, double a, double b) {
    return (f(1e-10) - f(1e10)) * std::log(b / a);
}

AuditReport bohr_mollerup_audit(const std::function<double(double)>& f,
                                const std::vector<double>& grid, double tol) {
    if (grid.size() < 3) throw DomainError("bohr_mollerup_audit: grid too small");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) throw DomainError("bohr_mollerup_audit: grid must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw DomainError("bohr_mollerup_audit: grid must be strictly increasing");
    }
    AuditReport rep;
    rep.criterion = AuditCriterion::BohrMollerup;

    const double f1 = f(1.0);
    if (!(f1 > 0.0)) throw DomainError("bohr_mollerup_audit: f(1) not positive");
    rep.normalization_residual = std::abs(f1 - 1.0);

    std::vector<double> lf(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = f(grid[i]);
        if (!(v > 0.0))
            throw DomainError("bohr_mollerup_audit: f not positive at grid point");
        lf[i] = std::log(v);
        const double g = gamma_reference(grid[i]).real();
        rep.max_deviation_from_gamma =
            std::max(rep.max_deviation_from_gamma, std::abs(v - g) / std::abs(g));
    }

    const double X = grid.back();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        if (x + 1.0 > X + 1e-12) break;
        const double fx1 = f(x + 1.0);
        if (!(fx1 > 0.0))
            throw DomainError("bohr_mollerup_audit: f not positive at shifted point");
        rep.functional_eq_max_residual = std::max(
            rep.functional_eq_max_residual, std::abs(fx1 - x * f(x)) / std::abs(fx1));
    }

    // Worst midpoint-convexity excess per midpoint, over all symmetric
    // triples the grid contains.
    std::map<std::size_t, double> excess_by_mid;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t k = i + 2; k < grid.size(); ++k) {
            const double mid = 0.5 * (grid[i] + grid[k]);
            const auto it = std::lower_bound(grid.begin(), grid.end(), mid - 1e-9);
            if (it == grid.end() || std::abs(*it - mid) > 1e-9) continue;
            const std::size_t j = static_cast<std::size_t>(it - grid.begin());
            const double excess = lf[j] - 0.5 * (lf[i] + lf[k]);
            if (excess > tol) {
                auto [pos, inserted] = excess_by_mid.try_emplace(j, excess);
                if (!inserted) pos->second = std::max(pos->second, excess);
            }
        }
    }
    for (const auto& [j, excess] : excess_by_mid)
        rep.side_condition_violations.push_back({cplx(grid[j]), excess});

    if (rep.normalization_residual > tol)
        rep.verdict = AuditVerdict::FailNormalization;
    else if (rep.functional_eq_max_residual > tol)
        rep.verdict = AuditVerdict::FailFunctionalEq;
    else if (!rep.side_condition_violations.empty())
        rep.verdict = AuditVerdict::FailSideCondition;
    else
        rep.verdict = AuditVerdict::Pass;
    return rep;
}

std::vector<cplx> wielandt_default_samples() {
    std::vector<cplx> out;
    for (double re : {1.0, 1.25, 1.5, 1.75})
        for (double im : {0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 3.0, -3.0})
            out.emplace_back(re, im);
    return out;
}

AuditReport wielandt_audit(const std::function<cplx(cplx)>& f,
                           const std::vector<cplx>& strip_samples,
                           double bound_tol, double eq_tol) {
    if (strip_samples.empty()) throw DomainError("wielandt_audit: no samples");
    AuditReport rep;
    rep.criterion = AuditCriterion::Wielandt;

    auto eval = [&](cplx s) -> cplx {
        try {
            return f(s);
        } catch (const Error& e) {
            throw Error(std::string(e.what()) + locate(s));
        }
    };

    rep.normalization_residual = std::abs(eval(cplx(1.0)) - 1.0);

    double band_max = 0.0, all_max = 0.0;
    cplx argmax = strip_samples.front();
    for (const cplx& s : strip_samples) {
        const cplx v = eval(s);
        const cplx w = eval(s + 1.0);
        rep.functional_eq_max_residual =
            std::max(rep.functional_eq_max_residual,
                     std::abs(w - s * v) / std::max(std::abs(w), 1e-300));
        const cplx g = gamma_reference(s);
        rep.max_deviation_from_gamma =
            std::max(rep.max_deviation_from_gamma, std::abs(v - g) / std::abs(g));
        const double av = std::abs(v);
        if (av > all_max) {
            all_max = av;
            argmax = s;
        }
        if (std::abs(s.imag()) <= 1.0 + 1e-12) band_max = std::max(band_max, av);
    }
    const double growth = (band_max > 0.0) ? all_max / band_max
                                           : std::numeric_limits<double>::infinity();
    if (growth > bound_tol) rep.side_condition_violations.push_back({argmax, growth});

    if (rep.normalization_residual > eq_tol)
        rep.verdict = AuditVerdict::FailNormalization;
    else if (rep.functional_eq_max_residual > eq_tol)
        rep.verdict = AuditVerdict::FailFunctionalEq;
    else if (!rep.side_condition_violations.empty())
        rep.verdict = AuditVerdict::FailSideCondition;
    else
        rep.verdict = AuditVerdict::Pass;
    return rep;
}

ZeroSurvey zero_survey(SurveyTarget which, const Rectangle& rect, int grid_density) {
    if (!rect.valid()) throw DomainError("zero_survey: invalid rectangle");
    if (grid_density < 8) throw DomainError("zero_survey: grid_density too small");

    const bool is_p = which == SurveyTarget::PrymP;
    SeriesConfig scfg;
    scfg.abs_tol = 1e-14;
    scfg.rel_tol = 1e-14;
    QuadratureConfig qcfg;
    std::function<cplx(cplx)> f;
    if (is_p)
        f = [scfg](cplx s) { return prym_P(s, scfg).value; };
    else
        f = [qcfg](cplx s) { return prym_Q(s, qcfg).value; };

    ZeroSurvey survey;
    std::vector<double> poles;
    if (is_p) {
        for (double m = 0.0; m >= rect.re_min - 1.0; m -= 1.0) {
            const double d = point_to_rect_boundary(m, 0.0, rect);
            const bool inside = m > rect.re_min && m < rect.re_max &&
                                rect.im_min < 0.0 && rect.im_max > 0.0;
            if (d < 0.1)
                throw ContourError("zero_survey: pole within 0.1 of the rectangle boundary");
            if (inside) {
                poles.push_back(m);
                ++survey.pole_count;
            }
        }
        std::sort(poles.begin(), poles.end());
    }

    const ZeroCount zc = zero_count_argument_principle(f, rect, grid_density);
    survey.zero_count = zc.count + survey.pole_count;
    survey.diagnostic = zc.diagnostic;
    survey.work = zc.work;

    if (rect.im_min < 0.0 && rect.im_max > 0.0) {
        // Scan the real axis in segments that stop 0.01 short of each pole.
        std::vector<std::pair<double, double>> segments;
        double lo = rect.re_min;
        for (double p : poles) {
            if (p - 0.01 > lo) segments.emplace_back(lo, p - 0.01);
            lo = p + 0.01;
        }
        if (rect.re_max > lo) segments.emplace_back(lo, rect.re_max);

        auto g = [&](double x) {
            ++survey.work;
            return f(cplx(x, 0.0)).real();
        };
        for (const auto& [sa, sb] : segments) {
            const int npts = std::max(
                33, static_cast<int>(std::ceil((sb - sa) * grid_density)) + 1);
            double xp = sa;
            double gp = g(xp);
            for (int i = 1; i < npts; ++i) {
                const double x = sa + (sb - sa) * i / (npts - 1);
                const double gx = g(x);
                if (sign_of(gp) != 0 && sign_of(gx) != 0 && sign_of(gp) != sign_of(gx)) {
                    survey.sign_change_candidates.push_back(0.5 * (xp + x));
                    double blo = xp, bhi = x, glo = gp;
                    while (bhi - blo > 1e-13 * std::max(1.0, std::abs(blo))) {
                        const double mid = 0.5 * (blo + bhi);
                        const double gm = g(mid);
                        if (sign_of(gm) == 0) {
                            blo = bhi = mid;
                        } else if (sign_of(gm) == sign_of(glo)) {
                            blo = mid;
                            glo = gm;
                        } else {
                            bhi = mid;
                        }
                    }
                    survey.refined_zeros.emplace_back(0.5 * (blo + bhi), 0.0);
                } else if (sign_of(gx) == 0) {
                    survey.sign_change_candidates.push_back(x);
                    survey.refined_zeros.emplace_back(x, 0.0);
                }
                xp = x;
                gp = gx;
            }
        }
    }
    return survey;
}

}  // namespace gz
