#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gz/gamma.hpp"
#include "gz/types.hpp"

namespace gz {

enum class AuditCriterion { BohrMollerup, Wielandt };
enum class AuditVerdict { Pass, FailSideCondition, FailFunctionalEq, FailNormalization };

const char* audit_criterion_name(AuditCriterion c);
const char* audit_verdict_name(AuditVerdict v);

// One side-condition breach: where, and by how much.
struct Violation {
    cplx location;
    double magnitude = 0.0;
};

struct AuditReport {
    AuditCriterion criterion = AuditCriterion::BohrMollerup;
    double functional_eq_max_residual = 0.0;
    double normalization_residual = 0.0;
    std::vector<Violation> side_condition_violations;
    double max_deviation_from_gamma = 0.0;
    AuditVerdict verdict = AuditVerdict::Pass;
};

// Residuals of one identity over a sweep of arguments.
struct ResidualGrid {
    std::vector<cplx> points;
    std::vector<double> residuals;
    std::string identity;
};

// |Gamma(s) Gamma(1-s) - pi/sin(pi s)| / |pi/sin(pi s)|, both Gamma values
// through the given construction. Throws PoleError at integer s.
double reflection_residual(const GammaConstruction& impl, cplx s);

// Relative residual, in log space, of
//   prod_{k=0}^{n-1} Gamma(s + k/n) = (2 pi)^{(n-1)/2} n^{1/2 - n s} Gamma(n s),
// with the imaginary part of the log residual reduced mod 2 pi (the factor
// logs are principal branches and may differ from the product's log by full
// turns).
double multiplication_residual(const GammaConstruction& impl, cplx s, int n);

// log Gamma(s) = int_0^inf [(s-1)e^{-t} - (e^{-t} - e^{-st})/(1 - e^{-t})] dt/t
// for Re s > 0. Below t = 1e-4 the bracket is a 0/0 cancellation and is
// replaced by its Taylor expansion in t.
EvalResult malmsten_loggamma(cplx s, const QuadratureConfig& cfg = QuadratureConfig{});

// Fourier expansion on 0 < x < 1, truncated at K terms:
// log Gamma(x) = log(pi/sin(pi x))/2 + (gamma + log 2 pi)(1/2 - x)
//              + (1/pi) sum_{k=1}^{K} (log k / k) sin(2 pi k x).
EvalResult kummer_loggamma(double x, long long terms);

// Left side of int_0^inf (f(at) - f(bt))/t dt = (f(0) - f(inf)) log(b/a).
// The tail is folded back onto (0,1) by t -> 1/t. Throws DomainError when
// sampling suggests f has no limit at 0 or infinity.
EvalResult frullani_integral(const std::function<double(double)>& f, double a,
                             double b, const QuadratureConfig& cfg = QuadratureConfig{});

// Right side of the same identity, with the limits read off at t = 1e-10
// and t = 1e10.
double frullani_rhs(const std::function<double(double)>& f, double a, double b);

// Checks f(1) = 1, f(x+1) = x f(x) on the grid, and midpoint log-convexity
// on every grid triple x_i < x_j < x_k with x_j the midpoint (not only
// consecutive points: wide triples catch violations that narrow ones
// average away). Reports the worst excess per midpoint as a violation.
AuditReport bohr_mollerup_audit(const std::function<double(double)>& f,
                                const std::vector<double>& grid, double tol = 1e-9);

// Default sample cloud for wielandt_audit: Re in {1, 1.25, 1.5, 1.75},
// Im in {0, +-0.25, +-0.5, +-1, +-2, +-3}.
std::vector<cplx> wielandt_default_samples();

// Checks f(1) = 1 and f(s+1) = s f(s) on the samples, then a finite
// boundedness proxy: max |f| over all samples must not exceed bound_tol
// times max |f| over samples with |Im s| <= 1. A growth detection is
// heuristic evidence against strip-boundedness, not a proof.
AuditReport wielandt_audit(const std::function<cplx(cplx)>& f,
                           const std::vector<cplx>& strip_samples,
                           double bound_tol = 100.0, double eq_tol = 1e-10);

enum class SurveyTarget { PrymP, PrymQ };

struct ZeroSurvey {
    long long zero_count = 0;   // argument-principle winding plus enclosed pole count
    long long pole_count = 0;   // poles of the target inside the rectangle
    double diagnostic = 0.0;    // distance of the raw winding integral from an integer
    std::vector<double> sign_change_candidates;  // bracket midpoints on the real axis
    std::vector<cplx> refined_zeros;             // bisected real-axis zeros
    long long work = 0;
};

// Zero count inside rect by the argument principle (poles of P added back),
// cross-checked by a real-axis sign scan with bisection refinement. The
// scan skips 0.01-neighborhoods of the poles, where the sign flip belongs
// to the pole, not a zero. Requires every pole to clear the boundary by
// 0.1; grid_density sets both contour nodes per edge and scan samples per
// unit length.
ZeroSurvey zero_survey(SurveyTarget which, const Rectangle& rect, int grid_density = 128);

}  // namespace gz
