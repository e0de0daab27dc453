// Acceptance gate: ten criteria, one PASS/FAIL line each, exit code equal
// to the number of failures. Tolerances are fixed here and not adapted to
// measurements; a red line means the requirement is not met as stated.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gz/audits.hpp"
#include "gz/companions.hpp"
#include "gz/gamma.hpp"
#include "gz/higher.hpp"
#include "gz/hurwitz.hpp"
#include "gz/rng.hpp"
#include "oracles.hpp"

using gz::cplx;

namespace {

int g_failures = 0;

void report(int idx, const char* title, bool ok, const std::string& detail) {
    std::printf("CRITERION %2d  %-44s %s\n", idx, title, ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::printf("              %s\n", detail.c_str());
    if (!ok) ++g_failures;
}

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

std::vector<cplx> agreement_grid() {
    std::vector<cplx> pts;
    for (int i = 1; i <= 40; ++i) pts.emplace_back(0.1 * i, 0.0);
    gz::SplitMix64 rng(0x5eed0001ULL);
    for (int i = 0; i < 20; ++i)
        pts.emplace_back(rng.uniform(0.25, 4.0), rng.uniform(-2.5, 2.5));
    return pts;
}

const gz::GammaKind kConstructions[4] = {
    gz::GammaKind::EulerLogIntegral, gz::GammaKind::EulerIntegral,
    gz::GammaKind::GaussProduct, gz::GammaKind::WeierstrassProduct};

// --- criterion 1 -----------------------------------------------------------

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto pts = agreement_grid();

    double worst = 0.0;
    cplx worst_at;
    for (const cplx s : pts) {
        const cplx ref = gz::gamma_reference(s);
        for (const auto kind : kConstructions) {
            const auto con = gz::make_construction(kind);
            const double d = rel(gz::evaluate_gamma(con, s).result.value, ref);
            if (d > worst) {
                worst = d;
                worst_at = s;
            }
        }
    }
    const bool constructions_ok = worst <= 1e-7;

    double raw_max = 0.0, raw_min = 1e300;
    for (const cplx s : pts) {
        const double d = rel(gz::gamma_gauss_product(s, 4096), gz::gamma_reference(s));
        raw_max = std::max(raw_max, d);
        raw_min = std::min(raw_min, d);
    }
    const bool raw_ok = raw_max <= 1e-5;

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool time_ok = secs < 10.0;

    std::string detail = fmt(
        "constructions max rel %.2e at s=(%.2f,%.2f) (<=1e-7: %s); "
        "raw n=4096 rel in [%.2e, %.2e] (<=1e-5: %s); %.1fs",
        worst, worst_at.real(), worst_at.imag(), constructions_ok ? "yes" : "NO", raw_min,
        raw_max, raw_ok ? "yes" : "NO", secs);
    if (!raw_ok)
        detail +=
            "\n              note: the n-term partial product carries a relative defect "
            "of about s(s+1)/(2n); at n=4096 that is already 1.3e-5 at the most "
            "favorable grid point s=0.1, so no point on this grid can meet 1e-5.";
    report(1, "cross-construction agreement", constructions_ok && raw_ok && time_ok,
           detail);
}

// --- criterion 2 -----------------------------------------------------------

void criterion_2() {
    const auto pts = agreement_grid();
    double worst = 0.0;
    for (const cplx s : pts) {
        for (const auto kind : kConstructions) {
            const auto con = gz::make_construction(kind);
            const cplx up = gz::evaluate_gamma(con, s + 1.0).result.value;
            const cplx lo = gz::evaluate_gamma(con, s).result.value;
            worst = std::max(worst, std::abs(up - s * lo) / std::abs(up));
        }
    }
    const bool constructions_ok = worst <= 1e-9;

    gz::SplitMix64 rng(0x5eed0002ULL);
    double worst_davis = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double s = rng.uniform(0.05, 7.0);
        const double up = gz::davis_pseudo_gamma(s + 1.0);
        worst_davis = std::max(worst_davis,
                               std::abs(up - s * gz::davis_pseudo_gamma(s)) / std::abs(up));
    }
    const bool davis_ok = worst_davis <= 1e-14;

    report(2, "functional equation suite", constructions_ok && davis_ok,
           fmt("constructions max rel residual %.2e (<=1e-9); interpolant max %.2e "
               "(<=1e-14)",
               worst, worst_davis));
}

// --- criterion 3 -----------------------------------------------------------

std::vector<double> default_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 59; ++i) g.push_back(0.1 * i);
    return g;
}

void criterion_3() {
    const auto grid = default_grid();
    const auto ref_rep = gz::bohr_mollerup_audit(
        [](double x) { return gz::gamma_reference(x).real(); }, grid);
    const bool ref_bm_ok = ref_rep.verdict == gz::AuditVerdict::Pass;

    const auto davis_rep = gz::bohr_mollerup_audit(
        [](double x) { return gz::davis_pseudo_gamma(x); }, grid);
    double excess_at_2p5 = 0.0;
    for (const auto& v : davis_rep.side_condition_violations)
        if (std::abs(v.location.real() - 2.5) < 1e-9) excess_at_2p5 = v.magnitude;
    const double hand = std::log(gz::davis_pseudo_gamma(2.5)) -
                        0.5 * (std::log(gz::davis_pseudo_gamma(2.2)) +
                               std::log(gz::davis_pseudo_gamma(2.8)));
    const bool davis_bm_ok = davis_rep.verdict == gz::AuditVerdict::FailSideCondition &&
                             excess_at_2p5 >= 0.015 &&
                             std::abs(hand - 0.02041099726) < 1e-9;

    const auto samples = gz::wielandt_default_samples();
    const auto ref_w =
        gz::wielandt_audit([](cplx s) { return gz::gamma_reference(s); }, samples);
    const bool ref_w_ok = ref_w.verdict == gz::AuditVerdict::Pass;

    const double kPi = 3.14159265358979323846;
    const auto pert_w = gz::wielandt_audit(
        [&](cplx s) { return gz::gamma_reference(s) * (1.0 + std::sin(2.0 * kPi * s)); },
        samples);
    double growth = 0.0, at_im = 0.0;
    if (!pert_w.side_condition_violations.empty()) {
        growth = pert_w.side_condition_violations[0].magnitude;
        at_im = std::abs(pert_w.side_condition_violations[0].location.imag());
    }
    const bool pert_ok = pert_w.verdict == gz::AuditVerdict::FailSideCondition &&
                         pert_w.functional_eq_max_residual < 1e-10 && growth > 1e3 &&
                         at_im == 3.0;

    report(3, "characterization audits", ref_bm_ok && davis_bm_ok && ref_w_ok && pert_ok,
           fmt("log-convexity excess at 2.5: %.4f (hand value %.11f); perturbed growth "
               "ratio %.2e at |Im|=%.0f, recurrence residual %.1e",
               excess_at_2p5, hand, growth, at_im, pert_w.functional_eq_max_residual));
}

// --- criterion 4 -----------------------------------------------------------

void criterion_4() {
    double worst_split = 0.0;
    for (double x = 0.1; x <= 4.91; x += 0.2) {
        const auto pair = gz::prym_decomposition(x);
        worst_split = std::max(worst_split, rel(pair.P + pair.Q, gz::gamma_reference(x)));
    }
    const bool split_ok = worst_split <= 1e-9;

    double worst_series = 0.0;
    gz::SeriesConfig scfg;
    for (cplx s : {cplx(0.5), cplx(1.5), cplx(2.5), cplx(3.5), cplx(4.5), cplx(-0.5),
                   cplx(-2.5), cplx(1.0, 1.0)})
        worst_series = std::max(worst_series,
                                std::abs(gz::prym_P(s, scfg).value -
                                         gz::prym_P_ascending(s, scfg).value));
    const bool series_ok = worst_series <= 1e-10;

    double worst_bourget = 0.0;
    for (double s = 0.5; s <= 3.51; s += 0.5)
        worst_bourget = std::max(
            worst_bourget, std::abs(gz::bourget_T(s + 1.0) - gz::bourget_T(s) +
                                    1.0 / gz::gamma_reference(s + 1.0)));
    const bool bourget_ok = worst_bourget <= 1e-9;

    double worst_fact = 0.0;
    double factorial = 1.0;
    for (int n = 1; n <= 8; ++n) {
        factorial *= n;
        worst_fact = std::max(
            worst_fact,
            std::abs(gz::hadamard_H(cplx(n + 1.0)).value.real() - factorial) / factorial);
    }
    double worst_feq = 0.0;
    for (cplx s : {cplx(0.3), cplx(0.7), cplx(1.4), cplx(2.6), cplx(3.8), cplx(-0.7),
                   cplx(0.5, 0.5)})
        worst_feq = std::max(worst_feq,
                             std::abs(gz::hadamard_H(s + 1.0).value -
                                      (s * gz::hadamard_H(s).value + gz::factorielle(-s))));
    const bool hadamard_ok = worst_fact <= 1e-8 && worst_feq <= 1e-8;

    report(4, "companion identities", split_ok && series_ok && bourget_ok && hadamard_ok,
           fmt("P+Q rel %.1e; series gap %.1e; index law %.1e; factorial rel %.1e, "
               "recurrence %.1e",
               worst_split, worst_series, worst_bourget, worst_fact, worst_feq));
}

// --- criterion 5 -----------------------------------------------------------

void criterion_5() {
    gz::SeriesConfig stern_cfg;
    stern_cfg.abs_tol = 2e-8;
    stern_cfg.rel_tol = 0.0;
    double worst_stern = 0.0;
    for (int i = 1; i <= 30; ++i) {
        const double s = 0.1 * i;
        const double got = gz::digamma_stern(s, stern_cfg).value.real();
        worst_stern = std::max(
            worst_stern, std::abs(got - gz::digamma_reference(1.0 + s).real()));
    }
    const bool stern_ok = worst_stern <= 1e-7;

    gz::SeriesConfig herm_cfg;
    herm_cfg.abs_tol = 2e-7;
    herm_cfg.rel_tol = 0.0;
    double worst_herm = 0.0;
    for (int i = 1; i <= 12; ++i) {
        const double s = 0.25 * i;
        const double got = gz::loggamma_hermite(s, herm_cfg).value.real();
        worst_herm = std::max(
            worst_herm, std::abs(got - gz::loggamma_reference(1.0 + s).real()));
    }
    const double c2 = gz::loggamma_hermite(2.0, herm_cfg).value.real();
    const double c3 = gz::loggamma_hermite(3.0, herm_cfg).value.real() - 3.0 * c2;
    const bool herm_ok = worst_herm <= 1e-6 &&
                         std::abs(c2 - std::log(2.0)) < 1e-10 &&
                         std::abs(c3 - (std::log(3.0) - 2.0 * std::log(2.0))) < 1e-10;

    report(5, "series suites", stern_ok && herm_ok,
           fmt("psi series max abs %.1e (<=1e-7); log-factorial series max abs %.1e "
               "(<=1e-6); c2-log2 %.1e, c3-(log3-2log2) %.1e",
               worst_stern, worst_herm, std::abs(c2 - std::log(2.0)),
               std::abs(c3 - std::log(3.0) + 2.0 * std::log(2.0))));
}

// --- criterion 6 -----------------------------------------------------------

void criterion_6() {
    const auto ref = gz::make_construction(gz::GammaKind::ReferenceOracle);

    gz::SplitMix64 rng(0x5eed0006ULL);
    double worst_refl = 0.0;
    for (int i = 0; i < 50; ++i) {
        const cplx s(rng.uniform(-3.0, 4.0), rng.uniform(0.1, 2.0));
        worst_refl = std::max(worst_refl, gz::reflection_residual(ref, s));
    }
    const bool refl_ok = worst_refl <= 1e-9;

    double worst_mult = 0.0;
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i < 10; ++i) {
            const cplx s(rng.uniform(0.3, 2.5), rng.uniform(-1.0, 1.0));
            worst_mult = std::max(worst_mult, gz::multiplication_residual(ref, s, n));
        }
    const bool mult_ok = worst_mult <= 1e-9;

    double worst_malm = 0.0;
    for (double x = 0.5; x <= 4.51; x += 1.0)
        worst_malm = std::max(worst_malm,
                              std::abs(gz::malmsten_loggamma(x).value -
                                       gz::loggamma_reference(x)));
    worst_malm = std::max(worst_malm, std::abs(gz::malmsten_loggamma(cplx(2.5, 1.5)).value -
                                               gz::loggamma_reference(cplx(2.5, 1.5))));
    const bool malm_ok = worst_malm <= 1e-7;

    double worst_kum = 0.0;
    for (int i = 1; i <= 19; ++i) {
        const double x = 0.05 * i;
        worst_kum = std::max(worst_kum, std::abs(gz::kummer_loggamma(x, 10000).value.real() -
                                                 gz::loggamma_reference(x).real()));
    }
    const bool kum_ok = worst_kum <= 1e-3;

    const std::function<double(double)> fns[3] = {
        [](double t) { return std::exp(-t); },
        [](double t) { return 1.0 / (1.0 + t); },
        [](double t) { return 1.0 / (1.0 + t * t); }};
    double worst_fru = 0.0;
    for (const auto& f : fns)
        for (int i = 0; i < 10; ++i) {
            const double a = rng.uniform(0.3, 4.0);
            const double b = rng.uniform(0.3, 4.0);
            worst_fru = std::max(worst_fru, std::abs(gz::frullani_integral(f, a, b).value.real() -
                                                     gz::frullani_rhs(f, a, b)));
        }
    const bool fru_ok = worst_fru <= 1e-7;

    report(6, "classical identity suites", refl_ok && mult_ok && malm_ok && kum_ok && fru_ok,
           fmt("reflection %.1e; multiplication %.1e; integral form %.1e; fourier K=1e4 "
               "%.1e; frullani %.1e",
               worst_refl, worst_mult, worst_malm, worst_kum, worst_fru));
}

// --- criterion 7 -----------------------------------------------------------

void criterion_7() {
    gz::SplitMix64 rng(0x5eed0007ULL);
    double worst_mellin = 0.0;
    for (int k = 0; k < 5; ++k) {
        gz::RationalFunctionSpec spec;
        spec.leading = rng.uniform(0.5, 2.0);
        for (int j = 0; j < 2; ++j)
            spec.zeros.emplace_back(rng.uniform(-1.5, 1.5), rng.uniform(-1.0, 1.0));
        for (int j = 0; j < 2; ++j)
            spec.poles.emplace_back(rng.uniform(-1.5, 1.5), rng.uniform(-1.0, 1.0));
        const auto F = gz::mellin_gamma_from_rational(spec);
        for (int j = 0; j < 3; ++j) {
            const cplx s(rng.uniform(2.6, 3.9), rng.uniform(-1.0, 1.0));
            const cplx up = F.evaluate(s + 1.0);
            worst_mellin = std::max(
                worst_mellin,
                std::abs(up - gz::rational_value(spec, s) * F.evaluate(s)) / std::abs(up));
        }
    }
    const bool mellin_ok = worst_mellin <= 1e-10;

    double worst_law = 0.0;
    for (int k = 0; k <= 3; ++k)
        for (double x : {0.5, 1.0, 2.0, 3.5}) {
            const double lhs = gz::bendersky_log_gamma({k}, x + 1.0).value.real() -
                               gz::bendersky_log_gamma({k}, x).value.real();
            worst_law = std::max(worst_law, std::abs(lhs - std::pow(x, k) * std::log(x)));
        }
    const bool law_ok = worst_law <= 1e-8;

    double worst_lerch = 0.0;
    for (double x = 0.25; x <= 5.01; x += 0.25)
        worst_lerch = std::max(worst_lerch, gz::lerch_consistency(x));
    const bool lerch_ok = worst_lerch <= 1e-8;

    report(7, "higher gamma suite", mellin_ok && law_ok && lerch_ok,
           fmt("recurrence rel %.1e (<=1e-10); difference law %.1e (<=1e-8); anchor %.1e "
               "(<=1e-8)",
               worst_mellin, worst_law, worst_lerch));
}

// --- criterion 8 -----------------------------------------------------------

void criterion_8() {
    const auto lim = gz::euler_gamma_constant(gz::GammaConstantMethod::LimitForm);
    const auto intg = gz::euler_gamma_constant(gz::GammaConstantMethod::IntegralForm);
    const double dl = std::abs(lim.value - oracle::kEulerGamma);
    const double di = std::abs(intg.value - oracle::kEulerGamma);
    const double dm = std::abs(lim.value - intg.value);
    report(8, "gamma constant agreement", dl <= 1e-8 && di <= 1e-8 && dm <= 1e-8,
           fmt("limit-form off by %.1e, integral-form by %.1e, mutual %.1e (<=1e-8)", dl,
               di, dm));
}

// --- criterion 9 -----------------------------------------------------------

void criterion_9() {
    gz::SplitMix64 rng(0x5eed0009ULL);
    const gz::SeriesConfig cfg;
    double worst_fd = 0.0;
    const double h = 1e-3;
    for (int i = 0; i < 50; ++i) {
        cplx s;
        do {
            s = cplx(rng.uniform(-5.0, 4.0), rng.uniform(-3.0, 3.0));
        } while (std::abs(s - cplx(1.0)) < 0.21);
        const double x = rng.uniform(0.1, 5.0);
        auto zeta_at = [&](cplx ss) {
            return gz::hurwitz_zeta_with_derivative(ss, x, cfg).zeta.value;
        };
        const cplx stencil = (-zeta_at(s + 2.0 * h) + 8.0 * zeta_at(s + h) -
                              8.0 * zeta_at(s - h) + zeta_at(s - 2.0 * h)) /
                             (12.0 * h);
        const cplx analytic = gz::hurwitz_zeta_with_derivative(s, x, cfg).dzeta_ds.value;
        worst_fd = std::max(worst_fd, std::abs(analytic - stencil));
    }
    const bool fd_ok = worst_fd <= 1e-6;

    bool surveys_ok = true;
    double worst_diag = 0.0;
    std::string survey_note;
    try {
        const auto right = gz::zero_survey(gz::SurveyTarget::PrymP, {0.5, 4.5, -1.0, 1.0});
        const auto q = gz::zero_survey(gz::SurveyTarget::PrymQ, {0.5, 4.5, -1.0, 1.0});
        const auto poles4 =
            gz::zero_survey(gz::SurveyTarget::PrymP, {-4.6, -0.4, -0.4, 0.4});
        const auto left = gz::zero_survey(gz::SurveyTarget::PrymP, {-4.6, -2.5, -0.4, 0.4});
        const auto rightHalf =
            gz::zero_survey(gz::SurveyTarget::PrymP, {-2.5, -0.4, -0.4, 0.4});
        const auto nearPole =
            gz::zero_survey(gz::SurveyTarget::PrymP, {-6.6, -5.2, -0.3, 0.3});

        for (const auto* s : {&right, &q, &poles4, &left, &rightHalf, &nearPole})
            worst_diag = std::max(worst_diag, s->diagnostic);

        // Argument-principle counts must equal what the real-axis scan found.
        surveys_ok =
            right.zero_count == 0 &&
            static_cast<long long>(right.refined_zeros.size()) == right.zero_count &&
            q.zero_count == 0 && poles4.zero_count == 0 && poles4.pole_count == 4 &&
            poles4.refined_zeros.empty() &&
            left.zero_count + rightHalf.zero_count == poles4.zero_count &&
            left.pole_count + rightHalf.pole_count == poles4.pole_count &&
            nearPole.zero_count == 1 && nearPole.refined_zeros.size() == 1 &&
            std::abs(nearPole.refined_zeros[0].real() - oracle::kPrymRealZeros[1]) < 1e-8 &&
            worst_diag < 0.25;
    } catch (const gz::Error& e) {
        surveys_ok = false;
        survey_note = std::string("; survey raised: ") + e.what();
    }

    report(9, "numerical analysis hygiene", fd_ok && surveys_ok,
           fmt("derivative vs stencil max abs %.1e (<=1e-6); survey counts consistent: "
               "%s, worst diagnostic %.2e%s",
               worst_fd, surveys_ok ? "yes" : "NO", worst_diag, survey_note.c_str()));
}

// --- criterion 10 ----------------------------------------------------------

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GZ_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

void criterion_10() {
    const int e0 = run_cli("eval gamma.reference --s 2.5 --no-timestamp").exit_code;
    const int e1 =
        run_cli("compare --re 0.5:1.5:0.5 --im 0 --tol 1e-15 --no-timestamp").exit_code;
    const int e2 = run_cli("eval no.such.function").exit_code;
    const int e3 = run_cli("eval gamma.reference --s -2 --no-timestamp").exit_code;
    const int e4 = run_cli("audit bohr-mollerup davis.GS --no-timestamp").exit_code;
    const bool codes_ok = e0 == 0 && e1 == 1 && e2 == 2 && e3 == 3 && e4 == 4;

    const std::string args =
        "compare --re 0.5:2.5:0.5 --im 0:1:0.5 --seed 42 --no-timestamp";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    const bool deterministic = a.exit_code == 0 && !a.out.empty() && a.out == b.out;

    report(10, "cli contract", codes_ok && deterministic,
           fmt("exit codes observed 0/1/2/3/4 = %d/%d/%d/%d/%d; repeated run identical: "
               "%s",
               e0, e1, e2, e3, e4, deterministic ? "yes" : "NO"));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d of 10 criteria failing\n", g_failures);
    return g_failures;
}
