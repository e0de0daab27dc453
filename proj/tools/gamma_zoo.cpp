#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "gz/audits.hpp"
#include "gz/companions.hpp"
#include "gz/gamma.hpp"
#include "gz/higher.hpp"
#include "gz/registry.hpp"
#include "gz/report.hpp"
#include "gz/types.hpp"
#include "gz/version.hpp"

namespace {

using gz::cplx;
using gz::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;
constexpr int kExitAuditFail = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    bool csv = false;
    bool no_timestamp = false;
    std::uint64_t seed = 1;
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    long long max_terms = 2'000'000;
    int max_subdivisions = 2000;
};

double to_double(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw UsageError("not a number: '" + text + "'");
    return v;
}

// Accepts "1.5", "1.5,2", "(1.5,2)", "1.5+2i", "1.5-2i", "2i".
cplx parse_complex(std::string text) {
    std::erase(text, ' ');
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    if (text.empty()) throw UsageError("empty complex literal");
    if (const auto comma = text.find(','); comma != std::string::npos)
        return {to_double(text.substr(0, comma)), to_double(text.substr(comma + 1))};
    if (text.back() == 'i' || text.back() == 'I' || text.back() == 'j') {
        const std::string body = text.substr(0, text.size() - 1);
        for (std::size_t i = body.size(); i-- > 1;) {
            const char c = body[i];
            if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                const std::string imtext = body.substr(i);
                const double im = (imtext == "+") ? 1.0
                                : (imtext == "-") ? -1.0
                                                  : to_double(imtext);
                return {to_double(body.substr(0, i)), im};
            }
        }
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, to_double(body)};
    }
    return {to_double(text), 0.0};
}

// "a" -> {a}; "a:b:step" -> a, a+step, ..., up to b inclusive.
std::vector<double> parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const auto colon = text.find(':', pos);
        parts.push_back(text.substr(pos, colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.size() == 1) return {to_double(parts[0])};
    if (parts.size() != 3) throw UsageError("grid must be 'value' or 'start:stop:step'");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0.0) || stop < start) throw UsageError("grid needs stop >= start, step > 0");
    std::vector<double> out;
    for (double x = start; x <= stop + step * 0.5; x += step) out.push_back(x);
    return out;
}

std::pair<double, double> parse_interval(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("interval must be 'lo:hi'");
    const double lo = to_double(text.substr(0, colon));
    const double hi = to_double(text.substr(colon + 1));
    if (!(lo < hi)) throw UsageError("interval needs lo < hi");
    return {lo, hi};
}

std::vector<long long> parse_ladder(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string cell = text.substr(pos, comma - pos);
        const double v = to_double(cell);
        if (v < 1 || v != std::floor(v)) throw UsageError("work levels must be positive integers");
        out.push_back(static_cast<long long>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1]) throw UsageError("work levels must be strictly increasing");
    if (out.empty()) throw UsageError("empty work ladder");
    return out;
}

cplx json_to_cplx(const ordered_json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw UsageError("complex values in --spec must be numbers or [re, im] pairs");
}

gz::RationalFunctionSpec parse_spec(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("--spec must be a JSON object");
    gz::RationalFunctionSpec spec;
    if (j.contains("leading")) spec.leading = json_to_cplx(j["leading"]);
    for (const char* key : {"zeros", "poles"}) {
        if (!j.contains(key)) continue;
        if (!j[key].is_array()) throw UsageError(std::string("--spec ") + key + " must be an array");
        for (const auto& v : j[key]) {
            if (std::string(key) == "zeros")
                spec.zeros.push_back(json_to_cplx(v));
            else
                spec.poles.push_back(json_to_cplx(v));
        }
    }
    return spec;
}

ordered_json base_config(const CommonOpts& c) {
    ordered_json cfg;
    cfg["abs_tol"] = c.abs_tol;
    cfg["rel_tol"] = c.rel_tol;
    cfg["max_terms"] = c.max_terms;
    cfg["max_subdivisions"] = c.max_subdivisions;
    cfg["seed"] = c.seed;
    cfg["output"] = c.csv ? "csv" : "json";
    return cfg;
}

gz::EvalOptions make_eval_options(const CommonOpts& c) {
    gz::EvalOptions opt;
    opt.series.max_terms = c.max_terms;
    opt.series.abs_tol = c.abs_tol;
    opt.series.rel_tol = c.rel_tol;
    opt.quad.max_subdivisions = c.max_subdivisions;
    opt.quad.abs_tol = c.abs_tol;
    opt.quad.rel_tol = c.rel_tol;
    return opt;
}

void emit_json(const ordered_json& env) { std::cout << env.dump(2) << "\n"; }

void emit_csv(const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) std::cout << gz::csv_row(row) << "\n";
}

int emit_math_error(const std::string& command, const CommonOpts& c, ordered_json config,
                    const std::string& type, const std::string& message,
                    ordered_json details = ordered_json()) {
    ordered_json err;
    err["type"] = type;
    err["message"] = message;
    if (!details.is_null()) err["details"] = std::move(details);
    ordered_json payload;
    payload["error"] = std::move(err);
    emit_json(gz::make_envelope(command, std::move(config), std::move(payload),
                                !c.no_timestamp));
    return kExitMath;
}

// Evaluates a construction on either half plane.
cplx construction_value(const gz::GammaConstruction& con, cplx s) {
    if (s.real() > 0.0) return gz::evaluate_gamma(con, s).result.value;
    return gz::extend_by_recursion(con, s);
}

int cmd_eval(const CommonOpts& c, const std::string& fname, const std::string& s_text,
             int level, const std::string& method, const std::string& spec_text) {
    const gz::RegistryEntry* entry = gz::find_registry(fname);
    if (!entry) {
        std::cerr << "gamma-zoo: unknown function '" << fname << "' (try --list)\n";
        return kExitUsage;
    }
    if (fname == "mellin" && spec_text.empty()) {
        std::cerr << "gamma-zoo: mellin requires --spec\n";
        return kExitUsage;
    }
    gz::EvalOptions opt = make_eval_options(c);
    opt.level = level;
    opt.method = method;
    if (!spec_text.empty()) {
        opt.spec = parse_spec(spec_text);
        opt.has_spec = true;
    }
    const cplx s = parse_complex(s_text);

    ordered_json config = base_config(c);
    config["function"] = fname;
    config["s"] = gz::json_complex(s);
    if (fname == "bendersky") config["level"] = level;
    if (fname == "constants.gamma") config["method"] = method;
    if (opt.has_spec) config["spec"] = spec_text;

    try {
        const gz::EvalResult r = entry->eval(s, opt);
        if (c.csv) {
            emit_csv({{"function", "s_re", "s_im", "value_re", "value_im",
                       "err_estimate", "work"},
                      {fname, gz::csv_number(s.real()), gz::csv_number(s.imag()),
                       gz::csv_number(r.value.real()), gz::csv_number(r.value.imag()),
                       gz::csv_number(r.err_estimate), std::to_string(r.work)}});
        } else {
            ordered_json payload;
            payload["function"] = fname;
            payload["s"] = gz::json_complex(s);
            payload["value"] = gz::json_complex(r.value);
            payload["err_estimate"] = r.err_estimate;
            payload["work"] = r.work;
            emit_json(gz::make_envelope("eval", config, payload, !c.no_timestamp));
        }
        return kExitPass;
    } catch (const gz::PoleError& e) {
        return emit_math_error("eval", c, config, "pole", e.what());
    } catch (const gz::BudgetError& e) {
        ordered_json details;
        details["best_value"] = gz::json_complex(e.best.value);
        details["best_err_estimate"] = e.best.err_estimate;
        details["work"] = e.best.work;
        return emit_math_error("eval", c, config, "budget", e.what(), details);
    } catch (const gz::DomainError& e) {
        return emit_math_error("eval", c, config, "domain", e.what());
    }
}

int cmd_compare(const CommonOpts& c, const std::string& re_text, const std::string& im_text,
                double tol) {
    const std::vector<double> res = parse_grid(re_text);
    const std::vector<double> ims = parse_grid(im_text);
    const gz::GammaKind kinds[] = {
        gz::GammaKind::EulerLogIntegral, gz::GammaKind::EulerIntegral,
        gz::GammaKind::GaussProduct, gz::GammaKind::WeierstrassProduct};

    ordered_json config = base_config(c);
    config["re"] = re_text;
    config["im"] = im_text;
    config["tol"] = tol;

    struct Tally {
        int points = 0;
        double max_dev = 0.0;
        double sum_dev = 0.0;
    };
    Tally tallies[4];
    ordered_json pole_points = ordered_json::array();
    ordered_json eval_errors = ordered_json::array();

    for (double im : ims) {
        for (double re : res) {
            const cplx s(re, im);
            if (gz::is_nonpositive_integer(s, 1e-9)) {
                pole_points.push_back(gz::json_complex(s));
                continue;
            }
            const cplx ref = gz::gamma_reference(s);
            for (int k = 0; k < 4; ++k) {
                gz::GammaConstruction con = gz::make_construction(kinds[k]);
                const gz::EvalOptions opt = make_eval_options(c);
                if (std::holds_alternative<gz::SeriesConfig>(con.cfg))
                    con.cfg = opt.series;
                else if (std::holds_alternative<gz::QuadratureConfig>(con.cfg))
                    con.cfg = opt.quad;
                try {
                    const cplx v = construction_value(con, s);
                    const double dev = std::abs(v - ref) / std::abs(ref);
                    tallies[k].points += 1;
                    tallies[k].sum_dev += dev;
                    tallies[k].max_dev = std::max(tallies[k].max_dev, dev);
                } catch (const gz::Error& e) {
                    ordered_json row;
                    row["construction"] = gz::gamma_kind_name(kinds[k]);
                    row["s"] = gz::json_complex(s);
                    row["message"] = e.what();
                    eval_errors.push_back(std::move(row));
                }
            }
        }
    }

    ordered_json table = ordered_json::array();
    std::vector<std::string> offenders;
    std::vector<std::vector<std::string>> csv_rows = {
        {"construction", "points", "max_rel_dev", "mean_rel_dev"}};
    for (int k = 0; k < 4; ++k) {
        const std::string name = gz::gamma_kind_name(kinds[k]);
        const double mean =
            tallies[k].points ? tallies[k].sum_dev / tallies[k].points : 0.0;
        ordered_json row;
        row["construction"] = name;
        row["points"] = tallies[k].points;
        row["max_rel_dev"] = tallies[k].max_dev;
        row["mean_rel_dev"] = mean;
        row["within_tol"] = tallies[k].max_dev <= tol;
        table.push_back(std::move(row));
        csv_rows.push_back({name, std::to_string(tallies[k].points),
                            gz::csv_number(tallies[k].max_dev), gz::csv_number(mean)});
        if (tallies[k].max_dev > tol) offenders.push_back(name);
    }

    if (c.csv) {
        emit_csv(csv_rows);
    } else {
        ordered_json payload;
        payload["reference"] = "gamma.reference";
        payload["constructions"] = std::move(table);
        payload["pole_points"] = std::move(pole_points);
        if (!eval_errors.empty()) payload["evaluation_errors"] = std::move(eval_errors);
        payload["tolerance_exceeded_by"] = offenders;
        emit_json(gz::make_envelope("compare", config, payload, !c.no_timestamp));
    }
    if (!offenders.empty()) {
        std::cerr << "gamma-zoo: tolerance " << tol << " exceeded by:";
        for (const auto& n : offenders) std::cerr << " " << n;
        std::cerr << "\n";
        return kExitTolerance;
    }
    return kExitPass;
}

ordered_json audit_to_json(const gz::AuditReport& rep, const std::string& target) {
    ordered_json payload;
    payload["criterion"] = gz::audit_criterion_name(rep.criterion);
    payload["target"] = target;
    payload["verdict"] = gz::audit_verdict_name(rep.verdict);
    payload["normalization_residual"] = rep.normalization_residual;
    payload["functional_eq_max_residual"] = rep.functional_eq_max_residual;
    payload["max_deviation_from_gamma"] = rep.max_deviation_from_gamma;
    ordered_json violations = ordered_json::array();
    for (const auto& v : rep.side_condition_violations) {
        ordered_json row;
        row["location"] = gz::json_complex(v.location);
        row["magnitude"] = v.magnitude;
        violations.push_back(std::move(row));
    }
    payload["side_condition_violations"] = std::move(violations);
    return payload;
}

int cmd_audit(const CommonOpts& c, const std::string& criterion, const std::string& target,
              double grid_start, double grid_stop, double grid_step, double audit_tol,
              double bound_tol, double eq_tol) {
    const gz::RegistryEntry* entry = gz::find_registry(target);
    if (!entry) {
        std::cerr << "gamma-zoo: unknown function '" << target << "' (try --list)\n";
        return kExitUsage;
    }
    const gz::EvalOptions opt = make_eval_options(c);

    ordered_json config = base_config(c);
    config["criterion"] = criterion;
    config["target"] = target;

    gz::AuditReport rep;
    if (criterion == "bohr-mollerup") {
        if (!(grid_step > 0.0) || !(grid_start > 0.0) || grid_stop <= grid_start) {
            std::cerr << "gamma-zoo: need 0 < grid-start < grid-stop and grid-step > 0\n";
            return kExitUsage;
        }
        config["grid_start"] = grid_start;
        config["grid_stop"] = grid_stop;
        config["grid_step"] = grid_step;
        config["tol"] = audit_tol;
        std::vector<double> grid;
        for (double x = grid_start; x <= grid_stop + grid_step * 0.5; x += grid_step)
            grid.push_back(x);
        auto f = [&](double x) { return entry->eval(cplx(x, 0.0), opt).value.real(); };
        rep = gz::bohr_mollerup_audit(f, grid, audit_tol);
    } else {
        if (entry->real_domain) {
            std::cerr << "gamma-zoo: '" << target
                      << "' is real-valued; the wielandt audit needs a complex-domain "
                         "function\n";
            return kExitUsage;
        }
        config["bound_tol"] = bound_tol;
        config["eq_tol"] = eq_tol;
        auto f = [&](cplx s) { return entry->eval(s, opt).value; };
        rep = gz::wielandt_audit(f, gz::wielandt_default_samples(), bound_tol, eq_tol);
    }

    if (c.csv) {
        emit_csv({{"criterion", "target", "verdict", "normalization_residual",
                   "functional_eq_max_residual", "max_deviation_from_gamma", "violations"},
                  {criterion, target, gz::audit_verdict_name(rep.verdict),
                   gz::csv_number(rep.normalization_residual),
                   gz::csv_number(rep.functional_eq_max_residual),
                   gz::csv_number(rep.max_deviation_from_gamma),
                   std::to_string(rep.side_condition_violations.size())}});
    } else {
        emit_json(gz::make_envelope("audit", config, audit_to_json(rep, target),
                                    !c.no_timestamp));
    }
    if (rep.verdict != gz::AuditVerdict::Pass) {
        std::cerr << "gamma-zoo: audit failed: " << gz::audit_verdict_name(rep.verdict)
                  << "\n";
        return kExitAuditFail;
    }
    return kExitPass;
}

int cmd_converge(const CommonOpts& c, const std::string& construction,
                 const std::string& s_text, const std::string& work_text) {
    const cplx s = parse_complex(s_text);

    std::vector<long long> ladder;
    cplx ref;
    std::function<gz::EvalResult(long long)> eval_at;

    auto budget_capped = [](auto&& fn) -> gz::EvalResult {
        try {
            return fn();
        } catch (const gz::BudgetError& e) {
            return e.best;
        }
    };

    if (construction == "gamma.gauss-product") {
        ladder = {64, 128, 256, 512, 1024, 2048, 4096};
        ref = gz::gamma_reference(s);
        eval_at = [s](long long w) {
            return gz::EvalResult{gz::gamma_gauss_product(s, w), 0.0, w};
        };
    } else if (construction == "gamma.weierstrass-product") {
        ladder = {1000, 3000, 10000, 30000, 100000};
        ref = gz::gamma_reference(s);
        eval_at = [s, budget_capped](long long w) {
            gz::SeriesConfig cfg;
            cfg.max_terms = w;
            cfg.abs_tol = 0.0;
            cfg.rel_tol = 0.0;
            return budget_capped([&] { return gz::gamma_weierstrass_product(s, cfg); });
        };
    } else if (construction == "psi.stern") {
        ladder = {100, 1000, 10000, 100000};
        ref = gz::digamma_reference(1.0 + s);
        eval_at = [s, budget_capped](long long w) {
            gz::SeriesConfig cfg;
            cfg.max_terms = w;
            cfg.abs_tol = 0.0;
            cfg.rel_tol = 0.0;
            return budget_capped([&] { return gz::digamma_stern(s, cfg); });
        };
    } else if (construction == "loggamma.hermite") {
        ladder = {10, 30, 100, 300, 1000, 3000};
        ref = gz::loggamma_reference(1.0 + s);
        eval_at = [s, budget_capped](long long w) {
            gz::SeriesConfig cfg;
            cfg.max_terms = w;
            cfg.abs_tol = 0.0;
            cfg.rel_tol = 0.0;
            return budget_capped([&] { return gz::loggamma_hermite(s, cfg); });
        };
    } else if (construction == "kummer") {
        ladder = {100, 1000, 10000};
        if (s.imag() != 0.0 || !(s.real() > 0.0 && s.real() < 1.0))
            throw gz::DomainError("kummer: argument must be a real in (0,1)");
        ref = gz::loggamma_reference(s);
        eval_at = [s](long long w) { return gz::kummer_loggamma(s.real(), w); };
    } else {
        std::cerr << "gamma-zoo: '" << construction
                  << "' has no work parameter; supported: gamma.gauss-product, "
                     "gamma.weierstrass-product, psi.stern, loggamma.hermite, kummer\n";
        return kExitUsage;
    }
    if (!work_text.empty()) ladder = parse_ladder(work_text);

    ordered_json config = base_config(c);
    config["construction"] = construction;
    config["s"] = gz::json_complex(s);
    {
        ordered_json lj = ordered_json::array();
        for (long long w : ladder) lj.push_back(w);
        config["work_ladder"] = std::move(lj);
    }

    ordered_json points = ordered_json::array();
    std::vector<std::vector<std::string>> csv_rows = {
        {"construction", "s_re", "s_im", "work", "value_re", "value_im", "abs_error"}};
    long long prev_work = -1;
    for (long long w : ladder) {
        const gz::EvalResult r = eval_at(w);
        if (r.work == prev_work) continue;  // work floor collapsed two rungs
        prev_work = r.work;
        const double abs_error = std::abs(r.value - ref);
        ordered_json p;
        p["work_requested"] = w;
        p["work"] = r.work;
        p["value"] = gz::json_complex(r.value);
        p["abs_error"] = abs_error;
        points.push_back(std::move(p));
        csv_rows.push_back({construction, gz::csv_number(s.real()),
                            gz::csv_number(s.imag()), std::to_string(r.work),
                            gz::csv_number(r.value.real()), gz::csv_number(r.value.imag()),
                            gz::csv_number(abs_error)});
    }

    if (c.csv) {
        emit_csv(csv_rows);
    } else {
        ordered_json payload;
        payload["construction"] = construction;
        payload["s"] = gz::json_complex(s);
        payload["reference"] = gz::json_complex(ref);
        payload["points"] = std::move(points);
        emit_json(gz::make_envelope("converge", config, payload, !c.no_timestamp));
    }
    return kExitPass;
}

int cmd_zeros(const CommonOpts& c, const std::string& which, const std::string& re_text,
              const std::string& im_text, int density) {
    const auto [re_min, re_max] = parse_interval(re_text);
    const auto [im_min, im_max] = parse_interval(im_text);
    const gz::Rectangle rect{re_min, re_max, im_min, im_max};
    const gz::SurveyTarget target =
        which == "prym-P" ? gz::SurveyTarget::PrymP : gz::SurveyTarget::PrymQ;

    ordered_json config = base_config(c);
    config["which"] = which;
    config["re"] = re_text;
    config["im"] = im_text;
    config["density"] = density;

    gz::ZeroSurvey survey;
    try {
        survey = gz::zero_survey(target, rect, density);
    } catch (const gz::ContourError& e) {
        ordered_json details;
        details["suggestion"] =
            "grow or shift the rectangle by at least 0.05 so poles and zeros clear "
            "the boundary";
        return emit_math_error("zeros", c, config, "contour", e.what(), details);
    } catch (const gz::UnreliableCountError& e) {
        ordered_json details;
        details["diagnostic"] = e.diagnostic;
        details["suggestion"] = "raise --density or perturb the rectangle";
        return emit_math_error("zeros", c, config, "unreliable-count", e.what(), details);
    }

    if (c.csv) {
        emit_csv({{"which", "re_min", "re_max", "im_min", "im_max", "zero_count",
                   "pole_count", "diagnostic", "real_zeros"},
                  {which, gz::csv_number(re_min), gz::csv_number(re_max),
                   gz::csv_number(im_min), gz::csv_number(im_max),
                   std::to_string(survey.zero_count), std::to_string(survey.pole_count),
                   gz::csv_number(survey.diagnostic),
                   std::to_string(survey.refined_zeros.size())}});
    } else {
        ordered_json payload;
        payload["which"] = which;
        ordered_json rj;
        rj["re_min"] = re_min;
        rj["re_max"] = re_max;
        rj["im_min"] = im_min;
        rj["im_max"] = im_max;
        payload["rect"] = std::move(rj);
        payload["zero_count"] = survey.zero_count;
        payload["pole_count"] = survey.pole_count;
        payload["winding"] = survey.zero_count - survey.pole_count;
        payload["diagnostic"] = survey.diagnostic;
        payload["sign_change_candidates"] = survey.sign_change_candidates;
        ordered_json zeros = ordered_json::array();
        for (const cplx& z : survey.refined_zeros) zeros.push_back(gz::json_complex(z));
        payload["refined_zeros"] = std::move(zeros);
        payload["work"] = survey.work;
        emit_json(gz::make_envelope("zeros", config, payload, !c.no_timestamp));
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gamma-zoo: Gamma-function constructions, companions, and identity audits"};
    app.fallthrough();

    CommonOpts common;
    bool list = false;
    bool json_flag = false;
    app.add_flag("--list", list, "list registry functions and exit");
    app.add_flag("--json", json_flag, "JSON output (default)");
    app.add_flag("--csv", common.csv, "CSV output instead of JSON");
    app.add_flag("--no-timestamp", common.no_timestamp,
                 "omit the timestamp for byte-comparable output");
    app.add_option("--seed", common.seed, "seed recorded in reports")->capture_default_str();
    app.add_option("--abs-tol", common.abs_tol, "absolute tolerance for engines")
        ->capture_default_str();
    app.add_option("--rel-tol", common.rel_tol, "relative tolerance for engines")
        ->capture_default_str();
    app.add_option("--max-terms", common.max_terms, "series term budget")
        ->capture_default_str();
    app.add_option("--max-subdivisions", common.max_subdivisions, "quadrature budget")
        ->capture_default_str();

    std::string eval_fn, eval_s = "1", eval_method = "limit", eval_spec;
    int eval_level = 0;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one registry function");
    eval->add_option("function", eval_fn, "registry name (see --list)")->required();
    eval->add_option("--s", eval_s, "argument: re, 're,im', or re+imi")
        ->capture_default_str();
    eval->add_option("--level", eval_level, "hierarchy level for bendersky")
        ->capture_default_str();
    eval->add_option("--method", eval_method, "limit|integral for constants.gamma")
        ->capture_default_str();
    eval->add_option("--spec", eval_spec,
                     "mellin rational spec, e.g. '{\"leading\":1,\"zeros\":[0]}'");

    std::string cmp_re = "0.1:4:0.1", cmp_im = "0";
    double cmp_tol = 1e-7;
    CLI::App* compare =
        app.add_subcommand("compare", "all constructions against the reference");
    compare->add_option("--re", cmp_re, "real grid start:stop:step")->capture_default_str();
    compare->add_option("--im", cmp_im, "imaginary grid")->capture_default_str();
    compare->add_option("--tol", cmp_tol, "max relative deviation allowed")
        ->capture_default_str();

    std::string audit_criterion, audit_target;
    double audit_grid_start = 0.1, audit_grid_stop = 5.9, audit_grid_step = 0.1;
    double audit_tol = 1e-9, audit_bound_tol = 100.0, audit_eq_tol = 1e-10;
    CLI::App* audit = app.add_subcommand("audit", "run a uniqueness-criterion audit");
    audit->add_option("criterion", audit_criterion, "bohr-mollerup or wielandt")
        ->required()
        ->check(CLI::IsMember({"bohr-mollerup", "wielandt"}));
    audit->add_option("target", audit_target, "registry name to audit")->required();
    audit->add_option("--grid-start", audit_grid_start, "first grid point")
        ->capture_default_str();
    audit->add_option("--grid-stop", audit_grid_stop, "last grid point")
        ->capture_default_str();
    audit->add_option("--grid-step", audit_grid_step, "grid spacing")->capture_default_str();
    audit->add_option("--tol", audit_tol, "residual/convexity tolerance")
        ->capture_default_str();
    audit->add_option("--bound-tol", audit_bound_tol, "allowed strip growth ratio")
        ->capture_default_str();
    audit->add_option("--eq-tol", audit_eq_tol, "recurrence residual tolerance")
        ->capture_default_str();

    std::string conv_construction, conv_s = "0.5", conv_work;
    CLI::App* converge =
        app.add_subcommand("converge", "error against reference along a work ladder");
    converge->add_option("construction", conv_construction, "work-parameterized name")
        ->required();
    converge->add_option("--s", conv_s, "argument")->capture_default_str();
    converge->add_option("--work", conv_work, "comma-separated work levels");

    std::string zeros_which, zeros_re, zeros_im;
    int zeros_density = 128;
    CLI::App* zeros = app.add_subcommand("zeros", "zero survey on a rectangle");
    zeros->add_option("which", zeros_which, "prym-P or prym-Q")
        ->required()
        ->check(CLI::IsMember({"prym-P", "prym-Q"}));
    zeros->add_option("--re", zeros_re, "real interval lo:hi")->required();
    zeros->add_option("--im", zeros_im, "imaginary interval lo:hi")->required();
    zeros->add_option("--density", zeros_density,
                      "contour nodes per edge and scan samples per unit")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (list) {
        for (const gz::RegistryEntry& e : gz::registry())
            std::cout << e.name << "  " << e.summary << "\n";
        return kExitPass;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (eval->parsed())
            return cmd_eval(common, eval_fn, eval_s, eval_level, eval_method, eval_spec);
        if (compare->parsed()) return cmd_compare(common, cmp_re, cmp_im, cmp_tol);
        if (audit->parsed())
            return cmd_audit(common, audit_criterion, audit_target, audit_grid_start,
                             audit_grid_stop, audit_grid_step, audit_tol, audit_bound_tol,
                             audit_eq_tol);
        if (converge->parsed())
            return cmd_converge(common, conv_construction, conv_s, conv_work);
        if (zeros->parsed())
            return cmd_zeros(common, zeros_which, zeros_re, zeros_im, zeros_density);
    } catch (const UsageError& e) {
        std::cerr << "gamma-zoo: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gz::PoleError& e) {
        return emit_math_error("error", common, base_config(common), "pole", e.what());
    } catch (const gz::BudgetError& e) {
        return emit_math_error("error", common, base_config(common), "budget", e.what());
    } catch (const gz::UnreliableCountError& e) {
        return emit_math_error("error", common, base_config(common), "unreliable-count",
                               e.what());
    } catch (const gz::ContourError& e) {
        return emit_math_error("error", common, base_config(common), "contour", e.what());
    } catch (const gz::Error& e) {
        return emit_math_error("error", common, base_config(common), "domain", e.what());
    }
    std::cerr << app.help();
    return kExitUsage;
}
