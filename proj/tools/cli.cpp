#include "cli.hpp"

#include <complex>
#include <functional>
#include <map>

#include "gkz/errors.hpp"
#include "gkz/homogenization.hpp"
#include "gkz/horn.hpp"
#include "gkz/solver.hpp"
#include "gkz/stratification.hpp"
#include "gkz/toric.hpp"
#include "gkz/triangulation.hpp"

namespace gkz::cli {

namespace {

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

IntegerMatrix job_matrix(const Json& job) { return IntegerMatrix(matrix_from_json(require(job, "matrix", "job"), "matrix")); }

RationalVector job_weight(const Json& job, std::size_t n) {
    auto w = rational_vector_from_json(require(job, "weight", "job"), "weight");
    if (w.size() != n) throw ParseError("weight", "expected " + std::to_string(n) + " entries");
    return w;
}

GaussianVector job_parameter(const Json& j, const std::string& field, std::size_t d) {
    auto beta = gaussian_vector_from_json(j, field);
    if (beta.size() != d) throw ParseError(field, "expected " + std::to_string(d) + " entries");
    return beta;
}

Rational job_truncation(const Json& job, const Options& options) {
    if (options.truncation) return rational_from_json(Json(*options.truncation), "--truncation");
    return rational_from_json(require(job, "truncation", "job"), "truncation");
}

Json column_sets(const std::vector<ColumnSet>& sets) {
    Json out = Json::array();
    for (const auto& s : sets) out.push_back(s);
    return out;
}

Json report_json(const StratumReport& r) {
    Json flat = Json::array();
    for (const auto& v : r.flat_directions) flat.push_back(to_json(v));
    return Json{{"index", r.index}, {"fired", r.fired}, {"flat_directions", flat}};
}

Json series_list(const Json& job) {
    if (job.contains("solutions")) {
        const Json& sols = job["solutions"];
        if (!sols.is_array()) throw ParseError("solutions", "expected an array");
        Json out = Json::array();
        for (std::size_t i = 0; i < sols.size(); ++i) {
            out.push_back(sols[i].is_object() && sols[i].contains("series") ? sols[i]["series"] : sols[i]);
        }
        return out;
    }
    return Json::array({require(job, "series", "job")});
}

std::complex<double> complex_from_json(const Json& j, const std::string& field) {
    auto number = [&](const Json& v, const std::string& f) -> double {
        if (v.is_number()) return v.get<double>();
        if (v.is_string()) {
            try {
                return rational_from_json(v, f).get_d();
            } catch (const ParseError&) {
            }
        }
        throw ParseError(f, "expected a number");
    };
    if (j.is_object()) {
        double re = j.contains("re") ? number(j["re"], field + ".re") : 0.0;
        double im = j.contains("im") ? number(j["im"], field + ".im") : 0.0;
        return {re, im};
    }
    return {number(j, field), 0.0};
}

Json analyze(const Json& job, const Options&) {
    auto a = job_matrix(job);
    auto kernel = kernel_lattice_basis(a);
    Json basis = Json::array();
    for (std::size_t k = 0; k < kernel.m(); ++k) basis.push_back(kernel.column(k));
    return Json{{"d", a.d()},
                {"n", a.n()},
                {"rank", a.d()},
                {"homogeneous", is_homogeneous(a)},
                {"kernel_basis", basis},
                {"volume", integer_json(normalized_volume(a))},
                {"rank_bound", integer_json(rank_upper_bound(a))}};
}

Triangulation job_triangulation(const IntegerMatrix& a, const RationalVector& w) {
    return is_homogeneous(a) ? regular_triangulation(a, w) : inhomogeneous_triangulation(a, w);
}

Json triangulate(const Json& job, const Options&) {
    auto a = job_matrix(job);
    auto t = job_triangulation(a, job_weight(job, a.n()));
    Json certs = Json::array(), vols = Json::array();
    for (const auto& c : t.certificates) certs.push_back(to_json(c));
    for (const auto& s : t.simplices) vols.push_back(integer_json(simplex_volume(t, s)));
    return Json{{"simplices", column_sets(t.simplices)},
                {"with_origin", t.with_origin},
                {"codim1_faces", column_sets(codim1_faces(t))},
                {"certificates", certs},
                {"regular", certificate_holds(t)},
                {"simplex_volumes", vols}};
}

Json strata(const Json& job, const Options&) {
    auto a = job_matrix(job);
    auto arrangement = build_arrangement(job_triangulation(a, job_weight(job, a.n())));
    Json conditions = Json::array();
    for (const auto& c : arrangement)
        conditions.push_back(Json{{"normal", c.normal}, {"faces", column_sets(c.source_faces)}});
    if (job.contains("parameters")) {
        const Json& many = job["parameters"];
        if (!many.is_array()) throw ParseError("parameters", "expected an array");
        Json reports = Json::array();
        for (std::size_t i = 0; i < many.size(); ++i)
            reports.push_back(report_json(
                stratum_index(job_parameter(many[i], "parameters[" + std::to_string(i) + "]", a.d()), arrangement)));
        return Json{{"arrangement", conditions}, {"reports", reports}};
    }
    Json out = report_json(stratum_index(job_parameter(require(job, "parameter", "job"), "parameter", a.d()), arrangement));
    out["arrangement"] = conditions;
    return out;
}

Json exponents(const Json& job, const Options& options) {
    auto a = job_matrix(job);
    auto ctx = make_context(a, job_weight(job, a.n()));
    auto beta = job_parameter(require(job, "parameter", "job"), "parameter", a.d());
    Rational bound = job.contains("truncation") || options.truncation ? job_truncation(job, options) : Rational(10);
    auto report = fake_exponents(ctx, beta);
    Json list = Json::array(), bad = Json::array();
    for (const auto& e : report.exponents)
        list.push_back(Json{{"alpha", to_json(e.alpha)},
                            {"sigma", e.sigma},
                            {"standard_pair", Json{{"root", e.source_pair.root}, {"face", e.source_pair.face}}},
                            {"multiplicity", e.multiplicity},
                            {"top_dimensional", e.top_dimensional},
                            {"negative_support", negative_support(e.alpha)},
                            {"minimal_negative_support", minimal_negative_support(ctx, e.alpha, bound)}});
    for (const auto& p : report.inconsistent) bad.push_back(Json{{"root", p.root}, {"face", p.face}});
    return Json{{"exponents", list}, {"inconsistent_pairs", bad}, {"support_bound", to_json(bound)}};
}

Json series(const Json& job, const Options& options) {
    auto a = job_matrix(job);
    auto w = job_weight(job, a.n());
    auto ctx = make_context(a, w);
    auto beta = job_parameter(require(job, "parameter", "job"), "parameter", a.d());
    auto bound = job_truncation(job, options);
    Json sols = Json::array();
    if (job.contains("exponent")) {
        auto alpha = job_parameter(job["exponent"], "exponent", a.n());
        sols.push_back(Json{{"series", to_json(log_free_series(ctx, alpha, bound))}});
    } else {
        for (const auto& s : canonical_series(ctx, beta, bound))
            sols.push_back(Json{{"series", to_json(s.series)}, {"start_degree", s.start_degree}});
    }
    return Json{{"matrix", to_json(a.matrix())},
                {"weight", to_json(w)},
                {"parameter", to_json(beta)},
                {"truncation", to_json(bound)},
                {"solutions", sols}};
}

Json verify(const Json& job, const Options&) {
    auto a = job_matrix(job);
    auto ctx = make_context(a, job_weight(job, a.n()));
    auto beta = job_parameter(require(job, "parameter", "job"), "parameter", a.d());
    Json list = series_list(job), each = Json::array();
    Rational worst = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        auto s = series_from_json(list[i], "solutions[" + std::to_string(i) + "].series");
        if (s.n() != a.n()) throw ParseError("solutions[" + std::to_string(i) + "]", "series has wrong number of variables");
        Rational r = residual(s, ctx, beta);
        each.push_back(to_json(r));
        worst = std::max(worst, r);
    }
    return Json{{"residual", to_json(worst)}, {"residuals", each}};
}

Json horn(const Json& job, const Options& options) {
    IntMatrix basis;
    if (job.contains("kernel_basis")) {
        auto cols = [&] {
            const Json& kb = job["kernel_basis"];
            if (!kb.is_array() || kb.empty()) throw ParseError("kernel_basis", "expected a non-empty array of columns");
            std::vector<IntVector> out;
            for (std::size_t i = 0; i < kb.size(); ++i)
                out.push_back(int_vector_from_json(kb[i], "kernel_basis[" + std::to_string(i) + "]"));
            return out;
        }();
        basis = IntMatrix::from_columns(cols);
    } else {
        basis = kernel_lattice_basis(job_matrix(job)).B;
    }
    auto alpha = job_parameter(require(job, "alpha", "job"), "alpha", basis.rows());
    Rational t = job_truncation(job, options);
    if (t.get_den() != 1) throw ParseError("truncation", "Horn truncation must be an integer");
    HornSystem h{basis, alpha};
    Json out{{"kernel_basis", Json::array()}, {"pole", nullptr}, {"series", nullptr}};
    for (std::size_t k = 0; k < basis.cols(); ++k) out["kernel_basis"].push_back(basis.column(k));
    try {
        out["series"] = to_json(horn_series(h, t.get_num().get_si()));
    } catch (const GkzError& e) {
        if (e.code() != ErrorCode::PoleHit) throw;
        out["pole"] = Json{{"code", error_name(e.code())}, {"message", e.what()}};
    }
    return out;
}

Json evaluate_cmd(const Json& job, const Options& options) {
    const Json& point = require(job, "point", "job");
    if (!point.is_array()) throw ParseError("point", "expected an array");
    std::vector<std::complex<double>> x;
    for (std::size_t i = 0; i < point.size(); ++i) x.push_back(complex_from_json(point[i], "point[" + std::to_string(i) + "]"));
    EvaluationMode mode = EvaluationMode::Plain;
    if (job.contains("mode")) {
        const Json& m = job["mode"];
        if (m == "gamma") mode = EvaluationMode::GammaNormalized;
        else if (m != "plain") throw ParseError("mode", "expected \"plain\" or \"gamma\"");
    }
    Json list = series_list(job), values = Json::array();
    for (std::size_t i = 0; i < list.size(); ++i) {
        auto s = series_from_json(list[i], "solutions[" + std::to_string(i) + "].series");
        if (s.n() != x.size()) throw ParseError("point", "length differs from the series");
        auto v = evaluate(s, x, mode, options.tolerance);
        values.push_back(Json{{"re", v.value.real()},
                              {"im", v.value.imag()},
                              {"last_shell", v.last_shell},
                              {"converged", v.converged}});
    }
    return Json{{"values", values}};
}

Json homogenize(const Json& job, const Options& options) {
    auto a = job_matrix(job);
    auto w = job_weight(job, a.n());
    auto h = homogenize_matrix(a);
    Json out{{"rho", to_json(h.rho.matrix())},
             {"rank_bound", integer_json(rank_upper_bound(a))},
             {"weight_admissible", ones_in_weight_cone(a, w)}};
    if (!job.contains("parameter")) return out;
    auto beta = job_parameter(job["parameter"], "parameter", a.d());
    auto lift = generic_lift(h, beta, w, options.seed);
    out["lifted_parameter"] = to_json(homogenize_parameter(beta));
    out["generic_parameter"] = to_json(lift.lifted);
    out["beta0"] = to_json(lift.beta0);
    out["attempts"] = lift.attempts;
    if (!job.contains("truncation") && !options.truncation) return out;
    RationalVector lifted_w{Rational(1)};
    for (const auto& x : w) lifted_w.push_back(x + 1);
    auto ctx = make_context(h.rho, lifted_w);
    Json restricted = Json::array(), corrected = Json::array();
    for (const auto& s : canonical_series(ctx, lift.lifted, job_truncation(job, options))) {
        restricted.push_back(to_json(restrict_x0(s.series)));
        corrected.push_back(s.series.is_log_free() ? to_json(restrict_x0_gamma(s.series)) : Json(nullptr));
    }
    out["restricted"] = restricted;
    out["restricted_gamma"] = corrected;
    return out;
}

const std::map<std::string, std::function<Json(const Json&, const Options&)>>& commands() {
    static const std::map<std::string, std::function<Json(const Json&, const Options&)>> table{
        {"analyze", analyze},   {"triangulate", triangulate}, {"strata", strata},
        {"exponents", exponents}, {"series", series},         {"verify", verify},
        {"horn", horn},         {"evaluate", evaluate_cmd},   {"homogenize", homogenize}};
    return table;
}

} // namespace

Result run_command(const std::string& command, const Json& job, const Options& options) {
    auto it = commands().find(command);
    if (it == commands().end())
        return Result{1, Json{{"error", {{"code", "ParseError"}, {"field", "command"}, {"message", "unknown command '" + command + "'"}}}}};
    try {
        if (!job.is_object()) throw ParseError("job", "expected an object");
        return Result{0, it->second(job, options)};
    } catch (const ParseError& e) {
        return Result{1, Json{{"error", {{"code", "ParseError"}, {"field", e.field()}, {"message", e.what()}}}}};
    } catch (const GkzError& e) {
        return Result{2, Json{{"error", {{"code", error_name(e.code())}, {"message", e.what()}}}}};
    }
}

} // namespace gkz::cli
