#include "gkz/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <map>
#include <set>

#include "gkz/errors.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

namespace {

GaussianRational gq(std::int64_t v) { return GaussianRational(static_cast<long>(v)); }

GaussianVector shifted(const GaussianVector& alpha, const IntVector& u) {
    GaussianVector out = alpha;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += gq(u[i]);
    return out;
}

IntVector negated(const IntVector& u) {
    IntVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = -u[i];
    return out;
}

} // namespace

SeriesContext make_context(const IntegerMatrix& a, const RationalVector& w) {
    if (w.size() != a.n()) throw GkzError(ErrorCode::InvalidArgument, "weight vector has wrong length");
    SeriesContext ctx{a, w, kernel_lattice_basis(a), {}, {}, {}, IntMatrix(a.n(), 0)};
    ctx.groebner = weight_groebner_basis(toric_generators(a), w);
    std::vector<IntVector> leads;
    for (const auto& g : ctx.groebner) leads.push_back(g.plus);
    ctx.initial = make_monomial_ideal(a.n(), leads);
    ctx.pairs = standard_pairs(ctx.initial);
    const std::size_t m = ctx.kernel.m();
    if (m == 0) return ctx;
    std::vector<RationalVector> gens;
    for (const auto& u : groebner_cone_dual(ctx.groebner)) {
        auto nu = ctx.kernel.coordinates(u);
        RationalVector g;
        for (auto x : *nu) g.emplace_back(static_cast<long>(x));
        gens.push_back(std::move(g));
    }
    RationalVector functional(m);
    for (std::size_t k = 0; k < m; ++k) functional[k] = dot(w, ctx.kernel.column(k));
    IntMatrix lambda = adapted_lattice_basis(gens, IntMatrix::identity(m), functional);
    ctx.cone_basis = ctx.kernel.B.multiply(lambda);
    return ctx;
}

// ---------------------------------------------------------------------------
// Exponents and logarithm-free series

ExponentReport fake_exponents(const SeriesContext& ctx, const GaussianVector& beta) {
    const std::size_t d = ctx.a.d(), n = ctx.a.n();
    if (beta.size() != d) throw GkzError(ErrorCode::InvalidArgument, "parameter has wrong length");
    ExponentReport report;
    for (const auto& pair : ctx.pairs) {
        GaussianVector rhs = beta;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs[i] -= gq(ctx.a(i, j) * pair.root[j]);
        linalg::Matrix<GaussianRational> sys(d, GaussianVector(pair.face.size()));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < pair.face.size(); ++k) sys[i][k] = gq(ctx.a(i, pair.face[k]));
        auto sol = linalg::solve(sys, rhs, pair.face.size());
        if (!sol) {
            report.inconsistent.push_back(pair);
            continue;
        }
        GaussianVector alpha(n);
        for (std::size_t j = 0; j < n; ++j) alpha[j] = gq(pair.root[j]);
        for (std::size_t k = 0; k < pair.face.size(); ++k) alpha[pair.face[k]] = (*sol)[k];
        report.exponents.push_back(FakeExponent{alpha, pair.face, pair, 1, pair.face.size() == d});
    }
    for (auto& e : report.exponents)
        e.multiplicity = static_cast<std::size_t>(std::count_if(
            report.exponents.begin(), report.exponents.end(), [&](const FakeExponent& f) { return f.alpha == e.alpha; }));
    return report;
}

ColumnSet negative_support(const GaussianVector& alpha) {
    ColumnSet out;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i].is_negative_integer()) out.push_back(i);
    return out;
}

bool minimal_negative_support(const SeriesContext& ctx, const GaussianVector& alpha, const Rational& bound) {
    ColumnSet base = negative_support(alpha);
    for (const auto& u : enumerate_support(ctx.cone_basis, ctx.w, bound)) {
        for (const auto& v : {u, negated(u)}) {
            ColumnSet other = negative_support(shifted(alpha, v));
            if (other.size() < base.size() && std::includes(base.begin(), base.end(), other.begin(), other.end()))
                return false;
        }
    }
    return true;
}

MixedSeries log_free_series(const SeriesContext& ctx, const GaussianVector& alpha, const Rational& bound) {
    if (!minimal_negative_support(ctx, alpha, bound))
        throw GkzError(ErrorCode::NotMinimalNegativeSupport, "exponent does not have minimal negative support");
    const std::size_t n = alpha.size();
    ColumnSet base = negative_support(alpha);
    MixedSeries s = make_series(alpha, ctx.w, bound);
    for (const auto& u : enumerate_support(ctx.cone_basis, ctx.w, bound)) {
        if (negative_support(shifted(alpha, u)) != base) continue;
        GaussianRational num(1), den(1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::int64_t j = 1; j <= -u[i]; ++j) num *= alpha[i] - gq(j - 1);
            for (std::int64_t j = 1; j <= u[i]; ++j) den *= alpha[i] + gq(j);
        }
        s.add(u, IntVector(n, 0), num / den);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Canonical series: order-by-order solving in s_k = log(x^{b_k})

namespace {

using SPoly = std::map<IntVector, GaussianRational>;
using ParamVector = GaussianVector;

// Exponents of degree ≤ D in m variables, by total degree descending then
// lexicographically descending.
std::vector<IntVector> s_monomials(std::size_t m, std::int64_t degree) {
    std::vector<IntVector> out;
    IntVector e(m, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t left) {
        if (k == m) {
            out.push_back(e);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            e[k] = v;
            rec(k + 1, left - v);
        }
        e[k] = 0;
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
        auto ta = std::accumulate(a.begin(), a.end(), std::int64_t{0});
        auto tb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
        if (ta != tb) return ta > tb;
        return a > b;
    });
    return out;
}

// p ↦ c·p + Σ_k dir_k ∂p/∂s_k
SPoly apply_factor(const SPoly& p, const GaussianRational& c, const IntVector& dir) {
    SPoly out;
    for (const auto& [e, v] : p) {
        if (!c.is_zero()) out[e] += v * c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0 || dir[k] == 0) continue;
            IntVector lower = e;
            --lower[k];
            out[lower] += v * gq(dir[k] * e[k]);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

struct Factor {
    GaussianRational constant;
    IntVector direction;
};

// Matrix (row = output monomial, column = input monomial) of a product of
// factors acting on polynomials of bounded degree.
linalg::Matrix<GaussianRational> operator_matrix(const std::vector<Factor>& factors,
                                                 const std::vector<IntVector>& monos,
                                                 const std::map<IntVector, std::size_t>& index) {
    const std::size_t k = monos.size();
    linalg::Matrix<GaussianRational> mat(k, GaussianVector(k));
    for (std::size_t col = 0; col < k; ++col) {
        SPoly p{{monos[col], GaussianRational(1)}};
        for (const auto& f : factors) p = apply_factor(p, f.constant, f.direction);
        for (const auto& [e, v] : p) mat[index.at(e)][col] = v;
    }
    return mat;
}

struct ClassProblem {
    const SeriesContext* ctx;
    GaussianVector base;
    std::vector<IntVector> members;
};

struct ClassSolution {
    std::vector<IntVector> monos;
    std::map<IntVector, std::vector<ParamVector>> coefficients;
    std::size_t params = 0;
};

Rational weight_of(const SeriesContext& ctx, const IntVector& u) { return dot(ctx.w, u); }

ClassSolution solve_class(const ClassProblem& prob, std::int64_t degree, const Rational& solve_bound) {
    const SeriesContext& ctx = *prob.ctx;
    const std::size_t n = ctx.a.n(), m = ctx.kernel.m();
    ClassSolution sol;
    sol.monos = s_monomials(m, degree);
    const std::size_t k = sol.monos.size();
    std::map<IntVector, std::size_t> mono_index;
    for (std::size_t i = 0; i < k; ++i) mono_index[sol.monos[i]] = i;

    KernelBasis cone{ctx.cone_basis};
    auto in_cone_union = [&](const IntVector& u) {
        for (const auto& v : prob.members) {
            IntVector diff(n);
            for (std::size_t i = 0; i < n; ++i) diff[i] = u[i] - v[i];
            auto nu = cone.coordinates(diff);
            if (nu && std::all_of(nu->begin(), nu->end(), [](auto x) { return x >= 0; })) return true;
        }
        return false;
    };

    std::set<IntVector> unknown;
    for (const auto& v : prob.members)
        for (const auto& u : enumerate_support(ctx.cone_basis, ctx.w, solve_bound - weight_of(ctx, v))) {
            IntVector p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = u[i] + v[i];
            unknown.insert(p);
        }

    // Positions carrying equations, in increasing weight.
    std::set<IntVector> candidates(unknown.begin(), unknown.end());
    for (const auto& p : unknown)
        for (const auto& g : ctx.groebner) {
            IntVector u(n);
            for (std::size_t i = 0; i < n; ++i) u[i] = p[i] + g.plus[i] - g.minus[i];
            candidates.insert(u);
        }
    std::vector<IntVector> order;
    for (const auto& u : candidates) {
        if (!unknown.count(u) && in_cone_union(u)) continue; // beyond the solved range
        order.push_back(u);
    }
    std::sort(order.begin(), order.end(), [&](const IntVector& a, const IntVector& b) {
        Rational wa = weight_of(ctx, a), wb = weight_of(ctx, b);
        if (wa != wb) return wa < wb;
        return a < b;
    });

    auto substitute = [&](const linalg::Matrix<GaussianRational>& z, std::size_t new_params) {
        // p_old = Z p_new for every stored coefficient vector.
        for (auto& [pos, coeffs] : sol.coefficients)
            for (auto& vec : coeffs) {
                ParamVector out(new_params);
                for (std::size_t i = 0; i < vec.size(); ++i) {
                    if (vec[i].is_zero()) continue;
                    for (std::size_t j = 0; j < new_params; ++j)
                        if (!z[i][j].is_zero()) out[j] += vec[i] * z[i][j];
                }
                vec = std::move(out);
            }
        sol.params = new_params;
    };

    for (const auto& u : order) {
        const bool is_unknown = unknown.count(u) > 0;
        const std::size_t qcols = is_unknown ? k : 0;
        const std::size_t cols = qcols + sol.params;
        linalg::Matrix<GaussianRational> sys;
        for (const auto& g : ctx.groebner) {
            IntVector diff = g.difference();
            IntVector v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = u[i] - diff[i];
            auto lower = sol.coefficients.find(v);
            if (!is_unknown && lower == sol.coefficients.end()) continue;
            std::vector<Factor> left, right;
            for (std::size_t j = 0; j < n; ++j) {
                IntVector dir = ctx.kernel.row(j);
                for (std::int64_t l = 0; l < g.plus[j]; ++l)
                    left.push_back({prob.base[j] + gq(u[j] - l), dir});
                for (std::int64_t l = 0; l < g.minus[j]; ++l)
                    right.push_back({prob.base[j] + gq(u[j] - diff[j] - l), dir});
            }
            auto lmat = is_unknown ? operator_matrix(left, sol.monos, mono_index) : linalg::Matrix<GaussianRational>{};
            linalg::Matrix<GaussianRational> rmat;
            if (lower != sol.coefficients.end()) rmat = operator_matrix(right, sol.monos, mono_index);
            for (std::size_t f = 0; f < k; ++f) {
                GaussianVector row(cols);
                for (std::size_t e = 0; e < qcols; ++e) row[e] = lmat[f][e];
                if (lower != sol.coefficients.end())
                    for (std::size_t e = 0; e < k; ++e) {
                        if (rmat[f][e].is_zero()) continue;
                        const auto& vec = lower->second[e];
                        for (std::size_t p = 0; p < sol.params; ++p)
                            if (!vec[p].is_zero()) row[qcols + p] -= rmat[f][e] * vec[p];
                    }
                if (std::any_of(row.begin(), row.end(), [](const GaussianRational& x) { return !x.is_zero(); }))
                    sys.push_back(std::move(row));
            }
        }
        auto basis = linalg::nullspace(sys, cols);
        // Express (q_u, p_old) through the new parameters.
        const std::size_t r = basis.size();
        linalg::Matrix<GaussianRational> zp(sol.params, GaussianVector(r));
        for (std::size_t i = 0; i < sol.params; ++i)
            for (std::size_t j = 0; j < r; ++j) zp[i][j] = basis[j][qcols + i];
        substitute(zp, r);
        if (is_unknown) {
            std::vector<ParamVector> q(k, ParamVector(r));
            for (std::size_t e = 0; e < k; ++e)
                for (std::size_t j = 0; j < r; ++j) q[e][j] = basis[j][e];
            sol.coefficients[u] = std::move(q);
        }
    }
    return sol;
}

bool same_class(const GaussianVector& a, const GaussianVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] - b[i]).is_integer()) return false;
    return true;
}

IntVector integer_difference(const GaussianVector& a, const GaussianVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] - b[i]).re().get_num().get_si();
    return out;
}

Rational real_weight(const RationalVector& w, const GaussianVector& alpha) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * alpha[i].re();
    return s;
}

Integer degree_cap(const SeriesContext& ctx) {
    Integer cap = static_cast<long>(ctx.a.n());
    cap <<= 2 * ctx.a.d();
    return cap * normalized_volume(ctx.a);
}

std::vector<CanonicalSolution> solve_exponent_class(const SeriesContext& ctx, const GaussianVector& base,
                                                    const std::vector<IntVector>& members, const Rational& bound) {
    ClassProblem prob{&ctx, base, members};
    Rational spread = 0, margin = 0;
    for (const auto& v : members) spread = std::max(spread, weight_of(ctx, v));
    for (const auto& g : ctx.groebner) margin = std::max(margin, dot(ctx.w, g.plus));
    Rational solve_bound = bound + spread + margin;
    const Integer cap = degree_cap(ctx);

    auto stable_degree_solution = [&](const Rational& sb) {
        ClassSolution prev = solve_class(prob, 0, sb);
        for (std::int64_t degree = 1;; ++degree) {
            if (Integer(static_cast<long>(degree)) > cap)
                throw GkzError(ErrorCode::DegreeCapExceeded, "log degree exceeded the a priori bound");
            ClassSolution next = solve_class(prob, degree, sb);
            if (next.params == prev.params) return prev;
            prev = std::move(next);
        }
    };
    ClassSolution sol = stable_degree_solution(solve_bound);
    for (int attempt = 0; attempt < 4; ++attempt) {
        ClassSolution wider = stable_degree_solution(solve_bound + margin);
        if (wider.params == sol.params) break;
        solve_bound += margin;
        sol = std::move(wider);
    }

    // Columns in canonical order: weight ascending, log degree descending,
    // then position and monomial.
    struct Column {
        IntVector position;
        std::size_t mono;
        Rational weight;
        std::int64_t degree;
    };
    std::vector<Column> columns;
    for (const auto& [pos, coeffs] : sol.coefficients)
        for (std::size_t e = 0; e < sol.monos.size(); ++e)
            columns.push_back({pos, e, weight_of(ctx, pos),
                               std::accumulate(sol.monos[e].begin(), sol.monos[e].end(), std::int64_t{0})});
    std::sort(columns.begin(), columns.end(), [](const Column& a, const Column& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.degree != b.degree) return a.degree > b.degree;
        if (a.position != b.position) return a.position < b.position;
        return a.mono < b.mono;
    });
    linalg::Matrix<GaussianRational> rows(sol.params, GaussianVector(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& vec = sol.coefficients.at(columns[c].position)[columns[c].mono];
        for (std::size_t p = 0; p < sol.params; ++p) rows[p][c] = vec[p];
    }
    auto pivots = linalg::rref(rows);

    std::map<IntVector, LogPolynomial> expansions;
    for (const auto& e : sol.monos) expansions[e] = expand_kernel_monomial(ctx.kernel.B, e);
    std::vector<CanonicalSolution> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Column& start = columns[pivots[r]];
        MixedSeries s = make_series(shifted(base, start.position), ctx.w, bound);
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (rows[r][c].is_zero()) continue;
            IntVector offset(start.position.size());
            for (std::size_t i = 0; i < offset.size(); ++i) offset[i] = columns[c].position[i] - start.position[i];
            if (weight_of(ctx, offset) > bound) continue;
            for (const auto& [deg, coef] : expansions.at(sol.monos[columns[c].mono])) s.add(offset, deg, rows[r][c] * coef);
        }
        out.push_back(CanonicalSolution{std::move(s), sol.monos[start.mono]});
    }
    return out;
}

} // namespace

std::vector<CanonicalSolution> canonical_series(const SeriesContext& ctx, const GaussianVector& beta,
                                                const Rational& bound) {
    if (!is_homogeneous(ctx.a)) throw GkzError(ErrorCode::NotHomogeneous, "canonical series need a homogeneous matrix");
    auto report = fake_exponents(ctx, beta);
    std::vector<GaussianVector> distinct;
    for (const auto& e : report.exponents)
        if (std::find(distinct.begin(), distinct.end(), e.alpha) == distinct.end()) distinct.push_back(e.alpha);

    std::vector<bool> used(distinct.size(), false);
    std::vector<CanonicalSolution> out;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        if (used[i]) continue;
        std::vector<GaussianVector> cls;
        for (std::size_t j = i; j < distinct.size(); ++j)
            if (!used[j] && same_class(distinct[i], distinct[j])) {
                used[j] = true;
                cls.push_back(distinct[j]);
            }
        auto lowest = std::min_element(cls.begin(), cls.end(), [&](const GaussianVector& a, const GaussianVector& b) {
            Rational wa = real_weight(ctx.w, a), wb = real_weight(ctx.w, b);
            if (wa != wb) return wa < wb;
            return lex_less(a, b);
        });
        GaussianVector base = *lowest;
        std::vector<IntVector> members;
        for (const auto& a : cls) members.push_back(integer_difference(a, base));
        for (auto& s : solve_exponent_class(ctx, base, members, bound)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const CanonicalSolution& a, const CanonicalSolution& b) {
        if (a.series.base != b.series.base) return lex_less(a.series.base, b.series.base);
        return a.start_degree > b.start_degree;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Verification, perturbation, derived solutions

Rational residual(const MixedSeries& s, const SeriesContext& ctx, const GaussianVector& beta) {
    const std::size_t n = s.n();
    Rational worst = 0;
    IntVector zero(n, 0);
    for (const auto& g : ctx.groebner) {
        MixedSeries r = add(apply_weyl_monomial(s, zero, g.plus), scale(apply_weyl_monomial(s, zero, g.minus), -1));
        worst = std::max(worst, r.max_abs());
    }
    for (std::size_t i = 0; i < ctx.a.d(); ++i) worst = std::max(worst, apply_euler(s, ctx.a, i, beta[i]).max_abs());
    return worst;
}

CanonicalSolution perturb_exponent(const SeriesContext& ctx, const CanonicalSolution& s, std::size_t j,
                                   const GaussianRational& value) {
    if (j >= s.series.n()) throw GkzError(ErrorCode::InvalidArgument, "coordinate out of range");
    if (s.series.base[j].is_integer())
        throw GkzError(ErrorCode::InvalidArgument, "only non-integer exponent coordinates can be perturbed");
    if (value.is_integer()) throw GkzError(ErrorCode::IntegerPerturbation, "perturbed coordinate is an integer");
    GaussianVector alpha = s.series.base;
    alpha[j] = value;
    GaussianVector beta(ctx.a.d());
    for (std::size_t i = 0; i < ctx.a.d(); ++i)
        for (std::size_t k = 0; k < alpha.size(); ++k) beta[i] += gq(ctx.a(i, k)) * alpha[k];
    for (auto& c : canonical_series(ctx, beta, s.series.truncation))
        if (c.series.base == alpha && c.start_degree == s.start_degree) return c;
    throw GkzError(ErrorCode::InconsistentSystem, "no canonical series with the same start term after perturbation");
}

MixedSeries antiderivative_solution(const MixedSeries& s, std::size_t j) {
    if (s.base[j].is_integer()) throw GkzError(ErrorCode::ExponentInteger, "exponent coordinate is an integer");
    return log_antiderivative(s, j);
}

std::vector<std::pair<IntVector, MixedSeries>> maximal_log_terms(const MixedSeries& s) {
    std::set<IntVector> degrees;
    for (const auto& [key, c] : s.terms) degrees.insert(key.second);
    auto dominated = [&](const IntVector& a, const IntVector& b) {
        if (a == b) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::vector<std::pair<IntVector, MixedSeries>> out;
    for (const auto& delta : degrees) {
        if (std::any_of(degrees.begin(), degrees.end(), [&](const IntVector& o) { return dominated(delta, o); }))
            continue;
        MixedSeries part = make_series(s.base, s.weight, s.truncation);
        for (const auto& [key, c] : s.terms)
            if (key.second == delta) part.add(key.first, IntVector(s.n(), 0), c);
        out.emplace_back(delta, std::move(part));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Numerics

std::complex<double> log_gamma(std::complex<double> z) {
    static const double coef[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                  771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                  -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const double pi = std::acos(-1.0);
    if (z.real() < 0.5) return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    z -= 1.0;
    std::complex<double> x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

std::complex<double> reciprocal_gamma(const GaussianRational& z) {
    if (z.is_integer() && sgn(z.re()) <= 0) return 0.0;
    return std::exp(-log_gamma(z.to_complex()));
}

Evaluation evaluate(const MixedSeries& s, const std::vector<std::complex<double>>& x, EvaluationMode mode,
                    double tolerance) {
    if (x.size() != s.n()) throw GkzError(ErrorCode::InvalidArgument, "evaluation point has wrong length");
    std::vector<std::complex<double>> logs;
    for (const auto& v : x) {
        if (v == 0.0) throw GkzError(ErrorCode::InvalidArgument, "evaluation point must avoid coordinate hyperplanes");
        logs.push_back(std::log(v));
    }
    std::complex<double> total = 0;
    std::map<Rational, std::complex<double>> shells;
    for (const auto& [key, c] : s.terms) {
        std::complex<double> expo = 0, logs_part = 1;
        for (std::size_t j = 0; j < s.n(); ++j) {
            std::complex<double> g = s.base[j].to_complex() + static_cast<double>(key.first[j]);
            expo += g * logs[j];
            for (std::int64_t t = 0; t < key.second[j]; ++t) logs_part *= logs[j];
        }
        std::complex<double> term = c.to_complex() * std::exp(expo) * logs_part;
        total += term;
        shells[s.offset_weight(key.first)] += term;
    }
    if (mode == EvaluationMode::GammaNormalized) {
        std::complex<double> factor = 1;
        for (const auto& a : s.base) factor *= reciprocal_gamma(a + GaussianRational(1));
        total *= factor;
        for (auto& [w, v] : shells) v *= factor;
    }
    Evaluation ev{total, shells.empty() ? 0.0 : std::abs(shells.rbegin()->second), true};
    ev.converged = ev.last_shell <= tolerance;
    return ev;
}

} // namespace gkz
