#include "gkz/horn.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gkz/errors.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

namespace {

GaussianRational gi(std::int64_t v) { return GaussianRational(static_cast<long>(v)); }

std::string describe(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

GaussianRational factor_value(const HornSystem& h, const HornFactor& f, const GaussianVector& mu) {
    GaussianRational v = h.alpha[f.row] - gi(f.shift);
    for (std::size_t k = 0; k < h.m(); ++k)
        if (h.basis(f.row, k) != 0) v += gi(h.basis(f.row, k)) * mu[k];
    return v;
}

GaussianVector lift(const IntVector& mu) {
    GaussianVector out;
    for (auto x : mu) out.push_back(gi(x));
    return out;
}

[[noreturn]] void pole(const HornSystem& h, const HornPolynomial& q, const GaussianVector& mu, const IntVector& at) {
    for (const auto& f : q.factors)
        if (factor_value(h, f, mu).is_zero())
            throw GkzError(ErrorCode::PoleHit, "denominator factor of row " + std::to_string(f.row) +
                                                   " with shift " + std::to_string(f.shift) + " vanishes at mu=" +
                                                   describe(at));
    throw GkzError(ErrorCode::PoleHit, "denominator vanishes at mu=" + describe(at));
}

void check_system(const HornSystem& h) {
    if (h.alpha.size() != h.n()) throw GkzError(ErrorCode::InvalidArgument, "alpha has wrong length");
}

} // namespace

GaussianRational HornPolynomial::evaluate(const HornSystem& h, const GaussianVector& mu) const {
    GaussianRational v(1);
    for (const auto& f : factors) v *= factor_value(h, f, mu);
    return v;
}

GaussianRational HornPolynomial::evaluate(const HornSystem& h, const IntVector& mu) const {
    return evaluate(h, lift(mu));
}

std::pair<HornPolynomial, HornPolynomial> horn_polynomials(const HornSystem& h, std::size_t k) {
    check_system(h);
    if (k >= h.m()) throw GkzError(ErrorCode::InvalidArgument, "kernel column out of range");
    HornPolynomial p, q;
    for (std::size_t j = 0; j < h.n(); ++j) {
        std::int64_t b = h.basis(j, k);
        auto& target = b > 0 ? p : q;
        for (std::int64_t l = 0; l < std::abs(b); ++l) target.factors.push_back(HornFactor{j, l});
    }
    return {p, q};
}

GaussianRational horn_coefficient(const HornSystem& h, const IntVector& mu) {
    check_system(h);
    if (mu.size() != h.m()) throw GkzError(ErrorCode::InvalidArgument, "index has wrong length");
    GaussianRational r(1);
    IntVector point(h.m(), 0);
    for (std::size_t k = 0; k < h.m(); ++k) {
        if (mu[k] < 0) throw GkzError(ErrorCode::InvalidArgument, "index must be non-negative");
        auto [p, q] = horn_polynomials(h, k);
        for (std::int64_t j = 0; j < mu[k]; ++j) {
            point[k] = j;
            GaussianRational num = p.evaluate(h, point);
            point[k] = j + 1;
            GaussianVector at = lift(point);
            GaussianRational den = q.evaluate(h, at);
            if (den.is_zero()) pole(h, q, at, point);
            r *= num / den;
        }
        point[k] = mu[k];
    }
    return r;
}

MixedSeries horn_series(const HornSystem& h, std::int64_t truncation) {
    check_system(h);
    const std::size_t m = h.m();
    MixedSeries out = make_series(GaussianVector(m), RationalVector(m, Rational(1)), Rational(truncation));
    if (truncation < 0) return out;
    IntVector mu(m, 0), zero(m, 0);
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t k, std::int64_t left) {
        if (k == m) {
            out.add(mu, zero, horn_coefficient(h, mu));
            return;
        }
        for (mu[k] = 0; mu[k] <= left; ++mu[k]) walk(k + 1, left - mu[k]);
        mu[k] = 0;
    };
    walk(0, truncation);
    return out;
}

MixedSeries horn_operator_apply(const MixedSeries& f, const HornSystem& h, std::size_t k) {
    if (!f.is_log_free()) throw GkzError(ErrorCode::LogTermsPresent, "Horn operator needs a log-free series");
    if (f.n() != h.m()) throw GkzError(ErrorCode::InvalidArgument, "series has wrong number of variables");
    auto [p, q] = horn_polynomials(h, k);
    MixedSeries out = make_series(f.base, f.weight, f.truncation);
    for (const auto& [key, c] : f.terms) {
        GaussianVector exponent = f.base;
        for (std::size_t i = 0; i < exponent.size(); ++i) exponent[i] += gi(key.first[i]);
        out.add(key.first, key.second, c * q.evaluate(h, exponent));
        IntVector up = key.first;
        ++up[k];
        if (out.offset_weight(up) <= out.truncation) out.add(up, key.second, -(c * p.evaluate(h, exponent)));
    }
    return out;
}

CoefficientMap solve_recurrence(const HornSystem& h, std::size_t k, const CoefficientMap& g,
                                const CoefficientMap& initial, std::int64_t length) {
    auto [p, q] = horn_polynomials(h, k);
    auto g_at = [&](const IntVector& eta) {
        auto it = g.find(eta);
        return it == g.end() ? GaussianRational{} : it->second;
    };
    CoefficientMap out;
    for (const auto& [start, value] : initial) {
        if (start.size() != h.m() || start[k] != 0)
            throw GkzError(ErrorCode::InvalidArgument, "initial values must have k-th coordinate 0");
        IntVector eta = start;
        std::vector<GaussianRational> pv, qv;
        bool closed = true;
        for (std::int64_t l = 0; l < length; ++l) {
            eta[k] = l;
            pv.push_back(p.evaluate(h, eta));
            eta[k] = l + 1;
            GaussianVector at = lift(eta);
            qv.push_back(q.evaluate(h, at));
            if (qv.back().is_zero()) pole(h, q, at, eta);
            if (pv.back().is_zero()) closed = false;
        }
        std::vector<GaussianRational> line(length + 1);
        line[0] = value;
        if (closed) {
            // f_t = Π_t (f_0 + Σ_{j<t} g_{j+1} / (Q(j+1) Π_{j+1})), Π_t = ∏_{l<t} P(l)/Q(l+1).
            GaussianRational prod(1), acc = value;
            for (std::int64_t t = 0; t < length; ++t) {
                prod *= pv[t] / qv[t];
                eta[k] = t + 1;
                acc += g_at(eta) / (qv[t] * prod);
                line[t + 1] = prod * acc;
            }
        } else {
            for (std::int64_t t = 0; t < length; ++t) {
                eta[k] = t + 1;
                line[t + 1] = (g_at(eta) + pv[t] * line[t]) / qv[t];
            }
        }
        for (std::int64_t t = 0; t < length; ++t) {
            eta[k] = t + 1;
            if (!(qv[t] * line[t + 1] - pv[t] * line[t] == g_at(eta)))
                throw GkzError(ErrorCode::InconsistentSystem, "recurrence check failed");
        }
        for (std::int64_t t = 0; t <= length; ++t) {
            eta[k] = t;
            out[eta] = line[t];
        }
    }
    return out;
}

namespace {

std::vector<IntVector> monomials_up_to(std::size_t vars, std::int64_t degree) {
    std::vector<IntVector> out;
    IntVector e(vars, 0);
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t left) {
        if (i == vars) {
            out.push_back(e);
            return;
        }
        for (e[i] = 0; e[i] <= left; ++e[i]) walk(i + 1, left - e[i]);
        e[i] = 0;
    };
    walk(0, degree);
    return out;
}

std::int64_t total(const IntVector& v) {
    std::int64_t s = 0;
    for (auto x : v) s += x;
    return s;
}

} // namespace

MixedSeries dehomogenize(const MixedSeries& phi, const IntMatrix& basis) {
    const std::size_t n = basis.rows(), m = basis.cols();
    if (phi.n() != n) throw GkzError(ErrorCode::InvalidArgument, "series has wrong number of variables");
    linalg::Matrix<Rational> bq(n, RationalVector(m));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) bq[j][k] = Rational(static_cast<long>(basis(j, k)));
    RationalVector zw(m);
    for (std::size_t k = 0; k < m; ++k) zw[k] = dot(phi.weight, basis.column(k));
    MixedSeries out = make_series(GaussianVector(m), zw, phi.truncation);

    for (const auto& [offset, poly] : phi.by_offset()) {
        RationalVector rhs;
        for (auto x : offset) rhs.emplace_back(static_cast<long>(x));
        auto nu_q = linalg::solve(bq, rhs, m);
        if (!nu_q) throw GkzError(ErrorCode::InvalidArgument, "offset " + describe(offset) + " is not in the lattice");
        IntVector nu;
        for (auto& x : *nu_q) {
            if (x.get_den() != 1) throw GkzError(ErrorCode::InvalidArgument, "offset " + describe(offset) + " is not in the lattice");
            nu.push_back(x.get_num().get_si());
        }
        std::int64_t degree = 0;
        for (const auto& [deg, c] : poly) degree = std::max(degree, total(deg));
        // Unknown coefficients of q on s-monomials; one equation per y-monomial.
        auto unknowns = monomials_up_to(m, degree);
        auto rows = monomials_up_to(n, degree);
        std::map<IntVector, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
        linalg::Matrix<GaussianRational> sys(rows.size(), GaussianVector(unknowns.size()));
        for (std::size_t c = 0; c < unknowns.size(); ++c)
            for (const auto& [deg, v] : expand_kernel_monomial(basis, unknowns[c])) sys[row_index.at(deg)][c] = v;
        GaussianVector target(rows.size());
        for (const auto& [deg, v] : poly) target[row_index.at(deg)] = v;
        auto sol = linalg::solve(sys, target, unknowns.size());
        if (!sol)
            throw GkzError(ErrorCode::NotInSymmetricAlgebra,
                           "log polynomial at offset " + describe(offset) + " is not a polynomial in log z");
        for (std::size_t c = 0; c < unknowns.size(); ++c) out.add(nu, unknowns[c], (*sol)[c]);
    }
    return out;
}

MixedSeries rehomogenize(const MixedSeries& f, const IntMatrix& basis, const GaussianVector& alpha,
                         const RationalVector& w) {
    if (f.n() != basis.cols()) throw GkzError(ErrorCode::InvalidArgument, "series has wrong number of variables");
    if (alpha.size() != basis.rows() || w.size() != basis.rows())
        throw GkzError(ErrorCode::InvalidArgument, "exponent or weight has wrong length");
    if (!std::all_of(f.base.begin(), f.base.end(), [](const auto& z) { return z.is_zero(); }))
        throw GkzError(ErrorCode::InvalidArgument, "z-series must have zero base");
    MixedSeries out = make_series(alpha, w, f.truncation);
    for (const auto& [key, c] : f.terms) {
        IntVector u = basis.multiply(key.first);
        for (const auto& [deg, v] : expand_kernel_monomial(basis, key.second)) out.add(u, deg, c * v);
    }
    return out;
}

} // namespace gkz
