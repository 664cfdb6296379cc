#include "gkz/series.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "gkz/errors.hpp"

namespace gkz {

void MixedSeries::add(const IntVector& offset, const IntVector& log_degree, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto key = TermKey{offset, log_degree};
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

GaussianRational MixedSeries::coefficient(const IntVector& offset, const IntVector& log_degree) const {
    auto it = terms.find(TermKey{offset, log_degree});
    return it == terms.end() ? GaussianRational{} : it->second;
}

bool MixedSeries::is_log_free() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) {
        return std::all_of(t.first.second.begin(), t.first.second.end(), [](auto x) { return x == 0; });
    });
}

std::int64_t MixedSeries::log_degree() const {
    std::int64_t best = 0;
    for (const auto& [key, c] : terms) {
        std::int64_t s = 0;
        for (auto x : key.second) s += x;
        best = std::max(best, s);
    }
    return best;
}

MixedSeries MixedSeries::truncated(const Rational& bound) const {
    MixedSeries out = make_series(base, weight, std::min(truncation, bound));
    for (const auto& [key, c] : terms)
        if (offset_weight(key.first) <= out.truncation) out.terms.emplace(key, c);
    return out;
}

Rational MixedSeries::max_abs() const {
    Rational best = 0;
    for (const auto& [key, c] : terms) best = std::max(best, c.max_abs());
    return best;
}

std::map<IntVector, std::map<IntVector, GaussianRational>> MixedSeries::by_offset() const {
    std::map<IntVector, std::map<IntVector, GaussianRational>> out;
    for (const auto& [key, c] : terms) out[key.first][key.second] = c;
    return out;
}

MixedSeries make_series(GaussianVector base, RationalVector weight, Rational truncation) {
    MixedSeries s;
    s.base = std::move(base);
    s.weight = std::move(weight);
    s.truncation = std::move(truncation);
    return s;
}

MixedSeries add(const MixedSeries& a, const MixedSeries& b) {
    if (a.base != b.base) throw GkzError(ErrorCode::InvalidArgument, "series have different base exponents");
    MixedSeries out = a.truncated(b.truncation);
    for (const auto& [key, c] : b.terms)
        if (b.offset_weight(key.first) <= out.truncation) out.add(key.first, key.second, c);
    return out;
}

MixedSeries scale(const MixedSeries& s, const GaussianRational& c) {
    MixedSeries out = make_series(s.base, s.weight, s.truncation);
    for (const auto& [key, v] : s.terms) out.add(key.first, key.second, v * c);
    return out;
}

namespace {

// ∂_j applied once to every term.
MixedSeries differentiate(const MixedSeries& s, std::size_t j) {
    MixedSeries out = make_series(s.base, s.weight, s.truncation - s.weight[j]);
    for (const auto& [key, c] : s.terms) {
        IntVector offset = key.first;
        GaussianRational exponent = s.base[j] + GaussianRational(static_cast<long>(offset[j]));
        --offset[j];
        out.add(offset, key.second, c * exponent);
        if (key.second[j] > 0) {
            IntVector lower = key.second;
            --lower[j];
            out.add(offset, lower, c * GaussianRational(static_cast<long>(key.second[j])));
        }
    }
    return out;
}

} // namespace

MixedSeries apply_weyl_monomial(const MixedSeries& s, const IntVector& a, const IntVector& b) {
    MixedSeries cur = s;
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::int64_t k = 0; k < b[j]; ++k) cur = differentiate(cur, j);
    if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) return cur;
    MixedSeries out = make_series(cur.base, cur.weight, cur.truncation + dot(cur.weight, a));
    for (const auto& [key, c] : cur.terms) {
        IntVector offset = key.first;
        for (std::size_t j = 0; j < a.size(); ++j) offset[j] += a[j];
        out.terms.emplace(TermKey{offset, key.second}, c);
    }
    return out;
}

MixedSeries apply_euler(const MixedSeries& s, const IntegerMatrix& a, std::size_t row, const GaussianRational& beta_i) {
    MixedSeries out = make_series(s.base, s.weight, s.truncation);
    for (const auto& [key, c] : s.terms) {
        GaussianRational eigen = -beta_i;
        for (std::size_t j = 0; j < s.n(); ++j) {
            std::int64_t aij = a(row, j);
            if (aij == 0) continue;
            eigen += GaussianRational(static_cast<long>(aij)) *
                     (s.base[j] + GaussianRational(static_cast<long>(key.first[j])));
            if (key.second[j] > 0) {
                IntVector lower = key.second;
                --lower[j];
                out.add(key.first, lower, c * GaussianRational(static_cast<long>(aij * key.second[j])));
            }
        }
        out.add(key.first, key.second, c * eigen);
    }
    return out;
}

LogPolynomial expand_kernel_monomial(const IntMatrix& basis, const IntVector& e) {
    const std::size_t n = basis.rows();
    LogPolynomial result{{IntVector(n, 0), GaussianRational(1)}};
    for (std::size_t k = 0; k < e.size(); ++k) {
        for (std::int64_t t = 0; t < e[k]; ++t) {
            LogPolynomial next;
            for (const auto& [deg, c] : result)
                for (std::size_t j = 0; j < n; ++j) {
                    if (basis(j, k) == 0) continue;
                    IntVector up = deg;
                    ++up[j];
                    next[up] += c * GaussianRational(static_cast<long>(basis(j, k)));
                }
            for (auto it = next.begin(); it != next.end();)
                it = it->second.is_zero() ? next.erase(it) : std::next(it);
            result = std::move(next);
        }
    }
    return result;
}

LogPolynomial log_antiderivative(const GaussianVector& gamma, const LogPolynomial& p, std::size_t j) {
    GaussianRational shifted = gamma[j] + GaussianRational(1);
    if (shifted.is_zero()) throw GkzError(ErrorCode::ExponentMinusOne, "exponent coordinate equals -1");
    // (γ_j+1) q + ∂q/∂y_j = p, so q = Σ_k (−1)^k ∂^k p / (γ_j+1)^(k+1).
    LogPolynomial q;
    LogPolynomial term = p;
    GaussianRational factor = GaussianRational(1) / shifted;
    while (!term.empty()) {
        for (const auto& [deg, c] : term) {
            auto& slot = q[deg];
            slot += c * factor;
            if (slot.is_zero()) q.erase(deg);
        }
        LogPolynomial next;
        for (const auto& [deg, c] : term) {
            if (deg[j] == 0) continue;
            IntVector lower = deg;
            --lower[j];
            next[lower] += c * GaussianRational(static_cast<long>(deg[j]));
        }
        term = std::move(next);
        factor = -factor / shifted;
    }
    return q;
}

MixedSeries log_antiderivative(const MixedSeries& s, std::size_t j) {
    GaussianVector base = s.base;
    base[j] += GaussianRational(1);
    MixedSeries out = make_series(base, s.weight, s.truncation);
    for (const auto& [offset, poly] : s.by_offset()) {
        GaussianVector gamma = s.base;
        for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] += GaussianRational(static_cast<long>(offset[i]));
        for (const auto& [deg, c] : log_antiderivative(gamma, poly, j)) out.add(offset, deg, c);
    }
    return out;
}

MixedSeries hadamard_product(const MixedSeries& a, const MixedSeries& b) {
    if (!a.is_log_free() || !b.is_log_free())
        throw GkzError(ErrorCode::LogTermsPresent, "Hadamard product needs log-free series");
    MixedSeries out = make_series(a.base, a.weight, std::min(a.truncation, b.truncation));
    for (const auto& [key, c] : a.terms) {
        auto it = b.terms.find(key);
        if (it != b.terms.end() && a.offset_weight(key.first) <= out.truncation)
            out.add(key.first, key.second, c * it->second);
    }
    return out;
}

InitialSeries initial_series(const MixedSeries& s, const RationalVector& w) {
    if (s.terms.empty()) throw GkzError(ErrorCode::EmptySeries, "series has no terms");
    Rational base_weight = 0;
    for (std::size_t j = 0; j < s.n(); ++j) base_weight += s.base[j].re() * w[j];
    std::optional<Rational> best;
    for (const auto& [key, c] : s.terms) {
        Rational v = base_weight + dot(w, key.first);
        if (!best || v < *best) best = v;
    }
    InitialSeries out{make_series(s.base, s.weight, s.truncation), *best};
    for (const auto& [key, c] : s.terms)
        if (base_weight + dot(w, key.first) == *best) out.terms.terms.emplace(key, c);
    return out;
}

std::vector<IntVector> enumerate_support(const IntMatrix& basis, const RationalVector& w, const Rational& bound) {
    const std::size_t n = basis.rows(), m = basis.cols();
    std::vector<IntVector> out;
    if (sgn(bound) < 0) return out;
    std::vector<Rational> step(m);
    for (std::size_t k = 0; k < m; ++k) {
        step[k] = dot(w, basis.column(k));
        if (sgn(step[k]) <= 0)
            throw GkzError(ErrorCode::InvalidArgument, "basis column has non-positive weight");
    }
    IntVector nu(m, 0);
    std::function<void(std::size_t, Rational)> walk = [&](std::size_t k, Rational used) {
        if (k == m) {
            out.push_back(basis.multiply(nu));
            return;
        }
        for (nu[k] = 0; used + step[k] * static_cast<long>(nu[k]) <= bound; ++nu[k])
            walk(k + 1, used + step[k] * static_cast<long>(nu[k]));
        nu[k] = 0;
    };
    if (m == 0) {
        out.push_back(IntVector(n, 0));
        return out;
    }
    walk(0, Rational(0));
    std::sort(out.begin(), out.end(), [&](const IntVector& a, const IntVector& b) {
        Rational wa = dot(w, a), wb = dot(w, b);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return out;
}

} // namespace gkz
