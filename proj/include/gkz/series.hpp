#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"

namespace gkz {

/// Offset u relative to the base exponent and log multi-degree δ; the term
/// is x^(α+u) · log(x)^δ.
using TermKey = std::pair<IntVector, IntVector>;

/// Truncated Nilsson series x^α Σ_u p_u(log x) x^u. The series is known to be
/// complete for offsets with w·u ≤ truncation; no stored offset exceeds it.
struct MixedSeries {
    GaussianVector base;
    std::map<TermKey, GaussianRational> terms;
    Rational truncation{0};
    RationalVector weight;

    std::size_t n() const { return base.size(); }
    /// Adds c to the coefficient of the given term; zero results are erased.
    void add(const IntVector& offset, const IntVector& log_degree, const GaussianRational& c);
    GaussianRational coefficient(const IntVector& offset, const IntVector& log_degree) const;
    bool is_log_free() const;
    bool is_zero() const { return terms.empty(); }
    /// Largest total log degree present.
    std::int64_t log_degree() const;
    Rational offset_weight(const IntVector& offset) const { return dot(weight, offset); }
    /// Drops every term with offset weight above `bound` and lowers the
    /// truncation accordingly.
    MixedSeries truncated(const Rational& bound) const;
    /// max(|re|, |im|) over all coefficients.
    Rational max_abs() const;
    /// The series as the map log degree → polynomial coefficient grouped by
    /// offset.
    std::map<IntVector, std::map<IntVector, GaussianRational>> by_offset() const;
};

MixedSeries make_series(GaussianVector base, RationalVector weight, Rational truncation);

/// Sum of two series over the same base; the truncation is the smaller one.
MixedSeries add(const MixedSeries& a, const MixedSeries& b);
MixedSeries scale(const MixedSeries& s, const GaussianRational& c);

/// Action of x^a ∂^b on every mixed monomial. The truncation moves by
/// w·(a − b).
MixedSeries apply_weyl_monomial(const MixedSeries& s, const IntVector& a, const IntVector& b);

/// (E_i − β_i) applied to s.
MixedSeries apply_euler(const MixedSeries& s, const IntegerMatrix& a, std::size_t row, const GaussianRational& beta_i);

/// Log polynomial in n variables: log degree → coefficient.
using LogPolynomial = std::map<IntVector, GaussianRational>;

/// (Σ_j b_j1 y_j)^e_1 ⋯ (Σ_j b_jm y_j)^e_m as a polynomial in the log
/// variables y, where b_k are the columns of `basis`.
LogPolynomial expand_kernel_monomial(const IntMatrix& basis, const IntVector& e);

/// The unique q with ∂_j x_j x^γ q(log x) = x^γ p(log x); requires γ_j ≠ −1.
LogPolynomial log_antiderivative(const GaussianVector& gamma, const LogPolynomial& p, std::size_t j);

/// Termwise ∂_j^{-1}: the result has base α + e_j and the same offsets.
/// Throws ExponentMinusOne if some α_j + u_j = −1.
MixedSeries log_antiderivative(const MixedSeries& s, std::size_t j);

/// Coefficientwise product on matching offsets. Both inputs must be log
/// free; the base of the first factor is kept.
MixedSeries hadamard_product(const MixedSeries& a, const MixedSeries& b);

struct InitialSeries {
    MixedSeries terms;
    Rational weight;
};

/// Terms of minimal Re((α+u)·w), and that minimum.
InitialSeries initial_series(const MixedSeries& s, const RationalVector& w);

/// u = Bν for ν ∈ ℕ^m with w·u ≤ T, ordered by weight then lexicographically.
/// Requires w·b_k > 0 for every basis column.
std::vector<IntVector> enumerate_support(const IntMatrix& basis, const RationalVector& w, const Rational& bound);

} // namespace gkz
