#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"
#include "gkz/series.hpp"

namespace gkz {

/// Kernel basis B (n × m) together with the exponent α it twists.
struct HornSystem {
    IntMatrix basis;
    GaussianVector alpha;

    std::size_t n() const { return basis.rows(); }
    std::size_t m() const { return basis.cols(); }
};

/// The affine form B_j·μ + α_j − shift in μ.
struct HornFactor {
    std::size_t row = 0;
    std::int64_t shift = 0;
};

/// A product of HornFactors.
struct HornPolynomial {
    std::vector<HornFactor> factors;

    GaussianRational evaluate(const HornSystem& h, const GaussianVector& mu) const;
    GaussianRational evaluate(const HornSystem& h, const IntVector& mu) const;
};

/// (P_k, Q_k) for column k (0-based): P collects B_j·μ + α_j − ℓ for
/// ℓ < b_jk over b_jk > 0, Q the same over b_jk < 0 with |b_jk| factors.
std::pair<HornPolynomial, HornPolynomial> horn_polynomials(const HornSystem& h, std::size_t k);

/// Coefficient R_μ of the Horn series. Throws PoleHit when a denominator
/// factor vanishes.
GaussianRational horn_coefficient(const HornSystem& h, const IntVector& mu);

/// Σ_{|μ| ≤ T} R_μ z^μ as a series in m variables with unit weights.
MixedSeries horn_series(const HornSystem& h, std::int64_t truncation);

/// (Q_k(θ) − z_k P_k(θ)) F for a log-free z-series F; θ acts on the full
/// exponent base + μ.
MixedSeries horn_operator_apply(const MixedSeries& f, const HornSystem& h, std::size_t k);

using CoefficientMap = std::map<IntVector, GaussianRational>;

/// Solves Q_k(η+e_k) f_{η+e_k} − P_k(η) f_η = g_{η+e_k} along direction k
/// for η_k < length, starting from the values in `initial` (whose k-th
/// coordinate must be 0). Missing g entries are zero. Uses the product
/// formula when every P_k factor along a line is nonzero and the forward
/// recurrence otherwise; the result is checked against the recurrence.
CoefficientMap solve_recurrence(const HornSystem& h, std::size_t k, const CoefficientMap& g,
                                const CoefficientMap& initial, std::int64_t length);

/// φ = x^α F(x^{b_1}, …, x^{b_m}) ↦ F. Offsets must lie in the column span
/// of `basis` and every log polynomial must be a polynomial in
/// s_k = b_k·log x (NotInSymmetricAlgebra otherwise). The z-series gets
/// weight Bᵀw and the same truncation.
MixedSeries dehomogenize(const MixedSeries& phi, const IntMatrix& basis);

/// Inverse of dehomogenize.
MixedSeries rehomogenize(const MixedSeries& f, const IntMatrix& basis, const GaussianVector& alpha,
                         const RationalVector& w);

} // namespace gkz
