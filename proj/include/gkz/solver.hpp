#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"
#include "gkz/series.hpp"
#include "gkz/toric.hpp"

namespace gkz {

/// Everything about (A, w) that does not depend on the parameter.
struct SeriesContext {
    IntegerMatrix a;
    RationalVector w;
    KernelBasis kernel;
    /// Reduced Gröbner basis of I_A refining w, leading terms first.
    std::vector<Binomial> groebner;
    MonomialIdeal initial;
    std::vector<StandardPair> pairs;
    /// Columns λ_k (in ℤ^n) of a basis of ker_ℤ(A) whose ℕ-span contains the
    /// support cone, with w·λ_k > 0.
    IntMatrix cone_basis;
};

SeriesContext make_context(const IntegerMatrix& a, const RationalVector& w);

struct FakeExponent {
    GaussianVector alpha;
    ColumnSet sigma;
    StandardPair source_pair;
    std::size_t multiplicity = 1;
    bool top_dimensional = true;
};

struct ExponentReport {
    std::vector<FakeExponent> exponents;
    std::vector<StandardPair> inconsistent;
};

ExponentReport fake_exponents(const SeriesContext& ctx, const GaussianVector& beta);

/// Negative support {i : α_i ∈ ℤ_{<0}}.
ColumnSet negative_support(const GaussianVector& alpha);

/// Semi-decision up to weight T: no ±u from the support enumeration strictly
/// shrinks the negative support.
bool minimal_negative_support(const SeriesContext& ctx, const GaussianVector& alpha, const Rational& bound);

/// Explicit logarithm-free series at α.
MixedSeries log_free_series(const SeriesContext& ctx, const GaussianVector& alpha, const Rational& bound);

/// A canonical series together with its starting term, stored as the
/// exponent of the starting monomial in s_k = log(x^{b_k}).
struct CanonicalSolution {
    MixedSeries series;
    IntVector start_degree;
};

/// Canonical series solutions of H_A(β) truncated at relative weight T.
std::vector<CanonicalSolution> canonical_series(const SeriesContext& ctx, const GaussianVector& beta,
                                                const Rational& bound);

/// Largest coefficient (max of |re|, |im|) of the residual terms that lie in
/// the range where the truncation is complete. Zero for solutions.
Rational residual(const MixedSeries& s, const SeriesContext& ctx, const GaussianVector& beta);

/// Re-solves at α' (α'_j = value, other coordinates unchanged) and returns
/// the canonical series with the same exponent shape and start term.
CanonicalSolution perturb_exponent(const SeriesContext& ctx, const CanonicalSolution& s, std::size_t j,
                                   const GaussianRational& value);

/// Termwise ∂_j^{-1}; the result solves H_A(β + a_j).
MixedSeries antiderivative_solution(const MixedSeries& s, std::size_t j);

/// φ_δ for every componentwise-maximal log degree δ present in φ.
std::vector<std::pair<IntVector, MixedSeries>> maximal_log_terms(const MixedSeries& s);

enum class EvaluationMode { Plain, GammaNormalized };

struct Evaluation {
    std::complex<double> value;
    /// Magnitude of the contribution of the highest weight shell.
    double last_shell = 0;
    bool converged = true;
};

Evaluation evaluate(const MixedSeries& s, const std::vector<std::complex<double>>& x, EvaluationMode mode,
                    double tolerance = 1e-12);

/// log Γ(z) for complex z (principal branch up to multiples of 2πi).
std::complex<double> log_gamma(std::complex<double> z);

/// 1/Γ(z), zero at the poles.
std::complex<double> reciprocal_gamma(const GaussianRational& z);

} // namespace gkz
