#pragma once

#include <cstdint>

#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"
#include "gkz/series.hpp"

namespace gkz {

/// ρ(A): a zero column is prepended to A and an all-ones row put on top.
struct HomogenizedSystem {
    IntegerMatrix rho;
    IntegerMatrix original;
    GaussianRational lift_parameter;
};

HomogenizedSystem homogenize_matrix(const IntegerMatrix& a);

/// (1, β).
GaussianVector homogenize_parameter(const GaussianVector& beta);

struct GenericLift {
    GaussianRational beta0;
    /// (β₀, β).
    GaussianVector lifted;
    std::size_t attempts = 0;
};

/// Samples β₀ = N + p/q with N uniform in [1000, 10000] and 0 < p < q ≤ 97,
/// resampling until no integrality condition of the ρ(A) arrangement (for
/// the lift (1, w + 1), equivalent to (0, w)) that involves the first coordinate holds at (β₀, β).
/// The chosen value is stored in `h.lift_parameter`.
GenericLift generic_lift(HomogenizedSystem& h, const GaussianVector& beta, const RationalVector& w,
                         std::uint64_t seed);

struct FaceInvariants {
    std::size_t codim = 0;
    Integer volume;
    Integer index;
    friend bool operator==(const FaceInvariants&, const FaceInvariants&) = default;
};

struct FaceComparison {
    FaceInvariants face;
    FaceInvariants lifted;
    bool preserved() const { return face == lifted; }
};

/// Codimension, volume and lattice index of F ⊆ A and of ρ(F) ⊆ ρ(A), where
/// ρ(F) contains the new zero column.
FaceComparison face_invariants_preserved(const IntegerMatrix& a, const ColumnSet& face);

/// Whether (1,…,1) lies in the closure of the Gröbner cone of I_A at w, the
/// stand-in for the support cone. A false result is a warning only: the
/// surrogate may be stricter than the true cone.
bool ones_in_weight_cone(const IntegerMatrix& a, const RationalVector& w);

/// 2^{2d}·vol(A) for homogeneous A, 2^{2d+2}·vol(A) otherwise.
Integer rank_upper_bound(const IntegerMatrix& a);

/// Sets x₀ = 1 in a series over n+1 variables: terms with a positive log(x₀)
/// degree vanish and the x₀ powers are dropped. The relative weight of the
/// remaining offsets is w_j − w₀, which keeps the truncation unchanged.
MixedSeries restrict_x0(const MixedSeries& psi);

/// Like restrict_x0 but each coefficient at offset u is multiplied by
/// (α₀+1)_{u₀} = Γ(α₀+u₀+1)/Γ(α₀+1). Log-free input only.
MixedSeries restrict_x0_gamma(const MixedSeries& psi);

} // namespace gkz
