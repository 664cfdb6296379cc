#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gkz/rational.hpp"

namespace gkz {

using ColumnSet = std::vector<std::size_t>;

/// Plain dense integer matrix, row major. No invariants.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty = 0);
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows_if_empty = 0);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    std::vector<IntVector> to_rows() const;
    std::vector<IntVector> to_columns() const;
    IntMatrix transpose() const;
    IntMatrix select_columns(const ColumnSet& idx) const;
    IntVector multiply(const IntVector& v) const;
    IntMatrix multiply(const IntMatrix& other) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Rank over ℚ.
std::size_t rank(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows:
/// echelon, positive pivots, entries above a pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result is the unique HNF basis.
std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> rows);

/// ℤ-basis of {x ∈ ℤ^cols : m x = 0}, as columns, in canonical (Hermite)
/// form. Works for any integer matrix.
IntMatrix integer_kernel(const IntMatrix& m);

/// The configuration matrix A: d×n, rank d, columns spanning ℤ^d.
class IntegerMatrix {
public:
    /// Throws GkzError(InvalidMatrix) when an invariant fails.
    explicit IntegerMatrix(IntMatrix m);
    static IntegerMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t d() const { return m_.rows(); }
    std::size_t n() const { return m_.cols(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    IntVector column(std::size_t j) const { return m_.column(j); }
    const IntMatrix& matrix() const { return m_; }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    IntMatrix m_;
};

/// Columns b_1..b_m form a ℤ-basis of ker_ℤ(A); row j is B_j.
struct KernelBasis {
    IntMatrix B;

    std::size_t n() const { return B.rows(); }
    std::size_t m() const { return B.cols(); }
    IntVector column(std::size_t k) const { return B.column(k); }
    IntVector row(std::size_t j) const { return B.row(j); }
    /// u = B ν.
    IntVector combine(const IntVector& nu) const { return B.multiply(nu); }
    /// ν with B ν = u, or nullopt if u is not in the lattice.
    std::optional<IntVector> coordinates(const IntVector& u) const;
};

KernelBasis kernel_lattice_basis(const IntegerMatrix& a);

/// Normalized volume of conv({0} ∪ F) measured in the lattice ℤF, where F is
/// the given set of columns. For homogeneous A this is the usual normalized
/// volume of conv(F).
Integer normalized_volume(const IntegerMatrix& a, const ColumnSet& face);
Integer normalized_volume(const IntegerMatrix& a);

/// Primitive integer normal of a codimension-one span in ℤ^dim, sign fixed
/// so that the first nonzero coordinate is positive.
IntVector primitive_normal(const std::vector<IntVector>& spanning, std::size_t dim);

/// [ℤA ∩ ℝF : ℤF].
Integer lattice_index(const IntegerMatrix& a, const ColumnSet& face);

/// ℤ-basis λ_1..λ_m of the full-rank lattice L ⊆ ℤ^m spanned by the columns
/// of the square matrix `lattice`, chosen so that its ℕ-span
/// contains K ∩ L, where K is the cone generated by `generators`. When
/// `functional` is given, a basis with functional·λ_i > 0 for every i is
/// required, which makes ℕ-enumeration along the basis finite.
IntMatrix adapted_lattice_basis(const std::vector<RationalVector>& generators, const IntMatrix& lattice,
                                const std::optional<RationalVector>& functional = std::nullopt);

/// One cell of a regular subdivision of a homogeneous point configuration,
/// together with the linear functional interpolating the lift on it.
struct LowerCell {
    ColumnSet vertices;
    RationalVector functional;
};

/// Cells of the regular triangulation of the columns of `points` (assumed to
/// lie on a common affine hyperplane or to be treated conically) induced by
/// `lift`: a full-rank subset σ is a cell iff the functional c with
/// c·p_i = lift_i on σ satisfies c·p_j < lift_j off σ. Returns nullopt when
/// a tie c·p_j = lift_j occurs (non-generic lift).
std::optional<std::vector<LowerCell>> lower_hull_cells(const IntMatrix& points, const RationalVector& lift);

/// Absolute determinant of a square integer matrix.
Integer abs_determinant(const IntMatrix& m);

} // namespace gkz
