#include "gkz/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "gkz/errors.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

using IntegerRows = std::vector<std::vector<Integer>>;

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty) {
    std::size_t c = rows.empty() ? cols_if_empty : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw GkzError(ErrorCode::InvalidMatrix, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows_if_empty) {
    std::size_t r = cols.empty() ? rows_if_empty : cols[0].size();
    IntMatrix m(r, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != r) throw GkzError(ErrorCode::InvalidMatrix, "ragged matrix columns");
        for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<IntVector> IntMatrix::to_rows() const {
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

std::vector<IntVector> IntMatrix::to_columns() const {
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::select_columns(const ColumnSet& idx) const {
    IntMatrix s(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) s(i, k) = (*this)(i, idx[k]);
    return s;
}

IntVector IntMatrix::multiply(const IntVector& v) const {
    IntVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            auto a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

linalg::Matrix<Rational> to_rational(const IntMatrix& m) {
    linalg::Matrix<Rational> r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = static_cast<long>(m(i, j));
    return r;
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw GkzError(ErrorCode::InvalidArgument, "integer overflow: " + z.get_str());
    return z.get_si();
}

// Echelonizes the first `prefix` columns of `rows` with unimodular row
// operations (gcd steps on integers). Returns the number of pivot rows; the
// remaining rows have a zero prefix. Pivots are made positive and entries
// above pivots are reduced into [0, pivot).
std::size_t echelon_prefix(IntegerRows& rows, std::size_t prefix) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < prefix && r < rows.size(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t k = c; k < rows[i].size(); ++k) rows[i][k] -= q * rows[r][k];
                if (rows[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (r >= rows.size() || rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (auto& e : rows[r]) e = -e;
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t k = c; k < rows[i].size(); ++k) rows[i][k] -= q * rows[r][k];
        }
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return linalg::rank(to_rational(m));
}

IntegerRows hermite_rows(IntegerRows rows) {
    if (rows.empty()) return rows;
    std::size_t r = echelon_prefix(rows, rows[0].size());
    rows.resize(r);
    return rows;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const std::size_t r = m.rows(), n = m.cols();
    IntegerRows aug(n, std::vector<Integer>(r + n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < r; ++i) aug[j][i] = static_cast<long>(m(i, j));
        aug[j][r + j] = 1;
    }
    std::size_t piv = echelon_prefix(aug, r);
    IntegerRows kernel;
    for (std::size_t i = piv; i < n; ++i) kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(r), aug[i].end());
    kernel = hermite_rows(std::move(kernel));
    IntMatrix out(n, kernel.size());
    for (std::size_t k = 0; k < kernel.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) out(j, k) = to_int64(kernel[k][j]);
    return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& input) {
    const std::size_t rows = input.rows(), cols = input.cols();
    IntegerRows a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(input(i, j));

    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pick the smallest nonzero entry of the trailing block as pivot.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        std::swap(a[t], a[pi]);
        for (auto& row : a) std::swap(row[t], row[pj]);

        while (true) {
            bool changed = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    changed = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    changed = true;
                }
            }
            if (changed) continue;
            // Divisibility: fold a non-divisible row into the pivot row.
            bool folded = false;
            for (std::size_t i = t + 1; i < rows && !folded; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        folded = true;
                        break;
                    }
            if (!folded) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

Integer abs_determinant(const IntMatrix& m) {
    auto r = to_rational(m);
    const std::size_t n = r.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(r[p][c]) == 0) ++p;
        if (p == n) return 0;
        std::swap(r[p], r[c]);
        det *= r[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(r[i][c]) == 0) continue;
            Rational f = r[i][c] / r[c][c];
            for (std::size_t k = c; k < n; ++k) r[i][k] -= f * r[c][k];
        }
    }
    return abs(det.get_num());
}

// ---------------------------------------------------------------------------
// IntegerMatrix / KernelBasis

IntegerMatrix::IntegerMatrix(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.cols() == 0) throw GkzError(ErrorCode::InvalidMatrix, "matrix must be nonempty");
    if (rank(m_) != m_.rows())
        throw GkzError(ErrorCode::InvalidMatrix, "matrix does not have full row rank");
    auto inv = smith_invariants(m_);
    if (inv.size() != m_.rows() || std::any_of(inv.begin(), inv.end(), [](const Integer& z) { return z != 1; }))
        throw GkzError(ErrorCode::InvalidMatrix, "columns do not span the integer lattice");
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows) {
    return IntegerMatrix(IntMatrix::from_rows(rows));
}

std::optional<IntVector> KernelBasis::coordinates(const IntVector& u) const {
    const std::size_t mm = m();
    if (mm == 0) {
        if (std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; })) return IntVector{};
        return std::nullopt;
    }
    linalg::Matrix<Rational> sys(n(), std::vector<Rational>(mm));
    std::vector<Rational> rhs(n());
    for (std::size_t j = 0; j < n(); ++j) {
        for (std::size_t k = 0; k < mm; ++k) sys[j][k] = static_cast<long>(B(j, k));
        rhs[j] = static_cast<long>(u[j]);
    }
    auto sol = linalg::solve(sys, rhs, mm);
    if (!sol) return std::nullopt;
    IntVector nu(mm);
    for (std::size_t k = 0; k < mm; ++k) {
        if ((*sol)[k].get_den() != 1) return std::nullopt;
        nu[k] = to_int64((*sol)[k].get_num());
    }
    return nu;
}

KernelBasis kernel_lattice_basis(const IntegerMatrix& a) { return KernelBasis{integer_kernel(a.matrix())}; }

// ---------------------------------------------------------------------------
// Regular subdivisions

namespace {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    ColumnSet idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::optional<std::vector<LowerCell>> lower_hull_cells(const IntMatrix& points, const RationalVector& lift) {
    const std::size_t dim = points.rows(), count = points.cols();
    std::vector<LowerCell> cells;
    bool tie = false;
    for_each_subset(count, dim, [&](const ColumnSet& sigma) {
        if (tie) return;
        linalg::Matrix<Rational> sys(dim, std::vector<Rational>(dim));
        std::vector<Rational> rhs(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) sys[r][c] = static_cast<long>(points(c, sigma[r]));
            rhs[r] = lift[sigma[r]];
        }
        if (linalg::rank(sys) < dim) return;
        auto c = linalg::solve(sys, rhs, dim);
        bool below = true;
        for (std::size_t j = 0; j < count && below; ++j) {
            if (std::find(sigma.begin(), sigma.end(), j) != sigma.end()) continue;
            Rational v = dot(*c, points.column(j));
            if (v == lift[j]) {
                tie = true;
                return;
            }
            if (v > lift[j]) below = false;
        }
        if (below) cells.push_back(LowerCell{sigma, *c});
    });
    if (tie) return std::nullopt;
    return cells;
}

// ---------------------------------------------------------------------------
// Volumes, normals, indices

namespace {

// Basis rows of the lattice ℤF and the coordinates of each column of F in it.
std::pair<IntegerRows, std::vector<IntVector>> lattice_coordinates(const IntMatrix& f) {
    IntegerRows gens;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        std::vector<Integer> row;
        for (std::size_t i = 0; i < f.rows(); ++i) row.emplace_back(static_cast<long>(f(i, j)));
        gens.push_back(std::move(row));
    }
    auto basis = hermite_rows(gens);
    const std::size_t r = basis.size();
    std::vector<IntVector> coords;
    linalg::Matrix<Rational> sys(f.rows(), std::vector<Rational>(r));
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t k = 0; k < r; ++k) sys[i][k] = basis[k][i];
    for (std::size_t j = 0; j < f.cols(); ++j) {
        std::vector<Rational> rhs(f.rows());
        for (std::size_t i = 0; i < f.rows(); ++i) rhs[i] = static_cast<long>(f(i, j));
        auto sol = linalg::solve(sys, rhs, r);
        IntVector c(r);
        for (std::size_t k = 0; k < r; ++k) c[k] = to_int64((*sol)[k].get_num());
        coords.push_back(std::move(c));
    }
    return {basis, coords};
}

} // namespace

Integer normalized_volume(const IntegerMatrix& a, const ColumnSet& face) {
    IntMatrix f = a.matrix().select_columns(face);
    auto [basis, coords] = lattice_coordinates(f);
    const std::size_t r = basis.size();
    if (r == 0) return 1;
    // conv({0} ∪ F) in ℤ^r, homogenized to height one.
    std::vector<IntVector> pts;
    IntVector origin(r + 1, 0);
    origin[0] = 1;
    pts.push_back(origin);
    for (const auto& c : coords) {
        IntVector p(r + 1);
        p[0] = 1;
        std::copy(c.begin(), c.end(), p.begin() + 1);
        pts.push_back(std::move(p));
    }
    IntMatrix points = IntMatrix::from_columns(pts);
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> dist(1, 1000000);
    for (int attempt = 0; attempt < 200; ++attempt) {
        RationalVector lift(points.cols());
        for (auto& l : lift) l = dist(rng);
        auto cells = lower_hull_cells(points, lift);
        if (!cells) continue;
        Integer vol = 0;
        for (const auto& cell : *cells) vol += abs_determinant(points.select_columns(cell.vertices));
        return vol;
    }
    throw GkzError(ErrorCode::NotGenericWeight, "could not find a generic lift for volume computation");
}

Integer normalized_volume(const IntegerMatrix& a) {
    ColumnSet all(a.n());
    std::iota(all.begin(), all.end(), 0);
    return normalized_volume(a, all);
}

IntVector primitive_normal(const std::vector<IntVector>& spanning, std::size_t dim) {
    IntMatrix m = IntMatrix::from_rows(spanning, dim);
    IntMatrix k = integer_kernel(m);
    if (k.cols() != 1)
        throw GkzError(ErrorCode::CodimensionMismatch,
                       "span has codimension " + std::to_string(k.cols()) + ", expected 1");
    IntVector n = k.column(0);
    auto first = std::find_if(n.begin(), n.end(), [](auto x) { return x != 0; });
    if (first != n.end() && *first < 0)
        for (auto& x : n) x = -x;
    return n;
}

Integer lattice_index(const IntegerMatrix& a, const ColumnSet& face) {
    Integer index = 1;
    if (face.empty()) return index;
    for (const auto& z : smith_invariants(a.matrix().select_columns(face))) index *= z;
    return index;
}

// ---------------------------------------------------------------------------
// Adapted lattice bases

namespace {

IntVector primitive_integer(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
    std::vector<Integer> z;
    Integer g = 0;
    for (const auto& q : v) {
        z.push_back(Integer(q * l));
        g = gcd(g, z.back());
    }
    IntVector out;
    for (auto& e : z) out.push_back(to_int64(g == 0 ? e : Integer(e / g)));
    return out;
}

Rational rdot(const RationalVector& a, const IntVector& b) { return dot(a, b); }

} // namespace

IntMatrix adapted_lattice_basis(const std::vector<RationalVector>& generators, const IntMatrix& lattice,
                                const std::optional<RationalVector>& functional) {
    const std::size_t m = lattice.rows();
    if (m == 0) return IntMatrix(0, 0);
    if (lattice.cols() != m) throw GkzError(ErrorCode::InvalidArgument, "lattice basis must be square");
    auto linv = linalg::inverse(to_rational(lattice));
    if (!linv) throw GkzError(ErrorCode::InvalidArgument, "lattice basis is singular");

    // Work in lattice coordinates, where L = ℤ^m.
    std::vector<RationalVector> gens;
    for (const auto& g : generators) {
        RationalVector c(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) c[i] += (*linv)[i][j] * g[j];
        gens.push_back(std::move(c));
    }
    if (gens.empty() || linalg::rank(gens) < m)
        throw GkzError(ErrorCode::ConeNotFullDimensional, "cone is not full dimensional");

    std::optional<RationalVector> fn;
    if (functional) {
        RationalVector f(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) f[i] += static_cast<long>(lattice(j, i)) * (*functional)[j];
        fn = std::move(f);
    }

    // Rays of the dual cone: inward normals of the facets of K.
    std::vector<IntVector> rays;
    for_each_subset(gens.size(), m - 1, [&](const ColumnSet& s) {
        linalg::Matrix<Rational> sub;
        for (auto i : s) sub.push_back(gens[i]);
        if (!sub.empty() && linalg::rank(sub) != m - 1) return;
        auto ns = linalg::nullspace(sub, m);
        if (ns.size() != 1) return;
        IntVector nrm = primitive_integer(ns[0]);
        bool pos = true, neg = true;
        for (const auto& g : gens) {
            int s = sgn(rdot(g, nrm));
            if (s < 0) pos = false;
            if (s > 0) neg = false;
        }
        if (neg && !pos)
            for (auto& x : nrm) x = -x;
        if (pos || neg)
            if (std::find(rays.begin(), rays.end(), nrm) == rays.end()) rays.push_back(nrm);
    });
    {
        linalg::Matrix<Rational> rm;
        for (const auto& r : rays) {
            RationalVector row;
            for (auto x : r) row.emplace_back(static_cast<long>(x));
            rm.push_back(row);
        }
        if (rm.empty() || linalg::rank(rm) < m) throw GkzError(ErrorCode::ConeNotPointed, "cone is not pointed");
    }

    // Hilbert basis of K* ∩ ℤ^m, found by degree-ordered enumeration in a box
    // that contains every fundamental parallelepiped.
    std::int64_t bound = 0;
    for (const auto& r : rays)
        for (auto x : r) bound += std::abs(x);
    RationalVector grade(m, 0);
    for (const auto& g : gens)
        for (std::size_t i = 0; i < m; ++i) grade[i] += g[i];
    auto in_dual = [&](const IntVector& y) {
        return std::all_of(gens.begin(), gens.end(), [&](const RationalVector& g) { return sgn(rdot(g, y)) >= 0; });
    };
    std::vector<std::pair<Rational, IntVector>> points;
    IntVector y(m, -bound);
    while (true) {
        if (std::any_of(y.begin(), y.end(), [](auto v) { return v != 0; }) && in_dual(y))
            points.emplace_back(rdot(grade, y), y);
        std::size_t i = 0;
        while (i < m && y[i] == bound) y[i++] = -bound;
        if (i == m) break;
        ++y[i];
    }
    std::sort(points.begin(), points.end());
    std::vector<IntVector> hilbert;
    for (const auto& [deg, p] : points) {
        bool reducible = false;
        for (const auto& h : hilbert) {
            IntVector diff(m);
            for (std::size_t i = 0; i < m; ++i) diff[i] = p[i] - h[i];
            if (in_dual(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) hilbert.push_back(p);
    }
    std::sort(hilbert.begin(), hilbert.end(), [](const IntVector& a, const IntVector& b) {
        std::int64_t na = 0, nb = 0;
        for (auto x : a) na += std::abs(x);
        for (auto x : b) nb += std::abs(x);
        if (na != nb) return na < nb;
        return a < b;
    });

    std::optional<IntMatrix> found;
    for_each_subset(hilbert.size(), m, [&](const ColumnSet& s) {
        if (found) return;
        IntMatrix kappa(m, m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) kappa(r, c) = hilbert[s[r]][c];
        if (abs_determinant(kappa) != 1) return;
        auto inv = linalg::inverse(to_rational(kappa));
        IntMatrix lambda(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) lambda(i, j) = to_int64((*inv)[i][j].get_num());
        if (fn) {
            for (std::size_t j = 0; j < m; ++j)
                if (sgn(rdot(*fn, lambda.column(j))) <= 0) return;
        }
        found = lambda;
    });
    if (!found)
        throw GkzError(ErrorCode::ConeNotPointed, "no unimodular subset of the dual Hilbert basis fits the cone");

    std::vector<IntVector> cols = lattice.multiply(*found).to_columns();
    std::sort(cols.begin(), cols.end(), std::greater<>());
    return IntMatrix::from_columns(cols, m);
}

} // namespace gkz
