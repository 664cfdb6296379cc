#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gkz/rational.hpp"

// Exact Gaussian elimination over a field (Rational or GaussianRational).

namespace gkz::linalg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

/// In-place reduced row echelon form; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        if (!(m[r][c] == T(1))) {
            T inv = T(1) / m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!is_zero(m[r][k])) m[r][k] *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            T f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!is_zero(m[r][k])) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return rref(m).size();
}

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, std::size_t cols) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!is_zero(m[r][f])) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves m x = rhs; nullopt when inconsistent. Free variables are set to 0.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& rhs, std::size_t cols) {
    Matrix<T> aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    auto pivots = rref(aug);
    std::vector<T> x(cols, T(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

/// Inverse of a square matrix; nullopt if singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    const std::size_t n = m.size();
    Matrix<T> aug(n, std::vector<T>(2 * n, T(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = T(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    Matrix<T> inv(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

} // namespace gkz::linalg
