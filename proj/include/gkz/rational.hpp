#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gkz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on anything else (no floating-point syntax).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long v) : re_(v) {}
    GaussianRational(int v) : re_(v) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    /// True for elements of ℤ ⊂ ℂ.
    bool is_integer() const { return is_real() && re_.get_den() == 1; }
    /// True for elements of ℤ_{<0}.
    bool is_negative_integer() const { return is_integer() && sgn(re_) < 0; }
    bool is_natural() const { return is_integer() && sgn(re_) >= 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// max(|re|, |im|), the exact size measure used for residual reports.
    Rational max_abs() const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Total order (real part, then imaginary part), used only for
    /// deterministic sorting.
    friend bool lex_less(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

using GaussianVector = std::vector<GaussianRational>;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

bool lex_less(const GaussianVector& a, const GaussianVector& b);

Rational dot(const RationalVector& a, const IntVector& b);
GaussianRational dot(const GaussianVector& a, const IntVector& b);

} // namespace gkz
