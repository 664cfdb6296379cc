#include "gkz/rational.hpp"

#include <stdexcept>

namespace gkz {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer p(n, 10), q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational GaussianRational::max_abs() const {
    Rational a = abs(re_), b = abs(im_);
    return a < b ? b : a;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return z.re().get_str();
    std::string s = z.re().get_str();
    s += sgn(z.im()) < 0 ? " - " : " + ";
    s += Rational(abs(z.im())).get_str() + "i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

bool lex_less(const GaussianVector& a, const GaussianVector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return lex_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

Rational dot(const RationalVector& a, const IntVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) s += a[i] * static_cast<long>(b[i]);
    return s;
}

GaussianRational dot(const GaussianVector& a, const IntVector& b) {
    GaussianRational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) s += a[i] * GaussianRational(static_cast<long>(b[i]));
    return s;
}

} // namespace gkz
