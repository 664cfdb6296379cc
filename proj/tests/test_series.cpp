#include <doctest.h>

#include "gkz/errors.hpp"
#include "gkz/series.hpp"

using namespace gkz;

namespace {

GaussianRational q(long p, long r = 1) { return GaussianRational(Rational(Integer(p), Integer(r))); }

MixedSeries one_variable(GaussianRational base) { return make_series({base}, {Rational(1)}, Rational(10)); }

} // namespace

TEST_CASE("adding terms cancels exactly") {
    auto s = one_variable(q(1, 2));
    s.add({0}, {1}, q(3));
    s.add({0}, {1}, q(-3));
    CHECK(s.is_zero());
    s.add({2}, {0}, q(1, 3));
    CHECK(s.coefficient({2}, {0}) == q(1, 3));
    CHECK(s.coefficient({1}, {0}).is_zero());
    CHECK(s.is_log_free());
    s.add({1}, {2}, q(1));
    CHECK_FALSE(s.is_log_free());
    CHECK(s.log_degree() == 2);
    CHECK(s.max_abs() == 1);
}

TEST_CASE("sum keeps the smaller truncation") {
    auto a = one_variable(q(0));
    a.add({0}, {0}, q(1));
    a.add({8}, {0}, q(1));
    auto b = make_series({q(0)}, {Rational(1)}, Rational(5));
    b.add({0}, {0}, q(2));
    auto s = add(a, b);
    CHECK(s.truncation == 5);
    CHECK(s.coefficient({0}, {0}) == q(3));
    CHECK(s.coefficient({8}, {0}).is_zero());
    CHECK_THROWS_AS(add(a, one_variable(q(1))), GkzError);
    CHECK(scale(a, q(2)).coefficient({8}, {0}) == q(2));
}

TEST_CASE("derivative of x^g log x") {
    // ∂(x^γ log x) = γ x^(γ−1) log x + x^(γ−1).
    auto s = one_variable(q(1, 2));
    s.add({0}, {1}, q(1));
    auto d = apply_weyl_monomial(s, {0}, {1});
    CHECK(d.truncation == 9);
    CHECK(d.coefficient({-1}, {1}) == q(1, 2));
    CHECK(d.coefficient({-1}, {0}) == q(1));
    auto up = apply_weyl_monomial(s, {1}, {1});
    CHECK(up.truncation == 10);
    CHECK(up.coefficient({0}, {1}) == q(1, 2));
}

TEST_CASE("euler operator on a monomial") {
    auto a = IntegerMatrix::from_rows({{1, 1, 1}, {0, 1, 2}});
    auto s = make_series({q(1, 2), q(1, 3), q(1, 5)}, {1, 1, 1}, Rational(3));
    s.add({0, 0, 0}, {0, 0, 0}, q(1));
    // (E_1 − β_1) x^α = (α_1+α_2+α_3 − β_1) x^α.
    auto e = apply_euler(s, a, 0, q(1));
    CHECK(e.coefficient({0, 0, 0}, {0, 0, 0}) == q(1, 2) + q(1, 3) + q(1, 5) - q(1));
    // Logarithms contribute a_ij δ_j times the lower term.
    auto l = make_series({q(0), q(0), q(0)}, {1, 1, 1}, Rational(3));
    l.add({0, 0, 0}, {0, 0, 2}, q(1));
    auto el = apply_euler(l, a, 1, q(0));
    CHECK(el.coefficient({0, 0, 0}, {0, 0, 1}) == q(4));
}

TEST_CASE("kernel monomials expand to log polynomials") {
    auto b = IntMatrix::from_columns({{1, -1}});
    auto p = expand_kernel_monomial(b, {2});
    CHECK(p.size() == 3);
    CHECK(p.at({2, 0}) == q(1));
    CHECK(p.at({1, 1}) == q(-2));
    CHECK(p.at({0, 2}) == q(1));
    CHECK(expand_kernel_monomial(b, {0}).at({0, 0}) == q(1));
}

TEST_CASE("log antiderivative inverts the derivative") {
    auto s = make_series({q(1, 3), GaussianRational(Rational(1, 2), Rational(1))}, {1, 1}, Rational(4));
    s.add({0, 0}, {2, 1}, q(3));
    s.add({1, 0}, {0, 3}, q(-1, 7));
    s.add({2, 1}, {1, 0}, q(5));
    for (std::size_t j = 0; j < 2; ++j) {
        auto up = log_antiderivative(s, j);
        IntVector e(2, 0);
        e[j] = 1;
        auto back = apply_weyl_monomial(up, {0, 0}, e);
        // Same exponents: the base moved up by e_j, the offsets down by e_j.
        for (const auto& [key, c] : s.terms) {
            IntVector shifted = key.first;
            shifted[j] -= 1;
            CHECK(back.coefficient(shifted, key.second) == c);
        }
        CHECK(back.terms.size() == s.terms.size());
    }
    auto bad = one_variable(q(-1));
    bad.add({0}, {0}, q(1));
    try {
        log_antiderivative(bad, 0);
        FAIL("expected ExponentMinusOne");
    } catch (const GkzError& e) {
        CHECK(e.code() == ErrorCode::ExponentMinusOne);
    }
}

TEST_CASE("hadamard product") {
    auto a = one_variable(q(0));
    auto b = one_variable(q(0));
    for (long k = 0; k < 4; ++k) {
        a.add({k}, {0}, q(k + 1));
        b.add({k}, {0}, q(1, k + 1));
    }
    auto h = hadamard_product(a, b);
    for (long k = 0; k < 4; ++k) CHECK(h.coefficient({k}, {0}) == q(1));
    b.add({0}, {1}, q(1));
    try {
        hadamard_product(a, b);
        FAIL("expected LogTermsPresent");
    } catch (const GkzError& e) {
        CHECK(e.code() == ErrorCode::LogTermsPresent);
    }
}

TEST_CASE("initial series") {
    auto s = make_series({q(1, 2), q(0)}, {1, 2}, Rational(6));
    s.add({0, 1}, {0, 0}, q(1));
    s.add({2, 0}, {1, 0}, q(2));
    s.add({1, 1}, {0, 0}, q(3));
    auto init = initial_series(s, {1, 2});
    CHECK(init.weight == Rational(5, 2));
    CHECK(init.terms.terms.size() == 2);
    CHECK_THROWS_AS(initial_series(one_variable(q(0)), {1}), GkzError);
}

TEST_CASE("support enumeration") {
    auto b = IntMatrix::from_columns({{1, -2, 1}});
    auto pts = enumerate_support(b, {1, 1, 3}, Rational(6));
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == IntVector{0, 0, 0});
    CHECK(pts[3] == IntVector{3, -6, 3});
    CHECK(enumerate_support(b, {1, 1, 3}, Rational(-1)).empty());
    CHECK_THROWS_AS(enumerate_support(b, {1, 3, 1}, Rational(2)), GkzError);

    auto two = IntMatrix::from_columns({{1, 0, -1}, {0, 1, -1}});
    RationalVector w{3, 2, 1};
    auto all = enumerate_support(two, w, Rational(7));
    std::size_t brute = 0;
    for (long x = 0; x <= 7; ++x)
        for (long y = 0; y <= 7; ++y) brute += 2 * x + y <= 7;
    CHECK(all.size() == brute);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(dot(w, all[i - 1]) <= dot(w, all[i]));
}
