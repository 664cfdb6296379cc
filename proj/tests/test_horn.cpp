#include <doctest.h>

#include "gkz/errors.hpp"
#include "gkz/horn.hpp"
#include "gkz/solver.hpp"

using namespace gkz;

namespace {

GaussianRational g(long p, long r = 1) { return GaussianRational(Rational(Integer(p), Integer(r))); }

HornSystem conic_horn(GaussianVector alpha) { return HornSystem{IntMatrix::from_columns({{1, -2, 1}}), std::move(alpha)}; }

} // namespace

TEST_CASE("Horn polynomials") {
    auto h = conic_horn({g(1, 7), g(2, 9), g(3, 11)});
    auto [p, q] = horn_polynomials(h, 0);
    REQUIRE(p.factors.size() == 2);
    REQUIRE(q.factors.size() == 2);
    for (long mu = 0; mu < 4; ++mu) {
        GaussianRational m = g(mu);
        CHECK(p.evaluate(h, IntVector{mu}) == (m + g(1, 7)) * (m + g(3, 11)));
        CHECK(q.evaluate(h, IntVector{mu}) == (g(-2) * m + g(2, 9)) * (g(-2) * m + g(2, 9) - g(1)));
    }
    HornSystem zero{IntMatrix::from_columns({{0, 0}}), {g(1, 2), g(1, 3)}};
    auto [pz, qz] = horn_polynomials(zero, 0);
    CHECK(pz.factors.empty());
    CHECK(qz.factors.empty());
    CHECK(pz.evaluate(zero, IntVector{5}) == g(1));

    HornSystem gauss{IntMatrix::from_columns({{1, -1, -1, 1}}), {g(1, 2), g(1, 3), g(1, 5), g(1, 7)}};
    auto [pg, qg] = horn_polynomials(gauss, 0);
    CHECK(pg.evaluate(gauss, IntVector{2}) == (g(2) + g(1, 2)) * (g(2) + g(1, 7)));
    CHECK(qg.evaluate(gauss, IntVector{2}) == (g(-2) + g(1, 3)) * (g(-2) + g(1, 5)));
}

TEST_CASE("Horn coefficients and poles") {
    GaussianVector alpha{g(1, 7), g(2, 9), g(3, 11)};
    auto h = conic_horn(alpha);
    CHECK(horn_coefficient(h, {0}) == g(1));
    CHECK(horn_coefficient(h, {1}) == alpha[0] * alpha[2] / ((alpha[1] - g(2)) * (alpha[1] - g(3))));
    auto bad = conic_horn({g(1, 7), g(2), g(3, 11)});
    try {
        horn_coefficient(bad, {1});
        FAIL("expected PoleHit");
    } catch (const GkzError& e) {
        CHECK(e.code() == ErrorCode::PoleHit);
    }
    CHECK_THROWS_AS(horn_coefficient(h, {-1}), GkzError);
}

TEST_CASE("Horn operator kills the series away from the boundary") {
    auto h = conic_horn({g(1, 7), g(2, 9), g(3, 11)});
    auto phi = horn_series(h, 8);
    CHECK(phi.terms.size() == 9);
    auto out = horn_operator_apply(phi, h, 0);
    // Only z^0 survives: Q(0) R_0 has nothing to cancel against.
    REQUIRE(out.terms.size() == 1);
    auto [p, q] = horn_polynomials(h, 0);
    CHECK(out.coefficient({0}, {0}) == q.evaluate(h, IntVector{0}));
}

TEST_CASE("two-dimensional Horn series satisfies the last recurrence") {
    HornSystem h{IntMatrix::from_columns({{1, -2, 1, 0}, {0, 1, -2, 1}}), {g(1, 7), g(2, 9), g(3, 11), g(4, 13)}};
    auto [p, q] = horn_polynomials(h, 1);
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b + a <= 4; ++b)
            CHECK(q.evaluate(h, IntVector{a, b + 1}) * horn_coefficient(h, {a, b + 1}) ==
                  p.evaluate(h, IntVector{a, b}) * horn_coefficient(h, {a, b}));
}

TEST_CASE("GKZ coefficients follow the swapped recurrence") {
    // Dehomogenized log-free GKZ coefficients satisfy P(μ+e) f_{μ+e} = Q(μ) f_μ.
    auto ctx = make_context(IntegerMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}), {1, 1, 3});
    GaussianVector beta{g(2, 7), g(-3, 11)};
    for (const auto& s : canonical_series(ctx, beta, Rational(12))) {
        HornSystem h{ctx.cone_basis, s.series.base};
        auto f = dehomogenize(s.series, ctx.cone_basis);
        auto [p, q] = horn_polynomials(h, 0);
        for (long mu = 0; mu < 5; ++mu)
            CHECK(p.evaluate(h, IntVector{mu + 1}) * f.coefficient({mu + 1}, {0}) ==
                  q.evaluate(h, IntVector{mu}) * f.coefficient({mu}, {0}));
    }
}

TEST_CASE("solving the inhomogeneous recurrence") {
    auto h = conic_horn({g(1, 7), g(2, 9), g(3, 11)});
    auto [p, q] = horn_polynomials(h, 0);
    CoefficientMap g_values{{{1}, g(1, 2)}, {{3}, g(-4)}};
    auto f = solve_recurrence(h, 0, g_values, {{{0}, g(2)}}, 6);
    REQUIRE(f.size() == 7);
    for (long mu = 0; mu < 6; ++mu) {
        auto it = g_values.find({mu + 1});
        GaussianRational rhs = it == g_values.end() ? GaussianRational{} : it->second;
        CHECK(q.evaluate(h, IntVector{mu + 1}) * f.at({mu + 1}) - p.evaluate(h, IntVector{mu}) * f.at({mu}) == rhs);
    }
    // Homogeneous case reproduces the Horn coefficients.
    auto hom = solve_recurrence(h, 0, {}, {{{0}, g(1)}}, 5);
    for (long mu = 0; mu <= 5; ++mu) CHECK(hom.at({mu}) == horn_coefficient(h, {mu}));

    // A vanishing P factor forces the forward recurrence.
    auto stuck = conic_horn({g(-2), g(2, 9), g(3, 11)});
    auto fs = solve_recurrence(stuck, 0, {{{4}, g(1)}}, {{{0}, g(1)}}, 5);
    CHECK(fs.at({3}).is_zero());
    CHECK_FALSE(fs.at({4}).is_zero());

    CHECK_THROWS_AS(solve_recurrence(h, 0, {}, {{{1}, g(1)}}, 3), GkzError);
    auto pole = conic_horn({g(1, 7), g(2), g(3, 11)});
    CHECK_THROWS_AS(solve_recurrence(pole, 0, {}, {{{0}, g(1)}}, 3), GkzError);
}

TEST_CASE("dehomogenization round trip") {
    IntMatrix b = IntMatrix::from_columns({{1, -1, -1, 1}});
    GaussianVector alpha{g(0), g(-1, 2), g(-1, 3), g(0)};
    RationalVector w{1, 1, 1, 2};
    auto f = make_series({g(0)}, {Rational(1)}, Rational(4));
    f.add({0}, {1}, g(1));
    f.add({1}, {0}, g(1, 6));
    f.add({2}, {2}, g(3, 5));
    auto phi = rehomogenize(f, b, alpha, w);
    CHECK(phi.base == alpha);
    CHECK(phi.coefficient({2, -2, -2, 2}, {2, 0, 0, 0}) == g(3, 5));
    CHECK(phi.coefficient({2, -2, -2, 2}, {1, 1, 0, 0}) == g(-6, 5));
    auto back = dehomogenize(phi, b);
    CHECK(back.terms == f.terms);
    CHECK(back.weight == RationalVector{Rational(1)});

    auto lone = make_series(alpha, w, Rational(2));
    lone.add({0, 0, 0, 0}, {1, 0, 0, 0}, g(1));
    try {
        dehomogenize(lone, b);
        FAIL("expected NotInSymmetricAlgebra");
    } catch (const GkzError& e) {
        CHECK(e.code() == ErrorCode::NotInSymmetricAlgebra);
    }
    auto off = make_series(alpha, w, Rational(2));
    off.add({1, 0, 0, 0}, {0, 0, 0, 0}, g(1));
    CHECK_THROWS_AS(dehomogenize(off, b), GkzError);
}
