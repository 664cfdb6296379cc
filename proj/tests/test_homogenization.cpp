#include <doctest.h>

#include "gkz/errors.hpp"
#include "gkz/homogenization.hpp"
#include "gkz/solver.hpp"
#include "gkz/stratification.hpp"
#include "gkz/toric.hpp"
#include "gkz/triangulation.hpp"

using namespace gkz;

namespace {

GaussianRational g(long p, long r = 1) { return GaussianRational(Rational(Integer(p), Integer(r))); }

} // namespace

TEST_CASE("homogenized matrices") {
    auto h = homogenize_matrix(IntegerMatrix::from_rows({{1, 2}}));
    CHECK(h.rho.matrix() == IntMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}));
    CHECK(is_homogeneous(h.rho));
    auto unit = homogenize_matrix(IntegerMatrix::from_rows({{1}}));
    CHECK(unit.rho.matrix() == IntMatrix::from_rows({{1, 1}, {0, 1}}));
    auto a = IntegerMatrix::from_rows({{1, 0, 2}, {0, 1, 3}});
    auto ha = homogenize_matrix(a);
    CHECK(normalized_volume(ha.rho) == normalized_volume(a));
    auto inv = smith_invariants(ha.rho.matrix());
    CHECK(std::all_of(inv.begin(), inv.end(), [](const Integer& z) { return z == 1; }));
}

TEST_CASE("lifted parameters") {
    CHECK(homogenize_parameter({g(1, 2)}) == GaussianVector{g(1), g(1, 2)});
    auto a = IntegerMatrix::from_rows({{1, 2}});
    auto h1 = homogenize_matrix(a), h2 = homogenize_matrix(a);
    auto l1 = generic_lift(h1, {g(1, 3)}, {1, 1}, 42);
    auto l2 = generic_lift(h2, {g(1, 3)}, {1, 1}, 42);
    CHECK(l1.beta0 == l2.beta0);
    CHECK(h1.lift_parameter == l1.beta0);
    CHECK(l1.beta0.re() >= 1000);
    CHECK(l1.beta0.re() <= 10001);
    CHECK_FALSE(l1.beta0.is_integer());
    CHECK(l1.lifted == GaussianVector{l1.beta0, g(1, 3)});

    RationalVector lifted_w{1, 2, 2};
    auto arrangement = build_arrangement(regular_triangulation(h1.rho, lifted_w));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto lift = generic_lift(h1, {g(seed % 3, 1)}, {1, 1}, seed);
        for (const auto& c : arrangement)
            if (c.normal[0] != 0) CHECK_FALSE(fires(c, lift.lifted));
    }
}

TEST_CASE("face invariants of the line") {
    auto a = IntegerMatrix::from_rows({{1, 2}});
    auto full = face_invariants_preserved(a, {0, 1});
    CHECK(full.preserved());
    CHECK(full.face.volume == 2);
    auto single = face_invariants_preserved(a, {0});
    CHECK(single.preserved());
    CHECK(single.face.index == 1);
    auto top = face_invariants_preserved(a, {1});
    CHECK(top.preserved());
    CHECK(top.face.codim == 0);
    CHECK(top.lifted.codim == 0);
    // conv(0, 2) is a unit simplex in 2ℤ, which has index 2 in ℤ.
    CHECK(top.face.volume == 1);
    CHECK(top.face.index == 2);
}

TEST_CASE("weight admissibility") {
    auto a = IntegerMatrix::from_rows({{1, 2}});
    // ∂1² − ∂2: w = (1, 1) leads with ∂1², difference (2, −1).
    CHECK(ones_in_weight_cone(a, {1, 1}));
    // w = (1, 3) leads with ∂2, difference (−2, 1).
    CHECK_FALSE(ones_in_weight_cone(a, {1, 3}));
    CHECK(ones_in_weight_cone(IntegerMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}), {1, 1, 3}));
}

TEST_CASE("rank bounds") {
    CHECK(rank_upper_bound(IntegerMatrix::from_rows({{1, 2}})) == 32);
    CHECK(rank_upper_bound(IntegerMatrix::from_rows({{1, 1, 1}, {0, 1, 2}})) == 32);
    auto ag = IntegerMatrix::from_rows({{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}});
    CHECK(rank_upper_bound(ag) == 128);
    auto ctx = make_context(ag, {1, 1, 1, 2});
    auto count = fake_exponents(ctx, {g(1, 2), g(1, 3), g(1, 5)}).exponents.size();
    CHECK(Integer(static_cast<long>(count)) <= rank_upper_bound(ag));
}

TEST_CASE("restriction to x0 = 1") {
    auto psi = make_series({g(7, 3), g(1, 2), g(1, 3)}, {1, 2, 3}, Rational(5));
    psi.add({0, 0, 0}, {0, 0, 0}, g(1));
    psi.add({1, -2, 1}, {0, 0, 0}, g(2));
    psi.add({1, -2, 1}, {1, 0, 0}, g(5));
    psi.add({0, 0, 0}, {0, 1, 0}, g(3));
    auto r = restrict_x0(psi);
    CHECK(r.base == GaussianVector{g(1, 2), g(1, 3)});
    CHECK(r.weight == RationalVector{Rational(1), Rational(2)});
    CHECK(r.truncation == 5);
    CHECK(r.coefficient({-2, 1}, {0, 0}) == g(2));
    CHECK(r.coefficient({0, 0}, {1, 0}) == g(3));
    CHECK(r.terms.size() == 3);

    CHECK_THROWS_AS(restrict_x0_gamma(psi), GkzError);
    auto plain = make_series({g(7, 3), g(1, 2), g(1, 3)}, {1, 2, 3}, Rational(5));
    plain.add({2, -3, 1}, {0, 0, 0}, g(1));
    plain.add({-1, 2, -1}, {0, 0, 0}, g(1));
    auto corrected = restrict_x0_gamma(plain);
    // (10/3)_2 and (10/3)_{−1} = 1/(7/3).
    CHECK(corrected.coefficient({-3, 1}, {0, 0}) == g(10, 3) * g(13, 3));
    CHECK(corrected.coefficient({2, -1}, {0, 0}) == g(3, 7));
}

TEST_CASE("restricted solutions of the homogenized line") {
    auto a = IntegerMatrix::from_rows({{1, 2}});
    auto h = homogenize_matrix(a);
    GaussianVector beta{g(1, 3)};
    auto lift = generic_lift(h, beta, {1, 1}, 7);
    auto rho_ctx = make_context(h.rho, {1, 2, 2});
    auto line_ctx = make_context(a, {1, 1});
    auto sols = canonical_series(rho_ctx, lift.lifted, Rational(6));
    REQUIRE(sols.size() == 2);
    for (const auto& s : sols) {
        CHECK(residual(s.series, rho_ctx, lift.lifted) == 0);
        CHECK_FALSE(restrict_x0(s.series).is_zero());
        CHECK(residual(restrict_x0_gamma(s.series), line_ctx, beta) == 0);
    }
}
