#include <doctest.h>

#include "gkz/errors.hpp"
#include "gkz/lattice.hpp"
#include "oracles.hpp"

using namespace gkz;

namespace {

IntegerMatrix conic() { return IntegerMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}); }
IntegerMatrix square() { return IntegerMatrix::from_rows({{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}}); }

bool unimodular_columns(const IntMatrix& m) {
    auto inv = smith_invariants(m);
    return std::all_of(inv.begin(), inv.end(), [](const Integer& z) { return z == 1; });
}

} // namespace

TEST_CASE("integer matrix validation") {
    CHECK_THROWS_AS(IntegerMatrix::from_rows({{1, 2}, {2, 4}}), GkzError);
    CHECK_THROWS_AS(IntegerMatrix::from_rows({{2, 4}}), GkzError);
    try {
        IntegerMatrix::from_rows({{2, 4}});
    } catch (const GkzError& e) {
        CHECK(e.code() == ErrorCode::InvalidMatrix);
    }
    CHECK_NOTHROW(IntegerMatrix::from_rows({{1, 2}}));
}

TEST_CASE("smith invariants") {
    auto inv = smith_invariants(IntMatrix::from_rows({{2, 4}, {6, 8}}));
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 4);
    auto diag = smith_invariants(IntMatrix::from_rows({{6, 0}, {0, 4}}));
    CHECK(diag[0] == 2);
    CHECK(diag[1] == 12);
}

TEST_CASE("hermite rows are echelon with reduced entries above pivots") {
    auto h = hermite_rows({{Integer(2), Integer(4), Integer(6)}, {Integer(3), Integer(5), Integer(7)}});
    REQUIRE(h.size() == 2);
    CHECK(h[0][0] == 1);
    CHECK(h[1][0] == 0);
    CHECK(h[1][1] > 0);
    CHECK(h[0][1] >= 0);
    CHECK(h[0][1] < h[1][1]);
}

TEST_CASE("kernel lattice basis") {
    auto k = kernel_lattice_basis(conic());
    REQUIRE(k.m() == 1);
    CHECK(k.column(0) == IntVector{1, -2, 1});
    auto g = kernel_lattice_basis(square());
    REQUIRE(g.m() == 1);
    CHECK(g.column(0) == IntVector{1, -1, -1, 1});
    auto line = kernel_lattice_basis(IntegerMatrix::from_rows({{1, 2}}));
    CHECK(line.column(0) == IntVector{2, -1});
    CHECK(k.coordinates({2, -4, 2}) == std::optional<IntVector>{IntVector{2}});
    CHECK_FALSE(k.coordinates({1, 0, 0}).has_value());
}

TEST_CASE("kernel is saturated and annihilated on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto pts = oracle::random_planar(rng, 2 + trial % 3, 3);
        auto a = IntegerMatrix::from_rows(oracle::homogenized_rows(pts));
        auto k = kernel_lattice_basis(a);
        CHECK(k.m() == a.n() - a.d());
        for (std::size_t c = 0; c < k.m(); ++c) {
            auto prod = a.matrix().multiply(k.column(c));
            CHECK(std::all_of(prod.begin(), prod.end(), [](auto x) { return x == 0; }));
        }
        CHECK(unimodular_columns(k.B));
    }
}

TEST_CASE("normalized volume examples") {
    CHECK(normalized_volume(conic()) == 2);
    CHECK(normalized_volume(square()) == 2);
    CHECK(normalized_volume(IntegerMatrix::from_rows({{1, 2}})) == 2);
    CHECK(normalized_volume(IntegerMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}})) == 3);
    CHECK(normalized_volume(conic(), {0, 2}) == 1);
}

TEST_CASE("normalized volume matches the hull area oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto pts = oracle::random_planar(rng, 1 + trial % 4, 4);
        auto a = IntegerMatrix::from_rows(oracle::homogenized_rows(pts));
        CHECK(normalized_volume(a) == oracle::twice_hull_area(pts));
    }
}

TEST_CASE("primitive normals and lattice index") {
    CHECK(primitive_normal({{1, 2}}, 2) == IntVector{2, -1});
    CHECK(primitive_normal({{1, 0, 1}, {1, 1, 0}}, 3) == IntVector{1, -1, -1});
    CHECK_THROWS_AS(primitive_normal({{1, 0, 0}}, 3), GkzError);
    CHECK(lattice_index(conic(), {0, 2}) == 2);
    CHECK(lattice_index(conic(), {0, 1}) == 1);
    CHECK(lattice_index(conic(), {1}) == 1);
}

TEST_CASE("adapted basis covers the cone") {
    IntMatrix lattice = IntMatrix::identity(2);
    std::vector<RationalVector> gens{{Rational(1), Rational(0)}, {Rational(1), Rational(2)}};
    for (auto functional : {std::optional<RationalVector>{}, std::optional<RationalVector>{RationalVector{1, 1}}}) {
        auto b = adapted_lattice_basis(gens, lattice, functional);
        REQUIRE(b.rows() == 2);
        REQUIRE(b.cols() == 2);
        std::int64_t det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
        CHECK((det == 1 || det == -1));
        // Cramer: every lattice point of the cone has non-negative coordinates.
        for (std::int64_t x = 0; x <= 6; ++x)
            for (std::int64_t y = 0; y <= 2 * x; ++y) {
                CHECK((x * b(1, 1) - y * b(0, 1)) * det >= 0);
                CHECK((b(0, 0) * y - b(1, 0) * x) * det >= 0);
            }
        if (functional)
            for (std::size_t k = 0; k < 2; ++k) CHECK(b(0, k) + b(1, k) > 0);
    }
    CHECK(adapted_lattice_basis(gens, lattice) == IntMatrix::identity(2));
}

TEST_CASE("adapted basis of a sublattice") {
    IntMatrix lattice = IntMatrix::from_rows({{2, 0}, {0, 1}});
    auto b = adapted_lattice_basis({{Rational(1), Rational(0)}, {Rational(1), Rational(2)}}, lattice);
    std::int64_t det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    CHECK((det == 2 || det == -2));
    for (std::size_t k = 0; k < 2; ++k) CHECK(b(0, k) % 2 == 0);
    for (std::int64_t x = 0; x <= 8; x += 2)
        for (std::int64_t y = 0; y <= 2 * x; ++y) {
            CHECK((x * b(1, 1) - y * b(0, 1)) * det >= 0);
            CHECK((b(0, 0) * y - b(1, 0) * x) * det >= 0);
        }
    CHECK_THROWS_AS(adapted_lattice_basis({{Rational(1), Rational(0)}}, lattice), GkzError);
    CHECK_THROWS_AS(adapted_lattice_basis({{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}, {Rational(0), Rational(1)}}, lattice), GkzError);
}

TEST_CASE("lower hull cells") {
    // Points 0, 1, 2 on a line, homogenized.
    auto pts = IntMatrix::from_rows({{1, 1, 1}, {0, 1, 2}});
    auto cells = lower_hull_cells(pts, {1, 1, 3});
    REQUIRE(cells.has_value());
    CHECK(cells->size() == 2);
    auto coarse = lower_hull_cells(pts, {1, 5, 3});
    REQUIRE(coarse.has_value());
    REQUIRE(coarse->size() == 1);
    CHECK(coarse->front().vertices == ColumnSet{0, 2});
    CHECK_FALSE(lower_hull_cells(pts, {1, 2, 3}).has_value());
}

TEST_CASE("absolute determinant") {
    CHECK(abs_determinant(IntMatrix::from_rows({{1, 2}, {3, 4}})) == 2);
    CHECK(abs_determinant(IntMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {1, 1, 1}})) == 6);
}
