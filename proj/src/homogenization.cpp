#include "gkz/homogenization.hpp"

#include <random>

#include "gkz/errors.hpp"
#include "gkz/stratification.hpp"
#include "gkz/toric.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

HomogenizedSystem homogenize_matrix(const IntegerMatrix& a) {
    const std::size_t d = a.d(), n = a.n();
    IntMatrix rho(d + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) rho(0, j) = 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) rho(i + 1, j + 1) = a(i, j);
    return HomogenizedSystem{IntegerMatrix(rho), a, GaussianRational{}};
}

GaussianVector homogenize_parameter(const GaussianVector& beta) {
    GaussianVector out{GaussianRational(1)};
    out.insert(out.end(), beta.begin(), beta.end());
    return out;
}

GenericLift generic_lift(HomogenizedSystem& h, const GaussianVector& beta, const RationalVector& w,
                         std::uint64_t seed) {
    if (beta.size() != h.original.d()) throw GkzError(ErrorCode::InvalidArgument, "parameter has wrong length");
    if (w.size() != h.original.n()) throw GkzError(ErrorCode::InvalidArgument, "weight has wrong length");
    // (0, w) shifted by the all-ones row, which does not change the lift.
    RationalVector lifted_w{Rational(1)};
    for (const auto& x : w) lifted_w.push_back(x + 1);
    auto arrangement = build_arrangement(regular_triangulation(h.rho, lifted_w));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> whole(1000, 10000);
    std::uniform_int_distribution<long> den(2, 97);
    for (std::size_t attempt = 1; attempt <= 1000; ++attempt) {
        long q = den(rng);
        long p = std::uniform_int_distribution<long>(1, q - 1)(rng);
        Rational frac{Integer(p), Integer(q)};
        frac.canonicalize();
        GaussianRational beta0(Rational(whole(rng)) + frac);
        GaussianVector lifted{beta0};
        lifted.insert(lifted.end(), beta.begin(), beta.end());
        bool clean = true;
        for (const auto& c : arrangement)
            if (c.normal[0] != 0 && fires(c, lifted)) clean = false;
        if (!clean) continue;
        h.lift_parameter = beta0;
        return GenericLift{beta0, lifted, attempt};
    }
    throw GkzError(ErrorCode::InconsistentSystem, "no generic lift found");
}

namespace {

FaceInvariants invariants(const IntegerMatrix& a, const ColumnSet& face) {
    FaceInvariants out;
    out.codim = a.d() - rank(a.matrix().select_columns(face));
    out.volume = normalized_volume(a, face);
    out.index = lattice_index(a, face);
    return out;
}

} // namespace

FaceComparison face_invariants_preserved(const IntegerMatrix& a, const ColumnSet& face) {
    for (auto j : face)
        if (j >= a.n()) throw GkzError(ErrorCode::InvalidArgument, "face index out of range");
    auto h = homogenize_matrix(a);
    ColumnSet lifted{0};
    for (auto j : face) lifted.push_back(j + 1);
    return FaceComparison{invariants(a, face), invariants(h.rho, lifted)};
}

bool ones_in_weight_cone(const IntegerMatrix& a, const RationalVector& w) {
    for (const auto& u : groebner_cone_dual(weight_groebner_basis(toric_generators(a), w))) {
        std::int64_t total = 0;
        for (auto x : u) total += x;
        if (total < 0) return false;
    }
    return true;
}

Integer rank_upper_bound(const IntegerMatrix& a) {
    std::size_t exponent = 2 * a.d() + (is_homogeneous(a) ? 0 : 2);
    Integer bound = normalized_volume(a);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), exponent);
    return bound;
}

namespace {

MixedSeries restricted_skeleton(const MixedSeries& psi) {
    if (psi.n() < 1) throw GkzError(ErrorCode::InvalidArgument, "series has no x0 variable");
    GaussianVector base(psi.base.begin() + 1, psi.base.end());
    RationalVector weight;
    for (std::size_t j = 1; j < psi.n(); ++j) weight.push_back(psi.weight[j] - psi.weight[0]);
    return make_series(base, weight, psi.truncation);
}

// (x)_k for any integer k; throws PoleHit when it is undefined.
GaussianRational pochhammer(const GaussianRational& x, std::int64_t k) {
    GaussianRational out(1);
    if (k >= 0) {
        for (std::int64_t i = 0; i < k; ++i) out *= x + GaussianRational(static_cast<long>(i));
        return out;
    }
    for (std::int64_t i = 1; i <= -k; ++i) {
        GaussianRational f = x - GaussianRational(static_cast<long>(i));
        if (f.is_zero()) throw GkzError(ErrorCode::PoleHit, "Gamma correction hits a pole");
        out /= f;
    }
    return out;
}

} // namespace

MixedSeries restrict_x0(const MixedSeries& psi) {
    MixedSeries out = restricted_skeleton(psi);
    for (const auto& [key, c] : psi.terms) {
        if (key.second[0] != 0) continue;
        IntVector offset(key.first.begin() + 1, key.first.end());
        IntVector deg(key.second.begin() + 1, key.second.end());
        out.add(offset, deg, c);
    }
    return out;
}

MixedSeries restrict_x0_gamma(const MixedSeries& psi) {
    if (!psi.is_log_free()) throw GkzError(ErrorCode::LogTermsPresent, "Gamma-corrected restriction needs a log-free series");
    MixedSeries out = restricted_skeleton(psi);
    const GaussianRational shifted = psi.base[0] + GaussianRational(1);
    for (const auto& [key, c] : psi.terms) {
        IntVector offset(key.first.begin() + 1, key.first.end());
        IntVector deg(key.second.begin() + 1, key.second.end());
        out.add(offset, deg, c * pochhammer(shifted, key.first[0]));
    }
    return out;
}

} // namespace gkz
