#pragma once

#include <cstddef>
#include <vector>

#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"

namespace gkz {

/// ∂^plus − ∂^minus. After Gröbner computations `plus` is the leading term.
struct Binomial {
    IntVector plus;
    IntVector minus;

    /// plus − minus, an element of ker_ℤ(A) for toric binomials.
    IntVector difference() const;
    friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Splits a lattice vector into positive and negative parts.
Binomial binomial_from_vector(const IntVector& u);

/// Monomial ideal given by its minimal generators (an antichain).
struct MonomialIdeal {
    std::size_t n = 0;
    std::vector<IntVector> generators;

    bool contains(const IntVector& monomial) const;
    bool is_zero() const { return generators.empty(); }
};

/// Builds a monomial ideal, removing non-minimal generators and sorting.
MonomialIdeal make_monomial_ideal(std::size_t n, std::vector<IntVector> generators);

struct StandardPair {
    IntVector root;
    ColumnSet face;
    friend bool operator==(const StandardPair&, const StandardPair&) = default;
};

/// Term order: compare by each weight row in turn, then by total degree,
/// then lexicographically (larger first exponent wins).
struct TermOrder {
    std::vector<RationalVector> weights;
    bool less(const IntVector& a, const IntVector& b) const;
};

/// Reduced Gröbner basis of the binomial ideal generated by `generators`,
/// every element oriented so that `plus` is the leading monomial. The result
/// is sorted by leading monomial.
std::vector<Binomial> reduced_groebner_basis(const std::vector<Binomial>& generators, const TermOrder& order);

/// Generators of I_A: saturation of the lattice-basis ideal by the product of
/// all variables, returned as the reduced degree-lex Gröbner basis.
std::vector<Binomial> toric_generators(const IntegerMatrix& a);

/// Reduced Gröbner basis refining w (w, then degree, then lex). Throws
/// NotGenericWeight if some element has both terms of equal w-weight.
std::vector<Binomial> weight_groebner_basis(const std::vector<Binomial>& ideal, const RationalVector& w);

/// in_w(I). Throws NotGenericWeight when the initial ideal is not monomial.
MonomialIdeal initial_ideal(const std::vector<Binomial>& ideal, const RationalVector& w, std::size_t n);

/// Standard-pair decomposition of the complement of M, sorted by face size
/// (descending), then face, then root.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& m);

/// True iff (1,…,1) lies in the ℚ-row span of A.
bool is_homogeneous(const IntegerMatrix& a);

/// Generators g+ − g− of the dual of the Gröbner cone of I at w, the
/// practical stand-in for the cone of series supports.
std::vector<IntVector> groebner_cone_dual(const std::vector<Binomial>& weight_basis);

} // namespace gkz
