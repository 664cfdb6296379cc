#include "gkz/toric.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gkz/errors.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

IntVector Binomial::difference() const {
    IntVector d(plus.size());
    for (std::size_t i = 0; i < plus.size(); ++i) d[i] = plus[i] - minus[i];
    return d;
}

Binomial binomial_from_vector(const IntVector& u) {
    Binomial b{IntVector(u.size(), 0), IntVector(u.size(), 0)};
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0) b.plus[i] = u[i];
        if (u[i] < 0) b.minus[i] = -u[i];
    }
    return b;
}

namespace {

bool divides(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

bool MonomialIdeal::contains(const IntVector& monomial) const {
    return std::any_of(generators.begin(), generators.end(), [&](const IntVector& g) { return divides(g, monomial); });
}

MonomialIdeal make_monomial_ideal(std::size_t n, std::vector<IntVector> generators) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<IntVector> minimal;
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& h : generators)
            if (h != g && divides(h, g)) redundant = true;
        if (!redundant) minimal.push_back(g);
    }
    return MonomialIdeal{n, minimal};
}

bool TermOrder::less(const IntVector& a, const IntVector& b) const {
    for (const auto& w : weights) {
        Rational wa = dot(w, a), wb = dot(w, b);
        if (wa != wb) return wa < wb;
    }
    std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

namespace {

// Reduces both terms of b modulo the leading terms of g; returns false when
// the binomial reduces to zero.
bool reduce(Binomial& b, const std::vector<Binomial>& g, const TermOrder& order) {
    while (true) {
        if (b.plus == b.minus) return false;
        if (order.less(b.plus, b.minus)) std::swap(b.plus, b.minus);
        bool changed = false;
        for (IntVector* term : {&b.plus, &b.minus}) {
            for (const auto& h : g) {
                if (!divides(h.plus, *term)) continue;
                for (std::size_t i = 0; i < term->size(); ++i) (*term)[i] += h.minus[i] - h.plus[i];
                changed = true;
                break;
            }
            if (changed) break;
        }
        if (!changed) return true;
    }
}

bool coprime(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

} // namespace

std::vector<Binomial> reduced_groebner_basis(const std::vector<Binomial>& generators, const TermOrder& order) {
    std::vector<Binomial> basis;
    for (auto b : generators)
        if (reduce(b, basis, order)) basis.push_back(std::move(b));

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Binomial& f = basis[i];
        const Binomial& g = basis[j];
        if (coprime(f.plus, g.plus)) continue;
        const std::size_t n = f.plus.size();
        Binomial s{IntVector(n), IntVector(n)};
        for (std::size_t k = 0; k < n; ++k) {
            std::int64_t l = std::max(f.plus[k], g.plus[k]);
            s.plus[k] = l - f.plus[k] + f.minus[k];
            s.minus[k] = l - g.plus[k] + g.minus[k];
        }
        if (!reduce(s, basis, order)) continue;
        basis.push_back(std::move(s));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Keep elements with minimal leading terms, then interreduce.
    std::vector<Binomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !divides(basis[j].plus, basis[i].plus)) continue;
            redundant = basis[j].plus != basis[i].plus || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Binomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Binomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Binomial b = minimal[i];
        // The leading term is irreducible by the others, so only the tail moves.
        while (true) {
            bool changed = false;
            for (const auto& h : others) {
                if (!divides(h.plus, b.minus)) continue;
                for (std::size_t k = 0; k < b.minus.size(); ++k) b.minus[k] += h.minus[k] - h.plus[k];
                changed = true;
                break;
            }
            if (!changed) break;
        }
        reduced.push_back(std::move(b));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Binomial& a, const Binomial& b) { return order.less(a.plus, b.plus); });
    return reduced;
}

std::vector<Binomial> toric_generators(const IntegerMatrix& a) {
    const std::size_t n = a.n();
    KernelBasis kb = kernel_lattice_basis(a);
    if (kb.m() == 0) return {};
    // Variables x_1..x_n and an auxiliary t in the last slot.
    std::vector<Binomial> gens;
    for (std::size_t k = 0; k < kb.m(); ++k) {
        Binomial b = binomial_from_vector(kb.column(k));
        b.plus.push_back(0);
        b.minus.push_back(0);
        gens.push_back(std::move(b));
    }
    gens.push_back(Binomial{IntVector(n + 1, 1), IntVector(n + 1, 0)});
    RationalVector eliminate(n + 1, 0);
    eliminate[n] = 1;
    auto gb = reduced_groebner_basis(gens, TermOrder{{eliminate}});
    std::vector<Binomial> saturated;
    for (auto& b : gb) {
        if (b.plus[n] != 0 || b.minus[n] != 0) continue;
        b.plus.pop_back();
        b.minus.pop_back();
        saturated.push_back(std::move(b));
    }
    return reduced_groebner_basis(saturated, TermOrder{});
}

std::vector<Binomial> weight_groebner_basis(const std::vector<Binomial>& ideal, const RationalVector& w) {
    if (std::any_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) <= 0; }))
        throw GkzError(ErrorCode::InvalidArgument, "weight vector must be strictly positive");
    auto gb = reduced_groebner_basis(ideal, TermOrder{{w}});
    for (const auto& g : gb)
        if (dot(w, g.plus) == dot(w, g.minus))
            throw GkzError(ErrorCode::NotGenericWeight, "weight does not select a monomial initial ideal");
    return gb;
}

MonomialIdeal initial_ideal(const std::vector<Binomial>& ideal, const RationalVector& w, std::size_t n) {
    std::vector<IntVector> leads;
    for (const auto& g : weight_groebner_basis(ideal, w)) leads.push_back(g.plus);
    return make_monomial_ideal(n, std::move(leads));
}

std::vector<StandardPair> standard_pairs(const MonomialIdeal& m) {
    const std::size_t n = m.n;
    IntVector cap(n, 0);
    for (const auto& g : m.generators)
        for (std::size_t i = 0; i < n; ++i) cap[i] = std::max(cap[i], g[i]);

    // (a, σ) is admissible iff no generator divides a on the complement of σ.
    auto admissible = [&](const IntVector& a, const std::vector<bool>& in_face) {
        for (const auto& g : m.generators) {
            bool hit = true;
            for (std::size_t i = 0; i < n && hit; ++i)
                if (!in_face[i] && g[i] > a[i]) hit = false;
            if (hit) return false;
        }
        return true;
    };

    std::vector<StandardPair> pairs;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<bool> in_face(n);
        ColumnSet face, outside;
        for (std::size_t i = 0; i < n; ++i) {
            in_face[i] = (mask >> i) & 1;
            (in_face[i] ? face : outside).push_back(i);
        }
        if (std::any_of(outside.begin(), outside.end(), [&](std::size_t j) { return cap[j] == 0; })) continue;
        IntVector a(n, 0);
        while (true) {
            if (admissible(a, in_face)) {
                bool maximal = true;
                for (auto j : outside) {
                    IntVector b = a;
                    b[j] = 0;
                    auto bigger = in_face;
                    bigger[j] = true;
                    if (admissible(b, bigger)) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) pairs.push_back(StandardPair{a, face});
            }
            std::size_t k = 0;
            while (k < outside.size() && a[outside[k]] + 1 == cap[outside[k]]) a[outside[k++]] = 0;
            if (k == outside.size()) break;
            ++a[outside[k]];
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const StandardPair& x, const StandardPair& y) {
        if (x.face.size() != y.face.size()) return x.face.size() > y.face.size();
        if (x.face != y.face) return x.face < y.face;
        return x.root < y.root;
    });
    return pairs;
}

bool is_homogeneous(const IntegerMatrix& a) {
    linalg::Matrix<Rational> rows;
    for (std::size_t i = 0; i < a.d(); ++i) {
        RationalVector r;
        for (std::size_t j = 0; j < a.n(); ++j) r.emplace_back(static_cast<long>(a(i, j)));
        rows.push_back(r);
    }
    std::size_t base = linalg::rank(rows);
    rows.push_back(RationalVector(a.n(), Rational(1)));
    return linalg::rank(rows) == base;
}

std::vector<IntVector> groebner_cone_dual(const std::vector<Binomial>& weight_basis) {
    std::vector<IntVector> out;
    for (const auto& g : weight_basis) out.push_back(g.difference());
    return out;
}

} // namespace gkz
