#include "gkz/triangulation.hpp"

#include <algorithm>
#include <set>

#include "gkz/errors.hpp"

namespace gkz {

namespace {

void require_positive(const RationalVector& w, std::size_t n) {
    if (w.size() != n) throw GkzError(ErrorCode::InvalidArgument, "weight vector has wrong length");
    for (const auto& x : w)
        if (sgn(x) <= 0) throw GkzError(ErrorCode::InvalidArgument, "weight vector must be strictly positive");
}

Triangulation triangulate(IntMatrix points, RationalVector lift, const IntegerMatrix& a, bool with_origin) {
    auto cells = lower_hull_cells(points, lift);
    if (!cells) throw GkzError(ErrorCode::NotGenericWeight, "lift does not induce a triangulation");
    Triangulation t;
    for (auto& c : *cells) {
        t.simplices.push_back(c.vertices);
        t.certificates.push_back(c.functional);
    }
    t.lift = std::move(lift);
    t.points = std::move(points);
    t.original = a.matrix();
    t.with_origin = with_origin;
    return t;
}

} // namespace

Triangulation regular_triangulation(const IntegerMatrix& a, const RationalVector& w) {
    require_positive(w, a.n());
    return triangulate(a.matrix(), w, a, false);
}

Triangulation inhomogeneous_triangulation(const IntegerMatrix& a, const RationalVector& w) {
    require_positive(w, a.n());
    IntMatrix pts(a.d() + 1, a.n() + 1);
    pts(0, 0) = 1;
    for (std::size_t j = 0; j < a.n(); ++j) {
        pts(0, j + 1) = 1;
        for (std::size_t i = 0; i < a.d(); ++i) pts(i + 1, j + 1) = a(i, j);
    }
    RationalVector lift{Rational(0)};
    lift.insert(lift.end(), w.begin(), w.end());
    return triangulate(std::move(pts), std::move(lift), a, true);
}

std::vector<ColumnSet> codim1_faces(const Triangulation& t) {
    const std::size_t d = t.d();
    std::set<ColumnSet> faces;
    for (const auto& s : t.simplices) {
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            ColumnSet face;
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (k == skip) continue;
                if (t.with_origin) {
                    if (s[k] != 0) face.push_back(s[k] - 1);
                } else {
                    face.push_back(s[k]);
                }
            }
            if (rank(t.original.select_columns(face)) + 1 == d) faces.insert(face);
        }
    }
    return {faces.begin(), faces.end()};
}

bool certificate_holds(const Triangulation& t) {
    for (std::size_t s = 0; s < t.simplices.size(); ++s) {
        const auto& sigma = t.simplices[s];
        const auto& c = t.certificates[s];
        for (std::size_t j = 0; j < t.points.cols(); ++j) {
            Rational v = dot(c, t.points.column(j));
            bool inside = std::find(sigma.begin(), sigma.end(), j) != sigma.end();
            if (inside ? v != t.lift[j] : !(v < t.lift[j])) return false;
        }
    }
    return true;
}

Integer simplex_volume(const Triangulation& t, const ColumnSet& simplex) {
    return abs_determinant(t.points.select_columns(simplex));
}

} // namespace gkz
