#pragma once

#include <vector>

#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"

namespace gkz {

/// Regular triangulation induced by a lift.
///
/// `points` holds the configuration that was triangulated. For the
/// homogeneous variant these are the columns of A and simplex indices refer
/// to them directly. For the inhomogeneous variant the configuration is
/// (1,0),(1,a_1),…,(1,a_n): index 0 is the origin and index j ≥ 1 is a_j.
struct Triangulation {
    std::vector<ColumnSet> simplices;
    std::vector<RationalVector> certificates;
    RationalVector lift;
    IntMatrix points;
    IntMatrix original;
    bool with_origin = false;

    std::size_t d() const { return original.rows(); }
};

Triangulation regular_triangulation(const IntegerMatrix& a, const RationalVector& w);
Triangulation inhomogeneous_triangulation(const IntegerMatrix& a, const RationalVector& w);

/// Faces of maximal simplices whose span in ℝ^d has dimension d−1, given as
/// sets of 0-based column indices of A (the origin is dropped).
std::vector<ColumnSet> codim1_faces(const Triangulation& t);

/// Re-checks the interpolating functional of every simplex exactly.
bool certificate_holds(const Triangulation& t);

/// |det| of the simplex in the ambient lattice; these sum to the volume.
Integer simplex_volume(const Triangulation& t, const ColumnSet& simplex);

} // namespace gkz
