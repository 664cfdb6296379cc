#pragma once

#include <vector>

#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

/// β lies on an integer translate of the hyperplane spanned by the source
/// faces iff normal·β ∈ ℤ.
struct ArrangementCondition {
    IntVector normal;
    std::vector<ColumnSet> source_faces;
};

struct StratumReport {
    std::size_t index = 0;
    std::vector<IntVector> fired;
    /// Basis of the directions of the flat through β cut out by the fired
    /// translates.
    std::vector<RationalVector> flat_directions;
    std::size_t flat_codim() const { return index; }
};

/// One condition per distinct codimension-one span, sorted by normal.
std::vector<ArrangementCondition> build_arrangement(const Triangulation& t);

bool fires(const ArrangementCondition& c, const GaussianVector& beta);

StratumReport stratum_index(const GaussianVector& beta, const std::vector<ArrangementCondition>& arrangement);

} // namespace gkz
