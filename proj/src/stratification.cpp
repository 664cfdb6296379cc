#include "gkz/stratification.hpp"

#include <algorithm>
#include <map>

#include "gkz/errors.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

std::vector<ArrangementCondition> build_arrangement(const Triangulation& t) {
    const std::size_t d = t.d();
    std::map<IntVector, std::vector<ColumnSet>> by_normal;
    for (const auto& face : codim1_faces(t)) {
        std::vector<IntVector> span;
        for (auto j : face) span.push_back(t.original.column(j));
        by_normal[primitive_normal(span, d)].push_back(face);
    }
    std::vector<ArrangementCondition> out;
    for (auto& [normal, faces] : by_normal) out.push_back(ArrangementCondition{normal, std::move(faces)});
    return out;
}

bool fires(const ArrangementCondition& c, const GaussianVector& beta) {
    if (beta.size() != c.normal.size()) throw GkzError(ErrorCode::InvalidArgument, "parameter has wrong length");
    return dot(beta, c.normal).is_integer();
}

StratumReport stratum_index(const GaussianVector& beta, const std::vector<ArrangementCondition>& arrangement) {
    StratumReport report;
    linalg::Matrix<Rational> rows;
    for (const auto& c : arrangement) {
        if (!fires(c, beta)) continue;
        report.fired.push_back(c.normal);
        RationalVector r;
        for (auto x : c.normal) r.emplace_back(static_cast<long>(x));
        rows.push_back(std::move(r));
    }
    report.index = linalg::rank(rows);
    report.flat_directions = linalg::nullspace(rows, beta.size());
    return report;
}

} // namespace gkz
