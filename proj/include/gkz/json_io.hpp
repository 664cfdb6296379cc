#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"
#include "gkz/series.hpp"

// Exact values travel as strings "p/q"; Gaussian rationals as {"re","im"}.

namespace gkz {

using Json = nlohmann::json;

/// Malformed input; `field` is the JSON path of the offending value.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);
Json to_json(const RationalVector& v);
Json to_json(const GaussianVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const MixedSeries& s);

Rational rational_from_json(const Json& j, const std::string& field);
GaussianRational gaussian_from_json(const Json& j, const std::string& field);
RationalVector rational_vector_from_json(const Json& j, const std::string& field);
GaussianVector gaussian_vector_from_json(const Json& j, const std::string& field);
IntVector int_vector_from_json(const Json& j, const std::string& field);
/// Array of rows.
IntMatrix matrix_from_json(const Json& j, const std::string& field);
MixedSeries series_from_json(const Json& j, const std::string& field);

/// j[key] or a ParseError naming `field.key`.
const Json& require(const Json& j, const std::string& key, const std::string& field);

} // namespace gkz
