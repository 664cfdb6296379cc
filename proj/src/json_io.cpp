#include "gkz/json_io.hpp"

namespace gkz {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

Json to_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const GaussianVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& r : m.to_rows()) out.push_back(r);
    return out;
}

Json to_json(const MixedSeries& s) {
    Json terms = Json::array();
    for (const auto& [key, c] : s.terms)
        terms.push_back(Json{{"offset", key.first}, {"log_degree", key.second}, {"coefficient", to_json(c)}});
    return Json{{"base", to_json(s.base)},
                {"weight", to_json(s.weight)},
                {"truncation", to_json(s.truncation)},
                {"terms", std::move(terms)}};
}

const Json& require(const Json& j, const std::string& key, const std::string& field) {
    if (!j.is_object()) throw ParseError(field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(field + "." + key, "missing field");
    return *it;
}

Rational rational_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    if (!j.is_string()) throw ParseError(field, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(field, e.what());
    }
}

GaussianRational gaussian_from_json(const Json& j, const std::string& field) {
    if (j.is_object()) {
        Rational re = j.contains("re") ? rational_from_json(j["re"], field + ".re") : Rational(0);
        Rational im = j.contains("im") ? rational_from_json(j["im"], field + ".im") : Rational(0);
        for (const auto& [k, v] : j.items())
            if (k != "re" && k != "im") throw ParseError(field + "." + k, "unexpected field");
        return GaussianRational(re, im);
    }
    return GaussianRational(rational_from_json(j, field));
}

namespace {

template <class F>
auto array_of(const Json& j, const std::string& field, F&& parse) {
    if (!j.is_array()) throw ParseError(field, "expected an array");
    std::vector<decltype(parse(j, field))> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

std::int64_t int_from_json(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) throw ParseError(field, "expected an integer");
    return j.get<std::int64_t>();
}

} // namespace

RationalVector rational_vector_from_json(const Json& j, const std::string& field) {
    return array_of(j, field, rational_from_json);
}

GaussianVector gaussian_vector_from_json(const Json& j, const std::string& field) {
    return array_of(j, field, gaussian_from_json);
}

IntVector int_vector_from_json(const Json& j, const std::string& field) { return array_of(j, field, int_from_json); }

IntMatrix matrix_from_json(const Json& j, const std::string& field) {
    auto rows = array_of(j, field, int_vector_from_json);
    if (rows.empty()) throw ParseError(field, "matrix has no rows");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != rows[0].size())
            throw ParseError(field + "[" + std::to_string(i) + "]", "rows have different lengths");
    return IntMatrix::from_rows(rows);
}

MixedSeries series_from_json(const Json& j, const std::string& field) {
    auto base = gaussian_vector_from_json(require(j, "base", field), field + ".base");
    auto weight = rational_vector_from_json(require(j, "weight", field), field + ".weight");
    if (weight.size() != base.size()) throw ParseError(field + ".weight", "length differs from base");
    auto truncation = rational_from_json(require(j, "truncation", field), field + ".truncation");
    MixedSeries s = make_series(base, weight, truncation);
    const Json& terms = require(j, "terms", field);
    if (!terms.is_array()) throw ParseError(field + ".terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string at = field + ".terms[" + std::to_string(i) + "]";
        auto offset = int_vector_from_json(require(terms[i], "offset", at), at + ".offset");
        auto deg = int_vector_from_json(require(terms[i], "log_degree", at), at + ".log_degree");
        if (offset.size() != base.size() || deg.size() != base.size())
            throw ParseError(at, "offset or log degree has wrong length");
        for (auto x : deg)
            if (x < 0) throw ParseError(at + ".log_degree", "log degrees must be non-negative");
        s.add(offset, deg, gaussian_from_json(require(terms[i], "coefficient", at), at + ".coefficient"));
    }
    return s;
}

} // namespace gkz
