#ifndef PTAS_JSON_IO_HPP
#define PTAS_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "certificate.hpp"
#include "grid.hpp"
#include "rational.hpp"

namespace ptas {

// Rationals travel as "p/q" strings so nothing is lost to floating point.

inline nlohmann::json to_json(const Rational& q) { return q.fraction_str(); }

inline Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string()) throw ParseError("expected a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

inline nlohmann::json to_json(const GridPoint& p) {
    nlohmann::json point = nlohmann::json::array();
    for (const auto& x : p.coordinates()) point.push_back(to_json(x));
    return {{"alpha", p.alpha.exponents()}, {"r", p.r}, {"point", point}};
}

inline GridPoint grid_point_from_json(const nlohmann::json& j) {
    return GridPoint{MultiIndex(j.at("alpha").get<std::vector<unsigned>>()), j.at("r").get<unsigned>()};
}

inline nlohmann::json to_json(const RangeInput& range) {
    return {{"lower", to_json(range.lower)},
            {"upper", to_json(range.upper)},
            {"provenance", std::string(provenance_name(range.provenance))}};
}

inline nlohmann::json to_json(const BoundCertificate& c) {
    nlohmann::json j = {
        {"theorem", std::string(theorem_name(c.theorem))},
        {"n", c.n},
        {"d", c.d},
        {"r", c.r},
        {"grid_value", to_json(c.grid_value)},
        {"grid_argmin", to_json(c.grid_argmin)},
        {"bound_value", to_json(c.bound_value)},
        {"range", to_json(c.range)},
        {"reference", to_json(c.reference)},
        {"reference_source", std::string(reference_source_name(c.reference_source))},
        {"gap", to_json(c.gap)},
        {"satisfied", c.satisfied},
    };
    if (c.coefficient_range_bound) j["coefficient_range_bound"] = to_json(*c.coefficient_range_bound);
    if (c.reference_point) j["reference_point"] = to_json(*c.reference_point);
    if (c.bernstein_excess) j["bernstein_excess"] = to_json(*c.bernstein_excess);
    if (c.ratio) j["ratio"] = to_json(*c.ratio);
    return j;
}

inline BoundCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        BoundCertificate c;
        c.theorem = parse_theorem(j.at("theorem").get<std::string>());
        c.n = j.at("n").get<std::size_t>();
        c.d = j.at("d").get<unsigned>();
        c.r = j.at("r").get<unsigned>();
        c.grid_value = rational_from_json(j.at("grid_value"));
        c.grid_argmin = grid_point_from_json(j.at("grid_argmin"));
        c.bound_value = rational_from_json(j.at("bound_value"));
        const auto& range = j.at("range");
        c.range = {rational_from_json(range.at("lower")), rational_from_json(range.at("upper")),
                   parse_provenance(range.at("provenance").get<std::string>())};
        c.reference = rational_from_json(j.at("reference"));
        c.reference_source = j.at("reference_source").get<std::string>() == "range_lower"
                                 ? ReferenceSource::range_lower
                                 : ReferenceSource::verification_grid;
        c.gap = rational_from_json(j.at("gap"));
        c.satisfied = j.at("satisfied").get<bool>();
        if (j.contains("coefficient_range_bound"))
            c.coefficient_range_bound = rational_from_json(j["coefficient_range_bound"]);
        if (j.contains("reference_point")) c.reference_point = grid_point_from_json(j["reference_point"]);
        if (j.contains("bernstein_excess")) c.bernstein_excess = rational_from_json(j["bernstein_excess"]);
        if (j.contains("ratio")) c.ratio = rational_from_json(j["ratio"]);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace ptas

#endif // PTAS_JSON_IO_HPP
