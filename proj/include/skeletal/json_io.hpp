#pragma once

#include "skeletal/chip.hpp"
#include "skeletal/cycling.hpp"
#include "skeletal/stats.hpp"

#include <json.hpp>

namespace skeletal {

using Json = nlohmann::json;

inline Json scalar_to_json(const Scalar& x) { return format_scalar(x); }

inline Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    throw std::domain_error("expected a rational in \"p/q\" text form, got " + j.dump());
}

inline Json scalars_to_json(const std::vector<Scalar>& values) {
    Json array = Json::array();
    for (const Scalar& v : values) array.push_back(scalar_to_json(v));
    return array;
}

inline std::vector<Scalar> scalars_from_json(const Json& j) {
    if (!j.is_array()) throw std::domain_error("expected an array of rationals");
    std::vector<Scalar> values;
    values.reserve(j.size());
    for (const Json& item : j) values.push_back(scalar_from_json(item));
    return values;
}

inline Json params_to_json(const Params& params) {
    return Json{{"n", params.n},
                {"m", scalar_to_json(params.m)},
                {"c", scalar_to_json(params.c)},
                {"mode", group_mode_name(params.mode)}};
}

inline Params params_from_json(const Json& j) {
    Params params;
    params.n = j.at("n").get<int>();
    params.m = scalar_from_json(j.at("m"));
    params.c = scalar_from_json(j.at("c"));
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "Z")
        params.mode = GroupMode::Integers;
    else if (mode == "Q")
        params.mode = GroupMode::Rationals;
    else
        throw std::domain_error("mode must be \"Z\" or \"Q\"");
    params.validate();
    return params;
}

inline Json path_to_json(const Path& p, const Params& params) {
    Json j = params_to_json(params);
    j["x"] = scalars_to_json(p.xs);
    return j;
}

inline std::pair<Path, Params> path_from_json(const Json& j) {
    const Params params = params_from_json(j);
    Path p{scalars_from_json(j.at("x"))};
    validate_path(p, params);
    return {std::move(p), params};
}

inline Json area_vector_to_json(const AreaVector& g) {
    return Json{{"g", scalars_to_json(g.gs)}};
}

inline AreaVector area_vector_from_json(const Json& j) {
    return AreaVector{scalars_from_json(j.at("g"))};
}

inline Json fn_to_json(const FnTable& f) { return Json{{"f", scalars_to_json(f.values)}}; }

inline FnTable fn_from_json(const Json& j) { return FnTable{scalars_from_json(j.at("f"))}; }

inline Json labeled_path_to_json(const LabeledPath& lp) {
    return Json{{"g", scalars_to_json(lp.g.gs)}, {"w", lp.w}};
}

inline LabeledPath labeled_path_from_json(const Json& j) {
    return LabeledPath{AreaVector{scalars_from_json(j.at("g"))},
                       j.at("w").get<std::vector<int>>()};
}

inline Json chip_to_json(const ChipConfig& D) { return Json{{"D", scalars_to_json(D.chips)}}; }

inline ChipConfig chip_from_json(const Json& j) {
    return ChipConfig{scalars_from_json(j.at("D"))};
}

inline Json poly_to_json(const Poly& poly) {
    Json coeffs = Json::array();
    for (const BigInt& coefficient : poly.coeffs) coeffs.push_back(coefficient.str());
    return Json{{"coeffs", coeffs}};
}

inline Poly poly_from_json(const Json& j) {
    Poly poly;
    for (const Json& coefficient : j.at("coeffs"))
        poly.coeffs.emplace_back(coefficient.get<std::string>());
    return poly;
}

inline Json class_walk_to_json(const ClassWalk& walk) {
    Json array = Json::array();
    for (const ClassElement& element : walk.elements)
        array.push_back(Json{{"g", scalars_to_json(element.g.gs)}, {"offset", element.offset}});
    return array;
}

/// Accepts either a JSON array (entries as "p/q" strings or integers) or the
/// lenient bracket form used on the command line, e.g. "[1/2,2]" or "1/2,2".
inline std::vector<Scalar> parse_scalar_list(std::string_view text, const char* json_key) {
    std::string trimmed(text);
    const auto first = trimmed.find_first_not_of(" \t\r\n");
    const auto last = trimmed.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::domain_error("empty value list");
    trimmed = trimmed.substr(first, last - first + 1);

    if (trimmed.front() == '{') {
        Json j = Json::parse(trimmed);
        return scalars_from_json(j.at(json_key));
    }
    std::string_view body = trimmed;
    if (body.front() == '[') {
        if (body.back() != ']') throw std::domain_error("unbalanced brackets in value list");
        body.remove_prefix(1);
        body.remove_suffix(1);
    }
    std::vector<Scalar> values;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string_view::npos) comma = body.size();
        std::string_view item = body.substr(start, comma - start);
        // skip quotes so JSON-style arrays of strings also parse
        std::string cleaned;
        for (char ch : item)
            if (ch != '"' && ch != '\'') cleaned.push_back(ch);
        if (!cleaned.empty() &&
            cleaned.find_first_not_of(" \t") != std::string::npos)
            values.push_back(parse_scalar(cleaned));
        start = comma + 1;
    }
    if (values.empty()) throw std::domain_error("empty value list");
    return values;
}

}  // namespace skeletal
