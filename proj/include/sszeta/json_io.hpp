#pragma once

#include "sszeta/bigint.hpp"
#include "sszeta/curve.hpp"
#include "sszeta/errors.hpp"
#include "sszeta/lpoly.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace sszeta {

using Json = nlohmann::json;

// Integers are JSON numbers when they fit 2^53 exactly, decimal strings
// otherwise. Readers accept both forms.
inline Json int_to_json(const Int& v) {
    static const Int kLimit = Int(1) << 53;
    if (v > -kLimit && v < kLimit) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

inline Int json_to_int(const Json& j, const std::string& what) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw input_error(what + ": not a decimal integer: " + j.get<std::string>());
        }
    }
    throw input_error(what + ": expected an integer or a decimal string");
}

inline Json to_json(const CurveSpec& spec) {
    Json j;
    switch (spec.kind) {
        case CurveKind::artin_schreier: j["kind"] = "artin_schreier"; break;
        case CurveKind::hyperelliptic: j["kind"] = "hyperelliptic"; break;
        case CurveKind::plane_affine: j["kind"] = "plane_affine"; break;
    }
    j["p"] = spec.p;
    j["r"] = spec.r;
    Json rhs = Json::array();
    for (const Int& c : spec.rhs) rhs.push_back(int_to_json(c));
    j["rhs"] = rhs;
    if (spec.genus_override) j["genus"] = *spec.genus_override;
    if (spec.points_at_infinity) j["points_at_infinity"] = int_to_json(*spec.points_at_infinity);
    return j;
}

inline CurveSpec curve_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("curve: expected a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw input_error("curve: missing \"kind\"");
    const std::string kind_str = j["kind"].get<std::string>();
    CurveKind kind;
    if (kind_str == "artin_schreier")
        kind = CurveKind::artin_schreier;
    else if (kind_str == "hyperelliptic")
        kind = CurveKind::hyperelliptic;
    else if (kind_str == "plane_affine")
        kind = CurveKind::plane_affine;
    else
        throw input_error("curve: unknown kind \"" + kind_str + "\"");
    if (!j.contains("p") || !j.contains("r") || !j.contains("rhs"))
        throw input_error("curve: required fields are kind, p, r, rhs");
    const Int p = json_to_int(j["p"], "curve.p");
    const Int r = json_to_int(j["r"], "curve.r");
    if (p < 2 || p >= (Int(1) << 31)) throw input_error("curve.p: out of range");
    if (r < 1 || r > 64) throw input_error("curve.r: out of range");
    if (!j["rhs"].is_array()) throw input_error("curve.rhs: expected an array");
    std::vector<Int> rhs;
    for (const auto& c : j["rhs"]) rhs.push_back(json_to_int(c, "curve.rhs[]"));
    std::optional<std::uint64_t> genus;
    std::optional<Int> infinity;
    if (j.contains("genus")) {
        Int g = json_to_int(j["genus"], "curve.genus");
        if (g < 0) throw input_error("curve.genus: must be nonnegative");
        genus = g.convert_to<std::uint64_t>();
    }
    if (j.contains("points_at_infinity"))
        infinity = json_to_int(j["points_at_infinity"], "curve.points_at_infinity");
    return make_curve_spec(kind, p.convert_to<std::uint64_t>(), r.convert_to<unsigned>(),
                           std::move(rhs), genus, infinity);
}

inline Json to_json(const LPolynomial& L) {
    Json j;
    j["p"] = L.p;
    j["r"] = L.r;
    j["g"] = L.g;
    Json coeffs = Json::array();
    for (const Int& c : L.coeffs) coeffs.push_back(c.str());  // always decimal strings
    j["coeffs"] = coeffs;
    return j;
}

inline LPolynomial lpoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("r") || !j.contains("g") ||
        !j.contains("coeffs"))
        throw input_error("lpolynomial: required fields are p, r, g, coeffs");
    const Int p = json_to_int(j["p"], "lpolynomial.p");
    const Int r = json_to_int(j["r"], "lpolynomial.r");
    const Int g = json_to_int(j["g"], "lpolynomial.g");
    if (p < 2 || p >= (Int(1) << 31)) throw input_error("lpolynomial.p: out of range");
    if (r < 1 || r > 64) throw input_error("lpolynomial.r: out of range");
    if (g < 1 || g > 1024) throw input_error("lpolynomial.g: out of range");
    if (!j["coeffs"].is_array()) throw input_error("lpolynomial.coeffs: expected an array");
    std::vector<Int> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(json_to_int(c, "lpolynomial.coeffs[]"));
    return make_lpolynomial(p.convert_to<std::uint64_t>(), r.convert_to<unsigned>(),
                            g.convert_to<unsigned>(), std::move(coeffs));
}

// {"1": "0", "2": "-10", ...} with decimal-string values.
inline Json index_map_to_json(const std::map<unsigned, Int>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v.str();
    return j;
}

inline std::map<unsigned, Int> index_map_from_json(const Json& j, const std::string& what) {
    if (!j.is_object()) throw input_error(what + ": expected a JSON object");
    std::map<unsigned, Int> m;
    for (const auto& [key, value] : j.items()) {
        unsigned idx = 0;
        try {
            idx = static_cast<unsigned>(std::stoul(key));
        } catch (const std::exception&) {
            throw input_error(what + ": key is not an index: \"" + key + "\"");
        }
        if (idx == 0) throw input_error(what + ": indices start at 1");
        m[idx] = json_to_int(value, what + "[" + key + "]");
    }
    return m;
}

}  // namespace sszeta
