#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "reinhardt/domain.hpp"
#include "reinhardt/errors.hpp"
#include "reinhardt/quadext.hpp"
#include "reinhardt/rational.hpp"

namespace reinhardt {

using Json = nlohmann::json;

// Domain description files, schemaVersion 1.
//
//   {
//     "schemaVersion": 1,
//     "kind": "monomial" | "parabolic",
//     "constraints": [
//       {"alpha": [quad, quad], "lowerLog": quad | null, "upperLog": quad | null}
//     ],
//     "axes": {"z1": bool, "z2": bool},
//     "parabolic": {"a": rat, "b": rat, "c": rat}      // parabolic kind only
//   }
//
// where rat is a string "num" or "num/den" and quad is {"a": rat, "b": rat,
// "d": int} for the value a + b*sqrt(d).  Parsing is strict: unknown fields
// are rejected, radicands must be canonical (d squarefree, d = 1 exactly for
// rational values), and a file may use at most one quadratic field.  The
// parser never repairs a near-miss; emitting and re-parsing a description is
// the identity.

namespace io_detail {

inline void require_keys(const Json& j, const std::string& path,
                         const std::vector<std::string>& required,
                         const std::vector<std::string>& optional = {}) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    for (const auto& key : required)
        if (!j.contains(key)) throw ParseError(path + ": missing field '" + key + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const auto& key : required) known = known || key == it.key();
        for (const auto& key : optional) known = known || key == it.key();
        if (!known) throw ParseError(path + ": unknown field '" + it.key() + "'");
    }
}

inline Rat parse_rat_json(const Json& j, const std::string& path) {
    if (!j.is_string())
        throw ParseError(path + ": expected a rational as a \"num/den\" string");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline QuadExt parse_quad_json(const Json& j, const std::string& path) {
    require_keys(j, path, {"a", "b", "d"});
    Rat a = parse_rat_json(j["a"], path + ".a");
    Rat b = parse_rat_json(j["b"], path + ".b");
    const Json& dj = j["d"];
    if (!dj.is_number_integer()) throw ParseError(path + ".d: expected an integer");
    BigInt d(dj.get<long long>());
    if (d < 1) throw ParseError(path + ".d: d must be positive");
    BigInt square, rest;
    squarefree_decompose(d, square, rest);
    if (square != 1) throw ParseError(path + ".d: d must be squarefree");
    if ((b == 0) != (d == 1))
        throw ParseError(path + ": canonical form needs b = 0 exactly when d = 1");
    return QuadExt(a, b, d);
}

// One quadratic field per file: fold each radicand into the running field.
inline void absorb_field(BigInt& field, const QuadExt& x, const std::string& path) {
    if (x.d == 1) return;
    if (field != 1 && field != x.d)
        throw ParseError(path + ": file mixes sqrt(" + field.str() + ") and sqrt(" +
                         x.d.str() + ")");
    field = x.d;
}

}  // namespace io_detail

inline DomainDesc parse_domain_file(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    io_detail::require_keys(root, "$", {"schemaVersion", "kind", "constraints", "axes"},
                            {"parabolic"});

    const Json& version = root["schemaVersion"];
    if (!version.is_number_integer() || version.get<long long>() != 1)
        throw ParseError("$.schemaVersion: expected the integer 1");

    if (!root["kind"].is_string()) throw ParseError("$.kind: expected a string");
    const std::string kind = root["kind"].get<std::string>();
    if (kind != "monomial" && kind != "parabolic")
        throw ParseError("$.kind: expected \"monomial\" or \"parabolic\"");

    const Json& axes = root["axes"];
    io_detail::require_keys(axes, "$.axes", {"z1", "z2"});
    if (!axes["z1"].is_boolean() || !axes["z2"].is_boolean())
        throw ParseError("$.axes: z1 and z2 must be booleans");

    DomainDesc desc;
    desc.axis1Included = axes["z1"].get<bool>();
    desc.axis2Included = axes["z2"].get<bool>();

    const Json& constraints = root["constraints"];
    if (!constraints.is_array()) throw ParseError("$.constraints: expected an array");

    BigInt field(1);
    if (kind == "parabolic") {
        if (!root.contains("parabolic"))
            throw ParseError("$: missing field 'parabolic' for parabolic kind");
        if (!constraints.empty())
            throw ParseError("$.constraints: must be empty for parabolic kind");
        const Json& par = root["parabolic"];
        io_detail::require_keys(par, "$.parabolic", {"a", "b", "c"});
        desc.kind = DomainKind::Parabolic;
        desc.parabola.a = io_detail::parse_rat_json(par["a"], "$.parabolic.a");
        desc.parabola.b = io_detail::parse_rat_json(par["b"], "$.parabolic.b");
        desc.parabola.c = io_detail::parse_rat_json(par["c"], "$.parabolic.c");
    } else {
        if (root.contains("parabolic"))
            throw ParseError("$.parabolic: only valid for parabolic kind");
        desc.kind = DomainKind::MonomialPolyhedron;
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            const std::string path = "$.constraints[" + std::to_string(i) + "]";
            const Json& jc = constraints[i];
            io_detail::require_keys(jc, path, {"alpha", "lowerLog", "upperLog"});
            const Json& alpha = jc["alpha"];
            if (!alpha.is_array() || alpha.size() != 2)
                throw ParseError(path + ".alpha: expected an array of two values");
            MonomialConstraint c;
            c.alpha1 = io_detail::parse_quad_json(alpha[0], path + ".alpha[0]");
            c.alpha2 = io_detail::parse_quad_json(alpha[1], path + ".alpha[1]");
            io_detail::absorb_field(field, c.alpha1, path + ".alpha[0]");
            io_detail::absorb_field(field, c.alpha2, path + ".alpha[1]");
            for (const char* side : {"lowerLog", "upperLog"}) {
                const Json& bound = jc[side];
                if (bound.is_null()) continue;
                QuadExt value = io_detail::parse_quad_json(bound, path + "." + side);
                io_detail::absorb_field(field, value, path + "." + side);
                if (std::string(side) == "lowerLog")
                    c.lowerLog = value;
                else
                    c.upperLog = value;
            }
            desc.constraints.push_back(c);
        }
    }

    validate(desc);
    return desc;
}

inline Json emit_quad(const QuadExt& x) {
    Json j;
    j["a"] = format_rat(x.a);
    j["b"] = format_rat(x.b);
    j["d"] = x.d.convert_to<long long>();
    return j;
}

inline Json emit_domain_file(const DomainDesc& desc) {
    Json j;
    j["schemaVersion"] = 1;
    j["kind"] = desc.kind == DomainKind::Parabolic ? "parabolic" : "monomial";
    Json constraints = Json::array();
    for (const auto& c : desc.constraints) {
        Json jc;
        jc["alpha"] = Json::array({emit_quad(c.alpha1), emit_quad(c.alpha2)});
        jc["lowerLog"] = c.lowerLog ? emit_quad(*c.lowerLog) : Json(nullptr);
        jc["upperLog"] = c.upperLog ? emit_quad(*c.upperLog) : Json(nullptr);
        constraints.push_back(jc);
    }
    j["constraints"] = constraints;
    j["axes"] = Json{{"z1", desc.axis1Included}, {"z2", desc.axis2Included}};
    if (desc.kind == DomainKind::Parabolic)
        j["parabolic"] = Json{{"a", format_rat(desc.parabola.a)},
                              {"b", format_rat(desc.parabola.b)},
                              {"c", format_rat(desc.parabola.c)}};
    return j;
}

}  // namespace reinhardt
