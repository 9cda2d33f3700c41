#pragma once

#include <json.hpp>

#include <string>

#include "thick/dsl/render.hpp"
#include "thick/standard_distribution.hpp"

namespace thick::dsl {

// Lossless machine-readable serialization. Every node is a record with a
// "kind" field; value roots carry "dim"; composite kinds list "children",
// leaves carry a "payload". Rationals are stored as decimal strings so
// arbitrary precision survives the round trip.

namespace tree_detail {

using nlohmann::json;

inline json coeff_to_json(const ScalarCoeff& c) {
    json out = json::array();
    for (const auto& [p, q] : c.terms()) out.push_back({p, numerator(q).str(), denominator(q).str()});
    return out;
}

inline ScalarCoeff coeff_from_json(const json& j) {
    ScalarCoeff out;
    for (const auto& term : j) {
        const int power = term.at(0).get<int>();
        const Rational q(Integer(term.at(1).get<std::string>()), Integer(term.at(2).get<std::string>()));
        out += ScalarCoeff::c_power(power, q);
    }
    return out;
}

inline json symbol_to_json(const SphericalSymbol& s) {
    json out = json::array();
    for (const auto& [a, c] : s.monomials())
        out.push_back({{"exponents", a.exponents()}, {"coeff", coeff_to_json(c)}});
    return out;
}

inline SphericalSymbol symbol_from_json(const json& j, int dim) {
    SphericalSymbol out(dim);
    for (const auto& mono : j)
        out.add_monomial(MultiIndex(mono.at("exponents").get<std::vector<int>>()),
                         coeff_from_json(mono.at("coeff")));
    return out;
}

inline const char* class_name(FunctionTermKind k) {
    switch (k) {
        case FunctionTermKind::Regular: return "regular";
        case FunctionTermKind::PrincipalValue: return "principal-value";
        default: return "finite-part";
    }
}

}  // namespace tree_detail

inline nlohmann::json to_tree(const Value& v) {
    using nlohmann::json;
    using namespace tree_detail;
    if (const auto* c = std::get_if<ScalarCoeff>(&v)) {
        return json{{"kind", "scalar"}, {"payload", coeff_to_json(*c)}};
    }
    if (const auto* m = std::get_if<Multiplier>(&v)) {
        json children = json::array();
        for (const auto& [k, psi] : m->components())
            children.push_back(json{{"kind", "homogeneous"},
                                    {"payload", {{"degree", k}, {"profile", symbol_to_json(psi)}}}});
        return json{{"kind", "multiplier"}, {"dim", m->dim()}, {"children", children}};
    }
    if (const auto* t = std::get_if<ThickDistribution>(&v)) {
        json children = json::array();
        for (const auto& [k, psi] : t->pf_parts())
            children.push_back(
                json{{"kind", "pf"}, {"payload", {{"degree", k}, {"profile", symbol_to_json(psi)}}}});
        for (const auto& [q, g] : t->delta_parts())
            children.push_back(
                json{{"kind", "thick-delta"}, {"payload", {{"order", q}, {"density", symbol_to_json(g)}}}});
        return json{{"kind", "thick"}, {"dim", t->dim()}, {"children", children}};
    }
    if (const auto* s = std::get_if<StandardDistribution>(&v)) {
        json children = json::array();
        for (const auto& [k, psi] : s->function_parts())
            children.push_back(json{{"kind", "function"},
                                    {"payload",
                                     {{"degree", k},
                                      {"profile", symbol_to_json(psi)},
                                      {"class", class_name(classify_function_term(k, psi))}}}});
        for (const auto& [alpha, c] : s->delta_derivatives())
            children.push_back(json{{"kind", "delta-derivative"},
                                    {"payload", {{"alpha", alpha.exponents()}, {"coeff", coeff_to_json(c)}}}});
        return json{{"kind", "standard"}, {"dim", s->dim()}, {"children", children}};
    }
    return json{{"kind", "real"}, {"payload", std::get<double>(v)}};
}

/// Inverse of to_tree for value nodes; throws on malformed input.
inline Value from_tree(const nlohmann::json& j) {
    using namespace tree_detail;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "scalar") return coeff_from_json(j.at("payload"));
    if (kind == "real") return j.at("payload").get<double>();
    const int dim = j.at("dim").get<int>();
    if (kind == "multiplier") {
        Multiplier m(dim);
        for (const auto& child : j.at("children"))
            m.add_component(child.at("payload").at("degree").get<int>(),
                            symbol_from_json(child.at("payload").at("profile"), dim));
        return m;
    }
    if (kind == "thick") {
        ThickDistribution t(dim);
        for (const auto& child : j.at("children")) {
            const std::string ck = child.at("kind").get<std::string>();
            const auto& payload = child.at("payload");
            if (ck == "pf") {
                t.add_pf(payload.at("degree").get<int>(), symbol_from_json(payload.at("profile"), dim));
            } else if (ck == "thick-delta") {
                t.add_delta(payload.at("order").get<int>(), symbol_from_json(payload.at("density"), dim));
            } else {
                throw EvalError("tree: unknown thick child kind '" + ck + "'");
            }
        }
        return t;
    }
    if (kind == "standard") {
        StandardDistribution s(dim);
        for (const auto& child : j.at("children")) {
            const std::string ck = child.at("kind").get<std::string>();
            const auto& payload = child.at("payload");
            if (ck == "function") {
                s.add_function_term(payload.at("degree").get<int>(),
                                    symbol_from_json(payload.at("profile"), dim));
            } else if (ck == "delta-derivative") {
                s.add_delta_term(MultiIndex(payload.at("alpha").get<std::vector<int>>()),
                                 coeff_from_json(payload.at("coeff")));
            } else {
                throw EvalError("tree: unknown standard child kind '" + ck + "'");
            }
        }
        return s;
    }
    throw EvalError("tree: unknown value kind '" + kind + "'");
}

/// Renders a value in any of the three output formats.
inline std::string render(const Value& v, Format format) {
    if (format == Format::Tree) return to_tree(v).dump();
    return render_text(v, format);
}

}  // namespace thick::dsl
