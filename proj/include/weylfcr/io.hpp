#pragma once

// JSON in/out for systems, ideals, verdicts and reports. Keys are emitted in
// insertion order so identical inputs give byte-identical output.

#include "weylfcr/fcr.hpp"
#include "weylfcr/howe.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylfcr {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline Json to_json(const RatMatrix& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(to_json(row));
    return a;
}

/// Accepts "p/q", "p", or a JSON integer.
inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("expected a rational string or an integer, got " + j.dump());
}

inline RatVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals, got " + j.dump());
    RatVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

inline Json system_json(const RootSystem& rs) { return Json{{"kind", kind_name(rs.kind())}, {"n", rs.param()}}; }

inline RootSystemPtr system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("n"))
        throw std::invalid_argument("system must be an object with \"kind\" and \"n\"");
    if (!j["kind"].is_string() || !j["n"].is_number_integer())
        throw std::invalid_argument("system kind must be a string and n an integer");
    return RootSystem::build(parse_kind(j["kind"].get<std::string>()), j["n"].get<int>());
}

inline Json functional_json(const AffineFunctional& f) { return Json{{"h", to_json(f.h)}, {"c", to_json(f.c)}}; }

/// {"h":[...],"c":...}, {"H":i,"c":...} (simple coroot H_i) or {"E":j,"c":...}.
inline AffineFunctional functional_from_json(const RootSystem& rs, const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("functional must be an object, got " + j.dump());
    Rational c = j.contains("c") ? rational_from_json(j["c"]) : Rational(0);
    const int forms = int(j.contains("h")) + int(j.contains("H")) + int(j.contains("E"));
    if (forms != 1) throw std::invalid_argument("functional needs exactly one of \"h\", \"H\", \"E\": " + j.dump());
    if (j.contains("h")) {
        RatVec h = vec_from_json(j["h"]);
        if (h.size() != rs.ambient_dim())
            throw std::invalid_argument("functional h has length " + std::to_string(h.size()) + ", expected " +
                                        std::to_string(rs.ambient_dim()));
        return {h, c};
    }
    const char* key = j.contains("H") ? "H" : "E";
    if (!j[key].is_number_integer() || j[key].get<long long>() < 1)
        throw std::invalid_argument(std::string("\"") + key + "\" must be a positive integer");
    auto idx = static_cast<std::size_t>(j[key].get<long long>());
    return j.contains("H") ? coroot_functional(rs, idx, c) : coordinate_functional(rs, idx, c);
}

inline Json variety_json(const AffineSubspace& v) {
    return Json{{"base", to_json(v.base_point())}, {"directions", to_json(v.direction_basis())}};
}

inline Json ideal_json(const LinearIdeal& omega) {
    Json fs = Json::array();
    for (const auto& f : omega.functionals()) fs.push_back(functional_json(f));
    return Json{{"system", system_json(omega.rs())},
                {"functionals", fs},
                {"variety", variety_json(omega.variety())},
                {"dimension", omega.dimension()}};
}

inline LinearIdeal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("system") || !j.contains("functionals"))
        throw std::invalid_argument("ideal must be an object with \"system\" and \"functionals\"");
    auto rs = system_from_json(j["system"]);
    if (!j["functionals"].is_array()) throw std::invalid_argument("\"functionals\" must be an array");
    std::vector<AffineFunctional> fs;
    for (const auto& f : j["functionals"]) fs.push_back(functional_from_json(*rs, f));
    return LinearIdeal::from_functionals(rs, fs);
}

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

inline Json roots_json(const RootSystem& rs, const std::vector<std::size_t>& idx) {
    Json a = Json::array();
    for (auto i : idx) a.push_back(to_json(rs.root(i)));
    return a;
}

inline Json system_info_json(const RootSystem& rs) {
    std::vector<std::size_t> pos(rs.num_positive());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    Json simple = Json::array(), coroots = Json::array();
    for (std::size_t i = 0; i < rs.semisimple_rank(); ++i) {
        simple.push_back(to_json(rs.simple_root(i)));
        coroots.push_back(to_json(rs.simple_coroot(i)));
    }
    return Json{{"system", system_json(rs)},
                {"name", rs.name()},
                {"ambient_dim", rs.ambient_dim()},
                {"semisimple", rs.is_semisimple()},
                {"rank", rs.semisimple_rank()},
                {"num_positive", rs.num_positive()},
                {"weyl_order", rs.weyl_order().str()},
                {"rho", to_json(rs.rho())},
                {"simple_roots", simple},
                {"simple_coroots", coroots},
                {"fundamental_weights", to_json(rs.fundamental_weights())},
                {"positive_roots", roots_json(rs, pos)}};
}

inline Json verdict_json(const WeylGroup& g, const FcrVerdict& v) {
    Json j{{"status", status_name(v.status)}};
    j["witness"] = v.witness ? Json(g.word_string(*v.witness)) : Json(nullptr);
    j["b_lambda"] = roots_json(g.rs(), v.b_lambda);
    j["base_ideal"] = v.base_ideal ? ideal_json(*v.base_ideal) : Json(nullptr);
    j["witnesses_checked"] = v.witnesses_checked;
    return j;
}

inline Json lambda_set_json(const LinearIdeal& omega, const std::vector<LambdaEntry>& entries, std::size_t bound) {
    Json ws = Json::array();
    for (const auto& e : entries) {
        Json item{{"weight", to_json(e.weight)}, {"pairings", to_json(omega.rs().simple_pairings(e.weight))}};
        if (omega.rs().center_direction()) item["center_free"] = e.center_free;
        ws.push_back(item);
    }
    return Json{{"bound", bound}, {"count", entries.size()}, {"weights", ws}};
}

inline Json int_array(const std::vector<int>& v) { return Json(v); }

inline Json dims_json(const std::vector<std::size_t>& d) { return Json(d); }

inline Json closure_json(const ClosureReport& r) {
    Json j{{"case", r.case_name}};
    if (r.case_name == "A") {
        j["p"] = r.p;
        j["q"] = r.q;
    } else {
        j["n"] = r.n;
        j["p"] = r.p;
    }
    j["k"] = r.k;
    j["full_space"] = r.full_space;
    j[r.case_name == "A" ? "phi" : "indices"] = int_array(r.index_set);
    Json comps = Json::array();
    for (const auto& c : r.components) comps.push_back(ideal_json(c));
    j["components"] = comps;
    j["dims"] = dims_json(r.dims);
    j["oracle_agreement"] = r.oracle_agreement;
    j["checks"] = Json{{"closure_convention", r.closure_convention_agrees},
                       {"strict_convention", r.strict_convention_agrees},
                       {"index_match", r.index_match},
                       {"stabilized", r.stabilized},
                       {"weights_covered", r.weights_covered},
                       {"incomparable", r.incomparable}};
    j["bound"] = r.bound;
    j["weights_enumerated"] = r.weights_enumerated;
    return j;
}

/// Adds the H_r + 1 reading of each Omega_i and whether it matches.
inline void annotate_case_B_literal(Json& j, const ClosureReport& r) {
    if (r.full_space) return;
    Json lit = Json::array();
    for (std::size_t t = 0; t < r.index_set.size(); ++t) {
        auto alt = omega_case_B_literal(r.index_set[t], r.n, r.p);
        lit.push_back(Json{{"i", r.index_set[t]},
                           {"variety", variety_json(alt.variety())},
                           {"matches_component", alt == r.components[t]}});
    }
    j["generator_text_reading"] = lit;
}

inline Json kernel_json(const KernelReport& r) {
    Json j{{"case", r.case_name}, {"n", r.n}, {"k", r.k}};
    if (r.case_name == "A") {
        j["p"] = r.p;
        j["q"] = r.q;
    }
    j["rank_g"] = r.rank_g;
    j["rank_K"] = r.rank_K;
    j["kernel_zero"] = r.kernel_zero;
    j["dims"] = dims_json(r.dims);
    j["kernel_component"] = r.kernel_component ? Json(*r.kernel_component) : Json(nullptr);
    if (r.kernel_component) j["unique_max_dim"] = r.unique_max_dim;
    return j;
}

inline Json case_C_json(const CaseCReport& r) {
    return Json{{"case", "C"},
                {"n", r.n},
                {"k", r.k},
                {"irreducible", r.irreducible},
                {"irreducible_source", "cited"},
                {"full", r.full},
                {"full_rule", "closure is all of h* iff n <= k"},
                {"fcr", r.fcr},
                {"fcr_source", "cited"}};
}

inline Json odd_k_json(const WeylGroup& g, const OddKReport& r) {
    const auto& rs = g.rs();
    Json comps = Json::array();
    for (const auto& c : r.components) comps.push_back(variety_json(c));
    Json certs = Json::array();
    for (const auto& c : r.certificates)
        certs.push_back(Json{{"component", c.component},
                             {"w", g.word_string(c.element)},
                             {"coroot", to_json(rs.coroot_of(c.root))},
                             {"value", to_json(c.value)}});
    return Json{{"case", "B"},
                {"n", r.n},
                {"k", r.k},
                {"bound", r.bound},
                {"components", comps},
                {"certified", r.certified},
                {"lambda_empty", r.lambda_empty},
                {"empty", r.certified && r.lambda_empty},
                {"certificates", certs}};
}

inline Json case_B_fcr_json(const WeylGroup& g, const CaseBFcr& c) {
    return Json{{"n", c.n},
                {"p", c.p},
                {"w", g.word_string(c.element)},
                {"omega", ideal_json(c.omega)},
                {"maps_to_omega0", c.maps_to_omega0},
                {"in_w_lambda", c.in_w_lambda},
                {"omega_strongly_dominant", c.omega_strongly_dominant},
                {"verdict", verdict_json(g, c.verdict)},
                {"ok", c.ok()}};
}

inline Json case_A_witness_json(const WeylGroup& g, const CaseAWitness& c) {
    return Json{{"i", c.i},
                {"n", c.n},
                {"k", c.k},
                {"w", g.word_string(c.element)},
                {"maps_to_omega_i", c.maps_to_omega_i},
                {"in_w_lambda", c.in_w_lambda},
                {"omega0_strongly_dominant", c.omega0_strongly_dominant},
                {"omega_top_strongly_dominant", c.omega_top_strongly_dominant},
                {"ok", c.ok()}};
}

/// Columns alpha, beta, weight_g, weight_K; every field is quoted.
inline std::string case_A_csv(const std::vector<CaseAEntry>& entries) {
    std::ostringstream os;
    os << "alpha,beta,weight_g,weight_K\n";
    for (const auto& e : entries) {
        os << '"' << e.alpha.str() << "\",\"" << e.beta.str() << "\",\"(";
        for (std::size_t i = 0; i < e.weight_g.size(); ++i) os << (i ? "," : "") << to_string(e.weight_g[i]);
        os << ")\",\"(";
        for (std::size_t i = 0; i < e.weight_K.size(); ++i) os << (i ? "," : "") << e.weight_K[i];
        os << ")\"\n";
    }
    return os.str();
}

}  // namespace weylfcr
