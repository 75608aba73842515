#pragma once
// JSON views of library results (nlohmann). Coefficients are decimal
// strings since they are arbitrary precision.

#include "json.hpp"

#include "sl3web/canonical.hpp"
#include "sl3web/enumerator.hpp"
#include "sl3web/formats.hpp"
#include "sl3web/primedec.hpp"
#include "sl3web/qlaurent.hpp"
#include "sl3web/quotient_ring.hpp"
#include "sl3web/reducer.hpp"
#include "sl3web/reference_catalog.hpp"
#include "sl3web/symmetry.hpp"

#include <string>

namespace sl3web {

using nlohmann::json;

/// {"<half exponent>": "<coeff>"}, plus the pretty form.
inline json poly_json(const HalfLaurent& p) {
    json terms = json::object();
    for (const auto& [k, c] : p.terms()) terms[std::to_string(k)] = c.str();
    return json{{"half_exponents", terms}, {"pretty", to_pretty(p)}};
}

inline json residue_json(const IdealResidue& r) {
    return json{{"modulus", r.ring().modulus},
                {"degree", r.ring().degree},
                {"lowest_half_exponent", r.ring().lowest()},
                {"coeffs", r.coeffs()},
                {"pretty", r.to_string()}};
}

inline json trace_json(const TraceNode& t) {
    json j{{"kind", t.kind}, {"site", t.site}, {"factor", to_pretty(t.factor)}, {"value", to_pretty(t.value)}};
    json ch = json::array();
    for (const auto& c : t.children) ch.push_back(trace_json(c));
    j["children"] = std::move(ch);
    return j;
}

inline json web_summary_json(const Web& w) {
    return json{{"vertices", w.num_vertices()},
                {"circles", w.circles()},
                {"key", to_hex(canonical_key(w, true))},
                {"dart", serialize_web(w, MapFormat::Dart)}};
}

inline json entry_json(const CatalogEntry& e) {
    return json{{"name", e.name},
                {"vertices", e.vertices},
                {"invariant", poly_json(e.invariant)},
                {"descriptions", e.descriptions},
                {"circular", e.circular},
                {"key", to_hex(canonical_key(e.web, true))},
                {"dart", serialize_web(e.web, MapFormat::Dart)}};
}

inline json root_json(const RootSearchResult& r) {
    json comps = json::array();
    for (const auto& c : r.components)
        comps.push_back(json{{"prime", c.prime},
                             {"factor", c.factor},
                             {"multiplicity", c.multiplicity},
                             {"size", c.size},
                             {"searched", c.searched},
                             {"has_root", c.has_root}});
    json j{{"outcome", to_string(r.outcome)}, {"searched", r.searched}, {"method", r.method}, {"components", comps}};
    j["witness"] = r.witness ? residue_json(*r.witness) : json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json symmetry_json(const SymmetryReport& s) {
    json checks = json::array();
    for (const auto& c : s.checks) {
        json cj{{"d", c.d}, {"quotient_invariant", to_pretty(c.quotient_invariant)}, {"skipped", c.skipped}, {"congruent", c.congruent}};
        if (c.lhs) cj["lhs"] = residue_json(*c.lhs);
        if (c.rhs) cj["rhs"] = residue_json(*c.rhs);
        checks.push_back(std::move(cj));
    }
    return json{{"invariant", poly_json(s.invariant)},
                {"automorphisms", s.automorphisms},
                {"automorphisms_with_reflections", s.automorphisms_with_reflections},
                {"checks", checks}};
}

inline json verify_json(const VerifyReport& v) {
    json rows = json::array();
    for (const auto& r : v.rows) {
        json rj{{"row", r.row},
                {"suspect", r.suspect},
                {"expression", r.expression},
                {"table_value", to_pretty(r.table_value)},
                {"structural_match", r.structural_match},
                {"invariant_match", r.invariant_match}};
        rj["entry"] = r.entry ? json(*r.entry) : json(nullptr);
        rj["computed"] = r.computed ? json(to_pretty(*r.computed)) : json(nullptr);
        if (r.computed) rj["difference"] = to_pretty(*r.computed - r.table_value);
        if (!r.likely_reading.empty()) {
            rj["likely_reading"] = r.likely_reading;
            rj["matches_likely_reading"] = r.matches_likely_reading;
        }
        rows.push_back(std::move(rj));
    }
    auto hist = [](const std::map<int, int>& h) {
        json o = json::object();
        for (const auto& [n, c] : h) o[std::to_string(n)] = c;
        return o;
    };
    return json{{"max_vertices", v.max_vertices},
                {"histogram", hist(v.histogram)},
                {"expected_histogram", hist(v.expected_histogram)},
                {"histogram_ok", v.histogram_ok()},
                {"exact_rows", v.exact_rows()},
                {"unambiguous_rows", v.unambiguous_rows()},
                {"suspect_rows", v.suspect_rows()},
                {"suspect_structural_matches", v.suspect_structural()},
                {"unmatched_entries", v.unmatched_entries},
                {"ok", v.ok()},
                {"rows", rows}};
}

}  // namespace sl3web
