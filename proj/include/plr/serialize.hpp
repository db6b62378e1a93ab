#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plr/certify.hpp"
#include "plr/tower.hpp"

namespace plr {

using nlohmann::json;

inline constexpr const char* library_version = "0.1.0";

// FNV-1a, for input fingerprints in reports
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- JSON encoding: rationals always as strings, never as decimals ---------

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const Interval& iv) { return json::array({to_string(iv.lo), to_string(iv.hi)}); }

inline json to_json(const LogValue& v) {
    return json{{"mantissa", to_string(v.mantissa)}, {"log_approx", v.approx()}};
}

inline json to_json(const PLMap& f) {
    json bs = json::array(), vs = json::array();
    for (const auto& x : f.breakpoints()) bs.push_back(to_string(x));
    for (const auto& y : f.values()) vs.push_back(to_string(y));
    return json{{"breakpoints", bs}, {"values", vs}};
}

inline json to_json(const Corner& c) {
    return json{{"location", to_string(c.location)},
                {"slope_left", to_string(c.slope_left)},
                {"slope_right", to_string(c.slope_right)},
                {"v", to_json(c.v)}};
}

inline json to_json(const Cycle& c) {
    json ivs = json::array();
    for (const auto& iv : c.intervals) ivs.push_back(to_json(iv));
    return json{{"q", c.q}, {"intervals", ivs}};
}

inline json to_json(const PeriodicOrbit& o) {
    json pts = json::array();
    for (const auto& p : o.points) pts.push_back(to_string(p));
    return json{{"period", o.period}, {"points", pts}};
}

inline json to_json(const NestedPair& p) {
    json gaps = json::array();
    for (const auto& g : p.gaps)
        gaps.push_back(json{{"outer_index", g.outer_index},
                            {"interval", to_json(g.interval)},
                            {"left_inner", g.left_inner},
                            {"right_inner", g.right_inner}});
    return json{{"outer_q", p.outer.q}, {"inner_q", p.inner.q}, {"ratio", p.ratio},
                {"is_doubling", p.ratio == 2}, {"gaps", gaps}};
}

inline json to_json(const Splitting& s) {
    json pts = json::array(), orbs = json::array();
    for (std::size_t i = 0; i < s.points.size(); ++i)
        pts.push_back(json{{"point", to_string(s.points[i])}, {"gap", s.gap_of[i]}});
    for (const auto& o : s.orbits) orbs.push_back(to_json(o));
    return json{{"points", pts}, {"orbits", orbs}};
}

inline json to_json(const RenormTower& t) {
    json cycles = json::array(), pairs = json::array(), splittings = json::array(),
         renorms = json::array(), corners_int = json::array(), log = json::array();
    for (const auto& c : t.cycles) cycles.push_back(to_json(c));
    for (const auto& p : t.pairs) pairs.push_back(to_json(p));
    for (std::size_t i = 0; i < t.splittings.size(); ++i)
        splittings.push_back(t.splitting_found[i] ? to_json(t.splittings[i]) : json(nullptr));
    for (const auto& r : t.renorm_maps) renorms.push_back(to_json(r));
    for (bool b : t.corners_interior) corners_int.push_back(b);
    for (const auto& s : t.search_log)
        log.push_back(json{{"from_q", s.from_q},
                           {"last_exhausted_q", s.last_exhausted_q},
                           {"truncated", s.truncated},
                           {"reason", s.truncation_reason}});
    json qs = json::array();
    for (unsigned q : t.q_sequence()) qs.push_back(q);
    return json{{"depth", t.depth()},
                {"q_sequence", qs},
                {"cycles", cycles},
                {"pairs", pairs},
                {"splittings", splittings},
                {"renormalized_maps", renorms},
                {"corners_in_interior", corners_int},
                {"search_log", log},
                {"deepening_truncated", t.truncated}};
}

inline json to_json(const Claim3Result& r) {
    return json{{"ok", r.ok},
                {"beta_outer", to_json(r.beta_outer)},
                {"beta_inner", to_json(r.beta_inner)},
                {"mu", to_json(r.mu_level)},
                {"mismatches", r.mismatches}};
}

inline json to_json(const Claim5Result& r) {
    json sigma = json::array();
    for (const auto& [j, s] : r.sigma.signs) sigma.push_back(json{{"corner", j}, {"sigma", s}});
    return json{{"ok", r.ok},
                {"lhs_squared", to_string(r.lhs_squared)},
                {"rhs", to_string(r.rhs)},
                {"sigma", sigma}};
}

inline const char* scan_kind_name(ScanViolation::Kind k) {
    switch (k) {
        case ScanViolation::Kind::attracting: return "attracting";
        case ScanViolation::Kind::neutral: return "neutral";
        case ScanViolation::Kind::fixed_segment: return "fixed_segment";
        case ScanViolation::Kind::corner_orbit: return "corner_orbit";
        case ScanViolation::Kind::mu_not_positive: return "mu_not_positive";
    }
    return "unknown";
}

inline json to_json(const ScanViolation& v) {
    json j{{"kind", scan_kind_name(v.kind)}, {"mantissa", to_string(v.mantissa)}};
    if (v.orbit) j["orbit"] = to_json(*v.orbit);
    if (v.segment) j["segment"] = to_json(*v.segment);
    if (v.kind == ScanViolation::Kind::mu_not_positive) j["level"] = v.level;
    return j;
}

inline json to_json(const GapTransition& t) {
    return json{{"gap_index", t.gap_index},
                {"source_gap", to_json(t.source_gap)},
                {"target_gap", to_json(t.target_gap)},
                {"T", to_json(t.T)},
                {"K", to_json(t.K)},
                {"D", to_json(t.D)},
                {"witness", to_string(t.witness)},
                {"period", t.period}};
}

inline json to_json(const ExpansionCertificate& c) {
    return json{{"witness_orbit", to_json(c.witness)},
                {"witness_point", to_string(c.witness_point)},
                {"gap_index", c.gap_index},
                {"multiplier_mantissa", to_string(c.mult.log_abs.mantissa)},
                {"multiplier_sign", c.mult.sign},
                {"variation_mantissa", to_string(c.variation_mantissa)},
                {"threshold_mantissa", to_string(c.threshold_mantissa)},
                {"margin_fraction", to_string(c.margin_fraction)},
                {"margin_ok", c.margin_ok},
                {"hypothesis_search", c.note.searched},
                {"orbit_horizon", c.note.orbit_horizon}};
}

inline json to_json(const MultiplicityReport& r) {
    json orbit = json::array();
    for (const auto& iv : r.t_orbit) orbit.push_back(to_json(iv));
    return json{{"T", to_json(r.T)},
                {"t_orbit", orbit},
                {"intersection_multiplicity", r.w},
                {"multiplicity_ok", r.w_ok},
                {"var_T", to_json(r.var_T)},
                {"variation_ok", r.var_ok},
                {"variation_mantissa", to_string(r.variation_mantissa)},
                {"period", r.period}};
}

inline json to_json(const LedgerReport& rep) {
    json levels = json::array(), pairs = json::array(), scan = json::array();
    for (const auto& L : rep.levels) {
        json j{{"q", L.q}};
        if (L.beta_value) j["beta"] = to_json(*L.beta_value);
        if (!L.beta_error.empty()) j["beta_error"] = L.beta_error;
        j["claim5_point"] = to_string(L.claim5_point);
        if (L.claim5) j["claim5"] = to_json(*L.claim5);
        if (!L.claim5_error.empty()) j["claim5_error"] = L.claim5_error;
        levels.push_back(std::move(j));
    }
    for (const auto& P : rep.pair_entries) {
        json j;
        if (P.mu_value) j["mu"] = to_json(*P.mu_value);
        if (!P.mu_error.empty()) j["mu_error"] = P.mu_error;
        if (P.claim3) j["claim3"] = to_json(*P.claim3);
        if (!P.claim3_error.empty()) j["claim3_error"] = P.claim3_error;
        pairs.push_back(std::move(j));
    }
    for (const auto& v : rep.scan) scan.push_back(to_json(v));
    return json{{"levels", levels},
                {"pairs", pairs},
                {"claim4_violations", scan},
                {"scan_period", rep.scan_period},
                {"renorm_bound", to_json(rep.renorm.bound)},
                {"renorm_bound_vacuous", rep.renorm.vacuous},
                {"mu_all_positive", rep.mu_all_positive},
                {"beta_strictly_increasing", rep.beta_strictly_increasing},
                {"all_claims_ok", rep.all_claims_ok}};
}

// --- document parsing -------------------------------------------------------

struct MapDocument {
    std::string name;
    std::vector<Rational> breakpoints;
    std::vector<Rational> values;
};

inline MapDocument parse_map_document(const json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
        fail(Errc::parse_error, "map document needs 'breakpoints' and 'values'");
    MapDocument doc;
    doc.name = j.value("name", "");
    for (const auto& e : j.at("breakpoints")) doc.breakpoints.push_back(parse_rational(e.get<std::string>()));
    for (const auto& e : j.at("values")) doc.values.push_back(parse_rational(e.get<std::string>()));
    return doc;
}

inline MapDocument load_map_document(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    return parse_map_document(j);
}

inline PLMap map_of(const MapDocument& doc) { return make_plmap(doc.breakpoints, doc.values); }

struct ParameterRange {
    std::string name;
    Rational lo, hi, step;
};

struct FamilyDocument {
    std::string kind; // "tent" | "twocorner" | "explicit"
    std::vector<ParameterRange> parameters;
    // twocorner template: values entries may be "$<param>" slots
    std::vector<Rational> tmpl_breakpoints;
    std::vector<std::string> tmpl_values;
    std::vector<MapDocument> maps; // explicit kind
};

inline FamilyDocument load_family_document(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    FamilyDocument fam;
    fam.kind = j.value("kind", "");
    if (fam.kind != "tent" && fam.kind != "twocorner" && fam.kind != "explicit")
        fail(Errc::parse_error, "family kind must be tent, twocorner or explicit");
    if (j.contains("parameters"))
        for (const auto& p : j.at("parameters")) {
            ParameterRange r;
            r.name = p.at("name").get<std::string>();
            r.lo = parse_rational(p.at("lo").get<std::string>());
            r.hi = parse_rational(p.at("hi").get<std::string>());
            r.step = parse_rational(p.at("step").get<std::string>());
            if (r.step <= 0) fail(Errc::parse_error, "parameter step must be positive");
            fam.parameters.push_back(std::move(r));
        }
    if (fam.kind == "tent") {
        if (fam.parameters.size() != 1) fail(Errc::parse_error, "tent family needs one parameter");
        if (!(fam.parameters[0].lo > 1) || fam.parameters[0].hi > 2)
            fail(Errc::parse_error, "tent parameter must stay in (1, 2]");
    }
    if (fam.kind == "twocorner") {
        if (!j.contains("template")) fail(Errc::parse_error, "twocorner family needs a template");
        const json& t = j.at("template");
        for (const auto& e : t.at("breakpoints"))
            fam.tmpl_breakpoints.push_back(parse_rational(e.get<std::string>()));
        for (const auto& e : t.at("values")) fam.tmpl_values.push_back(e.get<std::string>());
        if (fam.parameters.empty()) fail(Errc::parse_error, "twocorner family needs parameters");
    }
    if (fam.kind == "explicit") {
        if (!j.contains("maps")) fail(Errc::parse_error, "explicit family needs 'maps'");
        for (const auto& m : j.at("maps")) fam.maps.push_back(parse_map_document(m));
    }
    return fam;
}

// --- report shell -----------------------------------------------------------

struct Report {
    json body;
    int exit_code = 0;
};

inline json report_shell(const std::string& command, const std::string& input_bytes) {
    return json{{"command", command},
                {"input_hash", fnv1a_hex(input_bytes)},
                {"library_version", library_version},
                {"results", json::object()},
                {"timing_ms", 0},
                {"budget", json::object()}};
}

// Deterministic fingerprint of a report: the dump with the timing field removed.
inline std::string determinism_view(json report) {
    report.erase("timing_ms");
    return report.dump();
}

} // namespace plr
