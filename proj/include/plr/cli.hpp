#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "plr/sweep.hpp"

namespace plr {

// Exit-code contract: 0 success, 2 input error, 3 budget exhausted,
// 4 a requested check came out false, 5 hypothesis not met.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_check_failed = 4;
inline constexpr int exit_hypothesis = 5;

struct CmdOptions {
    unsigned max_depth = 8;
    std::optional<unsigned> max_q; // default: 64 for tower/certify, 8 per sweep row
    std::uint64_t piece_budget = 1'000'000;
    unsigned jobs = 0;
    std::optional<unsigned> level; // certify selector
};

namespace detail {

inline int exit_for(const Error& e) {
    switch (e.code()) {
        case Errc::piece_budget_exceeded:
        case Errc::candidate_budget_exceeded:
        case Errc::resource_exhausted:
            return exit_budget;
        case Errc::hypothesis_not_met:
            return exit_hypothesis;
        default:
            return exit_input;
    }
}

inline SearchBudgets budgets_of(const CmdOptions& opt) {
    SearchBudgets b;
    b.pieces = opt.piece_budget;
    return b;
}

inline json budget_json(const SearchBudgets& b) {
    return json{{"pieces", b.pieces}, {"candidates", b.candidates}, {"pairs", b.pairs}};
}

template <typename Fn>
Report run_command(const std::string& command, const std::string& input_bytes, Fn&& fn) {
    Report rep;
    rep.body = report_shell(command, input_bytes);
    auto t0 = std::chrono::steady_clock::now();
    try {
        rep.exit_code = fn(rep.body);
    } catch (const Error& e) {
        rep.body["error"] = e.what();
        rep.exit_code = exit_for(e);
    } catch (const std::exception& e) {
        rep.body["error"] = e.what();
        rep.exit_code = exit_input;
    }
    rep.body["timing_ms"] = static_cast<std::int64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count());
    return rep;
}

} // namespace detail

// corners, variation, fixed points
inline Report cmd_analyze(const std::string& map_path, const CmdOptions& opt = {}) {
    std::string bytes;
    try {
        bytes = read_file(map_path);
    } catch (const Error& e) {
        Report rep;
        rep.body = json{{"error", e.what()}};
        rep.exit_code = exit_input;
        return rep;
    }
    (void)opt;
    return detail::run_command("analyze", bytes, [&](json& body) {
        MapDocument doc = parse_map_document(json::parse(bytes, nullptr, true));
        PLMap f = map_of(doc);
        json cs = json::array();
        for (const Corner& c : corners(f)) cs.push_back(to_json(c));
        LogValue v = variation(f);
        auto [pts, segs] = fixed_points(f);
        json fp = json::array(), fs = json::array();
        for (const auto& p : pts) fp.push_back(to_string(p));
        for (const auto& s : segs) fs.push_back(to_json(s.interval));
        body["results"] = json{{"name", doc.name},
                               {"map", to_json(f)},
                               {"corners", cs},
                               {"variation", {{"mantissa", to_string(v.mantissa)},
                                              {"value_approx", v.approx()}}},
                               {"fixed_points", fp},
                               {"fixed_segments", fs}};
        return exit_ok;
    });
}

inline Report cmd_tower(const std::string& map_path, const CmdOptions& opt = {}) {
    std::string bytes;
    try {
        bytes = read_file(map_path);
    } catch (const Error& e) {
        Report rep;
        rep.body = json{{"error", e.what()}};
        rep.exit_code = exit_input;
        return rep;
    }
    return detail::run_command("tower", bytes, [&](json& body) {
        MapDocument doc = parse_map_document(json::parse(bytes));
        PLMap f = map_of(doc);
        SearchBudgets budgets = detail::budgets_of(opt);
        body["budget"] = detail::budget_json(budgets);
        int code = exit_ok;
        try {
            RenormTower t = build_tower(f, opt.max_depth, opt.max_q.value_or(64), budgets);
            body["results"] = json{{"name", doc.name}, {"tower", to_json(t)}, {"partial", false}};
        } catch (const Error& e) {
            if (detail::exit_for(e) != exit_budget) throw;
            body["results"] = json{{"name", doc.name}, {"partial", true}, {"error", e.what()}};
            code = exit_budget;
        }
        return code;
    });
}

// --what expansion | ledger | claim3 | claim5 | multiplicity
inline Report cmd_certify(const std::string& map_path, const std::string& what,
                          const CmdOptions& opt = {}) {
    std::string bytes;
    try {
        bytes = read_file(map_path);
    } catch (const Error& e) {
        Report rep;
        rep.body = json{{"error", e.what()}};
        rep.exit_code = exit_input;
        return rep;
    }
    return detail::run_command("certify --what " + what, bytes, [&](json& body) {
        if (what != "expansion" && what != "ledger" && what != "claim3" && what != "claim5" &&
            what != "multiplicity")
            fail(Errc::parse_error, "unknown certificate kind '" + what + "'");
        MapDocument doc = parse_map_document(json::parse(bytes));
        PLMap f = map_of(doc);
        SearchBudgets budgets = detail::budgets_of(opt);
        body["budget"] = detail::budget_json(budgets);
        RenormTower tower = build_tower(f, opt.max_depth, opt.max_q.value_or(64), budgets);
        json results{{"name", doc.name}, {"q_sequence", json::array()}};
        for (unsigned q : tower.q_sequence()) results["q_sequence"].push_back(q);
        bool all_ok = true;

        auto level_range = [&](std::size_t count) {
            std::vector<unsigned> out;
            if (opt.level) {
                if (*opt.level < 1 || *opt.level > count)
                    fail(Errc::hypothesis_not_met,
                         "tower has no level " + std::to_string(*opt.level));
                out.push_back(*opt.level);
            } else {
                for (unsigned n = 1; n <= count; ++n) out.push_back(n);
            }
            return out;
        };

        if (what == "claim3") {
            if (tower.pairs.empty()) fail(Errc::hypothesis_not_met, "tower depth >= 1 required");
            json arr = json::array();
            for (unsigned n : level_range(tower.pairs.size())) {
                Claim3Result r = verify_claim3(f, tower, n);
                all_ok = all_ok && r.ok;
                arr.push_back(json{{"level", n}, {"result", to_json(r)}});
            }
            results["claim3"] = arr;
        } else if (what == "claim5") {
            if (tower.cycles.empty()) fail(Errc::hypothesis_not_met, "tower is empty");
            json arr = json::array();
            for (unsigned n : level_range(tower.cycles.size())) {
                Rational x = tower.cycles[n - 1].intervals[0].lo;
                Claim5Result r = claim5_identity(f, tower, n, x);
                all_ok = all_ok && r.ok;
                arr.push_back(json{{"level", n}, {"x", to_string(x)}, {"result", to_json(r)}});
            }
            results["claim5"] = arr;
        } else if (what == "ledger") {
            LedgerReport rep = ledger(f, tower, 4, budgets);
            all_ok = rep.all_claims_ok;
            results["ledger"] = to_json(rep);
        } else if (what == "expansion") {
            if (tower.pairs.empty()) fail(Errc::hypothesis_not_met, "tower depth >= 1 required");
            json arr = json::array();
            bool any = false;
            std::string last_hypo_failure = "no nested pair in the tower";
            for (unsigned n : level_range(tower.pairs.size())) {
                if (!tower.splitting_found[n - 1]) continue;
                try {
                    ExpansionCertificate cert =
                        expansion_witness(f, tower.pairs[n - 1], tower.splittings[n - 1], budgets);
                    GapTransition tr =
                        gap_transition(f, tower.pairs[n - 1], cert.gap_index, tower.splittings[n - 1], budgets);
                    bool sound = reverify_expansion(f, cert);
                    any = true;
                    all_ok = all_ok && cert.margin_ok && sound;
                    arr.push_back(json{{"level", n},
                                       {"certificate", to_json(cert)},
                                       {"gap_transition", to_json(tr)},
                                       {"reverified", sound}});
                } catch (const Error& e) {
                    if (e.code() != Errc::hypothesis_not_met) throw;
                    last_hypo_failure = e.what();
                }
            }
            if (!any) fail(Errc::hypothesis_not_met, last_hypo_failure);
            results["expansion"] = arr;
        } else { // multiplicity
            if (tower.pairs.empty()) fail(Errc::hypothesis_not_met, "tower depth >= 1 required");
            json arr = json::array();
            for (unsigned n : level_range(tower.pairs.size())) {
                if (!tower.splitting_found[n - 1])
                    fail(Errc::hypothesis_not_met, "no splitting at level " + std::to_string(n));
                const NestedPair& pair = tower.pairs[n - 1];
                for (std::size_t gi = 0; gi < pair.gaps.size(); ++gi) {
                    MultiplicityReport r =
                        claim2_multiplicity_check(f, pair, gi, tower.splittings[n - 1], budgets);
                    all_ok = all_ok && r.w_ok && r.var_ok;
                    arr.push_back(json{{"level", n}, {"gap", gi}, {"result", to_json(r)}});
                }
            }
            results["multiplicity"] = arr;
        }
        body["results"] = results;
        return all_ok ? exit_ok : exit_check_failed;
    });
}

struct SweepOutput {
    Report report;
    std::string csv;
};

inline SweepOutput cmd_sweep(const std::string& family_path, const std::string& what,
                             const CmdOptions& opt = {}) {
    SweepOutput out;
    std::string bytes;
    try {
        bytes = read_file(family_path);
    } catch (const Error& e) {
        out.report.body = json{{"error", e.what()}};
        out.report.exit_code = exit_input;
        return out;
    }
    out.report = detail::run_command("sweep --what " + what, bytes, [&](json& body) {
        if (what != "depth" && what != "expansion")
            fail(Errc::parse_error, "sweep kind must be depth or expansion");
        FamilyDocument fam = load_family_document(family_path);
        SweepOptions sopt;
        sopt.what = what == "depth" ? SweepWhat::Depth : SweepWhat::Expansion;
        sopt.jobs = opt.jobs;
        sopt.max_depth = opt.max_depth;
        sopt.max_q = opt.max_q.value_or(8); // sweeps stay shallow per row by default
        sopt.budgets = detail::budgets_of(opt);
        body["budget"] = detail::budget_json(sopt.budgets);
        std::vector<SweepRow> rows = run_sweep(fam, sopt);
        out.csv = sweep_csv(fam, rows);

        std::size_t hits = 0, errors = 0;
        for (const auto& r : rows) {
            if (r.status != "ok") ++errors;
            if (r.hypothesis_met && *r.hypothesis_met && r.margin_ok && *r.margin_ok) ++hits;
        }
        body["results"] = json{{"rows", rows.size()},
                               {"hits", hits},
                               {"row_errors", errors},
                               {"csv_sha", fnv1a_hex(out.csv)},
                               {"jobs", sopt.jobs ? sopt.jobs : std::thread::hardware_concurrency()}};
        return exit_ok; // negative findings and per-row errors are data, not failures
    });
    return out;
}

} // namespace plr
