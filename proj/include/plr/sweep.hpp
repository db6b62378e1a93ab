#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "plr/families.hpp"
#include "plr/serialize.hpp"

namespace plr {

enum class SweepWhat { Depth, Expansion };

struct SweepOptions {
    SweepWhat what = SweepWhat::Depth;
    unsigned jobs = 0; // 0: hardware concurrency
    unsigned max_depth = 8;
    unsigned max_q = 8; // sweeps keep the per-row search shallow by default
    SearchBudgets budgets;
};

struct SweepRow {
    std::vector<Rational> params;
    std::optional<unsigned> depth;
    std::vector<unsigned> q_list;
    std::optional<bool> hypothesis_met; // expansion only
    std::optional<bool> margin_ok;
    std::optional<Rational> margin_fraction;
    std::string status = "ok"; // "ok" or the error that stopped the row
};

// Parameter grid in row-major (lexicographic) order over the ranges.
inline std::vector<std::vector<Rational>> expand_grid(const FamilyDocument& fam) {
    std::vector<std::vector<Rational>> axes;
    for (const auto& p : fam.parameters) {
        std::vector<Rational> axis;
        for (Rational v = p.lo; v <= p.hi; v += p.step) axis.push_back(v);
        axes.push_back(std::move(axis));
    }
    std::vector<std::vector<Rational>> rows;
    if (axes.empty()) return rows;
    for (const auto& axis : axes)
        if (axis.empty()) return rows; // empty range: empty sweep
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        std::vector<Rational> tuple;
        for (std::size_t k = 0; k < axes.size(); ++k) tuple.push_back(axes[k][idx[k]]);
        rows.push_back(std::move(tuple));
        std::size_t k = axes.size();
        while (true) {
            --k;
            if (++idx[k] < axes[k].size()) break;
            idx[k] = 0;
            if (k == 0) return rows;
        }
    }
}

inline PLMap instantiate(const FamilyDocument& fam, const std::vector<Rational>& params) {
    if (fam.kind == "tent") return tent_map(params.at(0));
    if (fam.kind == "twocorner") {
        std::vector<Rational> values;
        for (const std::string& slot : fam.tmpl_values) {
            if (!slot.empty() && slot[0] == '$') {
                std::string name = slot.substr(1);
                bool found = false;
                for (std::size_t k = 0; k < fam.parameters.size(); ++k)
                    if (fam.parameters[k].name == name) {
                        values.push_back(params.at(k));
                        found = true;
                    }
                if (!found) fail(Errc::parse_error, "unknown template slot '" + slot + "'");
            } else {
                values.push_back(parse_rational(slot));
            }
        }
        return make_plmap(fam.tmpl_breakpoints, values);
    }
    fail(Errc::parse_error, "explicit families are instantiated per map document");
}

namespace detail {

inline SweepRow run_row(const FamilyDocument& fam, const std::vector<Rational>& params,
                        const std::optional<MapDocument>& explicit_doc, const SweepOptions& opt) {
    SweepRow row;
    row.params = params;
    try {
        PLMap f = explicit_doc ? map_of(*explicit_doc) : instantiate(fam, params);
        RenormTower tower = build_tower(f, opt.max_depth, opt.max_q, opt.budgets);
        row.depth = tower.depth();
        row.q_list = tower.q_sequence();
        if (opt.what == SweepWhat::Expansion) {
            row.hypothesis_met = false;
            for (std::size_t i = 0; i < tower.pairs.size(); ++i) {
                if (!tower.splitting_found[i]) continue;
                try {
                    ExpansionCertificate cert =
                        expansion_witness(f, tower.pairs[i], tower.splittings[i], opt.budgets);
                    row.hypothesis_met = true;
                    row.margin_ok = cert.margin_ok;
                    row.margin_fraction = cert.margin_fraction;
                    if (!reverify_expansion(f, cert)) row.status = "ReverificationFailed";
                    break;
                } catch (const Error& e) {
                    if (e.code() == Errc::hypothesis_not_met) continue;
                    throw;
                }
            }
        }
    } catch (const Error& e) {
        row.status = errc_name(e.code());
    }
    return row;
}

} // namespace detail

inline std::vector<SweepRow> run_sweep(const FamilyDocument& fam, const SweepOptions& opt) {
    std::vector<std::vector<Rational>> grid;
    std::vector<std::optional<MapDocument>> docs;
    if (fam.kind == "explicit") {
        for (const auto& m : fam.maps) {
            grid.push_back({});
            docs.push_back(m);
        }
    } else {
        grid = expand_grid(fam);
        docs.assign(grid.size(), std::nullopt);
    }

    std::vector<SweepRow> rows(grid.size());
    unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, grid.empty() ? 1 : static_cast<unsigned>(grid.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            rows[i] = detail::run_row(fam, grid[i], docs[i], opt);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= grid.size()) return;
                    rows[i] = detail::run_row(fam, grid[i], docs[i], opt);
                }
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

// CSV per the sweep contract: UTF-8, header row, comma separator, rationals
// quoted.  Rows appear in parameter-tuple order independent of --jobs.
inline std::string sweep_csv(const FamilyDocument& fam, const std::vector<SweepRow>& rows) {
    std::string out;
    for (const auto& p : fam.parameters) out += p.name + ",";
    if (fam.kind == "explicit") out += "name,";
    out += "depth,q_list,hypothesis_met,margin_ok,margin_fraction,status\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        for (const auto& v : r.params) out += "\"" + to_string(v) + "\",";
        if (fam.kind == "explicit") out += "\"" + fam.maps[i].name + "\",";
        out += r.depth ? std::to_string(*r.depth) : std::string();
        out += ",\"";
        for (std::size_t k = 0; k < r.q_list.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(r.q_list[k]);
        }
        out += "\",";
        out += r.hypothesis_met ? (*r.hypothesis_met ? "true" : "false") : "";
        out += ",";
        out += r.margin_ok ? (*r.margin_ok ? "true" : "false") : "";
        out += ",";
        out += r.margin_fraction ? "\"" + to_string(*r.margin_fraction) + "\"" : std::string();
        out += "," + r.status + "\n";
    }
    return out;
}

} // namespace plr
