#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plr/cycles.hpp"

namespace plr {

// Search record for one deepening step: which q' were ruled out exhaustively
// (relative to the candidate set) and whether the scan was cut short.
struct LevelSearch {
    unsigned from_q = 0;
    unsigned last_exhausted_q = 0; // largest multiple of from_q fully scanned
    bool truncated = false;
    std::string truncation_reason;
};

// Strictly nested chain of cycles I^1 > I^2 > ... with nested pairs,
// splittings and rescaled renormalizations attached.  depth() counts nested
// pairs, so a root-only tower has depth 0.
struct RenormTower {
    PLMap base;
    std::vector<Cycle> cycles;               // level n = cycles[n-1]
    std::vector<NestedPair> pairs;           // pairs[i] = (level i+1, level i+2)
    std::vector<Splitting> splittings;       // per pair; may be absent on failure
    std::vector<bool> splitting_found;       // per pair
    std::vector<PLMap> renorm_maps;          // per level: rescaled f^{q_n} | I^n_0
    std::vector<bool> corners_interior;      // per level: C_f in int(union I^n)
    std::vector<LevelSearch> search_log;     // per deepening attempt
    bool truncated = false;                  // any budget truncation during deepening

    explicit RenormTower(PLMap f) : base(std::move(f)) {}

    unsigned depth() const { return cycles.empty() ? 0 : static_cast<unsigned>(cycles.size() - 1); }

    std::vector<unsigned> q_sequence() const {
        std::vector<unsigned> qs;
        for (const auto& c : cycles) qs.push_back(c.q);
        return qs;
    }
};

namespace detail {

inline bool corners_in_interior(const PLMap& f, const Cycle& cycle) {
    for (const Corner& c : corners(f)) {
        bool inside = false;
        for (const Interval& iv : cycle.intervals)
            if (iv.contains_strictly(c.location)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

// Does the cycle union contain every corner orbit up to the horizon?
inline bool corner_orbits_inside(const PLMap& f, const Cycle& cycle, unsigned horizon) {
    for (const Corner& c : corners(f))
        for (const Rational& x : orbit_of(f, c.location, horizon))
            if (!cycle.contains_point(x)) return false;
    return true;
}

} // namespace detail

// Greedy tower construction.  Level 1 is the cycle with smallest q >= 1
// whose union contains the corner orbits up to the horizon (the whole
// interval [0,1] always qualifies at q = 1).  Each further level is the
// cycle with the smallest q' = a * q_n (a >= 2) that nests strictly in the
// previous level, preferring candidates that keep all corners inside.
// Splittings and rescaled renormalizations are attached per level; budget
// truncations are recorded, never silently ignored.
inline RenormTower build_tower(const PLMap& f, unsigned max_depth = 8, unsigned max_q = 64,
                               const SearchBudgets& budgets = {}) {
    RenormTower tower(f);
    if (max_depth == 0) return tower;

    unsigned horizon = 4 * max_q;

    // root level
    {
        std::vector<Cycle> roots = find_cycles(f, 1, budgets);
        std::optional<Cycle> root;
        for (const Cycle& c : roots)
            if (detail::corner_orbits_inside(f, c, horizon)) {
                root = c;
                break;
            }
        if (!root) return tower; // no admissible root; empty tower
        tower.cycles.push_back(*root);
    }

    while (tower.depth() < max_depth) {
        const Cycle cur = tower.cycles.back();
        LevelSearch log;
        log.from_q = cur.q;
        std::optional<Cycle> next;
        for (unsigned a = 2;; ++a) {
            unsigned q2 = cur.q * a;
            if (q2 > max_q) break;
            std::vector<Cycle> cands;
            try {
                cands = find_cycles(f, q2, budgets);
            } catch (const Error& e) {
                if (e.code() == Errc::piece_budget_exceeded || e.code() == Errc::candidate_budget_exceeded) {
                    log.truncated = true;
                    log.truncation_reason = e.what();
                    tower.truncated = true;
                    break;
                }
                throw;
            }
            std::vector<Cycle> nested;
            for (const Cycle& c : cands) {
                try {
                    nest(f, cur, c);
                    nested.push_back(c);
                } catch (const Error&) {
                    continue;
                }
            }
            if (!nested.empty()) {
                // prefer a cycle that keeps the corners inside; then leftmost
                std::optional<Cycle> pick;
                for (const Cycle& c : nested)
                    if (detail::corner_orbits_inside(f, c, horizon)) {
                        pick = c;
                        break;
                    }
                next = pick ? *pick : nested.front();
                break;
            }
            log.last_exhausted_q = q2;
        }
        tower.search_log.push_back(log);
        if (!next) break;
        tower.cycles.push_back(*next);
        tower.pairs.push_back(nest(f, cur, *next));
        try {
            unsigned max_period = next->q > 1 ? next->q - 1 : 1;
            tower.splittings.push_back(find_splitting(f, tower.pairs.back(), max_period, budgets));
            tower.splitting_found.push_back(true);
        } catch (const Error&) {
            tower.splittings.push_back(Splitting{});
            tower.splitting_found.push_back(false);
        }
    }

    for (const Cycle& c : tower.cycles) {
        tower.corners_interior.push_back(detail::corners_in_interior(f, c));
        tower.renorm_maps.push_back(
            renormalize(f, c, 0, RenormMode::MaximalTrapping, RenormOrientation::Auto, budgets.pieces));
    }
    return tower;
}

} // namespace plr
