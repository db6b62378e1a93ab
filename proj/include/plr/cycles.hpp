#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "plr/orbits.hpp"
#include "plr/plmap.hpp"

namespace plr {

struct SearchBudgets {
    std::uint64_t pieces = 1'000'000;
    std::uint64_t candidates = 4'096;
    std::uint64_t pairs = 2'000'000;
};

// Cyclically permuted family of pairwise disjoint closed intervals, stored in
// dynamical order starting at the leftmost interval.
struct Cycle {
    std::vector<Interval> intervals;
    unsigned q = 0;

    Rational leftmost() const { return intervals.front().lo; }

    bool contains_point(const Rational& x) const {
        for (const auto& iv : intervals)
            if (iv.contains(x)) return true;
        return false;
    }
};

namespace detail {

// Which interval of `ivs` contains `img` entirely?  -1 if none.
inline int containing_index(const std::vector<Interval>& ivs, const Interval& img) {
    for (std::size_t k = 0; k < ivs.size(); ++k)
        if (ivs[k].contains(img)) return static_cast<int>(k);
    return -1;
}

} // namespace detail

// Verifies the cycle invariants exactly and reorders the intervals into
// dynamical order (leftmost first).
inline Cycle validate_cycle(const PLMap& f, std::vector<Interval> intervals) {
    if (intervals.empty()) fail(Errc::precondition, "empty interval list");
    for (const auto& iv : intervals)
        if (iv.degenerate()) fail(Errc::degenerate_interval, "degenerate interval " + to_string(iv));
    std::sort(intervals.begin(), intervals.end());
    for (std::size_t i = 0; i + 1 < intervals.size(); ++i)
        if (!(intervals[i].hi < intervals[i + 1].lo))
            fail(Errc::not_disjoint,
                 to_string(intervals[i]) + " touches " + to_string(intervals[i + 1]));

    std::size_t q = intervals.size();
    std::vector<int> succ(q, -1);
    for (std::size_t j = 0; j < q; ++j) {
        Interval img = image_of(f, intervals[j]);
        succ[j] = detail::containing_index(intervals, img);
        if (succ[j] < 0)
            fail(Errc::not_invariant,
                 "image " + to_string(img) + " of " + to_string(intervals[j]) + " escapes the family");
    }
    // successor must be a single q-cycle
    std::vector<Interval> ordered;
    ordered.reserve(q);
    std::vector<bool> used(q, false);
    std::size_t at = 0; // leftmost after sort
    for (std::size_t step = 0; step < q; ++step) {
        if (used[at]) fail(Errc::not_invariant, "interval family is not a single cycle");
        used[at] = true;
        ordered.push_back(intervals[at]);
        at = static_cast<std::size_t>(succ[at]);
    }
    if (at != 0) fail(Errc::not_invariant, "interval family is not a single cycle");
    return Cycle{std::move(ordered), static_cast<unsigned>(q)};
}

// Candidate-endpoint cycle search.  The base set holds the breakpoints and
// fixed points of g = f^q and {0,1}; candidates are the base plus one
// g-image and one g-preimage round of it, plus the forward corner orbits up
// to 2q steps.  Pairs (e1, e2) are scanned for g-invariance of [e1, e2]; the
// q forward images must be pairwise disjoint.  Results are deduplicated,
// pruned to the maximal ones, and sorted by leftmost endpoint.  Completeness
// holds only relative to the candidate set.
inline std::vector<Cycle> find_cycles(const PLMap& f, unsigned q, const SearchBudgets& budgets = {}) {
    if (q < 1) fail(Errc::precondition, "cycle length must be >= 1");
    // the candidate set contains every breakpoint of g, so a piece count past
    // the candidate budget is already a candidate overflow
    PLMap g = [&] {
        try {
            return iterate(f, q, std::min(budgets.pieces, budgets.candidates));
        } catch (const Error& e) {
            if (e.code() == Errc::piece_budget_exceeded && budgets.candidates < budgets.pieces)
                fail(Errc::candidate_budget_exceeded, e.what());
            throw;
        }
    }();

    std::vector<Rational> base;
    for (const auto& x : g.breakpoints()) base.push_back(x);
    {
        auto [pts, segs] = fixed_points(g);
        for (auto& x : pts) base.push_back(std::move(x));
        for (auto& s : segs) {
            base.push_back(s.interval.lo);
            base.push_back(s.interval.hi);
        }
    }
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    if (base.size() > budgets.candidates)
        fail(Errc::candidate_budget_exceeded,
             std::to_string(base.size()) + " base candidates exceed budget");

    std::vector<Rational> cands = base;
    for (const Rational& e : base) cands.push_back(eval(g, e));
    // one preimage round: per piece of g, solve g(x) = e for the e inside the
    // piece's value range (base is sorted, so that range is a binary search)
    const std::uint64_t cand_cap = budgets.candidates * 2;
    for (std::size_t p = 0; p < g.piece_count(); ++p) {
        Rational s = g.slope(p);
        const Rational& a = g.breakpoints()[p];
        Rational va = g.values()[p];
        const Rational& vb = g.values()[p + 1];
        const Rational& vlo = va < vb ? va : vb;
        const Rational& vhi = va < vb ? vb : va;
        auto it = std::lower_bound(base.begin(), base.end(), vlo);
        for (; it != base.end() && *it <= vhi; ++it) {
            cands.push_back(a + (*it - va) / s);
            if (cands.size() > cand_cap)
                fail(Errc::candidate_budget_exceeded, "preimage round exceeds candidate budget");
        }
    }
    // forward corner orbits supply the canonical tight-cycle endpoints
    for (const Corner& c : corners(f))
        for (auto& x : orbit_of(f, c.location, 2 * q)) cands.push_back(std::move(x));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    if (cands.size() > budgets.candidates)
        fail(Errc::candidate_budget_exceeded,
             std::to_string(cands.size()) + " candidates exceed budget");

    const std::size_t n = cands.size();
    std::vector<Rational> gv;
    gv.reserve(n);
    for (const Rational& e : cands) gv.push_back(eval(g, e));

    // For q >= 2 a base interval containing a fixed point of f can never have
    // its q images pairwise disjoint, so each j-run is capped at the next
    // fixed point of f above e_i.
    std::vector<Rational> f_fixed;
    if (q >= 2) {
        auto [fpts, fsegs] = fixed_points(f);
        f_fixed = std::move(fpts);
        for (const auto& s : fsegs) {
            f_fixed.push_back(s.interval.lo);
            f_fixed.push_back(s.interval.hi);
        }
        std::sort(f_fixed.begin(), f_fixed.end());
    }

    // No breakpoint of g lies strictly between consecutive candidates, so the
    // extrema of g over [e_i, e_j] are attained at candidate points and the
    // scan can keep running min/max while extending j.
    std::uint64_t pair_count = 0;
    std::set<std::vector<Interval>> seen;
    std::vector<Cycle> found;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Rational cap(2); // beyond the domain: no cap
        if (q >= 2) {
            auto it = std::lower_bound(f_fixed.begin(), f_fixed.end(), cands[i]);
            if (it != f_fixed.end() && *it == cands[i]) continue; // e_i itself fixed
            if (it != f_fixed.end()) cap = *it;
        }
        Rational lo = gv[i], hi = gv[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cands[j] >= cap) break; // would trap a fixed point of f
            if (hi >= cap) break;       // e_j < cap can never reach the running max
            if (++pair_count > budgets.pairs)
                fail(Errc::candidate_budget_exceeded, "pair scan exceeds budget");
            if (gv[j] < lo) lo = gv[j];
            if (gv[j] > hi) hi = gv[j];
            if (lo < cands[i]) break; // min only decreases from here on
            if (hi > cands[j]) continue;
            // [e_i, e_j] is g-invariant; build the forward images
            Interval J(cands[i], cands[j]);
            std::vector<Interval> ivs{J};
            bool ok = true;
            for (unsigned t = 1; t < q; ++t) ivs.push_back(image_of(f, ivs.back()));
            for (std::size_t s1 = 0; ok && s1 < ivs.size(); ++s1) {
                if (ivs[s1].degenerate()) ok = false;
                for (std::size_t s2 = s1 + 1; ok && s2 < ivs.size(); ++s2)
                    if (closed_intersects(ivs[s1], ivs[s2])) ok = false;
            }
            if (!ok) continue;
            std::vector<Interval> key = ivs;
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            found.push_back(validate_cycle(f, ivs));
        }
    }

    // keep only cycles not dominated interval-wise by another found cycle
    auto dominated = [](const Cycle& a, const Cycle& b) {
        for (const auto& ia : a.intervals) {
            bool inside = false;
            for (const auto& ib : b.intervals)
                if (ib.contains(ia)) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
        return true;
    };
    std::vector<Cycle> maximal;
    for (std::size_t i = 0; i < found.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < found.size(); ++j) {
            if (i == j) continue;
            if (dominated(found[i], found[j]) && !dominated(found[j], found[i])) {
                keep = false;
                break;
            }
        }
        if (keep) maximal.push_back(found[i]);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const Cycle& a, const Cycle& b) { return a.leftmost() < b.leftmost(); });
    return maximal;
}

// Open gap between consecutive inner intervals inside one outer interval,
// together with its inner neighbors (indices into inner.intervals).
struct Gap {
    std::size_t outer_index;
    Interval interval; // endpoints are the facing inner endpoints; the gap itself is open
    std::size_t left_inner, right_inner;
};

struct NestedPair {
    Cycle outer;
    Cycle inner;
    unsigned ratio = 0; // a = inner.q / outer.q
    std::vector<Gap> gaps;
};

inline bool is_doubling(const NestedPair& pair) { return pair.ratio == 2; }

// Nesting check: every inner interval inside some outer interval, equal
// counts per outer interval, union strictly smaller.  Inner intervals may
// share endpoints with the outer ones; the gaps between consecutive inner
// intervals are still nonempty open intervals.
inline NestedPair nest(const PLMap& f, const Cycle& outer, const Cycle& inner) {
    (void)f;
    if (inner.q % outer.q != 0 || inner.q == outer.q)
        fail(Errc::not_nested, "inner cycle length must be a proper multiple of the outer length");
    unsigned a = inner.q / outer.q;

    // spatial order of inner intervals per outer interval
    std::vector<std::vector<std::size_t>> per_outer(outer.q);
    std::vector<std::size_t> sorted_idx(inner.q);
    for (std::size_t i = 0; i < inner.q; ++i) sorted_idx[i] = i;
    std::sort(sorted_idx.begin(), sorted_idx.end(), [&](std::size_t x, std::size_t y) {
        return inner.intervals[x] < inner.intervals[y];
    });
    for (std::size_t i : sorted_idx) {
        int k = detail::containing_index(outer.intervals, inner.intervals[i]);
        if (k < 0)
            fail(Errc::not_nested,
                 "inner interval " + to_string(inner.intervals[i]) + " not inside any outer interval");
        per_outer[static_cast<std::size_t>(k)].push_back(i);
    }
    for (std::size_t k = 0; k < outer.q; ++k)
        if (per_outer[k].size() != a)
            fail(Errc::ragged_nesting, "outer interval " + std::to_string(k) + " holds " +
                                           std::to_string(per_outer[k].size()) + " inner intervals, expected " +
                                           std::to_string(a));

    NestedPair pair{outer, inner, a, {}};
    for (std::size_t k = 0; k < outer.q; ++k) {
        for (std::size_t t = 0; t + 1 < per_outer[k].size(); ++t) {
            std::size_t li = per_outer[k][t], ri = per_outer[k][t + 1];
            pair.gaps.push_back(
                Gap{k, Interval(inner.intervals[li].hi, inner.intervals[ri].lo), li, ri});
        }
    }
    std::sort(pair.gaps.begin(), pair.gaps.end(),
              [](const Gap& x, const Gap& y) { return x.interval.lo < y.interval.lo; });
    return pair;
}

// Extended neighbors of a gap: the inner intervals flanking I_l and I_r on
// the outside, and the open span S between them (S covers at most 3 gaps).
struct GapNeighborhood {
    std::optional<std::size_t> far_left, far_right; // spatial inner indices
    Interval span;
};

inline GapNeighborhood gap_neighborhood(const NestedPair& pair, std::size_t gap_index) {
    const Gap& gp = pair.gaps.at(gap_index);
    std::vector<std::size_t> order(pair.inner.q);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return pair.inner.intervals[x] < pair.inner.intervals[y];
    });
    std::size_t pos_l = 0, pos_r = 0;
    for (std::size_t t = 0; t < order.size(); ++t) {
        if (order[t] == gp.left_inner) pos_l = t;
        if (order[t] == gp.right_inner) pos_r = t;
    }
    GapNeighborhood nb{{}, {}, Interval(Rational(0), Rational(1))};
    Rational lo(0), hi(1);
    if (pos_l > 0) {
        nb.far_left = order[pos_l - 1];
        lo = pair.inner.intervals[*nb.far_left].hi;
    }
    if (pos_r + 1 < order.size()) {
        nb.far_right = order[pos_r + 1];
        hi = pair.inner.intervals[*nb.far_right].lo;
    }
    nb.span = Interval(lo, hi);
    return nb;
}

// Max over points of [0,1] of the number of intervals containing it (closed
// containment), by endpoint sweep.
inline unsigned intersection_multiplicity(const std::vector<Interval>& intervals) {
    std::vector<std::pair<Rational, int>> events;
    events.reserve(intervals.size() * 2);
    for (const auto& iv : intervals) {
        events.emplace_back(iv.lo, +1);
        events.emplace_back(iv.hi, -1);
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second; // open before close: touching counts as overlap
    });
    int depth = 0, best = 0;
    for (const auto& [x, d] : events) {
        depth += d;
        best = std::max(best, depth);
    }
    return static_cast<unsigned>(best);
}

// A set of periodic points, one per gap, closed under f (a union of full
// orbits).  gap_of[i] is the gap holding points[i].
struct Splitting {
    std::vector<Rational> points; // ascending
    std::vector<std::size_t> gap_of;
    std::vector<PeriodicOrbit> orbits;
};

// Splitting search.  Candidate orbits are the periodic orbits of period
// <= max_period all of whose points sit in pairwise distinct gaps; they are
// assembled into an exact cover of the gaps by backtracking.  Per-gap
// tie-break: prefer the orbit that alone hits every gap exactly once, then
// smallest period, then smallest point.
inline Splitting find_splitting(const PLMap& f, const NestedPair& pair, unsigned max_period,
                                const SearchBudgets& budgets = {}, bool allow_tie_break = true) {
    const std::size_t G = pair.gaps.size();
    auto gap_index_of = [&](const Rational& x) -> int {
        for (std::size_t gi = 0; gi < G; ++gi)
            if (pair.gaps[gi].interval.contains_strictly(x)) return static_cast<int>(gi);
        return -1;
    };

    struct Cand {
        PeriodicOrbit orbit;
        std::vector<std::size_t> gaps; // gap index per orbit point
        bool covers_all;
    };
    std::vector<Cand> cands;
    for (unsigned p = 1; p <= max_period; ++p) {
        auto [orbits, segs] = periodic_points(f, p, budgets.pieces);
        (void)segs;
        for (auto& ob : orbits) {
            std::vector<std::size_t> gs;
            bool ok = true;
            for (const Rational& x : ob.points) {
                int gi = gap_index_of(x);
                if (gi < 0) {
                    ok = false;
                    break;
                }
                gs.push_back(static_cast<std::size_t>(gi));
            }
            if (!ok) continue;
            std::vector<std::size_t> uniq = gs;
            std::sort(uniq.begin(), uniq.end());
            if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) continue;
            bool covers = uniq.size() == G;
            cands.push_back(Cand{std::move(ob), std::move(gs), covers});
        }
    }
    if (cands.empty()) fail(Errc::no_splitting_found, "no periodic orbit fits the gaps");

    // per-gap candidate preference
    auto better = [](const Cand& a, const Rational& pa, const Cand& b, const Rational& pb) {
        if (a.covers_all != b.covers_all) return a.covers_all;
        if (a.orbit.period != b.orbit.period) return a.orbit.period < b.orbit.period;
        return pa < pb;
    };

    std::vector<int> chosen(G, -1); // candidate index covering each gap
    std::vector<char> cand_used(cands.size(), 0);

    // backtracking exact cover; gaps processed left to right
    std::vector<std::size_t> order;
    std::function<bool(std::size_t)> solve = [&](std::size_t gap) -> bool {
        while (gap < G && chosen[gap] >= 0) ++gap;
        if (gap >= G) return true;
        // candidates whose orbit hits this gap, preference-ordered
        std::vector<std::pair<std::size_t, Rational>> opts; // (cand idx, point in this gap)
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            if (cand_used[ci]) continue;
            bool conflict = false;
            Rational pt;
            bool hits = false;
            for (std::size_t t = 0; t < cands[ci].gaps.size(); ++t) {
                if (chosen[cands[ci].gaps[t]] >= 0) conflict = true;
                if (cands[ci].gaps[t] == gap) {
                    hits = true;
                    pt = cands[ci].orbit.points[t];
                }
            }
            if (hits && !conflict) opts.emplace_back(ci, std::move(pt));
        }
        std::sort(opts.begin(), opts.end(), [&](const auto& a, const auto& b) {
            return better(cands[a.first], a.second, cands[b.first], b.second);
        });
        if (!allow_tie_break && opts.size() > 1)
            fail(Errc::ambiguous_splitting,
                 "gap " + std::to_string(gap) + " admits several splitting orbits");
        for (const auto& [ci, pt] : opts) {
            cand_used[ci] = 1;
            for (std::size_t g2 : cands[ci].gaps) chosen[g2] = static_cast<int>(ci);
            if (solve(gap + 1)) return true;
            cand_used[ci] = 0;
            for (std::size_t g2 : cands[ci].gaps) chosen[g2] = -1;
        }
        return false;
    };
    if (!solve(0)) fail(Errc::no_splitting_found, "gap cover has no solution up to the period cap");

    Splitting sp;
    std::set<std::size_t> used_cands(chosen.begin(), chosen.end());
    for (std::size_t ci : used_cands) {
        sp.orbits.push_back(cands[ci].orbit);
        for (std::size_t t = 0; t < cands[ci].gaps.size(); ++t) {
            sp.points.push_back(cands[ci].orbit.points[t]);
            sp.gap_of.push_back(cands[ci].gaps[t]);
        }
    }
    // sort points ascending, carrying gap indices
    std::vector<std::size_t> perm(sp.points.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t x, std::size_t y) { return sp.points[x] < sp.points[y]; });
    Splitting out;
    out.orbits = sp.orbits;
    for (std::size_t i : perm) {
        out.points.push_back(sp.points[i]);
        out.gap_of.push_back(sp.gap_of[i]);
    }
    return out;
}

namespace detail {

// One-sided growth of [a, b] under g, upper side.  Extends b to the nearest
// obstruction: a fixed point of g (slope > 1), the point where g(b') falls to
// a, or the domain end.  cur_max/cur_min are the extrema of g over [a, b].
inline Rational grow_upper(const PLMap& g, const Rational& a, const Rational& b) {
    Rational cur = b;
    while (cur < 1) {
        std::size_t p = g.find_piece(cur);
        if (g.breakpoints()[p + 1] == cur) {
            if (p + 1 >= g.piece_count()) break;
            ++p;
        }
        // piece [u, v], g(x) = gv + s (x - u)
        const Rational& v = g.breakpoints()[p + 1];
        Rational s = g.slope(p);
        Rational gc = eval(g, cur);
        Rational limit = v; // candidate stop within this piece
        bool frozen = false;
        if (s > 0) {
            // rising: need g(b') <= b'
            if (s > 1) {
                // fixed point z of this piece
                Rational u = g.breakpoints()[p];
                Rational z = (g.values()[p] - s * u) / (1 - s);
                if (z < cur) break;            // already past the fixed point:
                                               // anything further escapes above
                if (z <= limit) {
                    limit = z;
                    frozen = true;
                }
            } else if (gc > cur) {
                break; // slope <= 1 above the diagonal: escapes immediately
            }
        } else {
            // falling: need g(b') >= a
            if (gc < a) break;
            Rational u = g.breakpoints()[p];
            Rational z = u + (a - g.values()[p]) / s; // g(z) = a
            if (z < cur) break;
            if (z <= limit) {
                limit = z;
                frozen = true;
            }
        }
        if (limit <= cur) break;
        cur = limit;
        if (frozen) break;
    }
    return cur;
}

inline Rational grow_lower(const PLMap& g, const Rational& a, const Rational& b) {
    Rational cur = a;
    while (cur > 0) {
        std::size_t p = g.find_piece(cur);
        if (g.breakpoints()[p] == cur) {
            if (p == 0) break;
            --p;
        }
        const Rational& u = g.breakpoints()[p];
        Rational s = g.slope(p);
        Rational gc = eval(g, cur);
        Rational limit = u;
        bool frozen = false;
        if (s > 0) {
            // going left g decreases: need g(a') >= a'
            if (s > 1) {
                Rational z = (g.values()[p] - s * u) / (1 - s);
                if (z > cur) break;
                if (z >= limit) {
                    limit = z;
                    frozen = true;
                }
            } else if (gc < cur) {
                break;
            }
        } else {
            // going left g increases: need g(a') <= b
            if (gc > b) break;
            Rational z = u + (b - g.values()[p]) / s; // g(z) = b
            if (z > cur) break;
            if (z >= limit) {
                limit = z;
                frozen = true;
            }
        }
        if (limit >= cur) break;
        cur = limit;
        if (frozen) break;
    }
    return cur;
}

} // namespace detail

// Canonical enlargement for clean renormalization: per interval, the maximal
// J containing it with f^q(J) inside J, grown one endpoint at a time to the
// nearest obstruction — upper endpoint first, then lower.  Enlarged
// intervals may share endpoints.
inline std::vector<Interval> maximal_trapping(const PLMap& f, const Cycle& cycle,
                                              std::uint64_t piece_budget = 1'000'000) {
    PLMap g = iterate(f, cycle.q, piece_budget);
    std::vector<Interval> out;
    out.reserve(cycle.q);
    for (const Interval& iv : cycle.intervals) {
        Rational b = detail::grow_upper(g, iv.lo, iv.hi);
        Rational a = detail::grow_lower(g, iv.lo, b);
        Interval J(a, b);
        Interval img = image_of(g, J);
        if (!(J.lo <= img.lo && img.hi <= J.hi))
            fail(Errc::not_invariant, "trapping growth produced a non-invariant interval");
        out.push_back(std::move(J));
    }
    return out;
}

enum class RenormMode { Strict, MaximalTrapping };
enum class RenormOrientation { Preserve, Flip, Auto };

// R = f^q restricted to intervals[j] (or its maximal trapping enlargement)
// and affinely rescaled to [0,1].  Auto picks Flip exactly when the
// restricted map is orientation-reversing at the left endpoint, which makes
// towers of tent-like maps canonical.
inline PLMap renormalize(const PLMap& f, const Cycle& cycle, std::size_t j, RenormMode mode,
                         RenormOrientation orientation, std::uint64_t piece_budget = 1'000'000) {
    if (j >= cycle.q) fail(Errc::precondition, "interval index out of range");
    PLMap g = iterate(f, cycle.q, piece_budget);
    Interval J = cycle.intervals[j];
    if (mode == RenormMode::MaximalTrapping) J = maximal_trapping(f, cycle, piece_budget)[j];
    Orientation o;
    if (orientation == RenormOrientation::Preserve)
        o = Orientation::Preserve;
    else if (orientation == RenormOrientation::Flip)
        o = Orientation::Flip;
    else
        o = slope_at(g, J.lo, Side::Right) < 0 ? Orientation::Flip : Orientation::Preserve;
    return restrict_rescale(g, J, o);
}

// Sigma signs against a Cycle (orbit-module operation specialized to the
// cycle type).
inline SigmaVector sigma_signs(const PLMap& f, const Cycle& cycle, const Rational& x) {
    return sigma_signs_in(f, cycle.intervals, x);
}

} // namespace plr
