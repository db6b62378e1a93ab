#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plr/tower.hpp"

namespace plr {

// ---------------------------------------------------------------------------
// B_n / M_n
// ---------------------------------------------------------------------------

// Product of |Df| over the 2q boundary points of the cycle union.  Boundary
// points must not be corners; under the tower hypotheses the corners sit in
// the interior of the union.
inline LogValue beta(const PLMap& f, const Cycle& cycle) {
    LogValue out;
    for (const Interval& iv : cycle.intervals)
        for (const Rational& y : {iv.lo, iv.hi}) {
            if (f.is_corner(y))
                fail(Errc::corner_on_boundary, "corner at boundary point " + to_string(y));
            out += LogValue(abs_of(slope_at(f, y, y == 1 ? Side::Left : Side::Right)));
        }
    return out;
}

// Product of |Df| over the splitting points.  Empty splitting gives the
// empty product, mantissa 1.
inline LogValue mu(const PLMap& f, const Splitting& splitting) {
    LogValue out;
    for (const Rational& x : splitting.points) {
        if (f.is_corner(x))
            fail(Errc::corner_on_splitting_point, "corner at splitting point " + to_string(x));
        out += LogValue(abs_of(slope_at(f, x, x == 1 ? Side::Left : Side::Right)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Claim 3: B_{n+1} = B_n + 2 M_n
// ---------------------------------------------------------------------------

struct Claim3Result {
    bool ok = false;
    LogValue beta_outer, beta_inner, mu_level;
    std::vector<std::string> mismatches; // derivative-matching diagnostics on failure
};

namespace detail {

inline bool corners_inside_union(const PLMap& f, const Cycle& cycle) {
    for (const Corner& c : corners(f))
        if (!cycle.contains_point(c.location)) return false;
    return true;
}

} // namespace detail

// Exact mantissa check beta_{n+1} = beta_n * mu_n^2 for the tower pair at
// level n (1-based).  Requires the corners to lie in the inner cycle union.
inline Claim3Result verify_claim3(const PLMap& f, const RenormTower& tower, unsigned n) {
    if (n < 1 || n > tower.pairs.size())
        fail(Errc::precondition, "tower has no pair at level " + std::to_string(n));
    const NestedPair& pair = tower.pairs[n - 1];
    if (!detail::corners_inside_union(f, pair.inner))
        fail(Errc::hypothesis_not_met, "corners escape the level-" + std::to_string(n + 1) + " union");
    if (!tower.splitting_found[n - 1])
        fail(Errc::hypothesis_not_met, "no splitting attached at level " + std::to_string(n));

    Claim3Result r;
    r.beta_outer = beta(f, pair.outer);
    r.beta_inner = beta(f, pair.inner);
    r.mu_level = mu(f, tower.splittings[n - 1]);
    r.ok = r.beta_inner.mantissa == r.beta_outer.mantissa * r.mu_level.mantissa * r.mu_level.mantissa;
    if (!r.ok) {
        // locate boundary points violating the derivative-matching argument
        auto dfabs = [&](const Rational& y) {
            return abs_of(slope_at(f, y, y == 1 ? Side::Left : Side::Right));
        };
        const Splitting& sp = tower.splittings[n - 1];
        for (const Interval& iv : pair.inner.intervals)
            for (const Rational& y : {iv.lo, iv.hi}) {
                // gap-bounded inner endpoints pair with the splitting point of that gap
                bool on_gap = false;
                for (std::size_t gi = 0; gi < pair.gaps.size(); ++gi) {
                    const Gap& g = pair.gaps[gi];
                    if (g.interval.lo == y || g.interval.hi == y) {
                        on_gap = true;
                        for (std::size_t t = 0; t < sp.points.size(); ++t)
                            if (sp.gap_of[t] == gi && dfabs(y) != dfabs(sp.points[t]))
                                r.mismatches.push_back("|Df| differs between inner endpoint " +
                                                       to_string(y) + " and splitting point " +
                                                       to_string(sp.points[t]));
                    }
                }
                if (on_gap) continue;
                int k = detail::containing_index(pair.outer.intervals, Interval(y, y));
                if (k < 0) continue;
                const Interval& out_iv = pair.outer.intervals[static_cast<std::size_t>(k)];
                Rational z = (y - out_iv.lo) < (out_iv.hi - y) ? out_iv.lo : out_iv.hi;
                if (dfabs(y) != dfabs(z))
                    r.mismatches.push_back("|Df| differs between inner endpoint " + to_string(y) +
                                           " and outer endpoint " + to_string(z));
            }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Claim 4 scan: no attracting or neutral behavior up to a period cap
// ---------------------------------------------------------------------------

struct ScanViolation {
    enum class Kind { attracting, neutral, fixed_segment, corner_orbit, mu_not_positive };
    Kind kind;
    std::optional<PeriodicOrbit> orbit;
    std::optional<Interval> segment;
    Rational mantissa;   // |multiplier| (min one-sided product for corner orbits)
    unsigned level = 0;  // for mu_not_positive
};

inline std::vector<ScanViolation> multiplier_scan(const PLMap& f, const RenormTower& tower,
                                                  unsigned max_period,
                                                  const SearchBudgets& budgets = {}) {
    std::vector<ScanViolation> out;
    for (unsigned p = 1; p <= max_period; ++p) {
        auto [orbits, segs] = periodic_points(f, p, budgets.pieces);
        for (const auto& s : segs)
            out.push_back({ScanViolation::Kind::fixed_segment, {}, s.interval, Rational(1), 0});
        for (const auto& ob : orbits) {
            bool corner_hit = false;
            Rational lo_prod(1);
            for (const Rational& x : ob.points) {
                if (f.is_corner(x)) {
                    corner_hit = true;
                    Rational l = abs_of(slope_at(f, x, Side::Left));
                    Rational r = abs_of(slope_at(f, x, Side::Right));
                    lo_prod *= l < r ? l : r;
                } else {
                    lo_prod *= abs_of(slope_at(f, x, x == 1 ? Side::Left : Side::Right));
                }
            }
            if (corner_hit) {
                if (lo_prod <= 1)
                    out.push_back({ScanViolation::Kind::corner_orbit, ob, {}, lo_prod, 0});
            } else if (lo_prod < 1) {
                out.push_back({ScanViolation::Kind::attracting, ob, {}, lo_prod, 0});
            } else if (lo_prod == 1) {
                out.push_back({ScanViolation::Kind::neutral, ob, {}, lo_prod, 0});
            }
        }
    }
    for (std::size_t i = 0; i < tower.splittings.size(); ++i) {
        if (!tower.splitting_found[i]) continue;
        LogValue m = mu(f, tower.splittings[i]);
        if (m.sign() <= 0)
            out.push_back({ScanViolation::Kind::mu_not_positive, {}, {}, m.mantissa,
                           static_cast<unsigned>(i + 1)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Claim 5: 2 log|Df^{q_n}(x)| = B_n + sum_j sigma_j v_j
// ---------------------------------------------------------------------------

struct Claim5Result {
    bool ok = false;
    Rational lhs_squared; // |Df^{q_n}(x)|^2, via the orbit chain
    Rational rhs;         // B_n mantissa * prod rho_j^{sigma_j}, via the corner table
    SigmaVector sigma;
};

inline Claim5Result claim5_identity(const PLMap& f, const RenormTower& tower, unsigned n,
                                    const Rational& x) {
    if (n < 1 || n > tower.cycles.size())
        fail(Errc::precondition, "tower has no level " + std::to_string(n));
    const Cycle& cycle = tower.cycles[n - 1];

    Claim5Result r;
    r.sigma = sigma_signs(f, cycle, x); // checks corners-per-interval, membership, iterates

    // left side: multiplier chain along x, f(x), ..., f^{q-1}(x)
    Rational chain(1);
    Rational t = x;
    for (unsigned k = 0; k < cycle.q; ++k) {
        if (f.is_corner(t)) fail(Errc::iterate_hits_corner, "orbit point " + to_string(t) + " is a corner");
        chain *= abs_of(slope_at(f, t, t == 1 ? Side::Left : Side::Right));
        t = eval(f, t);
    }
    r.lhs_squared = chain * chain;

    // right side: boundary product and signed corner ratios
    Rational rhs = beta(f, cycle).mantissa;
    auto cs = corners(f);
    for (const auto& [j, sgn] : r.sigma.signs) {
        const Rational rho = cs[j].v.mantissa; // |s_r| / |s_l|
        rhs *= sgn > 0 ? rho : Rational(1 / rho);
    }
    r.rhs = rhs;
    r.ok = r.lhs_squared == r.rhs;
    return r;
}

// ---------------------------------------------------------------------------
// Claim 2: uniform bound on |DR_{n,j}|
// ---------------------------------------------------------------------------

struct RenormBound {
    LogValue bound;        // max over n, j of the largest |slope| of R_{n,j}
    bool vacuous = false;  // empty tower
    unsigned attained_level = 0;
    std::size_t attained_j = 0;
};

inline RenormBound renorm_derivative_bound(const RenormTower& tower,
                                           const SearchBudgets& budgets = {}) {
    RenormBound rb;
    if (tower.cycles.empty()) {
        rb.vacuous = true;
        return rb;
    }
    for (std::size_t lvl = 0; lvl < tower.cycles.size(); ++lvl) {
        const Cycle& c = tower.cycles[lvl];
        PLMap g = iterate(tower.base, c.q, budgets.pieces);
        for (std::size_t j = 0; j < c.q; ++j) {
            const Interval& iv = c.intervals[j];
            std::size_t p0 = g.find_piece(iv.lo);
            for (std::size_t p = p0; p < g.piece_count() && g.breakpoints()[p] < iv.hi; ++p) {
                Rational s = abs_of(g.slope(p));
                if (s > rb.bound.mantissa) {
                    rb.bound = LogValue(s);
                    rb.attained_level = static_cast<unsigned>(lvl + 1);
                    rb.attained_j = j;
                }
            }
        }
    }
    return rb;
}

// ---------------------------------------------------------------------------
// Expansion certificates
// ---------------------------------------------------------------------------

struct HypothesisNote {
    std::string searched; // scope of the intermediate-doubling search
    unsigned orbit_horizon = 0;
};

// H1: the inner cycle is not a doubling of any cycle nested in (or equal to)
// the outer one.  H2: every corner and its forward orbit (finite horizon;
// containment is forward-invariant) lies in the inner union.
inline HypothesisNote check_expansion_hypotheses(const PLMap& f, const NestedPair& pair,
                                                 const SearchBudgets& budgets = {}) {
    HypothesisNote note;
    if (is_doubling(pair))
        fail(Errc::hypothesis_not_met, "the pair itself is a doubling (a = 2)");
    if (pair.inner.q % 2 == 0) {
        unsigned qm = pair.inner.q / 2;
        if (qm % pair.outer.q == 0) {
            std::vector<Cycle> mids;
            try {
                mids = find_cycles(f, qm, budgets);
            } catch (const Error& e) {
                fail(Errc::hypothesis_not_met,
                     std::string("intermediate-doubling search exhausted its budget: ") + e.what());
            }
            for (const Cycle& mid : mids) {
                bool inner_in_mid = false, mid_in_outer = false;
                try {
                    NestedPair pm = nest(f, mid, pair.inner);
                    inner_in_mid = pm.ratio == 2;
                } catch (const Error&) {
                }
                if (qm == pair.outer.q) {
                    mid_in_outer = true; // candidate at the outer level itself
                } else {
                    try {
                        nest(f, pair.outer, mid);
                        mid_in_outer = true;
                    } catch (const Error&) {
                    }
                }
                if (inner_in_mid && mid_in_outer)
                    fail(Errc::hypothesis_not_met,
                         "inner cycle is a doubling of a q = " + std::to_string(qm) + " cycle");
            }
            note.searched = "no doubling among candidate q = " + std::to_string(qm) + " cycles";
        } else {
            note.searched = "no intermediate level is divisibility-compatible";
        }
    } else {
        note.searched = "inner cycle length is odd; doubling impossible";
    }

    note.orbit_horizon = 10 * pair.inner.q;
    for (const Corner& c : corners(f))
        for (const Rational& y : orbit_of(f, c.location, note.orbit_horizon))
            if (!pair.inner.contains_point(y))
                fail(Errc::hypothesis_not_met,
                     "corner orbit leaves the inner union at " + to_string(y));
    return note;
}

struct GapTransition {
    std::size_t gap_index = 0;
    Interval source_gap;  // G (closure)
    Interval target_gap;  // G' (closure)
    Interval T;           // maximal domain in G, closed representation
    Interval K;           // f^p : K -> G' affine onto
    Interval D;           // f^p : D -> G affine onto, x in D
    Rational witness;     // x = splitting point in G
    unsigned period = 0;  // p
};

namespace detail {

// Maximal t-range inside `gap` around x with g(t) never entering a forbidden
// inner interval (the inner intervals other than the gap's two neighbors).
inline Interval compute_domain_T(const PLMap& g, const NestedPair& pair, std::size_t gap_index,
                                 const Rational& x) {
    const Gap& gp = pair.gaps[gap_index];
    std::vector<Interval> forbidden;
    for (std::size_t i = 0; i < pair.inner.q; ++i)
        if (i != gp.left_inner && i != gp.right_inner) forbidden.push_back(pair.inner.intervals[i]);
    std::sort(forbidden.begin(), forbidden.end());

    // first t in (from, cap] (walking right) with g(t) on a forbidden boundary
    auto walk = [&](bool rightward, const Rational& limit) {
        Rational cur = x;
        while (true) {
            std::size_t p = g.find_piece(cur);
            if (!rightward && g.breakpoints()[p] == cur && p > 0) --p;
            Rational edge = rightward ? g.breakpoints()[p + 1] : g.breakpoints()[p];
            Rational stop = rightward ? (edge < limit ? edge : limit) : (edge > limit ? edge : limit);
            // affine on [min(cur,stop), max(cur,stop)]: g(t) = gv + s (t - cur)
            Rational s = g.slope(p);
            Rational gv = eval(g, cur);
            Rational gstop = gv + s * (stop - cur);
            Rational vlo = gv < gstop ? gv : gstop;
            Rational vhi = gv < gstop ? gstop : gv;
            // earliest crossing into a forbidden interval
            std::optional<Rational> hit;
            for (const Interval& fb : forbidden) {
                if (fb.hi < vlo || vhi < fb.lo) continue;
                // g enters [fb.lo, fb.hi]; first entry going from cur to stop
                for (const Rational& b : {fb.lo, fb.hi}) {
                    if (b < vlo || vhi < b) continue;
                    Rational t = cur + (b - gv) / s;
                    bool forward = rightward ? t >= cur : t <= cur;
                    if (!forward) continue;
                    // entry only counts if just past t the value is inside
                    if (!hit || (rightward ? t < *hit : t > *hit)) {
                        // value side check: immediately past t, is g inside fb?
                        // with g affine, inside iff moving toward the interval
                        Rational dir = rightward ? s : Rational(-s);
                        bool entering = (b == fb.lo && dir > 0) || (b == fb.hi && dir < 0) ||
                                        fb.contains(gv); // started inside (x never is)
                        if (entering) hit = t;
                    }
                }
                // starting strictly inside a forbidden interval cannot happen:
                // g(x) = x lies in the gap
            }
            if (hit) return *hit;
            if (stop == limit) return limit;
            cur = stop;
        }
    };
    Rational hi = walk(true, gp.interval.hi);
    Rational lo = walk(false, gp.interval.lo);
    return Interval(lo, hi);
}

// Affine sub-pieces of g restricted to T, as (domain, value at left, value at right).
struct AffineBit {
    Interval dom;
    Rational vl, vr;
};

inline std::vector<AffineBit> affine_bits(const PLMap& g, const Interval& T) {
    std::vector<Rational> cuts{T.lo};
    const auto& xs = g.breakpoints();
    auto it = std::upper_bound(xs.begin(), xs.end(), T.lo);
    for (; it != xs.end() && *it < T.hi; ++it) cuts.push_back(*it);
    cuts.push_back(T.hi);
    std::vector<AffineBit> bits;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        bits.push_back({Interval(cuts[i], cuts[i + 1]), eval(g, cuts[i]), eval(g, cuts[i + 1])});
    return bits;
}

} // namespace detail

// Claim 1 witness objects: the maximal domain T in the gap, the onto-affine
// branch K over another gap G' of the same outer interval, and the
// onto-affine branch D over G itself containing the witness point.
inline GapTransition gap_transition(const PLMap& f, const NestedPair& pair, std::size_t gap_index,
                                    const Splitting& splitting, const SearchBudgets& budgets = {}) {
    check_expansion_hypotheses(f, pair, budgets);
    if (gap_index >= pair.gaps.size()) fail(Errc::precondition, "gap index out of range");
    const Gap& gp = pair.gaps[gap_index];

    // witness = splitting point in this gap
    std::optional<Rational> wx;
    for (std::size_t t = 0; t < splitting.points.size(); ++t)
        if (splitting.gap_of[t] == gap_index) wx = splitting.points[t];
    if (!wx) fail(Errc::precondition, "splitting holds no point in gap " + std::to_string(gap_index));
    unsigned p = 0;
    for (const auto& ob : splitting.orbits)
        for (const Rational& pt : ob.points)
            if (pt == *wx) p = ob.period;
    if (p == 0) fail(Errc::precondition, "witness point is not on a splitting orbit");

    PLMap g = iterate(f, p, budgets.pieces);
    GapTransition tr;
    tr.gap_index = gap_index;
    tr.source_gap = gp.interval;
    tr.witness = *wx;
    tr.period = p;
    tr.T = detail::compute_domain_T(g, pair, gap_index, *wx);

    auto bits = detail::affine_bits(g, tr.T);

    // candidate target gaps in the same outer interval, adjacency first
    std::vector<std::size_t> order;
    for (std::size_t gi = 0; gi < pair.gaps.size(); ++gi) {
        if (gi == gap_index || pair.gaps[gi].outer_index != gp.outer_index) continue;
        if (pair.gaps[gi].right_inner == gp.left_inner || pair.gaps[gi].left_inner == gp.right_inner)
            order.push_back(gi);
    }
    for (std::size_t gi = 0; gi < pair.gaps.size(); ++gi) {
        if (gi == gap_index || pair.gaps[gi].outer_index != gp.outer_index) continue;
        if (std::find(order.begin(), order.end(), gi) == order.end()) order.push_back(gi);
    }
    if (order.empty())
        fail(Errc::construction_failed, "no other gap in the same outer interval");

    bool found_k = false;
    for (std::size_t gi : order) {
        const Interval& gprime = pair.gaps[gi].interval;
        for (const auto& bit : bits) {
            Rational vlo = bit.vl < bit.vr ? bit.vl : bit.vr;
            Rational vhi = bit.vl < bit.vr ? bit.vr : bit.vl;
            if (!(vlo <= gprime.lo && gprime.hi <= vhi)) continue; // must cover G' entirely
            Rational s = (bit.vr - bit.vl) / bit.dom.length();
            Rational t1 = bit.dom.lo + (gprime.lo - bit.vl) / s;
            Rational t2 = bit.dom.lo + (gprime.hi - bit.vl) / s;
            tr.K = Interval(t1 < t2 ? t1 : t2, t1 < t2 ? t2 : t1);
            tr.target_gap = gprime;
            found_k = true;
            break;
        }
        if (found_k) break;
    }
    if (!found_k)
        fail(Errc::construction_failed,
             "no affine branch of f^p over T covers another gap (budget gap or counterexample)");

    // D: affine branch containing the witness and covering G
    bool found_d = false;
    for (const auto& bit : bits) {
        if (!(bit.dom.lo <= *wx && *wx <= bit.dom.hi)) continue;
        Rational vlo = bit.vl < bit.vr ? bit.vl : bit.vr;
        Rational vhi = bit.vl < bit.vr ? bit.vr : bit.vl;
        if (!(vlo <= gp.interval.lo && gp.interval.hi <= vhi)) continue;
        Rational s = (bit.vr - bit.vl) / bit.dom.length();
        Rational t1 = bit.dom.lo + (gp.interval.lo - bit.vl) / s;
        Rational t2 = bit.dom.lo + (gp.interval.hi - bit.vl) / s;
        tr.D = Interval(t1 < t2 ? t1 : t2, t1 < t2 ? t2 : t1);
        found_d = true;
        break;
    }
    if (!found_d)
        fail(Errc::construction_failed,
             "no affine branch of f^p over T maps onto G around the witness");

    // |Df^p(x)| = |G| / |D| must hold exactly
    Rational mult(1);
    Rational t = *wx;
    for (unsigned k = 0; k < p; ++k) {
        mult *= abs_of(slope_at_noncorner(f, t));
        t = eval(f, t);
    }
    if (mult * tr.D.length() != tr.source_gap.length())
        fail(Errc::construction_failed, "|Df^p(x)| != |G|/|D|: exact re-evaluation disagrees");
    return tr;
}

struct ExpansionCertificate {
    PeriodicOrbit witness;        // the whole orbit; witness_point is its splitting point
    Rational witness_point;
    std::size_t gap_index = 0;
    Multiplier mult;
    Rational variation_mantissa;  // rho, V = log rho
    Rational threshold_mantissa;  // e^{-11V} = rho^{-11}
    Rational margin_fraction;     // (m - 1) rho^11 - 1, >= 0 iff the bound holds
    bool margin_ok = false;
    HypothesisNote note;
};

// Scans the splitting points in ascending order and returns the first one
// whose exact multiplier passes (m - 1) rho^11 >= 1, i.e. m >= 1 + e^{-11V}.
// If none passes, the best candidate is returned with margin_ok = false: an
// anomaly report, never a silent failure.
inline ExpansionCertificate expansion_witness(const PLMap& f, const NestedPair& pair,
                                              const Splitting& splitting,
                                              const SearchBudgets& budgets = {}) {
    HypothesisNote note = check_expansion_hypotheses(f, pair, budgets);
    if (splitting.points.empty()) fail(Errc::precondition, "empty splitting");

    Rational rho = variation(f).mantissa;
    Rational rho11 = pow_ui(rho, 11);

    std::optional<ExpansionCertificate> best;
    for (std::size_t i = 0; i < splitting.points.size(); ++i) {
        const Rational& x = splitting.points[i];
        if (f.is_corner(x)) fail(Errc::corner_on_splitting_point, "corner at " + to_string(x));
        const PeriodicOrbit* orbit = nullptr;
        for (const auto& ob : splitting.orbits)
            if (std::find(ob.points.begin(), ob.points.end(), x) != ob.points.end()) orbit = &ob;
        if (!orbit) fail(Errc::precondition, "splitting point missing from its orbits");

        ExpansionCertificate cert;
        cert.witness = *orbit;
        cert.witness_point = x;
        cert.gap_index = splitting.gap_of[i];
        cert.mult = multiplier(f, *orbit);
        cert.variation_mantissa = rho;
        cert.threshold_mantissa = Rational(1 / rho11);
        cert.margin_fraction = (cert.mult.log_abs.mantissa - 1) * rho11 - 1;
        cert.margin_ok = cert.margin_fraction >= 0;
        cert.note = note;
        if (cert.margin_ok) return cert;
        if (!best || cert.margin_fraction > best->margin_fraction) best = cert;
    }
    return *best;
}

// Independent re-verification of a certificate from scratch: the orbit is
// re-walked with eval, the multiplier is rebuilt from one-sided slopes, the
// variation is recomputed, and the rational inequality is re-decided.
inline bool reverify_expansion(const PLMap& f, const ExpansionCertificate& cert) {
    Rational t = cert.witness_point;
    Rational m(1);
    for (unsigned k = 0; k < cert.witness.period; ++k) {
        Rational sl = t == 0 ? slope_at(f, t, Side::Right) : slope_at(f, t, Side::Left);
        Rational sr = t == 1 ? slope_at(f, t, Side::Left) : slope_at(f, t, Side::Right);
        if (sl != sr) return false;
        m *= abs_of(sr);
        t = eval(f, t);
    }
    if (t != cert.witness_point) return false; // not periodic with the claimed period
    if (m != cert.mult.log_abs.mantissa) return false;
    Rational rho = variation(f).mantissa;
    if (rho != cert.variation_mantissa) return false;
    Rational margin = (m - 1) * pow_ui(rho, 11) - 1;
    return (margin >= 0) == cert.margin_ok && margin == cert.margin_fraction;
}

// ---------------------------------------------------------------------------
// Claim 2 check: intersection multiplicity and variation along T
// ---------------------------------------------------------------------------

struct MultiplicityReport {
    Interval T;
    std::vector<Interval> t_orbit; // T, f(T), ..., f^{p-1}(T)
    unsigned w = 0;
    bool w_ok = false;             // w <= 11
    LogValue var_T;                // variation of log|Df^p| restricted to T
    bool var_ok = false;           // var_T <= 11 V, exact mantissa comparison
    Rational variation_mantissa;   // rho
    unsigned period = 0;
};

// Verifies the claim-2 bounds for the witness gap.  The corners must lie in
// the inner union; unlike the full transition this check also applies to
// doubling pairs (T needs no claim-1 input).
inline MultiplicityReport claim2_multiplicity_check(const PLMap& f, const NestedPair& pair,
                                                    std::size_t gap_index, const Splitting& splitting,
                                                    const SearchBudgets& budgets = {}) {
    if (!detail::corners_inside_union(f, pair.inner))
        fail(Errc::hypothesis_not_met, "corners escape the inner union");
    if (gap_index >= pair.gaps.size()) fail(Errc::precondition, "gap index out of range");

    std::optional<Rational> wx;
    for (std::size_t t = 0; t < splitting.points.size(); ++t)
        if (splitting.gap_of[t] == gap_index) wx = splitting.points[t];
    if (!wx) fail(Errc::precondition, "splitting holds no point in gap " + std::to_string(gap_index));
    unsigned p = 0;
    for (const auto& ob : splitting.orbits)
        for (const Rational& pt : ob.points)
            if (pt == *wx) p = ob.period;

    PLMap g = iterate(f, p, budgets.pieces);
    MultiplicityReport rep;
    rep.period = p;
    rep.T = detail::compute_domain_T(g, pair, gap_index, *wx);
    rep.t_orbit.push_back(rep.T);
    for (unsigned k = 1; k < p; ++k) rep.t_orbit.push_back(image_of(f, rep.t_orbit.back()));
    rep.w = intersection_multiplicity(rep.t_orbit);
    rep.w_ok = rep.w <= 11;

    // variation of log|Dg| over int T: jumps at the g-breakpoints inside
    const auto& xs = g.breakpoints();
    auto it = std::upper_bound(xs.begin(), xs.end(), rep.T.lo);
    for (; it != xs.end() && *it < rep.T.hi; ++it) {
        std::size_t i = static_cast<std::size_t>(it - xs.begin());
        Rational ratio = abs_of(g.slope(i)) / abs_of(g.slope(i - 1));
        rep.var_T += LogValue(ratio).abs();
    }
    rep.variation_mantissa = variation(f).mantissa;
    rep.var_ok = rep.var_T.mantissa <= pow_ui(rep.variation_mantissa, 11);
    return rep;
}

// ---------------------------------------------------------------------------
// Ledger
// ---------------------------------------------------------------------------

struct LedgerLevel {
    unsigned q = 0;
    std::optional<LogValue> beta_value;
    std::string beta_error;
    std::optional<Claim5Result> claim5;
    Rational claim5_point;
    std::string claim5_error;
};

struct LedgerPair {
    std::optional<LogValue> mu_value;
    std::string mu_error;
    std::optional<Claim3Result> claim3;
    std::string claim3_error;
};

struct LedgerReport {
    std::vector<LedgerLevel> levels;
    std::vector<LedgerPair> pair_entries;
    std::vector<ScanViolation> scan;
    unsigned scan_period = 0;
    RenormBound renorm;
    bool mu_all_positive = false;
    bool beta_strictly_increasing = false; // asserted when all mu mantissas > 1
    bool all_claims_ok = false;
};

// Assembles beta/mu per level, claim 3 per consecutive pair, the multiplier
// scan, claim 5 at the left endpoint of each level's 0-interval, and the
// renormalization bound.  Component failures are recorded per level without
// aborting the others.
inline LedgerReport ledger(const PLMap& f, const RenormTower& tower, unsigned scan_period = 4,
                           const SearchBudgets& budgets = {}) {
    if (tower.depth() < 1)
        fail(Errc::hypothesis_not_met, "ledger needs tower depth >= 1");

    LedgerReport rep;
    rep.scan_period = scan_period;
    for (std::size_t lvl = 0; lvl < tower.cycles.size(); ++lvl) {
        LedgerLevel L;
        L.q = tower.cycles[lvl].q;
        try {
            L.beta_value = beta(f, tower.cycles[lvl]);
        } catch (const Error& e) {
            L.beta_error = e.what();
        }
        L.claim5_point = tower.cycles[lvl].intervals[0].lo;
        try {
            L.claim5 = claim5_identity(f, tower, static_cast<unsigned>(lvl + 1), L.claim5_point);
        } catch (const Error& e) {
            L.claim5_error = e.what();
        }
        rep.levels.push_back(std::move(L));
    }
    for (std::size_t i = 0; i < tower.pairs.size(); ++i) {
        LedgerPair P;
        if (tower.splitting_found[i]) {
            try {
                P.mu_value = mu(f, tower.splittings[i]);
            } catch (const Error& e) {
                P.mu_error = e.what();
            }
        } else {
            P.mu_error = "no splitting attached";
        }
        try {
            P.claim3 = verify_claim3(f, tower, static_cast<unsigned>(i + 1));
        } catch (const Error& e) {
            P.claim3_error = e.what();
        }
        rep.pair_entries.push_back(std::move(P));
    }
    rep.scan = multiplier_scan(f, tower, scan_period, budgets);
    rep.renorm = renorm_derivative_bound(tower, budgets);

    rep.mu_all_positive = true;
    for (const auto& P : rep.pair_entries)
        if (!P.mu_value || P.mu_value->sign() <= 0) rep.mu_all_positive = false;
    if (rep.mu_all_positive) {
        rep.beta_strictly_increasing = true;
        for (std::size_t i = 0; i + 1 < rep.levels.size(); ++i) {
            if (!rep.levels[i].beta_value || !rep.levels[i + 1].beta_value ||
                !(rep.levels[i].beta_value->mantissa < rep.levels[i + 1].beta_value->mantissa))
                rep.beta_strictly_increasing = false;
        }
    }

    rep.all_claims_ok = rep.scan.empty() && rep.mu_all_positive;
    for (const auto& P : rep.pair_entries)
        if (!P.claim3 || !P.claim3->ok) rep.all_claims_ok = false;
    for (const auto& L : rep.levels)
        if (!L.claim5 || !L.claim5->ok || !L.beta_value) rep.all_claims_ok = false;
    return rep;
}

} // namespace plr
