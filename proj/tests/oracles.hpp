#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <set>

#include "plr/plmap.hpp"

namespace plr_oracles {

using plr::Interval;
using plr::PLMap;
using plr::Rational;

// Fixed points of f^p by branch-itinerary enumeration: a word w over the
// pieces of f carves out the x whose k-th iterate stays in piece w_k; on that
// set f^p is a single affine branch solved directly.  Never calls
// iterate/compose.
inline void itinerary_fixed_points_rec(const PLMap& f, unsigned depth, unsigned p,
                                       const Interval& dom, const Rational& slope,
                                       const Rational& off, std::set<Rational>& out) {
    if (dom.lo > dom.hi) return;
    if (depth == p) {
        if (slope == 1) {
            if (off == 0)
                for (const Rational& e : {dom.lo, dom.hi}) out.insert(e);
            return;
        }
        Rational x = off / (1 - slope);
        if (dom.lo <= x && x <= dom.hi) out.insert(x);
        return;
    }
    for (std::size_t piece = 0; piece < f.piece_count(); ++piece) {
        Interval pd = f.piece_domain(piece);
        Rational a, b;
        if (plr::sign(slope) > 0) {
            a = (pd.lo - off) / slope;
            b = (pd.hi - off) / slope;
        } else {
            a = (pd.hi - off) / slope;
            b = (pd.lo - off) / slope;
        }
        Rational lo = a > dom.lo ? a : dom.lo;
        Rational hi = b < dom.hi ? b : dom.hi;
        if (lo > hi) continue;
        Rational s = f.slope(piece);
        Rational ns = s * slope;
        Rational noff = s * (off - f.breakpoints()[piece]) + f.values()[piece];
        itinerary_fixed_points_rec(f, depth + 1, p, Interval(lo, hi), ns, noff, out);
    }
}

inline std::set<Rational> itinerary_fixed_points(const PLMap& f, unsigned p) {
    std::set<Rational> out;
    itinerary_fixed_points_rec(f, 0, p, Interval(Rational(0), Rational(1)), Rational(1), Rational(0),
                               out);
    return out;
}

// Exact tent-family depth: max { k : s^(2^k) <= 2 }, 0 if s^2 > 2.
inline unsigned tent_depth(const Rational& s) {
    unsigned k = 0;
    Rational p = s * s;
    while (p <= 2) {
        ++k;
        p = p * p;
    }
    return k;
}

} // namespace plr_oracles
