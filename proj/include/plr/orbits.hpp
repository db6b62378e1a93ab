#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "plr/plmap.hpp"

namespace plr {

// Maximal interval of points fixed by the relevant iterate (a slope-1 piece
// lying on the diagonal).  Reported, never silently dropped.
struct FixedSegment {
    Interval interval;
};

// Orbit in dynamical order, canonicalized to start at its smallest point.
struct PeriodicOrbit {
    std::vector<Rational> points;
    unsigned period = 0;

    const Rational& base() const { return points.front(); }

    friend bool operator<(const PeriodicOrbit& a, const PeriodicOrbit& b) {
        if (a.base() != b.base()) return a.base() < b.base();
        return a.period < b.period;
    }
    friend bool operator==(const PeriodicOrbit& a, const PeriodicOrbit& b) {
        return a.period == b.period && a.points == b.points;
    }
};

struct Multiplier {
    LogValue log_abs;   // mantissa = product of |slopes| along the orbit
    int sign = 1;       // product of slope signs
};

// sigma_j per corner index j, as in the claim-5 sign rule.
struct SigmaVector {
    std::vector<std::pair<std::size_t, int>> signs;
};

// All solutions of f(x) = x: isolated points plus diagonal segments.
// Points falling inside a reported segment are attributed to the segment.
inline std::pair<std::vector<Rational>, std::vector<FixedSegment>> fixed_points(const PLMap& f) {
    std::vector<Rational> pts;
    std::vector<FixedSegment> segs;
    const auto& xs = f.breakpoints();
    const auto& ys = f.values();
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        Rational s = f.slope(i);
        if (s == 1) {
            if (ys[i] == xs[i]) {
                if (!segs.empty() && segs.back().interval.hi == xs[i])
                    segs.back().interval = Interval(segs.back().interval.lo, xs[i + 1]);
                else
                    segs.push_back(FixedSegment{Interval(xs[i], xs[i + 1])});
            }
            continue;
        }
        // y = ys[i] + s (x - xs[i]) = x  =>  x = (ys[i] - s xs[i]) / (1 - s)
        Rational x = (ys[i] - s * xs[i]) / (1 - s);
        if (xs[i] <= x && x <= xs[i + 1]) pts.push_back(std::move(x));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [&](const Rational& p) {
                                 for (const auto& sgm : segs)
                                     if (sgm.interval.contains(p)) return true;
                                 return false;
                             }),
              pts.end());
    return {std::move(pts), std::move(segs)};
}

inline std::vector<Rational> orbit_of(const PLMap& f, const Rational& x, unsigned n) {
    if (x < 0 || x > 1) fail(Errc::domain_violation, "orbit start outside [0,1]");
    std::vector<Rational> out{x};
    out.reserve(n + 1);
    for (unsigned k = 0; k < n; ++k) out.push_back(eval(f, out.back()));
    return out;
}

// All orbits of minimal period exactly p, plus the fixed segments of f^p.
inline std::pair<std::vector<PeriodicOrbit>, std::vector<FixedSegment>>
periodic_points(const PLMap& f, unsigned p, std::uint64_t piece_budget = 1'000'000) {
    if (p < 1) fail(Errc::precondition, "period must be >= 1");
    PLMap g = iterate(f, p, piece_budget);
    auto [pts, segs] = fixed_points(g);
    std::set<std::vector<Rational>> seen;
    std::vector<PeriodicOrbit> orbits;
    for (const Rational& x : pts) {
        std::vector<Rational> traj = orbit_of(f, x, p);
        unsigned first_return = 0;
        for (unsigned t = 1; t <= p; ++t)
            if (traj[t] == x) {
                first_return = t;
                break;
            }
        if (first_return != p) continue; // lower minimal period
        std::vector<Rational> pointset(traj.begin(), traj.begin() + p);
        std::size_t mi = static_cast<std::size_t>(
            std::min_element(pointset.begin(), pointset.end()) - pointset.begin());
        std::rotate(pointset.begin(), pointset.begin() + static_cast<std::ptrdiff_t>(mi), pointset.end());
        if (seen.insert(pointset).second)
            orbits.push_back(PeriodicOrbit{std::move(pointset), p});
    }
    std::sort(orbits.begin(), orbits.end());
    return {std::move(orbits), std::move(segs)};
}

// Chain-rule multiplier along the orbit; exact.  Fails if any orbit point is
// a corner of f (the caller may fall back to one-sided slopes via slope_at).
inline Multiplier multiplier(const PLMap& f, const PeriodicOrbit& orbit) {
    Multiplier m;
    for (const Rational& x : orbit.points) {
        Rational s = slope_at_noncorner(f, x); // throws OrbitThroughCorner
        m.log_abs += LogValue(abs_of(s));
        if (s < 0) m.sign = -m.sign;
    }
    return m;
}

// sigma signs of x relative to the corners, with the cycle given as its
// interval list in dynamical order (x must lie in interval 0).  Each cycle
// interval may contain at most one corner.
inline SigmaVector sigma_signs_in(const PLMap& f, const std::vector<Interval>& cycle, const Rational& x) {
    if (!cycle.front().contains(x))
        fail(Errc::point_outside_cycle, to_string(x) + " not in interval 0 of the cycle");
    auto cs = corners(f);
    std::vector<int> count(cycle.size(), 0);
    std::vector<std::size_t> corner_interval(cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j) {
        bool found = false;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            if (cycle[k].contains(cs[j].location)) {
                if (++count[k] > 1)
                    fail(Errc::multiple_corners_in_interval,
                         "cycle interval " + std::to_string(k) + " holds several corners");
                corner_interval[j] = k;
                found = true;
                break;
            }
        if (!found)
            fail(Errc::hypothesis_not_met,
                 "corner " + to_string(cs[j].location) + " lies outside the cycle union");
    }
    unsigned max_k = 0;
    for (std::size_t j = 0; j < cs.size(); ++j)
        max_k = std::max<unsigned>(max_k, static_cast<unsigned>(corner_interval[j]));
    std::vector<Rational> traj = orbit_of(f, x, max_k);
    SigmaVector sv;
    for (std::size_t j = 0; j < cs.size(); ++j) {
        const Rational& y = traj[corner_interval[j]];
        if (y == cs[j].location)
            fail(Errc::iterate_hits_corner, "iterate lands on corner " + to_string(y));
        sv.signs.emplace_back(j, y > cs[j].location ? 1 : -1);
    }
    return sv;
}

} // namespace plr
