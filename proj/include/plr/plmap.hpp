#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plr/error.hpp"
#include "plr/logvalue.hpp"
#include "plr/rational.hpp"

namespace plr {

enum class Side { Left, Right };

// A breakpoint where the signed slope changes.  v is the jump of log|Df|
// across the corner, stored exactly as log(|slope_right| / |slope_left|).
struct Corner {
    Rational location;
    Rational slope_left;
    Rational slope_right;
    LogValue v;
};

// Continuous piecewise-affine self-map of [0,1] with exact rational
// breakpoints and values.  Invariants enforced at construction:
//   - breakpoints strictly increasing, first = 0, last = 1
//   - values in [0,1]
//   - no piece has slope 0
//   - collinear consecutive pieces are merged, so every interior breakpoint
//     is a genuine corner
class PLMap {
public:
    const std::vector<Rational>& breakpoints() const { return xs_; }
    const std::vector<Rational>& values() const { return ys_; }

    std::size_t piece_count() const { return xs_.size() - 1; }

    Rational slope(std::size_t piece) const {
        return (ys_[piece + 1] - ys_[piece]) / (xs_[piece + 1] - xs_[piece]);
    }

    Interval piece_domain(std::size_t piece) const { return Interval(xs_[piece], xs_[piece + 1]); }

    // Largest piece index i with xs_[i] <= x (x in [0,1]).
    std::size_t find_piece(const Rational& x) const {
        auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        std::size_t i = static_cast<std::size_t>(it - xs_.begin());
        if (i > 0) --i;
        if (i >= piece_count()) i = piece_count() - 1;
        return i;
    }

    bool is_breakpoint(const Rational& x) const {
        return std::binary_search(xs_.begin(), xs_.end(), x);
    }

    // Interior breakpoint test; after collinear merge every interior
    // breakpoint is a corner.
    bool is_corner(const Rational& x) const {
        return x != xs_.front() && x != xs_.back() && is_breakpoint(x);
    }

    friend bool operator==(const PLMap& a, const PLMap& b) { return a.xs_ == b.xs_ && a.ys_ == b.ys_; }

    friend PLMap make_plmap(std::vector<Rational> breakpoints, std::vector<Rational> values);

private:
    PLMap(std::vector<Rational> xs, std::vector<Rational> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {}

    std::vector<Rational> xs_;
    std::vector<Rational> ys_;
};

inline PLMap make_plmap(std::vector<Rational> breakpoints, std::vector<Rational> values) {
    if (breakpoints.size() != values.size() || breakpoints.size() < 2)
        fail(Errc::non_monotone_breakpoints, "need equally long lists with at least two entries");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
        fail(Errc::non_monotone_breakpoints, "breakpoints must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            fail(Errc::non_monotone_breakpoints, "breakpoints must be strictly increasing");
    for (const Rational& y : values)
        if (y < 0 || y > 1) fail(Errc::range_violation, "value " + to_string(y) + " outside [0,1]");

    // Merge collinear pieces so that interior breakpoints are true corners.
    std::vector<Rational> xs{breakpoints.front()};
    std::vector<Rational> ys{values.front()};
    std::optional<Rational> prev_slope;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Rational s = (values[i + 1] - values[i]) / (breakpoints[i + 1] - breakpoints[i]);
        if (s == 0) fail(Errc::zero_slope_piece, "piece " + std::to_string(i) + " has slope 0");
        if (prev_slope && *prev_slope == s) {
            xs.back() = breakpoints[i + 1];
            ys.back() = values[i + 1];
        } else {
            xs.push_back(breakpoints[i + 1]);
            ys.push_back(values[i + 1]);
        }
        prev_slope = s;
    }
    return PLMap(std::move(xs), std::move(ys));
}

inline Rational eval(const PLMap& f, const Rational& x) {
    if (x < 0 || x > 1) fail(Errc::domain_violation, "eval at " + to_string(x) + " outside [0,1]");
    std::size_t i = f.find_piece(x);
    const auto& xs = f.breakpoints();
    const auto& ys = f.values();
    return ys[i] + f.slope(i) * (x - xs[i]);
}

inline Rational slope_at(const PLMap& f, const Rational& x, Side side) {
    if (x < 0 || x > 1) fail(Errc::domain_violation, "slope_at outside [0,1]");
    if (side == Side::Right && x == 1) fail(Errc::domain_violation, "no right slope at 1");
    if (side == Side::Left && x == 0) fail(Errc::domain_violation, "no left slope at 0");
    const auto& xs = f.breakpoints();
    std::size_t i = f.find_piece(x);
    if (side == Side::Left && x == xs[i]) --i;
    return f.slope(i);
}

// Signed slope at a point that is not a corner (both one-sided slopes agree).
inline Rational slope_at_noncorner(const PLMap& f, const Rational& x) {
    if (f.is_corner(x)) fail(Errc::orbit_through_corner, "slope requested at corner " + to_string(x));
    return slope_at(f, x, x == 1 ? Side::Left : Side::Right);
}

inline std::vector<Corner> corners(const PLMap& f) {
    std::vector<Corner> out;
    const auto& xs = f.breakpoints();
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        Rational sl = f.slope(i - 1);
        Rational sr = f.slope(i);
        out.push_back(Corner{xs[i], sl, sr, LogValue(abs_of(sr) / abs_of(sl))});
    }
    return out;
}

// Total variation of log|Df|: product over corners of max(rho, 1/rho) with
// rho = |slope_right|/|slope_left|.  Mantissa >= 1 always.
inline LogValue variation(const PLMap& f) {
    LogValue v;
    for (const Corner& c : corners(f)) v += c.v.abs();
    return v;
}

// Exact image f([iv.lo, iv.hi]): hull of the values at the endpoints and at
// the breakpoints strictly inside.
inline Interval image_of(const PLMap& f, const Interval& iv) {
    Rational lo = eval(f, iv.lo), hi = lo;
    auto take = [&](const Rational& y) {
        if (y < lo) lo = y;
        if (y > hi) hi = y;
    };
    take(eval(f, iv.hi));
    const auto& xs = f.breakpoints();
    auto it = std::upper_bound(xs.begin(), xs.end(), iv.lo);
    for (; it != xs.end() && *it < iv.hi; ++it) take(f.values()[static_cast<std::size_t>(it - xs.begin())]);
    return Interval(lo, hi);
}

// h(x) = f(g(x)); pieces are the pieces of g subdivided at the g-preimages of
// the breakpoints of f, then collinear-merged.
inline PLMap compose(const PLMap& f, const PLMap& g, std::uint64_t piece_budget) {
    std::vector<Rational> cuts = g.breakpoints();
    const auto& fxs = f.breakpoints();
    std::vector<Rational> extra;
    for (std::size_t p = 0; p < g.piece_count(); ++p) {
        const Rational& a = g.breakpoints()[p];
        const Rational& b = g.breakpoints()[p + 1];
        Rational ga = g.values()[p], gb = g.values()[p + 1];
        Rational s = g.slope(p);
        Rational vlo = ga < gb ? ga : gb;
        Rational vhi = ga < gb ? gb : ga;
        auto it = std::upper_bound(fxs.begin(), fxs.end(), vlo);
        for (; it != fxs.end() && *it < vhi; ++it) {
            Rational x = a + (*it - ga) / s;
            if (a < x && x < b) extra.push_back(std::move(x));
        }
    }
    cuts.insert(cuts.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.size() - 1 > piece_budget)
        fail(Errc::piece_budget_exceeded,
             std::to_string(cuts.size() - 1) + " pieces exceed budget " + std::to_string(piece_budget));
    std::vector<Rational> vals;
    vals.reserve(cuts.size());
    for (const Rational& x : cuts) {
        Rational y = eval(f, eval(g, x));
        check_bits(y);
        vals.push_back(std::move(y));
    }
    return make_plmap(std::move(cuts), std::move(vals));
}

// Explicit piecewise-affine representation of f^n.
inline PLMap iterate(const PLMap& f, unsigned n, std::uint64_t piece_budget = 1'000'000) {
    if (n < 1) fail(Errc::precondition, "iterate needs n >= 1");
    if (f.piece_count() > piece_budget)
        fail(Errc::piece_budget_exceeded, "map exceeds piece budget");
    PLMap g = f;
    for (unsigned k = 1; k < n; ++k) g = compose(f, g, piece_budget);
    return g;
}

enum class Orientation { Preserve, Flip };

// Affine conjugate h . g . h^{-1} on [0,1], where h is the affine bijection
// J -> [0,1] (orientation-preserving or flipping).  Requires g(J) inside J.
inline PLMap restrict_rescale(const PLMap& g, const Interval& J, Orientation orientation) {
    if (J.degenerate()) fail(Errc::degenerate_interval, "cannot rescale a degenerate interval");
    Interval img = image_of(g, J);
    if (!(J.lo <= img.lo && img.hi <= J.hi))
        fail(Errc::not_invariant, "image " + to_string(img) + " escapes " + to_string(J));

    std::vector<Rational> cuts{J.lo};
    const auto& xs = g.breakpoints();
    auto it = std::upper_bound(xs.begin(), xs.end(), J.lo);
    for (; it != xs.end() && *it < J.hi; ++it) cuts.push_back(*it);
    cuts.push_back(J.hi);

    Rational len = J.length();
    auto h = [&](const Rational& t) {
        return orientation == Orientation::Preserve ? Rational((t - J.lo) / len) : Rational((J.hi - t) / len);
    };
    std::vector<Rational> bs, vs;
    bs.reserve(cuts.size());
    vs.reserve(cuts.size());
    if (orientation == Orientation::Preserve) {
        for (const Rational& t : cuts) {
            bs.push_back(h(t));
            vs.push_back(h(eval(g, t)));
        }
    } else {
        for (auto rit = cuts.rbegin(); rit != cuts.rend(); ++rit) {
            bs.push_back(h(*rit));
            vs.push_back(h(eval(g, *rit)));
        }
    }
    return make_plmap(std::move(bs), std::move(vs));
}

inline std::string to_string(const PLMap& f) {
    std::string s = "PL{";
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
        if (i) s += ", ";
        s += "(" + to_string(f.breakpoints()[i]) + ", " + to_string(f.values()[i]) + ")";
    }
    return s + "}";
}

} // namespace plr
