#pragma once

#include "plr/plmap.hpp"

namespace plr {

// tent(s): peak s/2 at x = 1/2, slopes +s and -s.  Valid self-map for s in (0, 2].
inline PLMap tent_map(const Rational& s) {
    if (s <= 0 || s > 2) fail(Errc::precondition, "tent slope must be in (0, 2]");
    return make_plmap({Rational(0), make_rational(1, 2), Rational(1)},
                      {Rational(0), Rational(s / 2), Rational(0)});
}

inline PLMap identity_map() {
    return make_plmap({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
}

// Three-piece bimodal map with corners at 1/3 and 2/3; the two interior
// values are the family parameters, the endpoint values come from the
// template.  This is the hunting ground for non-doubling nested pairs.
inline PLMap twocorner_map(const Rational& y1, const Rational& y2,
                           const Rational& v0 = make_rational(1, 10),
                           const Rational& v3 = make_rational(7, 30)) {
    return make_plmap({Rational(0), make_rational(1, 3), make_rational(2, 3), Rational(1)},
                      {v0, y1, y2, v3});
}

} // namespace plr
