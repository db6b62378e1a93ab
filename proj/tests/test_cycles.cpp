#include <doctest.h>

#include "plr/cycles.hpp"
#include "plr/families.hpp"

using namespace plr;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
} // namespace

TEST_CASE("validate_cycle: tent(7/5) corner-orbit cycles") {
    PLMap f = tent_map(q(7, 5));

    Cycle c2 = validate_cycle(f, {Interval(q(21, 50), q(721, 1250)), Interval(q(147, 250), q(7, 10))});
    CHECK(c2.q == 2);
    CHECK(c2.intervals[0] == Interval(q(21, 50), q(721, 1250)));
    CHECK(c2.intervals[1] == Interval(q(147, 250), q(7, 10)));

    // order is normalized to dynamical order from the leftmost interval
    Cycle c2r = validate_cycle(f, {Interval(q(147, 250), q(7, 10)), Interval(q(21, 50), q(721, 1250))});
    CHECK(c2r.intervals == c2.intervals);

    Cycle c1 = validate_cycle(f, {Interval(q(21, 50), q(7, 10))});
    CHECK(c1.q == 1);

    CHECK_THROWS_WITH_AS(
        validate_cycle(tent_map(Rational(2)), {Interval(q(0), q(1, 4)), Interval(q(1, 4), q(1, 2))}),
        doctest::Contains("NotDisjoint"), Error);
    CHECK_THROWS_WITH_AS(validate_cycle(f, {Interval(q(0), q(1, 4))}),
                         doctest::Contains("NotInvariant"), Error);
    CHECK_THROWS_WITH_AS(validate_cycle(f, {Interval(q(1, 4), q(1, 4))}),
                         doctest::Contains("DegenerateInterval"), Error);
}

TEST_CASE("cycle image exactness") {
    PLMap f = tent_map(q(7, 5));
    Cycle c2 = validate_cycle(f, {Interval(q(21, 50), q(721, 1250)), Interval(q(147, 250), q(7, 10))});
    for (unsigned j = 0; j < c2.q; ++j) {
        Interval img = image_of(f, c2.intervals[j]);
        const Interval& next = c2.intervals[(j + 1) % c2.q];
        CHECK(next.lo <= img.lo);
        CHECK(img.hi <= next.hi);
    }
}

TEST_CASE("find_cycles") {
    PLMap f = tent_map(q(7, 5));

    auto cs2 = find_cycles(f, 2);
    REQUIRE(cs2.size() >= 1);
    bool has_canonical = false;
    for (const Cycle& c : cs2)
        if (c.intervals == std::vector<Interval>{Interval(q(21, 50), q(721, 1250)),
                                                 Interval(q(147, 250), q(7, 10))})
            has_canonical = true;
    CHECK(has_canonical);

    CHECK(find_cycles(tent_map(Rational(2)), 2).empty());

    auto cs1 = find_cycles(identity_map(), 1);
    REQUIRE(cs1.size() == 1);
    CHECK(cs1[0].intervals == std::vector<Interval>{Interval(q(0), q(1))});

    // [0,1] is always the maximal q=1 cycle
    auto r1 = find_cycles(f, 1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].intervals[0] == Interval(q(0), q(1)));
}

TEST_CASE("nest and gaps") {
    PLMap f = tent_map(q(7, 5));
    Cycle outer = validate_cycle(f, {Interval(q(0), q(1))});
    Cycle inner = validate_cycle(f, {Interval(q(21, 50), q(721, 1250)), Interval(q(147, 250), q(7, 10))});
    NestedPair pair = nest(f, outer, inner);
    CHECK(pair.ratio == 2);
    REQUIRE(pair.gaps.size() == 1);
    CHECK(pair.gaps[0].interval == Interval(q(721, 1250), q(147, 250)));
    CHECK(pair.gaps[0].left_inner == 0);
    CHECK(pair.gaps[0].right_inner == 1);
    CHECK(is_doubling(pair));

    CHECK_THROWS_WITH_AS(nest(f, outer, outer), doctest::Contains("NotNested"), Error);

    // gap count = outer.q * (a - 1)
    CHECK(pair.gaps.size() == pair.outer.q * (pair.ratio - 1));
}

TEST_CASE("nest rejects non-contained inner cycles") {
    PLMap f = tent_map(q(7, 5));
    Cycle outer = validate_cycle(f, {Interval(q(21, 50), q(721, 1250)), Interval(q(147, 250), q(7, 10))});
    Cycle inner = validate_cycle(f, {Interval(q(0), q(1))});
    CHECK_THROWS_WITH_AS(nest(f, outer, inner), doctest::Contains("NotNested"), Error);
}

TEST_CASE("find_splitting: tent(7/5) doubling pair") {
    PLMap f = tent_map(q(7, 5));
    Cycle outer = validate_cycle(f, {Interval(q(0), q(1))});
    Cycle inner = validate_cycle(f, {Interval(q(21, 50), q(721, 1250)), Interval(q(147, 250), q(7, 10))});
    NestedPair pair = nest(f, outer, inner);
    Splitting sp = find_splitting(f, pair, 1);
    REQUIRE(sp.points.size() == 1);
    CHECK(sp.points[0] == q(7, 12));
    CHECK(sp.orbits.size() == 1);
    CHECK(sp.orbits[0].period == 1);
}

TEST_CASE("splitting invariance: the point set maps onto itself") {
    PLMap f = twocorner_map(q(23, 30), q(1, 10));
    Cycle outer = validate_cycle(f, {Interval(q(0), q(1))});
    auto cs = find_cycles(f, 3);
    REQUIRE(!cs.empty());
    NestedPair pair = nest(f, outer, cs[0]);
    Splitting sp = find_splitting(f, pair, 2);
    REQUIRE(sp.points.size() == 2);
    std::set<Rational> pts(sp.points.begin(), sp.points.end());
    for (const Rational& x : pts) CHECK(pts.count(eval(f, x)) == 1);
}

TEST_CASE("find_splitting: NoSplittingFound error contract") {
    PLMap f = tent_map(q(7, 5));
    Cycle outer = validate_cycle(f, {Interval(q(0), q(1))});
    Cycle inner = validate_cycle(f, {Interval(q(21, 50), q(721, 1250)), Interval(q(147, 250), q(7, 10))});
    NestedPair pair = nest(f, outer, inner);
    // the only candidate orbit in the gap is the fixed point; exclude it with
    // a period cap of... there is none below 1, so fake it by asking for a
    // splitting of a pair whose gap holds no orbit of period <= max: use the
    // doubling pair but with max_period misused is impossible; instead build a
    // gapless scenario via the second-level pair of tent(19/16) and cap at 1.
    PLMap g = tent_map(q(19, 16));
    auto l2 = find_cycles(g, 2);
    auto l3 = find_cycles(g, 4);
    REQUIRE(!l2.empty());
    REQUIRE(!l3.empty());
    NestedPair p23 = nest(g, l2[0], l3[0]);
    CHECK_THROWS_WITH_AS(find_splitting(g, p23, 1), doctest::Contains("NoSplittingFound"), Error);
    (void)pair;
}

TEST_CASE("maximal_trapping") {
    PLMap f = tent_map(q(7, 5));
    Cycle c2 = validate_cycle(f, {Interval(q(21, 50), q(721, 1250)), Interval(q(147, 250), q(7, 10))});
    auto tr = maximal_trapping(f, c2);
    REQUIRE(tr.size() == 2);
    CHECK(tr[0] == Interval(q(5, 12), q(7, 12)));
    CHECK(tr[1] == Interval(q(7, 12), q(7, 10)));

    // identity whole-interval cycle stays [0,1]
    Cycle ci = validate_cycle(identity_map(), {Interval(q(0), q(1))});
    auto tri = maximal_trapping(identity_map(), ci);
    CHECK(tri[0] == Interval(q(0), q(1)));

    // an already-maximal cycle is unchanged
    Cycle whole = validate_cycle(f, {Interval(q(0), q(1))});
    CHECK(maximal_trapping(f, whole)[0] == Interval(q(0), q(1)));
}

TEST_CASE("renormalize: tent-square law") {
    PLMap f75 = tent_map(q(7, 5));
    Cycle c75 = validate_cycle(f75, {Interval(q(21, 50), q(721, 1250)), Interval(q(147, 250), q(7, 10))});
    PLMap r75 = renormalize(f75, c75, 0, RenormMode::MaximalTrapping, RenormOrientation::Flip);
    CHECK(r75 == tent_map(q(49, 25)));

    // Auto picks Flip here (orientation-reversing at the left endpoint)
    PLMap r75a = renormalize(f75, c75, 0, RenormMode::MaximalTrapping, RenormOrientation::Auto);
    CHECK(r75a == r75);

    PLMap f19 = tent_map(q(19, 16));
    auto cs19 = find_cycles(f19, 2);
    REQUIRE(!cs19.empty());
    PLMap r19 = renormalize(f19, cs19[0], 0, RenormMode::MaximalTrapping, RenormOrientation::Flip);
    CHECK(r19 == tent_map(q(361, 256)));

    // identity in Strict mode
    Cycle ci = validate_cycle(identity_map(), {Interval(q(0), q(1))});
    CHECK(renormalize(identity_map(), ci, 0, RenormMode::Strict, RenormOrientation::Preserve) ==
          identity_map());
}

TEST_CASE("tent-square law across the corpus") {
    for (auto [n, d] : {std::pair<long, long>{7, 5}, {19, 16}, {5, 4}, {41, 30}}) {
        Rational s = q(n, d);
        if (s * s > 2) continue;
        PLMap f = tent_map(s);
        auto cs = find_cycles(f, 2);
        REQUIRE(!cs.empty());
        PLMap r = renormalize(f, cs[0], 0, RenormMode::MaximalTrapping, RenormOrientation::Flip);
        CHECK(r == tent_map(Rational(s * s)));
    }
}

TEST_CASE("renormalization conjugacy: h(f^q(x)) = R(h(x)) on random points") {
    PLMap f = tent_map(q(7, 5));
    Cycle c2 = validate_cycle(f, {Interval(q(21, 50), q(721, 1250)), Interval(q(147, 250), q(7, 10))});
    Interval J = maximal_trapping(f, c2)[0];
    PLMap g = iterate(f, 2);
    PLMap R = renormalize(f, c2, 0, RenormMode::MaximalTrapping, RenormOrientation::Flip);
    Rational len = J.length();
    auto h = [&](const Rational& t) { return Rational((J.hi - t) / len); };
    for (int k = 0; k <= 50; ++k) {
        Rational x = J.lo + Rational(k) * len / 50;
        CHECK(h(eval(g, x)) == eval(R, h(x)));
    }
}

TEST_CASE("intersection_multiplicity") {
    CHECK(intersection_multiplicity({}) == 0);
    CHECK(intersection_multiplicity({Interval(q(0), q(1, 2)), Interval(q(1, 4), q(3, 4)),
                                     Interval(q(5, 8), q(1))}) == 2);
    CHECK(intersection_multiplicity({Interval(q(0), q(1)), Interval(q(0), q(1)), Interval(q(0), q(1))}) ==
          3);
    // touching endpoints count as a shared point
    CHECK(intersection_multiplicity({Interval(q(0), q(1, 2)), Interval(q(1, 2), q(1))}) == 2);
}

TEST_CASE("gap neighborhood spans at most three gaps") {
    PLMap f = tent_map(q(19, 16));
    auto l2 = find_cycles(f, 2);
    auto l3 = find_cycles(f, 4);
    REQUIRE(!l2.empty());
    REQUIRE(!l3.empty());
    NestedPair p23 = nest(f, l2[0], l3[0]);
    REQUIRE(p23.gaps.size() == 2);
    GapNeighborhood nb = gap_neighborhood(p23, 0);
    CHECK(nb.span.contains(p23.gaps[0].interval));
}
