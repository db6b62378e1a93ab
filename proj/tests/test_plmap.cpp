#include <doctest.h>

#include <random>

#include "plr/families.hpp"
#include "plr/plmap.hpp"

using namespace plr;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// deterministic pseudo-random rationals in [0,1]
struct RatGen {
    std::mt19937 rng{12345};
    Rational next() {
        std::uniform_int_distribution<long> den(1, 64);
        long d = den(rng);
        std::uniform_int_distribution<long> num(0, d);
        return make_rational(num(rng), d);
    }
};

} // namespace

TEST_CASE("make_plmap validation") {
    CHECK_NOTHROW(tent_map(Rational(2)));
    CHECK(tent_map(Rational(2)).piece_count() == 2);

    // non-monotone breakpoints
    CHECK_THROWS_WITH_AS(make_plmap({q(0), q(1, 2), q(1, 3), q(1)}, {q(0), q(1, 2), q(1, 4), q(0)}),
                         doctest::Contains("NonMonotoneBreakpoints"), Error);
    // must start at 0, end at 1
    CHECK_THROWS_AS(make_plmap({q(1, 4), q(1)}, {q(0), q(1)}), Error);
    // zero slope
    CHECK_THROWS_WITH_AS(make_plmap({q(0), q(1, 2), q(1)}, {q(0), q(0), q(1)}),
                         doctest::Contains("ZeroSlopePiece"), Error);
    // range violation
    CHECK_THROWS_WITH_AS(make_plmap({q(0), q(1)}, {q(0), q(3, 2)}),
                         doctest::Contains("RangeViolation"), Error);
}

TEST_CASE("collinear pieces merge to the identity map") {
    PLMap f = make_plmap({q(0), q(1, 2), q(1)}, {q(0), q(1, 2), q(1)});
    CHECK(f.piece_count() == 1);
    CHECK(f == identity_map());
    CHECK(corners(f).empty());
    CHECK(eval(f, q(2, 3)) == q(2, 3));
}

TEST_CASE("tent evaluation") {
    PLMap t2 = tent_map(Rational(2));
    CHECK(eval(t2, q(1, 2)) == 1);
    CHECK(eval(t2, q(0)) == 0);
    PLMap t75 = tent_map(q(7, 5));
    CHECK(eval(t75, q(3, 4)) == q(7, 20));
    CHECK_THROWS_WITH_AS(eval(t75, q(3, 2)), doctest::Contains("DomainViolation"), Error);
}

TEST_CASE("slope_at") {
    PLMap t2 = tent_map(Rational(2));
    CHECK(slope_at(t2, q(1, 2), Side::Left) == 2);
    CHECK(slope_at(t2, q(1, 2), Side::Right) == -2);
    CHECK(slope_at(tent_map(q(7, 5)), q(1, 4), Side::Left) == q(7, 5));
    CHECK_THROWS_AS(slope_at(t2, q(0), Side::Left), Error);
    CHECK_THROWS_AS(slope_at(t2, q(1), Side::Right), Error);
}

TEST_CASE("corners and variation") {
    PLMap t75 = tent_map(q(7, 5));
    auto cs = corners(t75);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].location == q(1, 2));
    CHECK(cs[0].slope_left == q(7, 5));
    CHECK(cs[0].slope_right == q(-7, 5));
    CHECK(cs[0].v.mantissa == 1);
    CHECK(variation(t75).mantissa == 1);

    CHECK(corners(identity_map()).empty());

    // slopes 4/3 then -2: one corner, v.mantissa = ratio of absolute slopes = 3/2
    PLMap f = make_plmap({q(0), q(3, 5), q(1)}, {q(0), q(4, 5), q(0)});
    auto cf = corners(f);
    REQUIRE(cf.size() == 1);
    CHECK(cf[0].slope_left == q(4, 3));
    CHECK(cf[0].slope_right == q(-2));
    CHECK(cf[0].v.mantissa == q(3, 2));
    CHECK(variation(f).mantissa == q(3, 2));
}

TEST_CASE("variation products over several corners") {
    // slopes 2, -3, 2: mantissa (3/2)*(3/2) = 9/4, scaled to fit in [0,1]
    // f on [0, 1/4] slope 2 -> 1/2; on [1/4, 5/12] slope -3 -> 0; on [5/12, 1] slope 2 -> 7/6 > 1
    // rescale: use slopes 1, -3/2, 1 (same ratios as 2,-3,2)
    PLMap f = make_plmap({q(0), q(1, 2), q(5, 6), q(1)}, {q(1, 3), q(5, 6), q(1, 3), q(1, 2)});
    auto cs = corners(f);
    REQUIRE(cs.size() == 2);
    CHECK(variation(f).mantissa == q(9, 4));
}

TEST_CASE("iterate: explicit representation of f^n") {
    PLMap t2 = tent_map(Rational(2));
    PLMap t2_2 = iterate(t2, 2);
    REQUIRE(t2_2.piece_count() == 4);
    CHECK(t2_2.slope(0) == 4);
    CHECK(t2_2.slope(1) == -4);
    CHECK(t2_2.slope(2) == 4);
    CHECK(t2_2.slope(3) == -4);
    CHECK(eval(t2_2, q(1, 4)) == 1);
    CHECK(eval(t2_2, q(3, 4)) == 1);

    CHECK(iterate(identity_map(), 100) == identity_map());

    CHECK_THROWS_WITH_AS(iterate(t2, 40, 1000), doctest::Contains("PieceBudgetExceeded"), Error);
}

TEST_CASE("composition soundness: eval(iterate(f,n), x) == n-fold eval") {
    RatGen gen;
    PLMap maps[] = {tent_map(q(7, 5)), tent_map(Rational(2)), tent_map(q(19, 16)),
                    twocorner_map(q(23, 30), q(1, 10))};
    std::mt19937 rng(99);
    std::uniform_int_distribution<unsigned> ns(1, 8);
    for (const PLMap& f : maps) {
        for (int trial = 0; trial < 50; ++trial) {
            Rational x = gen.next();
            unsigned n = ns(rng);
            PLMap fn = iterate(f, n);
            Rational direct = eval(fn, x);
            Rational chained = x;
            for (unsigned k = 0; k < n; ++k) chained = eval(f, chained);
            CHECK(direct == chained);
        }
    }
}

TEST_CASE("collinear-merge idempotence: corners never have equal slopes") {
    PLMap maps[] = {tent_map(q(7, 5)), iterate(tent_map(q(19, 16)), 3), twocorner_map(q(23, 30), q(1, 10))};
    for (const PLMap& f : maps)
        for (const Corner& c : corners(f)) CHECK(c.slope_left != c.slope_right);
}

TEST_CASE("image_of is the exact image") {
    PLMap t2 = tent_map(Rational(2));
    Interval img = image_of(t2, Interval(q(1, 4), q(3, 4)));
    CHECK(img == Interval(q(1, 2), Rational(1)));
    CHECK(image_of(t2, Interval(q(0), q(1, 4))) == Interval(q(0), q(1, 2)));
}

TEST_CASE("restrict_rescale") {
    // identity on [1/4, 3/4], Preserve -> identity
    CHECK(restrict_rescale(identity_map(), Interval(q(1, 4), q(3, 4)), Orientation::Preserve) ==
          identity_map());

    // tent(2) on [0, 1/4] is not invariant
    CHECK_THROWS_WITH_AS(restrict_rescale(tent_map(Rational(2)), Interval(q(0), q(1, 4)), Orientation::Preserve),
                         doctest::Contains("NotInvariant"), Error);

    // tent(7/5)^2 on [5/12, 7/12] with Flip is exactly tent(49/25)
    PLMap f2 = iterate(tent_map(q(7, 5)), 2);
    PLMap r = restrict_rescale(f2, Interval(q(5, 12), q(7, 12)), Orientation::Flip);
    CHECK(r == tent_map(q(49, 25)));
}

TEST_CASE("variation is invariant under affine conjugation of the whole map") {
    PLMap maps[] = {tent_map(q(7, 5)), twocorner_map(q(23, 30), q(1, 10)), iterate(tent_map(q(19, 16)), 2)};
    for (const PLMap& f : maps) {
        PLMap conj = restrict_rescale(f, Interval(q(0), q(1)), Orientation::Preserve);
        CHECK(variation(conj).mantissa == variation(f).mantissa);
    }
}
