#include <doctest.h>

#include "plr/families.hpp"
#include "plr/tower.hpp"

using namespace plr;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }

// exact tent-family depth oracle: max { k : s^(2^k) <= 2 }, 0 if none
unsigned tent_depth_oracle(const Rational& s) {
    unsigned k = 0;
    Rational p = s * s;
    while (p <= 2) {
        ++k;
        p = p * p;
    }
    return k;
}
} // namespace

TEST_CASE("tower depths across the tent family match the power oracle") {
    struct Row {
        Rational s;
        unsigned depth;
        std::vector<unsigned> qs;
    };
    Row rows[] = {
        {q(7, 5), 1, {1, 2}},
        {q(19, 16), 2, {1, 2, 4}},
        {q(3, 2), 0, {1}},
        {q(2), 0, {1}},
    };
    for (const Row& r : rows) {
        CHECK(tent_depth_oracle(r.s) == r.depth);
        RenormTower t = build_tower(tent_map(r.s));
        CHECK(t.depth() == r.depth);
        CHECK(t.q_sequence() == r.qs);
    }
}

TEST_CASE("tower growth: q at least doubles per level") {
    for (auto s : {q(7, 5), q(19, 16), q(11, 10)}) {
        RenormTower t = build_tower(tent_map(s));
        auto qs = t.q_sequence();
        for (std::size_t i = 0; i + 1 < qs.size(); ++i) CHECK(qs[i + 1] >= 2 * qs[i]);
    }
}

TEST_CASE("max_depth 0 yields an empty tower") {
    RenormTower t = build_tower(tent_map(q(7, 5)), 0);
    CHECK(t.cycles.empty());
    CHECK(t.depth() == 0);
}

TEST_CASE("tower structure for tent(7/5)") {
    RenormTower t = build_tower(tent_map(q(7, 5)));
    REQUIRE(t.cycles.size() == 2);
    CHECK(t.cycles[0].intervals == std::vector<Interval>{Interval(q(0), q(1))});
    REQUIRE(t.pairs.size() == 1);
    CHECK(t.pairs[0].ratio == 2);
    REQUIRE(t.splitting_found.size() == 1);
    CHECK(t.splitting_found[0]);
    CHECK(t.splittings[0].points == std::vector<Rational>{q(7, 12)});
    CHECK(t.corners_interior[0]);
    CHECK(t.corners_interior[1]);
    // level renormalizations: level 2 is exactly tent(49/25)
    REQUIRE(t.renorm_maps.size() == 2);
    CHECK(t.renorm_maps[1] == tent_map(q(49, 25)));
}

TEST_CASE("tower for tent(19/16): splittings per level") {
    RenormTower t = build_tower(tent_map(q(19, 16)));
    REQUIRE(t.depth() == 2);
    REQUIRE(t.splitting_found[0]);
    REQUIRE(t.splitting_found[1]);
    CHECK(t.splittings[0].points == std::vector<Rational>{q(19, 35)});
    CHECK(t.splittings[1].points == std::vector<Rational>{q(304, 617), q(361, 617)});
    CHECK(t.splittings[1].orbits.size() == 1);
    CHECK(t.splittings[1].orbits[0].period == 2);
    // level-2 renormalization = tent(s^2)
    CHECK(t.renorm_maps[1] == tent_map(q(361, 256)));
}

TEST_CASE("twocorner instance: tower finds the non-doubling a=3 pair") {
    PLMap f = twocorner_map(q(23, 30), q(1, 10));
    RenormTower t = build_tower(f, 8, 12);
    REQUIRE(t.depth() >= 1);
    CHECK(t.cycles[1].q == 3);
    CHECK(t.pairs[0].ratio == 3);
    CHECK(!is_doubling(t.pairs[0]));
    REQUIRE(t.splitting_found[0]);
    CHECK(t.splittings[0].points == std::vector<Rational>{q(37, 150), q(89, 150)});
    CHECK(t.corners_interior[1]);
}
