#include <doctest.h>

#include "plr/logvalue.hpp"
#include "plr/rational.hpp"

using namespace plr;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("7/10") == make_rational(7, 10));
    CHECK(parse_rational("-3/4") == make_rational(-3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(to_string(make_rational(14, 20)) == "7/10");
    CHECK(to_string(Rational(3)) == "3");

    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1/03"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("a/b"), Error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("rationals are kept in lowest terms") {
    Rational r = make_rational(6, 4);
    CHECK(r.get_num() == 3);
    CHECK(r.get_den() == 2);
    Rational p = parse_rational("100/250");
    CHECK(to_string(p) == "2/5");
}

TEST_CASE("pow_ui") {
    CHECK(pow_ui(make_rational(7, 5), 4) == make_rational(2401, 625));
    CHECK(pow_ui(make_rational(-2, 3), 3) == make_rational(-8, 27));
    CHECK(pow_ui(make_rational(5, 1), 11) == Rational(48828125));
    CHECK(pow_ui(make_rational(3, 2), 0) == 1);
}

TEST_CASE("interval basics") {
    Interval iv(make_rational(1, 4), make_rational(3, 4));
    CHECK(iv.contains(make_rational(1, 2)));
    CHECK(iv.contains(make_rational(1, 4)));
    CHECK(!iv.contains_strictly(make_rational(1, 4)));
    CHECK(iv.length() == make_rational(1, 2));
    CHECK_THROWS_AS(Interval(Rational(1), Rational(0)), Error);
}

TEST_CASE("LogValue algebra: sign through the mantissa") {
    LogValue a = LogValue::log_of(make_rational(3, 2)); // log(3/2) > 0
    LogValue b = LogValue::log_of(make_rational(2, 3)); // log(2/3) < 0
    CHECK(a.sign() == 1);
    CHECK(b.sign() == -1);
    CHECK((a + b).sign() == 0);       // exact zero test
    CHECK((a + b).mantissa == 1);
    CHECK((a - b).mantissa == make_rational(9, 4));
    CHECK(a.scaled(2).mantissa == make_rational(9, 4));
    CHECK(a.scaled(-1).mantissa == make_rational(2, 3));
    CHECK(b.abs().mantissa == make_rational(3, 2));
    CHECK_THROWS_AS(LogValue(Rational(0)), Error);
    CHECK_THROWS_AS(LogValue(Rational(-1)), Error);
}

TEST_CASE("LogValue sign matches the represented real sum") {
    // whenever the mantissa product != 1, the sign of the product against 1
    // equals the sign of log(a) + log(b); spot-check against doubles
    const long nums[] = {1, 2, 3, 5, 7, 9, 11, 40};
    const long dens[] = {1, 2, 3, 4, 5, 8, 10, 13};
    for (long n1 : nums)
        for (long d1 : dens)
            for (long n2 : nums)
                for (long d2 : dens) {
                    LogValue x = LogValue::log_of(make_rational(n1, d1));
                    LogValue y = LogValue::log_of(make_rational(n2, d2));
                    double real = approx_log(x.mantissa) + approx_log(y.mantissa);
                    int s = (x + y).sign();
                    if (s != 0) CHECK(s == (real > 0 ? 1 : -1));
                }
}

TEST_CASE("bit budget failure is loud") {
    std::size_t old = bit_budget().load();
    set_bit_budget(64);
    LogValue big = LogValue::log_of(make_rational(48828125, 48828124));
    CHECK_THROWS_AS(big.scaled(40), Error);
    set_bit_budget(old);
}

TEST_CASE("approximations stay display-only but sane") {
    CHECK(approx_double(make_rational(1, 2)) == doctest::Approx(0.5));
    CHECK(approx_log(make_rational(1, 1)) == doctest::Approx(0.0));
    CHECK(approx_log(Rational(2)) == doctest::Approx(0.6931471805599453));
}
