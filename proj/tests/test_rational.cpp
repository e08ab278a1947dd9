#include "bipramsey/error.hpp"
#include "bipramsey/random.hpp"
#include "bipramsey/rational.hpp"
#include "oracles/fraction.hpp"

#include <doctest.h>

using namespace bipramsey;

namespace {

Rational from(oracle::Frac f) { return Rational(f.num, f.den); }

}  // namespace

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("1e-6") == Rational(1, 1000000));
    CHECK(parse_rational("2.5E3") == 2500);
    CHECK(parse_rational("0.01") == Rational(1, 100));
}

TEST_CASE("parse_rational rejects malformed text") {
    for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "1e", "3/4x"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), Error);
    }
}

TEST_CASE("to_string is canonical") {
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK(to_string(parse_rational(to_string(Rational(22, 7)))) == "22/7");
}

TEST_CASE("floor and ceil round toward the right integers") {
    CHECK(ceil_to_int(Rational(7, 2)) == 4);
    CHECK(floor_to_int(Rational(7, 2)) == 3);
    CHECK(ceil_to_int(Rational(-7, 2)) == -3);
    CHECK(floor_to_int(Rational(-7, 2)) == -4);
    CHECK(ceil_to_int(Rational(6, 3)) == 2);
}

TEST_CASE("small_fraction exposes machine-size numerator and denominator") {
    const SmallFraction f = small_fraction(Rational(6, 8));
    CHECK(f.num == 3);
    CHECK(f.den == 4);
    CHECK_THROWS_AS(small_fraction(Rational(-1, 2)), Error);
}

TEST_CASE("arithmetic agrees with the int64 fraction oracle") {
    Rng rng(12345);
    for (int it = 0; it < 2000; ++it) {
        const oracle::Frac a(uniform_int(rng, -50, 50), uniform_int(rng, 1, 40));
        const oracle::Frac b(uniform_int(rng, -50, 50), uniform_int(rng, 1, 40));
        CHECK(from(a) + from(b) == from(a + b));
        CHECK(from(a) - from(b) == from(a - b));
        CHECK(from(a) * from(b) == from(a * b));
        if (b.num != 0)
            CHECK(from(a) / from(b) == from(a / b));
        CHECK((from(a) < from(b)) == (a < b));
        CHECK(ceil_to_int(from(a)) == oracle::ceil(a));
        CHECK(to_string(from(a)) == a.str());
    }
}
