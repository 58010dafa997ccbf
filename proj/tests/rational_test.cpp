#include "zsum/rational.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <vector>

using zsum::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction keeps canonical form") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(3, -4).num() == -3);
  CHECK(Rational(3, -4).den() == 4);
  CHECK(Rational(-3, -4) == Rational(3, 4));
  CHECK(Rational(0, 5).is_zero());
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational(7).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parsing accepts fractions, integers and decimals") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
  CHECK(Rational::from_string("+3/4") == Rational(3, 4));
  CHECK(Rational::from_string("6/8") == Rational(3, 4));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational::from_string("-0") == Rational(0));
  CHECK(Rational::from_string("0.25") == Rational(1, 4));
  CHECK(Rational::from_string("-1.5") == Rational(-3, 2));
  CHECK(Rational::from_string(".5") == Rational(1, 2));
  CHECK(Rational::from_string("2.") == Rational(2));
  CHECK(Rational::from_string("12.0625") == Rational(193, 16));
}

TEST_CASE("parsing rejects malformed input") {
  for (const char* bad : {"", "/", "1/", "/2", "1//2", "a", "1.2.3", "1 /2", "--1", "1/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)Rational::from_string(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS((void)Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("field arithmetic") {
  std::vector<Rational> sample = {Rational(-2),    Rational(-3, 2), Rational(-1),
                                  Rational(0),     Rational(1, 3),  Rational(1, 2),
                                  Rational(1),     Rational(7, 3),  Rational(5)};
  for (const auto& a : sample) {
    CHECK(a - a == Rational(0));
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(-(-a) == a);
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
    for (const auto& b : sample) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : sample) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) / Rational(2, 5) == Rational(5, 6));
  CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(5, 3) > Rational(3, 2));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(zsum::abs(Rational(-7, 2)) == Rational(7, 2));
}

TEST_CASE("string round trip") {
  std::vector<Rational> sample = {Rational(0),     Rational(-2),   Rational(1, 3),
                                  Rational(-7, 5), Rational(22, 7)};
  for (const auto& r : sample) {
    CHECK(Rational::from_string(r.to_string()) == r);
  }
  CHECK(Rational(3, 4).to_string() == "3/4");
  CHECK(Rational(-3, 4).to_string() == "-3/4");
  CHECK(Rational(8, 4).to_string() == "2");
  std::ostringstream ss;
  ss << Rational(-5, 6);
  CHECK(ss.str() == "-5/6");
}

TEST_CASE("decimal rendering rounds to nearest, ties away from zero") {
  CHECK(Rational(1, 3).to_decimal(4) == "0.3333");
  CHECK(Rational(2, 3).to_decimal(4) == "0.6667");
  CHECK(Rational(1, 8).to_decimal(2) == "0.13");
  CHECK(Rational(1, 2).to_decimal(0) == "1");
  CHECK(Rational(-1, 2).to_decimal(0) == "-1");
  CHECK(Rational(5, 4).to_decimal(1) == "1.3");
  CHECK(Rational(-5, 4).to_decimal(1) == "-1.3");
  CHECK(Rational(7).to_decimal(2) == "7.00");
  CHECK(Rational(0).to_decimal(3) == "0.000");
  CHECK(Rational(-1, 3).to_decimal(0) == "0");
  CHECK(Rational(-1, 18).to_decimal(4) == "-0.0556");
  CHECK_THROWS_AS((void)Rational(1, 3).to_decimal(-1), std::invalid_argument);
}

TEST_CASE("double conversion") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(-3, 4).to_double() == -0.75);
}

}  // TEST_SUITE
