#include <doctest.h>

#include "harmonic/rational.hpp"

using namespace harmonic;

TEST_SUITE("rational") {
  TEST_CASE("lowest terms, positive denominator") {
    CHECK(Rational(4, 6).str() == "2/3");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  }

  TEST_CASE("exact arithmetic and total order") {
    const Rational a(2, 3);
    const Rational b(1, 2);
    CHECK(a + b == Rational(7, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 3));
    CHECK(a / b == Rational(4, 3));
    CHECK(b < a);
    CHECK(Rational(55, 30) > Rational(54, 30));
    CHECK(Rational(11, 6) == Rational(55, 30));
    CHECK(-a == Rational(-2, 3));
    CHECK_THROWS(a / Rational(0));
  }

  TEST_CASE("parse and render") {
    CHECK(Rational::parse("11/6") == Rational(11, 6));
    CHECK(Rational::parse("-4/8") == Rational(-1, 2));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("a/b"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK(Rational(11, 6).decimal() == "1.83333333333333");
    CHECK(Rational(1).decimal() == "1");
  }

  TEST_CASE("big values stay exact") {
    Rational sum;
    for (int k = 1; k <= 60; ++k) sum += Rational(1, k);
    CHECK(sum.denominator().size() > 20);
    CHECK(Rational::parse(sum.str()) == sum);
  }
}
