#include "berkdyn/padic.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace berkdyn;

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("primes are validated") {
  CHECK(Prime(3).value() == 3);
  CHECK_THROWS_AS(Prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Prime(9), std::invalid_argument);
  CHECK_THROWS_AS(Prime(-5), std::invalid_argument);
}

TEST_CASE("p-adic valuation of rationals") {
  CHECK(val_p(Rational(9, 2), Prime(3)) == ExtRat(2));
  CHECK(val_p(Rational(0), Prime(3)).is_infinite());
  CHECK(val_p(Rational(12), Prime(2)) == ExtRat(2));
  CHECK(val_p(Rational(1, 81), Prime(3)) == ExtRat(-4));
  CHECK(val_p(Rational(-5, 7), Prime(5)) == ExtRat(1));
  CHECK(val_p(BigInt(250), Prime(5)) == 3);
}

TEST_CASE("valuation is multiplicative and ultrametric") {
  const Prime p(3);
  const Rational xs[] = {Rational(18), Rational(-2, 27), Rational(5, 4), Rational(81, 10), Rational(1)};
  for (const auto& x : xs)
    for (const auto& y : xs) {
      CHECK(val_p(Rational(x * y), p) == val_p(x, p) + val_p(y, p));
      if (x + y != 0) CHECK(val_p(Rational(x + y), p) >= min(val_p(x, p), val_p(y, p)));
    }
}

TEST_CASE("extended rationals order +inf last") {
  ExtRat inf = ExtRat::infinity();
  CHECK(ExtRat(5) < inf);
  CHECK(inf == ExtRat::infinity());
  CHECK((inf + ExtRat(3)).is_infinite());
  CHECK((ExtRat(Rational(1, 2)) + ExtRat(Rational(1, 3))) == ExtRat(Rational(5, 6)));
  CHECK(min(inf, ExtRat(-1)) == ExtRat(-1));
  CHECK(to_string(inf) == "inf");
  CHECK(parse_ext_rat("inf").is_infinite());
  CHECK(parse_ext_rat("-3/6") == ExtRat(Rational(-1, 2)));
  CHECK_THROWS_AS(inf.value(), std::domain_error);
}

TEST_CASE("unit parts, residues and rounding") {
  const Prime p(3);
  CHECK(unit_part(Rational(18, 5), p) == Rational(2, 5));
  CHECK(residue_mod_p(Rational(2, 5), p) == 1);  // 5 * 1 = 5 = 2 mod 3
  CHECK(residue_mod_p(Rational(-1), p) == 2);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(4)) == 4);
  CHECK(prime_power(p, -2) == Rational(1, 9));
  CHECK(prime_power(p, 3) == Rational(27));
}
