#include "berkdyn/reduction.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace berkdyn;

namespace {

const Prime p3(3);

RatPoly t_pow(int k, const Rational& c = Rational(1)) { return RatPoly::monomial(c, k); }
RatPoly cst(const Rational& c) { return RatPoly::constant(c); }
BerkPoint nu(const Rational& a, const Rational& s) { return BerkPoint::type_two(a, s); }

RationalMap z_squared(const Prime& p = p3) { return RationalMap(t_pow(2), cst(1), p); }
RationalMap z_squared_over_3() { return RationalMap(t_pow(2, Rational(1, 3)), cst(1), p3); }
RationalMap z_squared_minus_ninth() { return RationalMap(t_pow(2) - cst(Rational(1, 9)), cst(1), p3); }

}  // namespace

TEST_CASE("good reduction of z^2 at every small prime") {
  for (long p : {2L, 3L, 5L, 7L}) {
    ReductionReport rep = good_reduction(z_squared(Prime(p)));
    CHECK(rep.good);
    CHECK(rep.reduced_degree == 2);
    CHECK(rep.resultant_val == ExtRat(0));
  }
}

TEST_CASE("bad reduction of z^2/3") {
  ReductionReport rep = good_reduction(z_squared_over_3());
  CHECK_FALSE(rep.good);
  CHECK(rep.normalized_num == t_pow(2));
  CHECK(rep.normalized_den == cst(3));
  CHECK(rep.reduced_den.is_zero());
  CHECK(rep.reduced_degree < 2);
  CHECK(rep.resultant_val > ExtRat(0));
}

TEST_CASE("bad reduction of z^2 - 1/9") {
  ReductionReport rep = good_reduction(z_squared_minus_ninth());
  CHECK_FALSE(rep.good);
  CHECK(rep.normalized_num == (RatPoly{Rational(-1), Rational(0), Rational(9)}));
  CHECK(rep.normalized_den == cst(9));
  CHECK(rep.reduced_num == FpPoly(3, {-1}));
  CHECK(rep.reduced_den.is_zero());
  CHECK(rep.reduced_degree == 0);
}

TEST_CASE("good reduction of a non-polynomial map") {
  // (z^2 + 1) / (z^2 - 1) reduces to a degree 2 map mod 5; mod 2 the reduction
  // collapses (z^2 + 1 = z^2 - 1).
  RationalMap r(t_pow(2) + cst(1), t_pow(2) - cst(1), Prime(5));
  CHECK(good_reduction(r).good);
  RationalMap r2(t_pow(2) + cst(1), t_pow(2) - cst(1), Prime(2));
  CHECK_FALSE(good_reduction(r2).good);
}

TEST_CASE("conjugation") {
  Mobius third{Rational(1, 3), Rational(0), Rational(0), Rational(1)};
  CHECK(conjugate(z_squared_over_3(), third) == z_squared());
  CHECK(conjugate(z_squared_over_3(), Mobius::identity()) == z_squared_over_3());
  Mobius flip{Rational(0), Rational(1), Rational(1), Rational(0)};
  // 1/z conjugates z^2 to itself: 1 / (1/z)^2 = z^2.
  CHECK(conjugate(z_squared(), flip) == z_squared());
  // z^{-2} as the pair (1, z^2).
  RationalMap inv2 = compose(RationalMap::mobius(Rational(0), Rational(1), Rational(1), Rational(0), p3), z_squared());
  CHECK(inv2.num() == cst(1));
  CHECK(inv2.den() == t_pow(2));
  CHECK_THROWS_AS(conjugate(z_squared(), Mobius{Rational(1), Rational(2), Rational(2), Rational(4)}), std::invalid_argument);
  Mobius m{Rational(2), Rational(1), Rational(1), Rational(1)};
  CHECK(conjugate(conjugate(z_squared_minus_ninth(), m), m.inverse()) == z_squared_minus_ninth());
}

TEST_CASE("totally invariant type II points") {
  auto a = totally_invariant_type_two(z_squared());
  REQUIRE(a.point);
  CHECK(equal(*a.point, BerkPoint::gauss(), p3));
  auto b = totally_invariant_type_two(z_squared_over_3());
  REQUIRE(b.point);
  CHECK(equal(*b.point, nu(0, 1), p3));
  auto c = totally_invariant_type_two(z_squared_minus_ninth());
  CHECK_FALSE(c.point);
  CHECK_FALSE(c.candidates.empty());
  // Translated fixed point: (z - 1)^2 / 9 + 1 is conjugate to z^2/9, invariant at nu(1, 2).
  RationalMap shifted(pow(RatPoly::linear_root(Rational(1)), 2).scaled(Rational(1, 9)) + cst(1), cst(1), p3);
  auto d = totally_invariant_type_two(shifted);
  REQUIRE(d.point);
  CHECK(equal(*d.point, nu(1, 2), p3));
}

TEST_CASE("normalizing conjugacy sends the invariant point to the Gauss point") {
  auto phi = normalizing_conjugacy(nu(0, 1), p3);
  REQUIRE(phi);
  CHECK(phi->a == Rational(1, 3));
  CHECK(phi->b == 0);
  RationalMap c = conjugate(z_squared_over_3(), *phi);
  CHECK(good_reduction(c).good);
  CHECK_FALSE(normalizing_conjugacy(nu(Rational(0), Rational(1, 2)), p3));
  RationalMap shifted(pow(RatPoly::linear_root(Rational(1)), 2).scaled(Rational(1, 9)) + cst(1), cst(1), p3);
  auto psi = normalizing_conjugacy(nu(1, 2), p3);
  REQUIRE(psi);
  CHECK(good_reduction(conjugate(shifted, *psi)).good);
}
