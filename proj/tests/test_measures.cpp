#include "berkdyn/measures.hpp"

#include <doctest.h>

#include <memory>
#include <stdexcept>

using namespace berkdyn;

namespace {

const Prime p3(3);

RatPoly t_pow(int k, const Rational& c = Rational(1)) { return RatPoly::monomial(c, k); }
RatPoly cst(const Rational& c) { return RatPoly::constant(c); }
BerkPoint nu(const Rational& a, const Rational& s) { return BerkPoint::type_two(a, s); }
BerkPoint pt(const Rational& a) { return BerkPoint::type_one(a); }

RationalMap z_squared() { return RationalMap(t_pow(2), cst(1), p3); }
RationalMap z_squared_over_3() { return RationalMap(t_pow(2, Rational(1, 3)), cst(1), p3); }
RationalMap z_squared_minus_ninth() { return RationalMap(t_pow(2) - cst(Rational(1, 9)), cst(1), p3); }

TreeRef make(FiniteTree t) { return std::make_shared<const FiniteTree>(std::move(t)); }

/// [nu(0, 0), nu(0, 5)]
TreeRef short_segment() { return make(hull({nu(0, 5)}, BerkPoint::gauss(), Rational(5), p3)); }

/// The segment from nu(0, -5) to nu(0, 5) spanned by 0 and infinity.
TreeRef long_segment() { return make(hull({pt(0), BerkPoint::infinity()}, BerkPoint::gauss(), Rational(5), p3)); }

ProjectedMeasure dirac(const TreeRef& t, const BerkPoint& x) {
  ProjectedMeasure m(t);
  m.add(retract(x, *t), Rational(1));
  return m;
}

Rational mass_at_point(const ProjectedMeasure& m, const BerkPoint& x) {
  return m.mass_at(retract(x, m.tree()));
}

}  // namespace

TEST_CASE("projected measures merge and normalize atoms") {
  TreeRef t = short_segment();
  ProjectedMeasure m(t);
  m.add(TreePosition{-1, 0, Rational(5)}, Rational(1, 3));
  m.add(retract(nu(0, 5), *t), Rational(1, 3));
  m.add(TreePosition{-1, 0, Rational(2)}, Rational(0));
  CHECK(m.atoms().size() == 1);
  CHECK(m.mass() == Rational(2, 3));
  CHECK(m.atoms().begin()->first.is_vertex());
  CHECK(m.clamped_mass() == 0);  // nu(0, 5) here is an explicit type II end, not a truncation
}

TEST_CASE("retraction of atomic measures") {
  TreeRef t = short_segment();
  CHECK(retract_measure(AtomicMeasure::dirac(BerkPoint::gauss()), t) == dirac(t, BerkPoint::gauss()));
  ProjectedMeasure a = retract_measure(AtomicMeasure::dirac(pt(3)), t);
  CHECK(mass_at_point(a, nu(0, 1)) == 1);
  AtomicMeasure mix{{{nu(0, 7), Rational(1, 2)}, {BerkPoint::gauss(), Rational(1, 2)}}};
  ProjectedMeasure b = retract_measure(mix, t);
  CHECK(b.atoms().size() == 2);
  CHECK(mass_at_point(b, nu(0, 5)) == Rational(1, 2));
  CHECK(mass_at_point(b, BerkPoint::gauss()) == Rational(1, 2));
}

TEST_CASE("truncated ends report clamped mass") {
  TreeRef t = long_segment();
  ProjectedMeasure m = retract_measure(AtomicMeasure{{{pt(0), Rational(1, 4)}, {pt(1), Rational(3, 4)}}}, t);
  CHECK(m.clamped_mass() == Rational(1, 4));
}

TEST_CASE("profiles give the retraction without explicit roots") {
  TreeRef t = long_segment();
  ProjectedMeasure m1 = retract_from_profiles(z_squared(), 1, pt(3), t);
  CHECK(m1.atoms().size() == 1);
  CHECK(mass_at_point(m1, nu(Rational(0), Rational(1, 2))) == 1);
  ProjectedMeasure m3 = retract_from_profiles(z_squared(), 3, pt(3), t);
  CHECK(mass_at_point(m3, nu(Rational(0), Rational(1, 8))) == 1);

  TreeRef y = make(hull({pt(Rational(1, 3)), pt(Rational(-1, 3))}, BerkPoint::gauss(), Rational(5), p3));
  ProjectedMeasure m = retract_from_profiles(z_squared_minus_ninth(), 1, pt(Rational(1, 3)), y);
  CHECK(m.mass() == 1);
  // Preimages of 1/3 are +-2/3 up to units: one per branch.
  Rational plus = 0, minus = 0;
  for (const auto& [pos, w] : m.atoms()) {
    BerkPoint x = y->point_at(pos);
    if (contains(nu(Rational(1, 3), Rational(0)), x, p3)) plus += w;
    if (contains(nu(Rational(-1, 3), Rational(0)), x, p3)) minus += w;
  }
  CHECK(plus == Rational(1, 2));
  CHECK(minus == Rational(1, 2));
}

TEST_CASE("profiles agree with explicit rational preimages") {
  // z^2 - 1/9 at level 1 over 0: the preimages are exactly +-1/3.
  TreeRef y = make(hull({pt(Rational(1, 3)), pt(Rational(-1, 3)), pt(2)}, BerkPoint::gauss(), Rational(4), p3));
  ProjectedMeasure a = retract_from_profiles(z_squared_minus_ninth(), 1, pt(0), y);
  ProjectedMeasure b =
      retract_measure(AtomicMeasure{{{pt(Rational(1, 3)), Rational(1, 2)}, {pt(Rational(-1, 3)), Rational(1, 2)}}}, y);
  CHECK(a == b);
  CHECK(a.clamped_mass() == 1);
}

TEST_CASE("pullback of type II points") {
  TreeRef t = long_segment();
  CHECK(retract_pullback(z_squared(), BerkPoint::gauss(), t) == dirac(t, BerkPoint::gauss()));
  CHECK(retract_pullback(z_squared(), nu(0, 2), t) == dirac(t, nu(0, 1)));
  CHECK(retract_pullback(z_squared_over_3(), nu(0, 1), t) == dirac(t, nu(0, 1)));
}

TEST_CASE("Wasserstein distance on trees") {
  TreeRef t = long_segment();
  ProjectedMeasure g = dirac(t, BerkPoint::gauss());
  CHECK(w1_distance(g, g) == 0);
  CHECK(w1_distance(g, dirac(t, nu(0, 2))) == 2);
  ProjectedMeasure half(t);
  half.add(retract(BerkPoint::gauss(), *t), Rational(1, 2));
  half.add(retract(nu(0, 2), *t), Rational(1, 2));
  CHECK(w1_distance(half, dirac(t, nu(0, 1))) == 1);
  CHECK(w1_distance(dirac(t, nu(0, -3)), dirac(t, nu(0, 4))) == 7);
  ProjectedMeasure light(t);
  light.add(retract(BerkPoint::gauss(), *t), Rational(1, 2));
  CHECK_THROWS_AS(w1_distance(g, light), std::invalid_argument);
  CHECK_THROWS_AS(w1_distance(g, dirac(long_segment(), BerkPoint::gauss())), std::invalid_argument);
}

TEST_CASE("Wasserstein distance across a branch point") {
  TreeRef y = make(hull({pt(3), pt(12)}, BerkPoint::gauss(), Rational(4), p3));
  // nu(3, 4) and nu(12, 4) meet at nu(3, 2): distance 2 + 2.
  CHECK(w1_distance(dirac(y, nu(3, 4)), dirac(y, nu(12, 4))) == 4);
  ProjectedMeasure split(y);
  split.add(retract(nu(3, 4), *y), Rational(1, 2));
  split.add(retract(nu(12, 4), *y), Rational(1, 2));
  CHECK(w1_distance(split, dirac(y, BerkPoint::gauss())) == 4);
  CHECK(w1_distance(split, dirac(y, nu(3, 2))) == 2);
}

TEST_CASE("pushforward of projected measures") {
  TreeRef t = long_segment();
  auto a = pushforward_measure(z_squared_over_3(), dirac(t, nu(0, 1)));
  CHECK(a.measure == dirac(t, nu(0, 1)));
  CHECK(a.excluded_mass == 0);
  auto b = pushforward_measure(z_squared(), dirac(t, nu(Rational(0), Rational(1, 2))));
  CHECK(b.measure == dirac(t, nu(0, 1)));
  auto c = pushforward_measure(z_squared(), dirac(t, BerkPoint::gauss()));
  CHECK(c.measure == dirac(t, BerkPoint::gauss()));
  auto d = pushforward_measure(z_squared(), dirac(t, nu(0, 5)));
  CHECK(d.excluded_mass == 1);
  CHECK(d.measure.mass() == 0);
}

TEST_CASE("equidistribution for z^2 converges to the Gauss point") {
  TreeRef t = long_segment();
  auto steps = equidist_run(z_squared(), pt(3), t, 6);
  REQUIRE(steps.size() == 6);
  ProjectedMeasure g = dirac(t, BerkPoint::gauss());
  for (const auto& s : steps) {
    CHECK(w1_distance(s.measure, g) == Rational(1, 1L << s.n));
    CHECK(s.measure.clamped_mass() == 0);
  }
  CHECK_FALSE(steps[0].w1_prev.has_value());
  CHECK(*steps[1].w1_prev == Rational(1, 4));
  CHECK(steps.back().w1_final == 0);
}

TEST_CASE("equidistribution refuses exceptional starts and large degrees") {
  TreeRef t = long_segment();
  CHECK_THROWS_AS(equidist_run(z_squared(), pt(0), t, 3), ExceptionalStart);
  CHECK_THROWS_AS(equidist_run(z_squared(), BerkPoint::infinity(), t, 3), ExceptionalStart);
  RationalMap inv2(cst(1), t_pow(2), p3);
  CHECK_THROWS_AS(equidist_run(inv2, pt(0), t, 3), ExceptionalStart);
  CHECK_THROWS_AS(equidist_run(inv2, BerkPoint::infinity(), t, 3), ExceptionalStart);
  CHECK_THROWS_AS(equidist_run(z_squared(), pt(3), t, 50), CapExceeded);
  CHECK_THROWS_AS(equidist_run(z_squared(), nu(0, 1), t, 3), std::invalid_argument);
}
