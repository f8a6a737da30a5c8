#include "berkdyn/berkovich.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace berkdyn;

namespace {

const Prime p3(3);

BerkPoint nu(long a, long s) { return BerkPoint::type_two(Rational(a), Rational(s)); }
BerkPoint nu(const Rational& a, const Rational& s) { return BerkPoint::type_two(a, s); }
BerkPoint pt(long a) { return BerkPoint::type_one(Rational(a)); }

FiniteTree segment(long top, long bottom) {
  return hull({nu(0, bottom)}, nu(0, top), Rational(bottom - top), p3);
}

}  // namespace

TEST_CASE("equality is decided by the disk, not the stored center") {
  CHECK(equal(nu(0, 1), nu(3, 1), p3));
  CHECK_FALSE(nu(0, 1) == nu(3, 1));
  CHECK_FALSE(equal(nu(0, 2), nu(3, 2), p3));
  CHECK_FALSE(equal(nu(0, 1), nu(0, 2), p3));
  CHECK(equal(pt(5), pt(5), p3));
  CHECK_FALSE(equal(pt(5), nu(5, 3), p3));
  CHECK(equal(BerkPoint::infinity(), BerkPoint::infinity(), p3));
}

TEST_CASE("canonical centers agree for equal points") {
  CHECK(canonical(nu(10, 2), p3) == canonical(nu(1, 2), p3));
  CHECK(canonical(nu(Rational(1, 3), Rational(0)), p3) == canonical(nu(Rational(4, 3), Rational(0)), p3));
  CHECK(canonical(nu(Rational(7), Rational(1, 2)), p3) == canonical(nu(Rational(1), Rational(1, 2)), p3));
}

TEST_CASE("containment") {
  CHECK(contains(nu(0, 0), nu(3, 1), p3));
  CHECK_FALSE(contains(nu(3, 1), nu(0, 0), p3));
  CHECK(contains(nu(0, 1), pt(9), p3));
  CHECK_FALSE(contains(nu(0, 1), pt(1), p3));
  CHECK_FALSE(contains(nu(0, 1), BerkPoint::infinity(), p3));
}

TEST_CASE("seminorm evaluation") {
  CHECK(seminorm_eval(nu(0, 0), RatPoly{Rational(9), Rational(3), Rational(1)}, p3) == ExtRat(0));
  CHECK(seminorm_eval(nu(0, 1), RatPoly::monomial(Rational(1), 1), p3) == ExtRat(1));
  CHECK(seminorm_eval(nu(1, 2), RatPoly::linear_root(Rational(1)), p3) == ExtRat(2));
  // The Gauss point on t - z: min(0, v(z)).
  CHECK(seminorm_eval(BerkPoint::gauss(), RatPoly::linear_root(Rational(1, 9)), p3) == ExtRat(-2));
  CHECK(seminorm_eval(BerkPoint::gauss(), RatPoly::linear_root(Rational(27)), p3) == ExtRat(0));
}

TEST_CASE("hyperbolic distance") {
  CHECK(dist_H(nu(0, 1), nu(0, 3), p3) == 2);
  CHECK(dist_H(nu(0, 1), nu(3, 1), p3) == 0);
  CHECK(dist_H(nu(0, 2), nu(1, 2), p3) == 4);
  CHECK(dist_H(nu(Rational(1, 3), Rational(0)), nu(Rational(-1, 3), Rational(0)), p3) == 2);
}

TEST_CASE("join and median") {
  CHECK(equal(join(pt(0), pt(1), p3), nu(0, 0), p3));
  CHECK(equal(join(nu(0, 2), nu(1, 2), p3), nu(0, 0), p3));
  CHECK(equal(join(pt(3), pt(12), p3), nu(3, 2), p3));
  CHECK(equal(join(nu(0, 5), pt(9), p3), nu(0, 2), p3));
  CHECK_THROWS_AS(join(BerkPoint::infinity(), BerkPoint::infinity(), p3), std::invalid_argument);
  CHECK_THROWS_AS(join(pt(2), pt(2), p3), std::invalid_argument);
  CHECK(equal(median(nu(3, 4), nu(12, 4), nu(0, 0), p3), nu(3, 2), p3));
  CHECK(equal(median(nu(0, 0), nu(0, 5), nu(3, 6), p3), nu(0, 1), p3));
}

TEST_CASE("walking along geodesics") {
  CHECK(equal(walk_toward(nu(0, 0), pt(0), Rational(3), p3), nu(0, 3), p3));
  CHECK(equal(walk_toward(nu(0, 2), nu(1, 2), Rational(1), p3), nu(0, 1), p3));
  CHECK(equal(walk_toward(nu(0, 2), nu(1, 2), Rational(3), p3), nu(1, 1), p3));
  CHECK(equal(walk_toward(nu(0, 2), nu(1, 2), Rational(9), p3), nu(1, 2), p3));
  CHECK(equal(walk_toward(nu(0, 0), BerkPoint::infinity(), Rational(2), p3), nu(0, -2), p3));
}

TEST_CASE("hull of 0 and infinity is a segment of length twice the cap") {
  FiniteTree t = hull({pt(0), BerkPoint::infinity()}, nu(0, 0), Rational(5), p3);
  CHECK(t.root() == 0);
  CHECK(t.vertices().size() == 3);
  CHECK(t.edges().size() == 2);
  Rational total = 0;
  for (const auto& e : t.edges()) total += e.length;
  CHECK(total == 10);
  auto low = t.find_vertex(nu(0, 5));
  auto high = t.find_vertex(nu(0, -5));
  REQUIRE(low);
  REQUIRE(high);
  CHECK(t.vertices()[static_cast<size_t>(*low)].end.has_value());
  CHECK(t.vertices()[static_cast<size_t>(*high)].end->is_infinity());
  CHECK(t.is_monotone());
}

TEST_CASE("hull of a single type II point") {
  FiniteTree t = hull({nu(0, 2)}, nu(0, 0), Rational(5), p3);
  REQUIRE(t.edges().size() == 1);
  CHECK(t.edges()[0].length == 2);
}

TEST_CASE("hull of 3 and 12 branches at nu(3, 2)") {
  FiniteTree t = hull({pt(3), pt(12)}, nu(0, 0), Rational(4), p3);
  auto b = t.find_vertex(nu(3, 2));
  REQUIRE(b);
  CHECK(t.incident(*b).size() == 3);
  CHECK(t.vertices().size() == 4);
  CHECK(t.is_monotone());
  // Leaves are at distance 4 from the root.
  for (size_t v = 0; v < t.vertices().size(); ++v)
    if (t.vertices()[v].end) CHECK(dist_H(t.vertices()[v].point, nu(0, 0), p3) == 4);
}

TEST_CASE("tree validation") {
  std::vector<TreeVertex> vs{{nu(0, 0), {}}, {nu(0, 2), {}}};
  CHECK_NOTHROW(FiniteTree(p3, vs, {{0, 1, Rational(2)}}, 0));
  CHECK_THROWS_AS(FiniteTree(p3, vs, {{0, 1, Rational(3)}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteTree(p3, vs, {}, 0), std::invalid_argument);
  std::vector<TreeVertex> bad{{nu(0, 0), {}}, {pt(0), {}}};
  CHECK_THROWS_AS(FiniteTree(p3, bad, {{0, 1, Rational(1)}}, 0), std::invalid_argument);
}

TEST_CASE("retraction onto a segment") {
  FiniteTree t = segment(0, 5);
  auto at = [&](const BerkPoint& x) { return t.point_at(retract(x, t)); };
  CHECK(equal(at(nu(0, 3)), nu(0, 3), p3));
  CHECK(equal(at(pt(3)), nu(0, 1), p3));
  CHECK(equal(at(nu(0, 7)), nu(0, 5), p3));
  CHECK(equal(at(pt(0)), nu(0, 5), p3));
  CHECK(equal(at(BerkPoint::infinity()), nu(0, 0), p3));
  CHECK(equal(at(nu(Rational(1, 3), Rational(4))), nu(0, 0), p3));
  TreePosition pos = retract(pt(3), t);
  CHECK_FALSE(pos.is_vertex());
  CHECK(pos.offset == 1);
}

TEST_CASE("retraction is idempotent on tree points") {
  FiniteTree t = hull({pt(3), pt(12), BerkPoint::infinity()}, nu(0, 0), Rational(4), p3);
  for (size_t e = 0; e < t.edges().size(); ++e) {
    const auto& edge = t.edges()[e];
    for (Rational off(1, 2); off < edge.length; off += Rational(1, 2)) {
      TreePosition pos{-1, static_cast<int>(e), off};
      TreePosition back = retract(t.point_at(pos), t);
      CHECK(back == t.normalize(pos));
    }
  }
}

TEST_CASE("tree distance matches hyperbolic distance") {
  FiniteTree t = hull({pt(3), pt(12), pt(1)}, nu(0, 0), Rational(4), p3);
  for (size_t a = 0; a < t.vertices().size(); ++a)
    for (size_t b = 0; b < t.vertices().size(); ++b)
      CHECK(t.distance(TreePosition::at_vertex(static_cast<int>(a)), TreePosition::at_vertex(static_cast<int>(b))) ==
            dist_H(t.vertices()[a].point, t.vertices()[b].point, p3));
}

TEST_CASE("subdivision keeps distances") {
  FiniteTree t = segment(0, 5);
  std::vector<int> index;
  FiniteTree s = t.subdivide({TreePosition{-1, 0, Rational(2)}, TreePosition{-1, 0, Rational(7, 2)}}, &index);
  CHECK(s.vertices().size() == 4);
  REQUIRE(index.size() == 2);
  CHECK(equal(s.vertices()[static_cast<size_t>(index[0])].point, nu(0, 2), p3));
  CHECK(equal(s.vertices()[static_cast<size_t>(index[1])].point, nu(Rational(0), Rational(7, 2)), p3));
  CHECK(s.is_monotone());
}
