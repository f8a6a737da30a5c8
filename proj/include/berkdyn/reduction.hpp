// Good reduction and totally invariant type II points.
#pragma once

#include "berkdyn/dynamics.hpp"

#include <optional>
#include <vector>

namespace berkdyn {

struct ReductionReport {
  /// Primitive integer numerator and denominator (unit content at p).
  RatPoly normalized_num;
  RatPoly normalized_den;
  FpPoly reduced_num;
  FpPoly reduced_den;
  /// Degree of the reduced map after cancelling common factors.
  int reduced_degree;
  bool good;
  /// val_p of the resultant of the normalized pair as degree-D forms.
  ExtRat resultant_val;
};

ReductionReport good_reduction(const RationalMap& r);

/// z -> (a z + b) / (c z + d)
struct Mobius {
  Rational a, b, c, d;

  static Mobius identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }
  Mobius inverse() const { return {d, Rational(-b), Rational(-c), a}; }
};

/// phi o R o phi^{-1}; throws std::invalid_argument for singular phi.
RationalMap conjugate(const RationalMap& r, const Mobius& phi);

struct InvariantSearch {
  /// First certified point with R_* nu = nu and deg_R(nu) = D, if any.
  std::optional<BerkPoint> point;
  /// Every (center, height) candidate examined, in order.
  std::vector<BerkPoint> candidates;
};

/// Bounded search over the Gauss point and fixed points of the height maps
/// along rays from rational fixed points, critical points, zeros and poles.
/// An empty result is not a proof that no such point exists.
InvariantSearch totally_invariant_type_two(const RationalMap& r);

/// phi(z) = (z - a) / p^s, sending nu(a, s) to the Gauss point; nullopt when
/// s is not an integer.
std::optional<Mobius> normalizing_conjugacy(const BerkPoint& nu, const Prime& p);

}  // namespace berkdyn
