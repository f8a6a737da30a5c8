// Newton polygons, root valuations, reduction mod p and generic-direction
// valuations.
//
// Sign convention used throughout the library: a lower-hull segment from
// (i1, v1) to (i2, v2) with slope m = (v2 - v1) / (i2 - i1) accounts for
// exactly i2 - i1 roots of valuation -m.
#pragma once

#include "berkdyn/padic.hpp"
#include "berkdyn/poly.hpp"

#include <utility>
#include <vector>

namespace berkdyn {

struct HullVertex {
  int index;
  Rational val;
  friend bool operator==(const HullVertex&, const HullVertex&) = default;
};

struct NewtonPolygon {
  /// (k, val_p(c_k)) for every nonzero coefficient.
  std::vector<std::pair<int, Rational>> support;
  std::vector<HullVertex> hull;
  /// Number of roots equal to 0 (the lowest index with a nonzero coefficient).
  int zero_root_multiplicity = 0;
  int degree = 0;
};

/// (valuation, multiplicity), ascending; +inf (roots at 0) last.
using ValuationMultiset = std::vector<std::pair<ExtRat, int>>;

/// Throws std::invalid_argument for the zero polynomial.
NewtonPolygon newton_polygon(const RatPoly& f, const Prime& p);

/// Newton polygon from a list of coefficient valuations (+inf = zero coefficient).
NewtonPolygon newton_polygon_from_valuations(const std::vector<ExtRat>& vals);

ValuationMultiset root_valuations(const NewtonPolygon& np);
ValuationMultiset root_valuation_multiset(const RatPoly& f, const Prime& p);

/// Total multiplicity of entries with valuation > bound (strict) or >= bound.
int count_above(const ValuationMultiset& m, const ExtRat& bound, bool strict);

/// Coefficient-wise reduction; throws std::domain_error if a coefficient has
/// negative valuation.
FpPoly reduce_mod_p(const RatPoly& f, const Prime& p);

/// An element sum_j c_j w^j where w has prescribed valuation w_val and
/// otherwise generic residue.
struct GenericVal {
  RatPoly coefficients;
  ExtRat w_val;
};

struct GenericValResult {
  ExtRat val;
  /// True iff exactly one monomial attains the minimum.
  bool generic;
  /// Indices j of the monomials attaining the minimum.
  std::vector<int> dominant;
};

GenericValResult generic_val(const GenericVal& g, const Prime& p);

}  // namespace berkdyn
