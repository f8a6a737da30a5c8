#include "berkdyn/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace berkdyn {

NewtonPolygon newton_polygon_from_valuations(const std::vector<ExtRat>& vals) {
  NewtonPolygon np;
  for (size_t k = 0; k < vals.size(); ++k)
    if (!vals[k].is_infinite()) np.support.emplace_back(static_cast<int>(k), vals[k].value());
  if (np.support.empty()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  np.degree = np.support.back().first;
  np.zero_root_multiplicity = np.support.front().first;

  // Lower convex hull (monotone chain); collinear points dropped so slopes strictly increase.
  std::vector<HullVertex> hull;
  for (const auto& [k, v] : np.support) {
    HullVertex cur{k, v};
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b if it lies on or above segment a -> cur
      Rational lhs = (b.val - a.val) * (cur.index - a.index);
      Rational rhs = (cur.val - a.val) * (b.index - a.index);
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(cur);
  }
  np.hull = std::move(hull);
  return np;
}

NewtonPolygon newton_polygon(const RatPoly& f, const Prime& p) {
  if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  std::vector<ExtRat> vals;
  vals.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) vals.push_back(val_p(c, p));
  return newton_polygon_from_valuations(vals);
}

ValuationMultiset root_valuations(const NewtonPolygon& np) {
  ValuationMultiset out;
  for (size_t i = 1; i < np.hull.size(); ++i) {
    const auto& a = np.hull[i - 1];
    const auto& b = np.hull[i];
    Rational slope = (b.val - a.val) / Rational(b.index - a.index);
    out.emplace_back(ExtRat(Rational(-slope)), b.index - a.index);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  if (np.zero_root_multiplicity > 0) out.emplace_back(ExtRat::infinity(), np.zero_root_multiplicity);
  return out;
}

ValuationMultiset root_valuation_multiset(const RatPoly& f, const Prime& p) {
  return root_valuations(newton_polygon(f, p));
}

int count_above(const ValuationMultiset& m, const ExtRat& bound, bool strict) {
  int n = 0;
  for (const auto& [v, mult] : m)
    if (strict ? v > bound : v >= bound) n += mult;
  return n;
}

FpPoly reduce_mod_p(const RatPoly& f, const Prime& p) {
  std::vector<long> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) {
    if (val_p(x, p) < ExtRat(0))
      throw std::domain_error("reduce_mod_p: coefficient " + to_string(x) + " is not p-integral");
    c.push_back(residue_mod_p(x, p));
  }
  return FpPoly(p.value(), std::move(c));
}

GenericValResult generic_val(const GenericVal& g, const Prime& p) {
  GenericValResult r{ExtRat::infinity(), false, {}};
  const auto coeffs = g.coefficients.coeffs();
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    ExtRat v = val_p(coeffs[j], p);
    if (!g.w_val.is_infinite()) v = v + ExtRat(Rational(g.w_val.value() * static_cast<long>(j)));
    else if (j > 0) v = ExtRat::infinity();
    if (v.is_infinite()) continue;
    if (v < r.val) {
      r.val = v;
      r.dominant = {static_cast<int>(j)};
    } else if (v == r.val) {
      r.dominant.push_back(static_cast<int>(j));
    }
  }
  r.generic = r.dominant.size() == 1;
  return r;
}

}  // namespace berkdyn
