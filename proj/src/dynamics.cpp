#include "berkdyn/dynamics.hpp"

#include <algorithm>

namespace berkdyn {

RationalMap::RationalMap(RatPoly num, RatPoly den, Prime p, bool)
    : num_(std::move(num)), den_(std::move(den)), p_(p) {
  if (den_.is_zero()) throw std::invalid_argument("rational map with zero denominator");
  Rational lead = den_.leading();
  num_ = num_.scaled(Rational(1) / lead);
  den_ = den_.monic();
  degree_ = std::max(num_.degree(), den_.degree());
  if (degree_ < 1) throw std::invalid_argument("rational map must be nonconstant");
}

RationalMap::RationalMap(const RatPoly& num, const RatPoly& den, Prime p) : RationalMap(num, den, p, true) {
  if (gcd(num, den).degree() > 0) throw std::invalid_argument("numerator and denominator share a factor");
}

RationalMap RationalMap::from_coprime(const RatPoly& num, const RatPoly& den, Prime p) {
  return RationalMap(num, den, p, true);
}

RationalMap RationalMap::mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                Prime p) {
  if (a * d - b * c == 0) throw std::invalid_argument("singular Mobius transformation");
  return RationalMap(RatPoly({b, a}), RatPoly({d, c}), p, true);
}

BerkPoint apply_type_one(const RationalMap& r, const BerkPoint& z) {
  if (!z.is_type_one()) throw std::invalid_argument("apply_type_one needs a type I point");
  const RatPoly& P = r.num();
  const RatPoly& Q = r.den();
  if (z.is_infinity()) {
    if (P.degree() > Q.degree()) return BerkPoint::infinity();
    if (P.degree() < Q.degree()) return BerkPoint::type_one(Rational(0));
    return BerkPoint::type_one(Rational(P.leading() / Q.leading()));
  }
  Rational q = Q(z.center());
  if (q == 0) return BerkPoint::infinity();
  return BerkPoint::type_one(Rational(P(z.center()) / q));
}

namespace {

// For nu = nu(a, s) the function c -> nu(P - cQ) - nu(Q) equals
// min(h, v(c - b)) for the image nu(b, h). Expanding around a,
// nu(P - cQ) = min_k v(p_k - c q_k) + k s, a minimum of tents centered at the
// rational points r_k = p_k / q_k. The plateau {c : value = h} is a disk, and
// it must contain some r_k: otherwise every tent would be constant on a
// neighbourhood of the plateau and the value could not drop below h there.
// So the image is found among the r_k, and its center is always rational.
struct Image {
  Rational center;
  Rational height;
};

Image image_of(const RationalMap& r, const BerkPoint& nu) {
  const Prime& p = r.prime();
  RatPoly pa = taylor_shift(r.num(), nu.center());
  RatPoly qa = taylor_shift(r.den(), nu.center());
  const Rational vq = seminorm_eval(nu, r.den(), p).value();
  std::optional<Image> best;
  for (int k = 0; k <= qa.degree(); ++k) {
    if (qa.coeff(k) == 0) continue;
    Rational c = pa.coeff(k) / qa.coeff(k);
    Rational h = seminorm_eval(nu, r.num() - r.den().scaled(c), p).value() - vq;
    if (!best || h > best->height) best = Image{c, h};
  }
  return *best;
}

}  // namespace

BerkPoint pushforward_type_two(const RationalMap& r, const BerkPoint& nu) {
  if (!nu.is_type_two()) throw std::invalid_argument("pushforward_type_two needs a type II point");
  Image im = image_of(r, nu);
  return BerkPoint::type_two(im.center, im.height);
}

BerkPoint pushforward(const RationalMap& r, const BerkPoint& x) {
  return x.is_type_one() ? apply_type_one(r, x) : pushforward_type_two(r, x);
}

int local_degree_type_one(const RationalMap& r, const BerkPoint& x) {
  if (!x.is_type_one()) throw std::invalid_argument("local_degree_type_one needs a type I point");
  const RatPoly& P = r.num();
  const RatPoly& Q = r.den();
  BerkPoint y = apply_type_one(r, x);
  if (x.is_infinity()) {
    if (y.is_infinity()) return r.degree() - Q.degree();
    return r.degree() - (P - Q.scaled(y.center())).degree();
  }
  if (y.is_infinity()) return root_multiplicity(Q, x.center());
  return root_multiplicity(P - Q.scaled(y.center()), x.center());
}

int local_degree_type_two(const RationalMap& r, const BerkPoint& nu) {
  if (!nu.is_type_two()) throw std::invalid_argument("local_degree_type_two needs a type II point");
  const Prime& p = r.prime();
  Image im = image_of(r, nu);
  ExtRat s(nu.height());
  // R(a + pi^s u) = b + pi^h A(u) / B(u); the reduction of A / B is the
  // reduced map at nu, whose degree is the local degree.
  RatPoly a = taylor_shift(r.num() - r.den().scaled(im.center), nu.center());
  RatPoly b = taylor_shift(r.den(), nu.center());
  // Reduction at nu: keep the monomials on the dominant face, reduce their
  // unit parts mod p (coordinate u = pi_s * ubar).
  auto reduce_face = [&](const RatPoly& f) {
    auto g = generic_val({f, s}, p);
    std::vector<long> c(static_cast<size_t>(f.degree()) + 1, 0);
    for (int k : g.dominant) c[static_cast<size_t>(k)] = residue_mod_p(unit_part(f.coeff(k), p), p);
    return FpPoly(p.value(), std::move(c));
  };
  FpPoly na = reduce_face(a);
  FpPoly nb = reduce_face(b);
  FpPoly g = gcd(na, nb);
  int deg = std::max(exact_quotient(na, g).degree(), exact_quotient(nb, g).degree());
  if (deg < 1) throw std::logic_error("degenerate reduction at " + nu.to_string());
  return deg;
}

RationalMap compose(const RationalMap& r, const RationalMap& s) {
  if (!(r.prime() == s.prime())) throw std::invalid_argument("compose: different primes");
  const int d = r.degree();
  std::vector<RatPoly> pp{RatPoly::constant(Rational(1))}, qp{RatPoly::constant(Rational(1))};
  for (int i = 1; i <= d; ++i) {
    pp.push_back(pp.back() * s.num());
    qp.push_back(qp.back() * s.den());
  }
  RatPoly num, den;
  for (int i = 0; i <= d; ++i) {
    RatPoly term = pp[static_cast<size_t>(i)] * qp[static_cast<size_t>(d - i)];
    if (r.num().coeff(i) != 0) num = num + term.scaled(r.num().coeff(i));
    if (r.den().coeff(i) != 0) den = den + term.scaled(r.den().coeff(i));
  }
  // Homogeneous substitution of coprime forms is coprime (resultant is a
  // product of powers of the two resultants), so no gcd is needed.
  return RationalMap::from_coprime(num, den, r.prime());
}

std::vector<RationalMap> iterates(const RationalMap& r, int n, long degree_cap) {
  if (n < 1) throw std::invalid_argument("iteration level must be >= 1");
  long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= r.degree();
    if (total > degree_cap)
      throw CapExceeded("degree " + std::to_string(r.degree()) + "^" + std::to_string(n) + " exceeds cap " +
                        std::to_string(degree_cap));
  }
  std::vector<RationalMap> out{r};
  for (int i = 1; i < n; ++i) out.push_back(compose(r, out.back()));
  return out;
}

int PreimageProfile::total() const {
  int t = infinity_multiplicity;
  for (const auto& [v, m] : multiset) t += m;
  return t;
}

PreimageProfile preimage_profile(const RationalMap& iterate, int level, const BerkPoint& z,
                                 const std::optional<Rational>& center) {
  if (!z.is_type_one()) throw std::invalid_argument("preimage_profile needs a type I target");
  const Prime& p = iterate.prime();
  RatPoly f = z.is_infinity() ? iterate.den() : iterate.num() - iterate.den().scaled(z.center());
  if (f.is_zero()) throw std::domain_error("degenerate preimage equation");
  const int at_infinity = iterate.degree() - f.degree();
  PreimageProfile out{z, level, center, {}, 0};
  if (center) {
    out.multiset = root_valuation_multiset(taylor_shift(f, *center), p);
    out.infinity_multiplicity = at_infinity;
    return out;
  }
  for (const auto& [v, m] : root_valuation_multiset(f, p)) {
    if (v.is_infinite()) out.infinity_multiplicity += m;
    else out.multiset.emplace_back(ExtRat(Rational(-v.value())), m);
  }
  std::sort(out.multiset.begin(), out.multiset.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  if (at_infinity > 0) out.multiset.emplace_back(ExtRat::infinity(), at_infinity);
  return out;
}

PreimageProfile preimage_profile_n(const RationalMap& r, int n, const BerkPoint& z,
                                   const std::optional<Rational>& center) {
  return preimage_profile(iterates(r, n).back(), n, z, center);
}

ValuationMultiset generic_preimage_profile(const RationalMap& iterate, const BerkPoint& nu, const Rational& center) {
  if (!nu.is_type_two()) throw std::invalid_argument("generic_preimage_profile needs a type II point");
  const Prime& p = iterate.prime();
  RatPoly a = taylor_shift(iterate.num() - iterate.den().scaled(nu.center()), center);
  RatPoly b = taylor_shift(iterate.den(), center);
  // Coefficient k of a - w b with w generic of valuation h: no cancellation.
  std::vector<ExtRat> vals;
  for (int k = 0; k <= iterate.degree(); ++k) {
    ExtRat vb = val_p(b.coeff(k), p);
    vals.push_back(min(val_p(a.coeff(k), p), vb + ExtRat(nu.height())));
  }
  return root_valuations(newton_polygon_from_valuations(vals));
}

bool ExceptionalSet::contains(const BerkPoint& z) const {
  return std::any_of(points.begin(), points.end(), [&](const BerkPoint& x) { return x == z; });
}

namespace {

// Totally invariant points of S: infinity iff S is a polynomial; a finite z
// iff P - zQ = c (t - z)^d, i.e. the first d derivatives of P - zQ vanish at z.
void totally_invariant_points(const RationalMap& s, ExceptionalSet& out) {
  auto add = [&](const BerkPoint& x) {
    if (!out.contains(x)) out.points.push_back(x);
  };
  if (s.is_polynomial()) add(BerkPoint::infinity());
  const int d = s.degree();
  RatPoly pk = s.num(), qk = s.den();
  const RatPoly t = RatPoly::monomial(Rational(1), 1);
  RatPoly g;
  for (int k = 0; k < d; ++k) {
    g = gcd(g, pk - t * qk);
    pk = pk.derivative();
    qk = qk.derivative();
  }
  if (g.degree() < 1) return;
  RatPoly squarefree = divmod(g, gcd(g, g.derivative())).first.monic();
  RatPoly rest = squarefree;
  for (const auto& root : rational_roots(squarefree)) {
    add(BerkPoint::type_one(root));
    rest = divmod(rest, RatPoly::linear_root(root)).first;
  }
  if (rest.degree() >= 1) {
    out.unknown = true;
    RatPoly m = rest.monic();
    if (std::find(out.unresolved.begin(), out.unresolved.end(), m) == out.unresolved.end())
      out.unresolved.push_back(m);
  }
}

}  // namespace

ExceptionalSet exceptional_set(const RationalMap& r) {
  if (r.degree() < 2) throw std::invalid_argument("exceptional_set needs degree >= 2");
  ExceptionalSet out;
  totally_invariant_points(r, out);
  totally_invariant_points(compose(r, r), out);
  auto key = [](const BerkPoint& x) { return std::make_pair(x.is_infinity() ? 1 : 0, x.is_infinity() ? Rational(0) : x.center()); };
  std::sort(out.points.begin(), out.points.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

}  // namespace berkdyn
