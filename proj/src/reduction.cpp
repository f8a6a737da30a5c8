#include "berkdyn/reduction.hpp"

#include <algorithm>
#include <set>

namespace berkdyn {

ReductionReport good_reduction(const RationalMap& r) {
  const Prime& p = r.prime();
  BigInt l(1), content(0);
  for (const RatPoly* f : {&r.num(), &r.den()})
    for (const auto& c : f->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const RatPoly* f : {&r.num(), &r.den()})
    for (const auto& c : f->coeffs()) {
      BigInt n = c.get_num() * (l / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
  Rational scale(l, content);
  scale.canonicalize();
  RatPoly num = r.num().scaled(scale);
  RatPoly den = r.den().scaled(scale);
  FpPoly rn = reduce_mod_p(num, p);
  FpPoly rd = reduce_mod_p(den, p);
  FpPoly g = gcd(rn, rd);
  int reduced = std::max(exact_quotient(rn, g).degree(), exact_quotient(rd, g).degree());
  reduced = std::max(reduced, 0);
  ExtRat res = val_p(homogeneous_resultant(num, den, r.degree()), p);
  return {num, den, rn, rd, reduced, reduced == r.degree(), res};
}

RationalMap conjugate(const RationalMap& r, const Mobius& phi) {
  const Prime& p = r.prime();
  RationalMap f = RationalMap::mobius(phi.a, phi.b, phi.c, phi.d, p);
  Mobius inv = phi.inverse();
  RationalMap finv = RationalMap::mobius(inv.a, inv.b, inv.c, inv.d, p);
  return compose(f, compose(r, finv));
}

namespace {

// Heights s where the height map along the ray nu(a, s) can meet the diagonal:
// pairwise crossings of the two lower envelopes and of their difference with s.
std::vector<Rational> candidate_heights(const RatPoly& a, const RatPoly& b, const Prime& p) {
  auto lines = [&](const RatPoly& f) {
    std::vector<std::pair<int, Rational>> out;
    for (int k = 0; k <= f.degree(); ++k)
      if (f.coeff(k) != 0) out.emplace_back(k, val_p(f.coeff(k), p).value());
    return out;
  };
  auto la = lines(a), lb = lines(b);
  std::set<Rational> s;
  for (const auto* l : {&la, &lb})
    for (size_t i = 0; i < l->size(); ++i)
      for (size_t j = i + 1; j < l->size(); ++j)
        s.insert(((*l)[i].second - (*l)[j].second) / Rational((*l)[j].first - (*l)[i].first));
  for (const auto& [i, ai] : la)
    for (const auto& [j, bj] : lb)
      if (i - j - 1 != 0) s.insert((bj - ai) / Rational(i - j - 1));
  return {s.begin(), s.end()};
}

}  // namespace

InvariantSearch totally_invariant_type_two(const RationalMap& r) {
  if (r.degree() < 2) throw std::invalid_argument("invariant search needs degree >= 2");
  const Prime& p = r.prime();
  InvariantSearch out;
  auto certify = [&](const BerkPoint& nu) {
    out.candidates.push_back(nu);
    return equal(pushforward_type_two(r, nu), nu, p) && local_degree_type_two(r, nu) == r.degree();
  };
  if (certify(BerkPoint::gauss())) {
    out.point = BerkPoint::gauss();
    return out;
  }
  const RatPoly& P = r.num();
  const RatPoly& Q = r.den();
  const RatPoly t = RatPoly::monomial(Rational(1), 1);
  std::vector<Rational> centers{Rational(0)};
  auto add_roots = [&](const RatPoly& f) {
    if (f.is_zero()) return;
    for (const auto& x : rational_roots(f))
      if (std::find(centers.begin(), centers.end(), x) == centers.end()) centers.push_back(x);
  };
  add_roots(P - t * Q);
  add_roots(P.derivative() * Q - P * Q.derivative());
  add_roots(P);
  add_roots(Q);
  for (const auto& a : centers) {
    BerkPoint image = apply_type_one(r, BerkPoint::type_one(a));
    if (image.is_infinity()) continue;
    const Rational& b = image.center();
    for (const auto& s : candidate_heights(taylor_shift(P - Q.scaled(b), a), taylor_shift(Q, a), p)) {
      BerkPoint nu = canonical(BerkPoint::type_two(a, s), p);
      bool seen = std::any_of(out.candidates.begin(), out.candidates.end(),
                              [&](const BerkPoint& c) { return equal(c, nu, p); });
      if (seen) continue;
      if (certify(nu)) {
        out.point = nu;
        return out;
      }
    }
  }
  return out;
}

std::optional<Mobius> normalizing_conjugacy(const BerkPoint& nu, const Prime& p) {
  if (!nu.is_type_two() || nu.height().get_den() != 1) return std::nullopt;
  Rational scale = prime_power(p, -nu.height().get_num().get_si());
  return Mobius{scale, Rational(-nu.center() * scale), Rational(0), Rational(1)};
}

}  // namespace berkdyn
