// Rational maps over Q acting on the Berkovich line.
#pragma once

#include "berkdyn/berkovich.hpp"
#include "berkdyn/newton.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace berkdyn {

/// Largest D^n the iteration drivers accept (n <= 12 for D = 2).
inline constexpr long kDefaultDegreeCap = 4096;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// R = P / Q with gcd(P, Q) = 1 and Q monic.
class RationalMap {
 public:
  /// Throws std::invalid_argument if Q = 0, gcd(P, Q) != 1 or the map is constant.
  RationalMap(const RatPoly& num, const RatPoly& den, Prime p);

  /// Skips the coprimality check; for compositions of coprime maps.
  static RationalMap from_coprime(const RatPoly& num, const RatPoly& den, Prime p);
  /// z -> (a z + b) / (c z + d); throws std::invalid_argument if ad - bc = 0.
  static RationalMap mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                            Prime p);

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  const Prime& prime() const { return p_; }
  int degree() const { return degree_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.p_ == b.p_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalMap(RatPoly num, RatPoly den, Prime p, bool);
  RatPoly num_;
  RatPoly den_;
  Prime p_;
  int degree_;
};

/// Classical action on P^1(Q); poles go to infinity.
BerkPoint apply_type_one(const RationalMap& r, const BerkPoint& z);

/// Image of a type II point.
BerkPoint pushforward_type_two(const RationalMap& r, const BerkPoint& nu);

/// Image of any representable point.
BerkPoint pushforward(const RationalMap& r, const BerkPoint& x);

/// Multiplicity of x as a solution of R(t) = R(x).
int local_degree_type_one(const RationalMap& r, const BerkPoint& x);

/// Degree of the reduction of R at nu (the multiplicity of R at nu).
int local_degree_type_two(const RationalMap& r, const BerkPoint& nu);

/// R o S (same prime). The result is coprime whenever R and S are.
RationalMap compose(const RationalMap& r, const RationalMap& s);

/// R^1, ..., R^n; throws CapExceeded if D^n > degree_cap.
std::vector<RationalMap> iterates(const RationalMap& r, int n, long degree_cap = kDefaultDegreeCap);

/// Multiset of v(w - a) over w in R^{-n}(z), with multiplicity. A center of
/// nullopt stands for infinity: entries are v(1/w) and infinity_multiplicity
/// counts preimages equal to 0.
struct PreimageProfile {
  BerkPoint source;
  int level = 0;
  std::optional<Rational> center;
  ValuationMultiset multiset;
  int infinity_multiplicity = 0;

  int total() const;
};

/// `iterate` is R^n; level is recorded only.
PreimageProfile preimage_profile(const RationalMap& iterate, int level, const BerkPoint& z,
                                 const std::optional<Rational>& center);
PreimageProfile preimage_profile_n(const RationalMap& r, int n, const BerkPoint& z,
                                   const std::optional<Rational>& center);

/// Multiset of v(y - a) over the preimages y (with multiplicity) of a generic
/// point of the type II point nu. For a preimage mu = nu(m, h) this records
/// min(h, v(m - a)); the multiplicities sum to deg(iterate).
ValuationMultiset generic_preimage_profile(const RationalMap& iterate, const BerkPoint& nu, const Rational& center);

struct ExceptionalSet {
  std::vector<BerkPoint> points;
  /// True when a totally invariant point may be irrational; see `unresolved`.
  bool unknown = false;
  std::vector<RatPoly> unresolved;

  bool contains(const BerkPoint& z) const;
};

/// Points totally invariant under R or R^2 (needs D >= 2).
ExceptionalSet exceptional_set(const RationalMap& r);

}  // namespace berkdyn
