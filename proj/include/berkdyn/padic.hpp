// Exact p-adic valuations on the rationals.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace berkdyn {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a", "a/b" (canonicalized). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

class Prime {
 public:
  /// Throws std::invalid_argument unless p is a prime >= 2.
  explicit Prime(long p);

  long value() const { return p_; }
  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  long p_;
};

/// Extended rational: an exact rational or +inf. The codomain of valuations.
class ExtRat {
 public:
  ExtRat() : ExtRat(Rational(0)) {}
  ExtRat(const Rational& v) : infinite_(false), value_(v) {}  // NOLINT
  ExtRat(long v) : infinite_(false), value_(v) {}              // NOLINT

  static ExtRat infinity() {
    ExtRat r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  /// Throws std::domain_error when infinite.
  const Rational& value() const;

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend ExtRat operator-(const ExtRat& a, const Rational& b);
  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  bool infinite_;
  Rational value_;
};

ExtRat min(const ExtRat& a, const ExtRat& b);

/// "inf" or the rational string.
std::string to_string(const ExtRat& v);
ExtRat parse_ext_rat(std::string_view text);
std::ostream& operator<<(std::ostream& os, const ExtRat& v);

/// Exponent of p in a nonzero integer.
long val_p(const BigInt& n, const Prime& p);

/// Exponent of p in x; +inf for x = 0.
ExtRat val_p(const Rational& x, const Prime& p);

/// x / p^{val_p(x)} for x != 0.
Rational unit_part(const Rational& x, const Prime& p);

/// Reduction of a p-integral rational into [0, p).
long residue_mod_p(const Rational& x, const Prime& p);

/// Smallest integer >= q.
BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

/// p^e as an exact rational (e may be negative).
Rational prime_power(const Prime& p, long e);

}  // namespace berkdyn
