// Dense univariate polynomials over Q and over F_p.
#pragma once

#include "berkdyn/padic.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace berkdyn {

/// Polynomial with exact rational coefficients; coefficient i multiplies t^i.
/// The highest stored coefficient is always nonzero (empty = zero polynomial).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  /// t - root
  static RatPoly linear_root(const Rational& root);
  static RatPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Zero when i is out of range.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  RatPoly derivative() const;
  /// t^deg * f(1/t) for the given formal degree (>= degree()).
  RatPoly reversed(int formal_degree) const;
  /// Multiplies every coefficient by c.
  RatPoly scaled(const Rational& c) const;
  RatPoly monic() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RatPoly pow(const RatPoly& f, int e);

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd (zero when both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// g with g(x) = f(x + a), computed over the integers.
RatPoly taylor_shift(const RatPoly& f, const Rational& a);

/// Order of vanishing of f at x (f must be nonzero).
int root_multiplicity(const RatPoly& f, const Rational& x);

/// Rational roots of f (without multiplicity), ascending.
std::vector<Rational> rational_roots(const RatPoly& f);

/// Resultant of f and g viewed as binary forms of formal degree d.
Rational homogeneous_resultant(const RatPoly& f, const RatPoly& g, int d);

/// Polynomial over F_p with coefficients in [0, p).
class FpPoly {
 public:
  FpPoly(long p, std::vector<long> coeffs);

  long modulus() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const long> coeffs() const { return coeffs_; }

  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;
  std::string to_string() const;

 private:
  long p_;
  std::vector<long> coeffs_;
};

/// Monic gcd over F_p.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// Exact quotient a / b over F_p (b nonzero, divisibility assumed).
FpPoly exact_quotient(const FpPoly& a, const FpPoly& b);

}  // namespace berkdyn
