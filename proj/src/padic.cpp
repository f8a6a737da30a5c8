#include "berkdyn/padic.hpp"

#include <cctype>
#include <stdexcept>

namespace berkdyn {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + s);
  if (num[0] == '+') num = num.substr(1);
  BigInt n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) {
  Rational q = x;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Prime::Prime(long p) : p_(p) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

const Rational& ExtRat::value() const {
  if (infinite_) throw std::domain_error("value() of +inf");
  return value_;
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) return ExtRat::infinity();
  return ExtRat(Rational(a.value_ + b.value_));
}

ExtRat operator-(const ExtRat& a, const Rational& b) {
  if (a.infinite_) return a;
  return ExtRat(Rational(a.value_ - b));
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExtRat min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

std::string to_string(const ExtRat& v) { return v.is_infinite() ? "inf" : to_string(v.value()); }

ExtRat parse_ext_rat(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtRat::infinity();
  return ExtRat(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtRat& v) { return os << to_string(v); }

long val_p(const BigInt& n, const Prime& p) {
  if (n == 0) throw std::domain_error("val_p of zero integer");
  BigInt rest;
  BigInt prime(p.value());
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

ExtRat val_p(const Rational& x, const Prime& p) {
  if (x == 0) return ExtRat::infinity();
  return ExtRat(val_p(x.get_num(), p) - val_p(x.get_den(), p));
}

Rational prime_power(const Prime& p, long e) {
  BigInt pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p.value()),
                static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(pe);
  return Rational(BigInt(1), pe);
}

Rational unit_part(const Rational& x, const Prime& p) {
  if (x == 0) throw std::domain_error("unit_part of zero");
  long v = val_p(x.get_num(), p) - val_p(x.get_den(), p);
  Rational r = x * prime_power(p, -v);
  r.canonicalize();
  return r;
}

long residue_mod_p(const Rational& x, const Prime& p) {
  BigInt prime(p.value());
  BigInt den = x.get_den();
  BigInt num = x.get_num();
  if (mpz_divisible_p(den.get_mpz_t(), prime.get_mpz_t()))
    throw std::domain_error("residue_mod_p of non-integral rational");
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
  BigInt r = (num * inv) % prime;
  if (r < 0) r += prime;
  return r.get_si();
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace berkdyn
