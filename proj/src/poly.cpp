#include "berkdyn/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace berkdyn {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<Rational> coeffs)
    : RatPoly(std::vector<Rational>(coeffs)) {}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::linear_root(const Rational& root) {
  return RatPoly({Rational(-root), Rational(1)});
}

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::reversed(int formal_degree) const {
  if (formal_degree < degree()) throw std::invalid_argument("formal degree below degree");
  std::vector<Rational> r(static_cast<size_t>(formal_degree) + 1);
  for (int i = 0; i <= degree(); ++i) r[static_cast<size_t>(formal_degree - i)] = coeff(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rational& c) const {
  std::vector<Rational> r = coeffs_;
  for (auto& x : r) x *= c;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a) { return a.scaled(Rational(-1)); }

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RatPoly(std::move(r));
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    if (a != 1 || i == 0) out += berkdyn::to_string(a);
    if (i >= 1) out += (a != 1 ? "*t" : "t");
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

RatPoly pow(const RatPoly& f, int e) {
  RatPoly result = RatPoly::constant(Rational(1));
  RatPoly base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1);
  Rational inv_lead = Rational(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<size_t>(i)] * inv_lead;
    if (c == 0) continue;
    quo[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= c * b.coeff(j);
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

namespace {

// Integer coefficients c with f = c / scale; returns the scale (lcm of denominators).
BigInt clear_denominators(const RatPoly& f, std::vector<BigInt>& out) {
  BigInt l(1);
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  out.clear();
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
  return l;
}

}  // namespace

RatPoly taylor_shift(const RatPoly& f, const Rational& a) {
  if (a == 0 || f.degree() < 1) return f;
  std::vector<BigInt> m;
  BigInt scale = clear_denominators(f, m);
  const int d = f.degree();
  const BigInt& u = a.get_num();
  const BigInt& v = a.get_den();
  // m_k <- m_k * v^{d-k}; then L(y) = sum m_k (y + u)^k equals v^d F((y + u)/v).
  if (v != 1) {
    BigInt vp(1);
    for (int k = d; k >= 0; --k) {
      m[static_cast<size_t>(k)] *= vp;
      vp *= v;
    }
  }
  for (int i = 0; i < d; ++i)
    for (int k = d - 1; k >= i; --k) m[static_cast<size_t>(k)] += u * m[static_cast<size_t>(k + 1)];
  // g_k = L_k v^k / (v^d scale)
  BigInt vd;
  mpz_pow_ui(vd.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(d));
  BigInt denom = vd * scale;
  std::vector<Rational> g(static_cast<size_t>(d) + 1);
  BigInt vk(1);
  for (int k = 0; k <= d; ++k) {
    g[static_cast<size_t>(k)] = Rational(m[static_cast<size_t>(k)] * vk, denom);
    vk *= v;
  }
  return RatPoly(std::move(g));
}

int root_multiplicity(const RatPoly& f, const Rational& x) {
  if (f.is_zero()) throw std::domain_error("root multiplicity in the zero polynomial");
  RatPoly g = taylor_shift(f, x);
  int k = 0;
  while (g.coeff(k) == 0) ++k;
  return k;
}

namespace {

std::map<BigInt, int> factor(BigInt n) {
  std::map<BigInt, int> out;
  if (n < 0) n = -n;
  for (unsigned long d = 2; d <= 1000000; ++d) {
    if (BigInt(d) * d > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      ++out[BigInt(d)];
      n /= d;
    }
  }
  if (n > 1) {
    if (n > BigInt(1000000) * 1000000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw std::domain_error("integer too large to factor for rational root search");
    ++out[n];
  }
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> ds{BigInt(1)};
  for (const auto& [prime, e] : factor(n)) {
    size_t base = ds.size();
    BigInt pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  int low = 0;
  while (f.coeff(low) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<Rational> tail(f.coeffs().begin() + low, f.coeffs().end());
  RatPoly g(std::move(tail));
  if (g.degree() >= 1) {
    std::vector<BigInt> ints;
    clear_denominators(g, ints);
    auto nums = divisors(ints.front());
    auto dens = divisors(ints.back());
    for (const auto& u : nums)
      for (const auto& v : dens)
        for (int sign : {1, -1}) {
          Rational cand(BigInt(u * sign), v);
          cand.canonicalize();
          if (g(cand) == 0 &&
              std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rational homogeneous_resultant(const RatPoly& f, const RatPoly& g, int d) {
  if (f.degree() > d || g.degree() > d) throw std::invalid_argument("degree exceeds formal degree");
  const int n = 2 * d;
  if (n == 0) return Rational(1);
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  // Sylvester rows: coefficients from the highest formal degree down.
  for (int r = 0; r < d; ++r)
    for (int j = 0; j <= d; ++j) {
      m[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = f.coeff(d - j);
      m[static_cast<size_t>(r + d)][static_cast<size_t>(r + j)] = g.coeff(d - j);
    }
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(c)]);
      det = -det;
    }
    const Rational piv = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
    det *= piv;
    for (int r = c + 1; r < n; ++r) {
      Rational factor = m[static_cast<size_t>(r)][static_cast<size_t>(c)] / piv;
      if (factor == 0) continue;
      for (int k = c; k < n; ++k)
        m[static_cast<size_t>(r)][static_cast<size_t>(k)] -= factor * m[static_cast<size_t>(c)][static_cast<size_t>(k)];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = ((c % p_) + p_) % p_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string FpPoly::to_string() const {
  RatPoly r([&] {
    std::vector<Rational> v;
    for (long c : coeffs_) v.emplace_back(c);
    return v;
  }());
  return r.to_string();
}

namespace {

long inv_mod(long a, long p) {
  BigInt r;
  BigInt aa(a), pp(p);
  mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t());
  return r.get_si();
}

std::pair<std::vector<long>, std::vector<long>> fp_divmod(std::vector<long> a, const std::vector<long>& b,
                                                          long p) {
  const int db = static_cast<int>(b.size()) - 1;
  const long il = inv_mod(b.back(), p);
  std::vector<long> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    long c = a[static_cast<size_t>(i)] * il % p;
    if (c == 0) continue;
    q[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& x = a[static_cast<size_t>(i - db + j)];
      x = ((x - c * b[static_cast<size_t>(j)]) % p + p) % p;
    }
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return {q, a};
}

}  // namespace

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  const long p = a.modulus();
  std::vector<long> x(a.coeffs().begin(), a.coeffs().end());
  std::vector<long> y(b.coeffs().begin(), b.coeffs().end());
  while (!y.empty()) {
    auto r = fp_divmod(x, y, p).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    long il = inv_mod(x.back(), p);
    for (auto& c : x) c = c * il % p;
  }
  return FpPoly(p, std::move(x));
}

FpPoly exact_quotient(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("F_p division by zero");
  std::vector<long> x(a.coeffs().begin(), a.coeffs().end());
  std::vector<long> y(b.coeffs().begin(), b.coeffs().end());
  return FpPoly(a.modulus(), fp_divmod(x, y, a.modulus()).first);
}

}  // namespace berkdyn
