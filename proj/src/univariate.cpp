#include "cadform/univariate.hpp"

#include <algorithm>

namespace cadform {

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(const Rational& c, unsigned k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(p.degree(var), 0)) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (i != var && t.exponents[i] != 0) throw DomainError("polynomial is not univariate in the given variable");
    }
    v[t.exponents[var]] = t.coeff;
  }
  return UPoly(std::move(v));
}

Polynomial UPoly::to_polynomial(std::size_t nvars, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Exponents e(nvars, 0);
    e[var] = static_cast<std::uint32_t>(k);
    terms.push_back({std::move(e), c_[k]});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

int UPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

RationalInterval UPoly::eval(const RationalInterval& x) const {
  RationalInterval acc{Rational(0), Rational(0)};
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc = acc * x;
    acc.lo += c_[k];
    acc.hi += c_[k];
  }
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  return *this * (1 / lc());
}

UPoly UPoly::primitive() const {
  if (c_.empty()) return {};
  Integer den = 1, num = 0;
  for (const auto& c : c_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational f(den, num);
  f.canonicalize();
  if (lc() < 0) f = -f;
  return *this * f;
}

unsigned UPoly::sign_variations() const {
  unsigned n = 0;
  int last = 0;
  for (const auto& c : c_) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

UPoly UPoly::taylor_shift(const Rational& a) const {
  std::vector<Rational> v = c_;
  std::size_t n = v.size();
  // Horner-style synthetic shifts.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k-- > i;) v[k] += a * v[k + 1];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::reversed() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& c) const {
  std::vector<Rational> v = c_;
  Rational p = 1;
  for (auto& x : v) {
    x *= p;
    p *= c;
  }
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const Rational& c) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

UDivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("univariate division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  Rational inv = 1 / b.lc();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = r[static_cast<std::size_t>(k)] * inv;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).remainder; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    UPoly r = rem(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UPoly::constant(1);
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

Rational root_bound(const UPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(k)] / p.lc());
    if (r > m) m = r;
  }
  // Round up to an integer so interval endpoints stay small.
  Integer up = m.get_num() / m.get_den() + 2;
  return Rational(up);
}

}  // namespace cadform
