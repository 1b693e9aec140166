#pragma once

#include <vector>

#include "cadform/polynomial.hpp"

namespace cadform {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  /// -1 / +1 when the interval lies strictly on one side of zero, 0 otherwise.
  int strict_sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);

/// Dense univariate polynomial over the rationals, coefficients ascending.
/// Leading zeros are never stored.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
  static UPoly monomial(const Rational& c, unsigned k);
  /// Precondition: p involves no variable other than var.
  static UPoly from_polynomial(const Polynomial& p, std::size_t var);
  Polynomial to_polynomial(std::size_t nvars, std::size_t var) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lc() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;
  RationalInterval eval(const RationalInterval& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients, content 1, positive leading coefficient.
  UPoly primitive() const;
  /// Number of sign changes in the coefficient sequence (zeros skipped).
  unsigned sign_variations() const;
  /// p(x + a)
  UPoly taylor_shift(const Rational& a) const;
  /// x^deg * p(1/x)
  UPoly reversed() const;
  /// p(c * x)
  UPoly scaled(const Rational& c) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& c);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct UDivMod {
  UPoly quotient;
  UPoly remainder;
};

UDivMod divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Squarefree part, monic.
UPoly squarefree_part(const UPoly& p);
/// Cauchy bound: every real root r satisfies |r| < bound.
Rational root_bound(const UPoly& p);

}  // namespace cadform
