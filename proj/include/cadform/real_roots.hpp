#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cadform/polynomial.hpp"
#include "cadform/univariate.hpp"

namespace cadform {

/// Sturm sequence p, p', -rem(p, p'), ... of a nonzero univariate polynomial.
class SturmChain {
 public:
  explicit SturmChain(const UPoly& p);

  const std::vector<UPoly>& sequence() const { return seq_; }
  unsigned variations_at(const Rational& x) const;
  unsigned variations_at_minus_infinity() const;
  unsigned variations_at_plus_infinity() const;
  /// Distinct real roots of p.
  unsigned count() const;
  /// Distinct real roots in the half-open interval (lo, hi].
  unsigned count_in(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<UPoly> seq_;
};

/// Exact count via Sturm on the squarefree part. Rejects zero and
/// multivariate input with DomainError.
unsigned count_distinct_real_roots(const Polynomial& p);

/// Distinct real roots of the product of the nonzero members (shared roots
/// counted once). Constants contribute nothing.
unsigned count_distinct_real_roots(std::span<const Polynomial> ps);

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// A real root of an irreducible primitive polynomial together with an
/// isolating interval. Degree-one polynomials give rational numbers with
/// point intervals; otherwise the interval is open and its endpoints are
/// never roots. Refinement mutates the interval in place, so share an
/// instance across threads only behind external synchronization.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  explicit AlgebraicNumber(const Rational& r);
  /// Precondition: minimal_poly irreducible and primitive with exactly one
  /// root in the open interval (lo, hi).
  AlgebraicNumber(UPoly minimal_poly, IsolatingInterval interval);

  const UPoly& minimal_poly() const { return m_; }
  const IsolatingInterval& interval() const { return iv_; }
  bool is_rational() const { return m_.degree() == 1; }
  /// Precondition: is_rational().
  const Rational& rational_value() const { return iv_.lo; }

  /// Halves the interval (no-op for rationals).
  void refine();
  /// Refines until the interval width is at most w.
  void refine_to(const Rational& w);
  /// Sign of q(alpha); q is given as a univariate polynomial in alpha's variable.
  int sign_of(const UPoly& q);
  /// A rational within the current interval (the midpoint).
  Rational approximation() const;
  double to_double() const;
  std::string to_string() const;

 private:
  UPoly m_;
  IsolatingInterval iv_;
  int sign_lo_ = 0;  // sign of m_ at iv_.lo, cached
};

/// -1, 0, +1 as a < b, a == b, a > b. Refines both arguments as needed.
int compare(AlgebraicNumber& a, AlgebraicNumber& b);
int compare(AlgebraicNumber& a, const Rational& r);

/// Roots of p in increasing order, each with its irreducible defining factor.
std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p);
std::vector<AlgebraicNumber> isolate_real_roots(const UPoly& p);
/// Union of the real roots of the members, increasing, without repeats.
std::vector<AlgebraicNumber> isolate_real_roots(std::span<const Polynomial> ps);

/// Sign of q(alpha). q must be univariate in alpha's variable (or constant).
int sign_at(const Polynomial& q, AlgebraicNumber& alpha);

/// Human-readable Sturm chain dump used by the CLI trace output.
std::string describe(const SturmChain& chain, const std::string& var);

}  // namespace cadform
