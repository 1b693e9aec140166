#pragma once

#include <optional>
#include <vector>

#include "cadform/real_roots.hpp"

namespace cadform {

/// The real field Q(alpha) for an algebraic number alpha. Elements are
/// polynomials in alpha reduced modulo its (irreducible) minimal polynomial.
/// Holds its own copy of alpha and refines it when deciding signs.
class NumberField {
 public:
  explicit NumberField(AlgebraicNumber alpha);

  const AlgebraicNumber& generator() const { return alpha_; }
  UPoly reduce(const UPoly& a) const;
  UPoly mul(const UPoly& a, const UPoly& b) const;
  /// Precondition: a nonzero.
  UPoly inverse(const UPoly& a) const;
  int sign(const UPoly& a);
  /// Rational enclosure of a's value at the current precision.
  RationalInterval enclose(const UPoly& a) const;
  void refine() { alpha_.refine(); }

 private:
  AlgebraicNumber alpha_;
};

/// Univariate polynomial with coefficients in a NumberField, ascending.
using ExtPoly = std::vector<UPoly>;

/// f(alpha, y) for a polynomial f in variables (alpha_var, y_var); trailing
/// zero coefficients removed. Empty means identically zero.
ExtPoly specialize(const Polynomial& f, std::size_t alpha_var, std::size_t y_var, const NumberField& k);

/// A real root of an ExtPoly: either an exact rational or the unique root of
/// the defining squarefree ExtPoly inside the open interval (lo, hi).
struct ExtRoot {
  IsolatingInterval interval;
  bool exact = false;
};

/// Isolated real roots of a nonzero g over Q(alpha) together with the
/// squarefree part used to define them.
struct ExtRootSet {
  ExtPoly squarefree;
  std::vector<ExtRoot> roots;
};

ExtRootSet isolate_roots_over_extension(const ExtPoly& g, NumberField& k);

/// Thrown when f(alpha, y) vanishes identically.
class NullifiedOverSample : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Roots in y of f(alpha, y). Throws NullifiedOverSample if the
/// specialization is identically zero.
ExtRootSet isolate_roots_over_extension(const Polynomial& f, const AlgebraicNumber& alpha, std::size_t alpha_var,
                                        std::size_t y_var);

/// Sign of h(alpha, beta) where beta is roots.roots[index].
int sign_at_section(const Polynomial& h, std::size_t alpha_var, std::size_t y_var, NumberField& k,
                    ExtRootSet& roots, std::size_t index);

/// Sign of h(alpha, r) for rational r.
int sign_at_rational(const Polynomial& h, std::size_t alpha_var, std::size_t y_var, NumberField& k,
                     const Rational& r);

/// Helpers on ExtPoly exposed for testing.
namespace ext {
int degree(const ExtPoly& a);
ExtPoly rem(const ExtPoly& a, const ExtPoly& b, const NumberField& k);
ExtPoly gcd(const ExtPoly& a, const ExtPoly& b, const NumberField& k);
ExtPoly derivative(const ExtPoly& a);
UPoly eval(const ExtPoly& a, const Rational& y, const NumberField& k);
}  // namespace ext

}  // namespace cadform
