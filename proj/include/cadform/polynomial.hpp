#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cadform/error.hpp"

namespace cadform {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector; entry i is the exponent of variable i.
using Exponents = std::vector<std::uint32_t>;

/// Pure lexicographic comparison with the highest-index variable most
/// significant. Returns <0, 0, >0.
int lex_compare(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exponents;
  Rational coeff;
};

/// Ordered list of variable names, lowest (univariate level) first.
class VariableOrder {
 public:
  VariableOrder() = default;
  explicit VariableOrder(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// "x < y < z"
  std::string to_string() const;

  friend bool operator==(const VariableOrder&, const VariableOrder&) = default;
  friend auto operator<=>(const VariableOrder&, const VariableOrder&) = default;

 private:
  std::vector<std::string> names_;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted in strictly decreasing lex order (highest variable
/// index most significant) and no stored coefficient is zero, so two
/// polynomials are mathematically equal iff their term lists are equal.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);
  /// Builds a polynomial from arbitrary terms: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero for the zero polynomial).
  Rational constant_value() const;

  /// Degree in one variable; -1 for the zero polynomial.
  int degree(std::size_t var) const;
  std::uint32_t total_degree() const;
  /// Highest-index variable that occurs, if any.
  std::optional<std::size_t> main_variable() const;
  std::vector<std::size_t> variables() const;
  bool involves(std::size_t var) const { return degree(var) > 0; }
  /// True when exactly one variable occurs.
  bool is_univariate() const { return variables().size() == 1; }

  /// Lex-leading term; precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }

  /// Coefficients as polynomials free of `var`; element i multiplies var^i.
  std::vector<Polynomial> coefficients(std::size_t var) const;
  /// Coefficient of var^deg(var); precondition: nonzero.
  Polynomial leading_coefficient_in(std::size_t var) const;
  /// Assembles sum coeffs[i] * var^i.
  static Polynomial from_coefficients(std::size_t nvars, std::size_t var,
                                      std::span<const Polynomial> coeffs);

  Polynomial derivative(std::size_t var) const;
  Polynomial substitute(std::size_t var, const Rational& value) const;
  /// Multiplies by var^k.
  Polynomial shifted(std::size_t var, std::uint32_t k) const;
  /// Rational evaluation at a full point.
  Rational evaluate(std::span<const Rational> point) const;
  /// Re-indexes variables: variable i of this becomes variable mapping[i] of
  /// a polynomial over `nvars` variables.
  Polynomial remapped(std::span<const std::size_t> mapping, std::size_t nvars) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Total order used for canonical sorting of polynomial sets.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b);

  /// Deterministic text form in the shared polynomial syntax.
  std::string to_string(const VariableOrder& vars) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

struct CanonicalLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const { return canonical_less(a, b); }
};

/// Scales p to integer coefficients with content 1 and positive lex-leading
/// coefficient. The zero polynomial is returned unchanged.
Polynomial normalize(const Polynomial& p);

/// The positive rational c with p = c * normalize(p) up to sign; returns the
/// signed factor so that p == factor * normalize(p).
Rational normalization_factor(const Polynomial& p);

/// Sorts and removes duplicates under the canonical order.
void sort_unique(std::vector<Polynomial>& ps);

/// Remaps p from one variable order to another with the same names.
Polynomial remap(const Polynomial& p, const VariableOrder& from, const VariableOrder& to);

std::string to_string(const Rational& r);

}  // namespace cadform
