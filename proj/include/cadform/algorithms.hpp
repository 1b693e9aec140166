#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cadform/polynomial.hpp"

namespace cadform {

/// Quotient a / b when b divides a exactly, std::nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b with respect to var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

struct ContentPrimitive {
  Polynomial content;    ///< free of the main variable, carries the rational unit
  Polynomial primitive;  ///< normalized: integer, content 1, positive leading coefficient
};

/// Splits p = content * primitive with respect to var. Throws on zero input.
ContentPrimitive content_primitive(const Polynomial& p, std::size_t var);

/// Normalized greatest common divisor; gcd(p, 0) = normalize(p), gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Resultant with respect to var via the subresultant PRS. Both arguments
/// must have positive degree in var.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var);

/// (-1)^(d(d-1)/2) res(p, dp/dvar) / lc(p). Requires degree >= 2 in var and
/// throws DegreeTooLow otherwise.
Polynomial discriminant(const Polynomial& p, std::size_t var);

class DegreeTooLow : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Normalized product of the distinct irreducible factors of p.
Polynomial squarefree_part(const Polynomial& p);

/// Pairwise coprime, squarefree, normalized non-constant polynomials whose
/// product has the same squarefree part as the product of the inputs.
/// Contents are split off recursively (every element is primitive in its own
/// main variable) and univariate elements are irreducible. Sorted canonically.
std::vector<Polynomial> squarefree_coprime_basis(std::span<const Polynomial> ps);

/// Adds p into an existing basis, refining elements as needed.
void refine_basis(std::vector<Polynomial>& basis, const Polynomial& p);

struct Factor {
  Polynomial factor;
  unsigned multiplicity;
};

struct Factorization {
  Rational unit;
  std::vector<Factor> factors;  ///< irreducible, normalized, sorted canonically
};

/// Complete factorization over the rationals of a nonzero univariate
/// (or constant) polynomial.
Factorization factor_univariate(const Polynomial& p);

}  // namespace cadform
