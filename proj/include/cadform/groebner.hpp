#pragma once

#include <span>
#include <string>
#include <vector>

#include "cadform/formula.hpp"
#include "cadform/polynomial.hpp"

namespace cadform {

/// Reduced Gröbner basis under pure lex with the CAD order's most
/// significant variable (the one projected first) highest.
///
/// Generators are normalized and listed by increasing leading monomial, so
/// the elimination polynomial in the fewest variables comes first.
struct GroebnerBasis {
  VariableOrder order;
  std::vector<Polynomial> generators;

  bool is_unit() const { return generators.size() == 1 && generators.front().is_constant(); }
};

/// Reduced lex basis of the ideal generated by fs. Zero inputs are ignored;
/// throws DomainError if none is nonzero.
GroebnerBasis buchberger(std::span<const Polynomial> fs, const VariableOrder& order);

/// S-polynomial of two nonzero polynomials under lex.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Normal form: no monomial of the result is divisible by a leading monomial
/// of the basis, and g minus the result lies in the ideal.
Polynomial reduce(const Polynomial& g, std::span<const Polynomial> basis);
Polynomial reduce(const Polynomial& g, const GroebnerBasis& basis);

struct PreconditionResult {
  Qff qff;
  GroebnerBasis basis;
  /// The equations are inconsistent or some relation reduced to a false constant.
  bool is_false = false;
  /// Output conjuncts equal the input conjuncts.
  bool unchanged = false;
  std::vector<std::string> notes;
};

/// Replaces the equations of a conjunction by a reduced lex basis and every
/// other relation by its normal form. Relations whose normal form is constant
/// are decided on the spot. Throws DomainError without an equation.
PreconditionResult precondition_qff(const Qff& qff, const VariableOrder& order);

enum class TnoiVerdict { Beneficial, Inconclusive };

std::string_view to_string(TnoiVerdict verdict);

/// Beneficial iff tnoi(after) < tnoi(before).
TnoiVerdict tnoi_verdict(std::span<const Polynomial> before, std::span<const Polynomial> after);

/// One generator per line with the lex order annotated.
std::string format_basis(const GroebnerBasis& basis);

}  // namespace cadform
