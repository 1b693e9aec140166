#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cadform/polynomial.hpp"

namespace cadform {

enum class Relation { Eq, Ne, Lt, Gt, Le, Ge };

std::string_view to_string(Relation rel);
/// Relation r' with not(p r 0) <=> p r' 0.
Relation negate(Relation rel);
/// Relation r' with p r 0 <=> (-p) r' 0.
Relation mirror(Relation rel);
/// Truth of s r 0 for a sign s in {-1, 0, 1}.
bool holds(Relation rel, int sign);

/// p rel 0 with p non-constant.
struct Atom {
  Polynomial poly;
  Relation rel = Relation::Eq;

  bool is_equation() const { return rel == Relation::Eq; }
  /// Same atom with poly normalized (integer, primitive, positive leading
  /// coefficient) and the relation mirrored when the scale was negative.
  Atom normalized() const;
  std::string to_string(const VariableOrder& order) const;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Boolean combination of atoms.
class Formula {
 public:
  enum class Kind { True, False, Atom, And, Or, Not };

  Formula() = default;
  static Formula constant(bool value);
  static Formula atom(Atom a);
  static Formula conjunction(std::vector<Formula> children);
  static Formula disjunction(std::vector<Formula> children);
  static Formula negation(Formula child);

  Kind kind() const { return kind_; }
  const Atom& atom() const { return atom_.value(); }
  const std::vector<Formula>& children() const { return children_; }

  /// Negations pushed onto atoms; constants folded away where possible.
  Formula nnf() const;
  /// Atoms in left-to-right order, duplicates kept.
  std::vector<Atom> atoms() const;
  /// Truth value given the sign of every polynomial that occurs.
  bool evaluate(const std::function<int(const Polynomial&)>& sign) const;

  /// Infix text with /\, \/ and ~; reparses to an identical tree.
  std::string to_string(const VariableOrder& order) const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Kind kind_ = Kind::True;
  std::optional<Atom> atom_;
  std::vector<Formula> children_;
};

/// Conjunction of atoms, optionally with a designated equational constraint.
struct Qff {
  std::vector<Atom> conjuncts;
  std::optional<std::size_t> designated_ec;

  std::vector<std::size_t> equation_indices() const;
  /// Polynomials of all conjuncts in order.
  std::vector<Polynomial> polynomials() const;
  bool evaluate(const std::function<int(const Polynomial&)>& sign) const;
  /// Canonical text; the designated equation is marked with a leading '*'.
  std::string to_string(const VariableOrder& order) const;

  friend bool operator==(const Qff&, const Qff&) = default;
};

/// Disjunctive normal form. Clause order follows the distribution of the
/// formula left to right; repeated atoms within a clause and repeated
/// clauses are dropped. A true formula gives one empty clause, a false one
/// gives no clauses.
std::vector<Qff> to_dnf(const Formula& f);

Formula from_dnf(const std::vector<Qff>& clauses);

/// Remaps every polynomial of f between two orders over the same names.
Formula remap(const Formula& f, const VariableOrder& from, const VariableOrder& to);
Qff remap(const Qff& q, const VariableOrder& from, const VariableOrder& to);

}  // namespace cadform
