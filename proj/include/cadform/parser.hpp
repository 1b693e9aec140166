#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cadform/formula.hpp"
#include "cadform/polynomial.hpp"

namespace cadform {

/// Parses an expression over the given variables: integers, decimal-free
/// rationals written as a/b, + - * ^ and parentheses. Implicit
/// multiplication is not accepted. Throws ParseError with 1-based columns.
Polynomial parse_polynomial(std::string_view text, const VariableOrder& vars);

/// Parses a formula: relations = != < > <= >= between expressions, joined
/// with /\, \/, ~ and parentheses; true and false are constants. Positions
/// in errors are offset by line and column0 (text may span lines).
Formula parse_formula(std::string_view text, const VariableOrder& vars, std::size_t line = 1,
                      std::size_t column0 = 0);

/// "x < y < z" over exactly the declared variables.
VariableOrder parse_ordering(std::string_view text, const VariableOrder& declared, std::size_t line = 1,
                             std::size_t column0 = 0);

enum class Mode { Full, Ec, Tticad };

std::string_view to_string(Mode mode);

/// A problem description read from a text file:
///
///     name: single_curve
///     vars: x, y
///     formula: (x-1)*(y^2+1) - 1 = 0
///     orderings: x < y
///     orderings: y < x
///     mode: full
///
/// `vars` lists variables lowest first; `|` separates quantifier blocks,
/// and only orderings that keep the blocks in sequence are admissible.
/// Indented lines continue the previous value. `#` starts a comment line.
struct ProblemFile {
  std::string name;
  std::string description;
  VariableOrder variables;
  std::vector<std::vector<std::string>> blocks;
  Formula formula;
  std::vector<VariableOrder> orderings;
  std::optional<Mode> mode;
  /// Entries without polynomials; only name, description and expected are meaningful.
  bool metadata_only = false;
  std::vector<std::string> expected;

  /// Orderings permuting variables within blocks, in lexicographic order of
  /// their name lists.
  std::vector<VariableOrder> admissible_orderings() const;
  /// Declared orderings when present, otherwise all admissible ones.
  std::vector<VariableOrder> candidate_orderings() const;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

ProblemFile parse_problem(std::string_view text);

/// Problem file text that parses back to an equal ProblemFile.
std::string to_string(const ProblemFile& problem);

}  // namespace cadform
