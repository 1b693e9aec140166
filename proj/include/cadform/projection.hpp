#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cadform/polynomial.hpp"

namespace cadform {

enum class ProjectionKind { Full, Reduced, Tticad };

std::string to_string(ProjectionKind kind);

/// One QFF as seen by the EC-based operators: a designated equational
/// constraint and the remaining polynomials of the clause.
struct QffProjectionSpec {
  Polynomial ec;
  std::vector<Polynomial> others;
};

/// Leveled projection factors. levels[k] holds the factors whose main
/// variable is order.name(k); levels[0] is the univariate level and
/// levels[n-1] the input level.
struct ProjectionTable {
  VariableOrder order;
  ProjectionKind kind = ProjectionKind::Full;
  std::vector<std::vector<Polynomial>> levels;
  /// For Reduced and Tticad tables: the clause structure used at the first
  /// projection, needed again when lifting.
  std::vector<QffProjectionSpec> qffs;
  std::vector<std::string> warnings;

  std::size_t dimension() const { return levels.size(); }
  /// Level k counted from 1 (univariate) to n (input).
  const std::vector<Polynomial>& level(std::size_t k) const { return levels.at(k - 1); }
  std::vector<Polynomial> all_factors() const;
};

/// Options shared by the operators.
struct ProjectionOptions {
  /// Stop after computing this many levels from the top (input level
  /// included); the remaining levels are left empty. Zero means all levels.
  std::size_t max_levels = 0;
};

/// Coefficients of p in var from the top down, keeping non-constant ones and
/// stopping at the first nonzero constant or after the first coefficient
/// that provably has no real zeros.
/// Sufficient test: nonzero constant, univariate without real roots, or a
/// same-signed sum of even monomials with a constant term.
bool has_no_real_zeros(const Polynomial& c);

std::vector<Polynomial> needed_coefficients(const Polynomial& p, std::size_t var);

/// McCallum's operator applied to a set of basis elements whose main variable
/// is var: needed coefficients, discriminants and pairwise resultants.
std::vector<Polynomial> mccallum_step(std::span<const Polynomial> basis, std::size_t var);

/// One elimination. `level` is the basis of the inputs restricted to
/// elements with main variable var; `pending` holds the remaining basis
/// elements plus the projection polynomials (not yet a basis).
struct ProjectionStep {
  std::vector<Polynomial> level;
  std::vector<Polynomial> pending;
  std::vector<std::string> warnings;
};

/// Step of the full operator; var must be the highest variable occurring.
ProjectionStep project_step(std::span<const Polynomial> ps, std::size_t var);
/// First step of the equational-constraint operators.
ProjectionStep project_step(std::span<const QffProjectionSpec> qffs, std::size_t var, const VariableOrder& order);

ProjectionTable project_full(std::span<const Polynomial> ps, const VariableOrder& order,
                             const ProjectionOptions& options = {});

ProjectionTable project_reduced(const Polynomial& ec, std::span<const Polynomial> others,
                                const VariableOrder& order, const ProjectionOptions& options = {});

ProjectionTable project_tticad(std::span<const QffProjectionSpec> qffs, const VariableOrder& order,
                               const ProjectionOptions& options = {});

/// Structured text report: one block per level from the input level down,
/// with per-level sotd and the level-1 ndrr.
std::string format_table(const ProjectionTable& table);

}  // namespace cadform
