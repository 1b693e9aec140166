#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cadform/projection.hpp"
#include "cadform/real_roots.hpp"

namespace cadform {

/// One coordinate of a sample point: a rational, or the root of `defining`
/// inside `interval`. For the second coordinate `defining` is bivariate and
/// the interval bounds the root over the cell's first coordinate.
struct SampleCoordinate {
  bool rational = true;
  Rational value;
  Polynomial defining;
  IsolatingInterval interval;

  std::string to_string(const VariableOrder& order) const;
};

struct CadCell {
  /// Position within each stack, 1-based: odd for sectors, even for sections.
  std::vector<std::size_t> index;
  std::size_t dimension = 0;
  std::vector<SampleCoordinate> sample;
};

namespace detail {
struct Fiber;
}

struct CadTree {
  VariableOrder order;
  ProjectionKind kind = ProjectionKind::Full;
  /// Cells of the line.
  std::vector<CadCell> base;
  /// For two variables, the stack over each base cell, bottom to top, and
  /// the polynomials whose roots delimit it.
  std::vector<std::vector<CadCell>> stacks;
  std::vector<std::vector<Polynomial>> stack_polynomials;
  std::vector<std::string> warnings;
  /// Per base cell: the base sample as a number field and the isolated
  /// fiber roots. Refined in place by sign queries.
  std::vector<std::shared_ptr<detail::Fiber>> fibers;

  /// Cells of the full decomposition: base cells for one variable, stack
  /// cells for two.
  std::vector<const CadCell*> leaves() const;
  std::size_t cell_count() const;
  std::size_t count_of_dimension(std::size_t d) const;
};

/// CAD of R^1 or R^2 from a projection table. Full tables lift with every
/// input-level factor. For the equational-constraint operators each QFF
/// contributes the factors of its designated equation, plus those of its
/// other polynomials over base cells where the equation vanishes on the
/// whole fiber. Factors vanishing identically over a base sample are left
/// out with a warning. Throws DomainError for more than two variables.
CadTree lift(const ProjectionTable& table);
std::size_t count_cells(const ProjectionTable& table);

/// Signs of the polynomials (over the tree's order) at every leaf sample,
/// in leaf order.
std::vector<std::vector<int>> sign_table(const CadTree& tree, std::span<const Polynomial> polys);

/// Leaf containing a rational point, or std::nullopt when the fiber over the
/// point's base coordinate does not have the stack's root count (the stack
/// polynomials are then not delineable there).
std::optional<std::size_t> locate(const CadTree& tree, std::span<const Rational> point);

/// One line per leaf: index tuple, dimension and sample coordinates.
std::string format_cells(const CadTree& tree);

}  // namespace cadform
