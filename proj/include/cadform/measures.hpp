#pragma once

#include <optional>
#include <span>

#include "cadform/polynomial.hpp"
#include "cadform/projection.hpp"

namespace cadform {

struct MeasureVector {
  std::size_t sotd = 0;
  std::size_t ndrr = 0;
  std::optional<std::size_t> tnoi;

  friend bool operator==(const MeasureVector&, const MeasureVector&) = default;
};

/// Sum over the polynomials of the total degrees of their monomials.
std::size_t sotd(std::span<const Polynomial> ps);
/// sotd over every level of the table, input level included.
std::size_t sotd(const ProjectionTable& table);

/// Distinct real roots of the product of univariate polynomials.
std::size_t ndrr(std::span<const Polynomial> univariate);
/// ndrr of the table's level-1 factors.
std::size_t ndrr(const ProjectionTable& table);

/// Sum over the polynomials of the number of variables occurring in each.
/// Duplicates count separately.
std::size_t tnoi(std::span<const Polynomial> ps);

MeasureVector measure(const ProjectionTable& table);

}  // namespace cadform
