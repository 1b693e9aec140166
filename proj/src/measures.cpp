#include "cadform/measures.hpp"

#include "cadform/real_roots.hpp"

namespace cadform {

std::size_t sotd(std::span<const Polynomial> ps) {
  std::size_t s = 0;
  for (const auto& p : ps) {
    for (const auto& t : p.terms()) {
      for (auto e : t.exponents) s += e;
    }
  }
  return s;
}

std::size_t sotd(const ProjectionTable& table) {
  std::size_t s = 0;
  for (const auto& lvl : table.levels) s += sotd(lvl);
  return s;
}

std::size_t ndrr(std::span<const Polynomial> univariate) {
  for (const auto& p : univariate) {
    if (p.variables().size() > 1) throw Error("internal: level-1 factor is not univariate");
  }
  return count_distinct_real_roots(univariate);
}

std::size_t ndrr(const ProjectionTable& table) {
  if (table.levels.empty()) return 0;
  return ndrr(table.levels.front());
}

std::size_t tnoi(std::span<const Polynomial> ps) {
  std::size_t n = 0;
  for (const auto& p : ps) n += p.variables().size();
  return n;
}

MeasureVector measure(const ProjectionTable& table) { return {sotd(table), ndrr(table), std::nullopt}; }

}  // namespace cadform
