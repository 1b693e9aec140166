#include "cadform/lifting.hpp"

#include <algorithm>
#include <sstream>

#include "cadform/algorithms.hpp"
#include "cadform/extension.hpp"

namespace cadform {

namespace detail {

struct Fiber {
  AlgebraicNumber alpha;
  NumberField field;
  ExtRootSet roots;

  explicit Fiber(const AlgebraicNumber& a) : alpha(a), field(a) {}
};

}  // namespace detail

namespace {

using detail::Fiber;

// Halves a non-exact fiber root interval. The squarefree part has a single
// simple root inside and none at hi.
void refine(ExtRootSet& rs, std::size_t i, NumberField& k) {
  ExtRoot& r = rs.roots[i];
  if (r.exact) return;
  int s_hi = k.sign(ext::eval(rs.squarefree, r.interval.hi, k));
  Rational mid = (r.interval.lo + r.interval.hi) / 2;
  int sm = k.sign(ext::eval(rs.squarefree, mid, k));
  if (sm == 0) {
    r.interval = {mid, mid};
    r.exact = true;
  } else if (sm == s_hi) {
    r.interval.hi = mid;
  } else {
    r.interval.lo = mid;
  }
}

// Rational sample for each sector between consecutive bounds, and beyond
// the extremes. hi(i) / lo(i) read the current interval of root i.
template <class Hi, class Lo, class Refine>
std::vector<Rational> sector_samples(std::size_t count, Hi hi, Lo lo, Refine refine_both) {
  if (count == 0) return {Rational(0)};
  std::vector<Rational> out;
  out.push_back(lo(0) - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    while (!(hi(i) < lo(i + 1))) refine_both(i);
    out.push_back((hi(i) + lo(i + 1)) / 2);
  }
  out.push_back(hi(count - 1) + 1);
  return out;
}

SampleCoordinate rational_coordinate(const Rational& r) {
  SampleCoordinate c;
  c.value = r;
  return c;
}

SampleCoordinate algebraic_coordinate(const AlgebraicNumber& a, std::size_t nvars) {
  if (a.is_rational()) return rational_coordinate(a.rational_value());
  SampleCoordinate c;
  c.rational = false;
  c.defining = a.minimal_poly().to_polynomial(nvars, 0);
  c.interval = a.interval();
  return c;
}

std::string sample_text(const AlgebraicNumber& a) {
  return a.is_rational() ? to_string(a.rational_value()) : a.to_string();
}

// Stack polynomials over one base sample. Full tables use the input-level
// factors. The equational-constraint operators use the QFF polynomials
// themselves: a polynomial whose content vanishes at the sample is zero on
// the whole fiber, and its primitive part's roots do not matter there.
std::vector<Polynomial> stack_polynomials(const ProjectionTable& t, Fiber& fiber, std::vector<std::string>& warnings) {
  std::vector<Polynomial> chosen;
  auto add = [&](const Polynomial& f) {
    if (!f.involves(1)) return;
    Polynomial g = normalize(f);
    if (std::find(chosen.begin(), chosen.end(), g) == chosen.end()) chosen.push_back(std::move(g));
  };
  if (t.kind == ProjectionKind::Full || t.qffs.empty()) {
    for (const auto& f : t.level(2)) add(f);
  } else {
    for (const auto& q : t.qffs) {
      add(q.ec);
      if (!specialize(q.ec, 0, 1, fiber.field).empty()) continue;
      for (const auto& p : q.others) add(p);
    }
  }
  std::vector<Polynomial> out;
  for (const auto& f : chosen) {
    if (specialize(f, 0, 1, fiber.field).empty()) {
      warnings.push_back(f.to_string(t.order) + " vanishes on the whole fiber over " + t.order.name(0) + " = " +
                         sample_text(fiber.alpha) + "; left out of the stack");
      continue;
    }
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<CadCell> build_stack(const CadTree& tree, std::size_t base_index, Fiber& fiber,
                                 const std::vector<Polynomial>& polys) {
  std::size_t n = tree.order.size();
  Polynomial product = Polynomial::constant(n, 1);
  for (const auto& f : polys) product = product * f;
  fiber.roots = isolate_roots_over_extension(specialize(product, 0, 1, fiber.field), fiber.field);
  auto& rs = fiber.roots;
  std::size_t k = rs.roots.size();
  auto hi = [&](std::size_t i) { return rs.roots[i].interval.hi; };
  auto lo = [&](std::size_t i) { return rs.roots[i].interval.lo; };
  auto sectors = sector_samples(k, hi, lo, [&](std::size_t i) {
    refine(rs, i, fiber.field);
    refine(rs, i + 1, fiber.field);
  });

  const CadCell& base = tree.base[base_index];
  std::vector<CadCell> out;
  for (std::size_t j = 0; j < 2 * k + 1; ++j) {
    CadCell c;
    c.index = {base.index[0], j + 1};
    c.dimension = base.dimension + (j % 2 == 0 ? 1 : 0);
    c.sample = base.sample;
    if (j % 2 == 0) {
      c.sample.push_back(rational_coordinate(sectors[j / 2]));
    } else {
      std::size_t r = j / 2;
      SampleCoordinate y;
      if (rs.roots[r].exact) {
        y = rational_coordinate(rs.roots[r].interval.lo);
      } else {
        y.rational = false;
        for (const auto& f : polys) {
          if (sign_at_section(f, 0, 1, fiber.field, rs, r) == 0) {
            y.defining = f;
            break;
          }
        }
        // sign_at_section may have pinned the root to a rational.
        if (rs.roots[r].exact) y = rational_coordinate(rs.roots[r].interval.lo);
        y.interval = rs.roots[r].interval;
      }
      c.sample.push_back(std::move(y));
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Zero-based cell position of a value among `count` increasing roots, given
// cmp(r) = sign(root_r - value).
template <class Cmp>
std::size_t position(std::size_t count, Cmp cmp) {
  std::size_t below = 0;
  for (; below < count; ++below) {
    int s = cmp(below);
    if (s == 0) return 2 * below + 1;
    if (s > 0) break;
  }
  return 2 * below;
}

}  // namespace

std::string SampleCoordinate::to_string(const VariableOrder& order) const {
  if (rational) return cadform::to_string(value);
  return "root of " + defining.to_string(order) + " in (" + cadform::to_string(interval.lo) + ", " +
         cadform::to_string(interval.hi) + ")";
}

std::vector<const CadCell*> CadTree::leaves() const {
  std::vector<const CadCell*> out;
  if (stacks.empty()) {
    for (const auto& c : base) out.push_back(&c);
    return out;
  }
  for (const auto& s : stacks) {
    for (const auto& c : s) out.push_back(&c);
  }
  return out;
}

std::size_t CadTree::cell_count() const { return leaves().size(); }

std::size_t CadTree::count_of_dimension(std::size_t d) const {
  auto ls = leaves();
  return static_cast<std::size_t>(std::count_if(ls.begin(), ls.end(), [&](const CadCell* c) { return c->dimension == d; }));
}

CadTree lift(const ProjectionTable& table) {
  std::size_t n = table.dimension();
  if (n == 0 || n > 2) throw DomainError("lifting supports one or two variables, got " + std::to_string(n));
  CadTree tree;
  tree.order = table.order;
  tree.kind = table.kind;
  tree.warnings = table.warnings;

  std::vector<Polynomial> univariate;
  for (const auto& f : table.level(1)) univariate.push_back(f);
  auto roots = isolate_real_roots(std::span<const Polynomial>(univariate));
  std::size_t k = roots.size();
  auto sectors = sector_samples(
      k, [&](std::size_t i) { return roots[i].interval().hi; }, [&](std::size_t i) { return roots[i].interval().lo; },
      [&](std::size_t i) {
        roots[i].refine();
        roots[i + 1].refine();
      });
  for (std::size_t i = 0; i < 2 * k + 1; ++i) {
    CadCell c;
    c.index = {i + 1};
    c.dimension = i % 2 == 0 ? 1 : 0;
    AlgebraicNumber alpha = i % 2 == 0 ? AlgebraicNumber(sectors[i / 2]) : roots[i / 2];
    c.sample.push_back(algebraic_coordinate(alpha, n));
    tree.base.push_back(std::move(c));
    tree.fibers.push_back(std::make_shared<Fiber>(alpha));
  }
  if (n == 1) return tree;

  for (std::size_t i = 0; i < tree.base.size(); ++i) {
    Fiber& fiber = *tree.fibers[i];
    auto polys = stack_polynomials(table, fiber, tree.warnings);
    tree.stacks.push_back(build_stack(tree, i, fiber, polys));
    tree.stack_polynomials.push_back(std::move(polys));
  }
  return tree;
}

std::size_t count_cells(const ProjectionTable& table) { return lift(table).cell_count(); }

std::vector<std::vector<int>> sign_table(const CadTree& tree, std::span<const Polynomial> polys) {
  std::vector<std::vector<int>> out;
  std::size_t n = tree.order.size();
  for (const CadCell* c : tree.leaves()) {
    Fiber& fiber = *tree.fibers.at(c->index[0] - 1);
    std::vector<int> row;
    for (const auto& p : polys) {
      if (p.nvars() != n) throw DomainError("polynomial variable count does not match the decomposition");
      if (n == 1) {
        row.push_back(p.is_constant() ? sgn(p.constant_value()) : sign_at(p, fiber.alpha));
        continue;
      }
      std::size_t j = c->index[1] - 1;
      const SampleCoordinate& y = c->sample[1];
      if (y.rational) {
        row.push_back(sign_at_rational(p, 0, 1, fiber.field, y.value));
      } else {
        row.push_back(sign_at_section(p, 0, 1, fiber.field, fiber.roots, j / 2));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::optional<std::size_t> locate(const CadTree& tree, std::span<const Rational> point) {
  std::size_t n = tree.order.size();
  if (point.size() != n) throw DomainError("point dimension does not match the decomposition");
  std::size_t i = position(tree.base.size() / 2, [&](std::size_t r) { return compare(tree.fibers[2 * r + 1]->alpha, point[0]); });
  if (n == 1) return i;

  std::vector<Polynomial> fiber_polys;
  for (const auto& f : tree.stack_polynomials[i]) {
    Polynomial u = f.substitute(0, point[0]);
    if (!u.is_constant()) fiber_polys.push_back(std::move(u));
  }
  auto roots = isolate_real_roots(std::span<const Polynomial>(fiber_polys));
  if (roots.size() != tree.fibers[i]->roots.roots.size()) return std::nullopt;
  std::size_t j = position(roots.size(), [&](std::size_t r) { return compare(roots[r], point[1]); });
  std::size_t offset = 0;
  for (std::size_t b = 0; b < i; ++b) offset += tree.stacks[b].size();
  return offset + j;
}

std::string format_cells(const CadTree& tree) {
  std::ostringstream os;
  auto leaves = tree.leaves();
  os << leaves.size() << " cells over " << tree.order.to_string() << "\n";
  for (const CadCell* c : leaves) {
    os << "(";
    for (std::size_t k = 0; k < c->index.size(); ++k) os << (k ? ", " : "") << c->index[k];
    os << ") dim " << c->dimension << ":";
    for (std::size_t k = 0; k < c->sample.size(); ++k) {
      os << (k ? "," : "") << " " << tree.order.name(k) << " = " << c->sample[k].to_string(tree.order);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cadform
