#include "cadform/projection.hpp"

#include <sstream>

#include "cadform/algorithms.hpp"
#include "cadform/measures.hpp"
#include "cadform/real_roots.hpp"

namespace cadform {

std::string to_string(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::Full: return "full";
    case ProjectionKind::Reduced: return "reduced";
    case ProjectionKind::Tticad: return "tticad";
  }
  return "?";
}

std::vector<Polynomial> ProjectionTable::all_factors() const {
  std::vector<Polynomial> out;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

bool has_no_real_zeros(const Polynomial& c) {
  if (c.is_constant()) return !c.is_zero();
  if (c.is_univariate()) return count_distinct_real_roots(c) == 0;
  // Sum of even monomials with a nonzero constant term and one common sign.
  int sign = 0;
  bool has_constant = false;
  for (const auto& t : c.terms()) {
    bool constant = true;
    for (auto e : t.exponents) {
      if (e % 2 != 0) return false;
      constant = constant && e == 0;
    }
    has_constant = has_constant || constant;
    int s = sgn(t.coeff);
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  return has_constant;
}

std::vector<Polynomial> needed_coefficients(const Polynomial& p, std::size_t var) {
  std::vector<Polynomial> out;
  auto cs = p.coefficients(var);
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    if (cs[i].is_constant()) break;
    out.push_back(cs[i]);
    if (has_no_real_zeros(cs[i])) break;
  }
  return out;
}

namespace {

void add_discriminant(const Polynomial& p, std::size_t var, std::vector<Polynomial>& out) {
  if (p.degree(var) >= 2) out.push_back(discriminant(p, var));
}

void check_inputs(std::span<const Polynomial> ps) {
  for (const auto& p : ps) {
    if (p.is_zero()) throw DegenerateInput("input polynomial is identically zero");
  }
}

std::size_t nvars_of(const VariableOrder& order, std::span<const Polynomial> ps) {
  for (const auto& p : ps) {
    if (p.nvars() != order.size()) throw DomainError("polynomial variable count does not match the order");
  }
  return order.size();
}

struct Split {
  std::vector<Polynomial> top;
  std::vector<Polynomial> rest;
};

Split split_basis(std::span<const Polynomial> ps, std::size_t var) {
  Split s;
  for (auto& b : squarefree_coprime_basis(ps)) {
    if (*b.main_variable() == var) {
      s.top.push_back(std::move(b));
    } else {
      s.rest.push_back(std::move(b));
    }
  }
  return s;
}

// Projects the pending set level by level with McCallum's operator,
// starting at level index k.
void descend(ProjectionTable& t, std::vector<Polynomial> pending, std::size_t k, std::size_t computed,
             const ProjectionOptions& options) {
  while (k-- > 0) {
    if (options.max_levels != 0 && computed >= options.max_levels) return;
    ProjectionStep s = project_step(pending, k);
    pending = std::move(s.pending);
    t.levels[k] = std::move(s.level);
    ++computed;
  }
}

// res(p, q) in var, falling back to the gcd's projection ingredients plus
// the resultant of the cofactors when the resultant vanishes identically.
void resultant_or_gcd(const Polynomial& p, const Polynomial& q, std::size_t var, const VariableOrder& order,
                      std::vector<Polynomial>& out, std::vector<std::string>& warnings) {
  Polynomial r = resultant(p, q, var);
  if (!r.is_zero()) {
    out.push_back(std::move(r));
    return;
  }
  Polynomial g = gcd(p, q);
  warnings.push_back("resultant of " + p.to_string(order) + " and " + q.to_string(order) + " in " + order.name(var) +
                     " vanishes identically; using their common factor " + g.to_string(order) + " instead");
  auto coeffs = needed_coefficients(g, var);
  out.insert(out.end(), coeffs.begin(), coeffs.end());
  add_discriminant(g, var, out);
  Polynomial p1 = *divide_exact(p, g), q1 = *divide_exact(q, g);
  if (p1.involves(var) && q1.involves(var)) resultant_or_gcd(p1, q1, var, order, out, warnings);
}

// Reduced-operator contribution of one clause at the first projection.
void ec_contribution(const QffProjectionSpec& q, std::size_t var, const VariableOrder& order,
                     std::vector<Polynomial>& out, std::vector<std::string>& warnings) {
  if (!q.ec.involves(var)) {
    // The constraint lives entirely below this level; its clause is false
    // off the constraint's zero set, so only the constraint itself descends.
    out.push_back(q.ec);
    for (const auto& g : q.others) {
      if (!g.is_constant() && !g.involves(var)) out.push_back(g);
    }
    return;
  }
  std::vector<Polynomial> ec_in{q.ec};
  Split f = split_basis(ec_in, var);
  out.insert(out.end(), f.rest.begin(), f.rest.end());
  auto step = mccallum_step(f.top, var);
  out.insert(out.end(), step.begin(), step.end());
  for (const auto& g : q.others) {
    if (g.is_constant()) continue;
    if (!g.involves(var)) {
      out.push_back(g);
      continue;
    }
    resultant_or_gcd(q.ec, g, var, order, out, warnings);
  }
}

ProjectionTable project_clauses(std::span<const QffProjectionSpec> qffs, const VariableOrder& order,
                                ProjectionKind kind, const ProjectionOptions& options) {
  if (qffs.empty()) throw DomainError("no clauses to project");
  std::vector<Polynomial> inputs;
  for (const auto& q : qffs) {
    inputs.push_back(q.ec);
    inputs.insert(inputs.end(), q.others.begin(), q.others.end());
  }
  check_inputs(inputs);
  std::size_t n = nvars_of(order, inputs);
  ProjectionTable t{order, kind, std::vector<std::vector<Polynomial>>(n), {qffs.begin(), qffs.end()}, {}};
  if (n == 0) return t;
  ProjectionStep s = project_step(qffs, n - 1, order);
  t.levels[n - 1] = std::move(s.level);
  t.warnings = std::move(s.warnings);
  if (n == 1) return t;
  descend(t, std::move(s.pending), n - 1, 1, options);
  return t;
}

}  // namespace

ProjectionStep project_step(std::span<const Polynomial> ps, std::size_t var) {
  Split s = split_basis(ps, var);
  ProjectionStep out{std::move(s.top), std::move(s.rest), {}};
  auto step = mccallum_step(out.level, var);
  out.pending.insert(out.pending.end(), step.begin(), step.end());
  return out;
}

ProjectionStep project_step(std::span<const QffProjectionSpec> qffs, std::size_t var, const VariableOrder& order) {
  std::vector<Polynomial> inputs;
  for (const auto& q : qffs) {
    inputs.push_back(q.ec);
    inputs.insert(inputs.end(), q.others.begin(), q.others.end());
  }
  Split s = split_basis(inputs, var);
  ProjectionStep out{std::move(s.top), std::move(s.rest), {}};
  if (var == 0) return out;
  for (const auto& q : qffs) ec_contribution(q, var, order, out.pending, out.warnings);
  for (std::size_t i = 0; i < qffs.size(); ++i) {
    for (std::size_t j = i + 1; j < qffs.size(); ++j) {
      if (qffs[i].ec.involves(var) && qffs[j].ec.involves(var)) {
        resultant_or_gcd(qffs[i].ec, qffs[j].ec, var, order, out.pending, out.warnings);
      }
    }
  }
  return out;
}

std::vector<Polynomial> mccallum_step(std::span<const Polynomial> basis, std::size_t var) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& p = basis[i];
    if (!p.involves(var)) {
      out.push_back(p);
      continue;
    }
    auto coeffs = needed_coefficients(p, var);
    out.insert(out.end(), coeffs.begin(), coeffs.end());
    add_discriminant(p, var, out);
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[j].involves(var)) out.push_back(resultant(p, basis[j], var));
    }
  }
  return out;
}

ProjectionTable project_full(std::span<const Polynomial> ps, const VariableOrder& order,
                             const ProjectionOptions& options) {
  check_inputs(ps);
  std::size_t n = nvars_of(order, ps);
  ProjectionTable t{order, ProjectionKind::Full, std::vector<std::vector<Polynomial>>(n), {}, {}};
  descend(t, {ps.begin(), ps.end()}, n, 0, options);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (const auto& p : t.levels[k]) {
      if (p.is_zero()) throw DegenerateInput("projection factor vanished identically");
    }
  }
  return t;
}

ProjectionTable project_reduced(const Polynomial& ec, std::span<const Polynomial> others,
                                const VariableOrder& order, const ProjectionOptions& options) {
  if (ec.is_constant()) throw DomainError("equational constraint must be non-constant");
  std::vector<QffProjectionSpec> q{{ec, {others.begin(), others.end()}}};
  return project_clauses(q, order, ProjectionKind::Reduced, options);
}

ProjectionTable project_tticad(std::span<const QffProjectionSpec> qffs, const VariableOrder& order,
                               const ProjectionOptions& options) {
  for (const auto& q : qffs) {
    if (q.ec.is_constant()) throw ModeError("every clause needs a non-constant equational constraint");
  }
  return project_clauses(qffs, order, ProjectionKind::Tticad, options);
}

std::string format_table(const ProjectionTable& table) {
  std::ostringstream os;
  os << "projection " << to_string(table.kind) << ", order " << table.order.to_string() << "\n";
  for (std::size_t k = table.dimension(); k >= 1; --k) {
    const auto& lvl = table.level(k);
    os << "level " << k << " (" << table.order.name(k - 1) << "): " << lvl.size() << " factors, sotd " << sotd(lvl);
    if (k == 1) os << ", ndrr " << ndrr(lvl);
    os << "\n";
    for (const auto& p : lvl) os << "  " << p.to_string(table.order) << "\n";
  }
  os << "total: sotd " << sotd(table) << ", ndrr " << ndrr(table) << "\n";
  for (const auto& w : table.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace cadform
