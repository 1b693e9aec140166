#include "cadform/formulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "cadform/algorithms.hpp"
#include "cadform/groebner.hpp"

namespace cadform {

std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::Sotd: return "sotd";
    case Heuristic::Ndrr: return "ndrr";
    case Heuristic::SotdNdrr: return "sotd+ndrr";
    case Heuristic::NdrrSotd: return "ndrr+sotd";
    case Heuristic::Sum: return "sum";
  }
  return "?";
}

std::optional<Heuristic> parse_heuristic(std::string_view text) {
  for (auto h : {Heuristic::Sotd, Heuristic::Ndrr, Heuristic::SotdNdrr, Heuristic::NdrrSotd, Heuristic::Sum}) {
    if (to_string(h) == text) return h;
  }
  return std::nullopt;
}

std::vector<Rational> score_key(const MeasureVector& m, const RankingOptions& options) {
  Rational s(m.sotd), n(m.ndrr);
  switch (options.heuristic) {
    case Heuristic::Sotd: return {s};
    case Heuristic::Ndrr: return {n};
    case Heuristic::SotdNdrr: return {s, n};
    case Heuristic::NdrrSotd: return {n, s};
    case Heuristic::Sum: return {options.sotd_weight * s + options.ndrr_weight * n};
  }
  return {};
}

namespace {

bool atom_less(const Atom& a, const Atom& b) {
  if (a.poly == b.poly) return a.rel < b.rel;
  return canonical_less(a.poly, b.poly);
}

// Normalized atoms, sorted and without repeats; the designation follows
// its atom.
Qff canonical(const Qff& q) {
  std::optional<Atom> ec;
  if (q.designated_ec) ec = q.conjuncts.at(*q.designated_ec).normalized();
  Qff out;
  for (const auto& a : q.conjuncts) out.conjuncts.push_back(a.normalized());
  std::sort(out.conjuncts.begin(), out.conjuncts.end(), atom_less);
  out.conjuncts.erase(std::unique(out.conjuncts.begin(), out.conjuncts.end()), out.conjuncts.end());
  if (ec) {
    out.designated_ec = static_cast<std::size_t>(std::find(out.conjuncts.begin(), out.conjuncts.end(), *ec) -
                                                 out.conjuncts.begin());
  }
  return out;
}

// Clauses canonicalized and sorted by text.
std::vector<Qff> canonical(std::vector<Qff> qs, const VariableOrder& order) {
  for (auto& q : qs) q = canonical(q);
  std::stable_sort(qs.begin(), qs.end(),
                   [&](const Qff& a, const Qff& b) { return a.to_string(order) < b.to_string(order); });
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

const Polynomial& designated(const Qff& q) { return q.conjuncts.at(q.designated_ec.value()).poly; }

std::vector<Polynomial> distinct_polys(const std::vector<Qff>& qs) {
  std::vector<Polynomial> out;
  for (const auto& q : qs) {
    for (const auto& a : q.conjuncts) {
      Polynomial p = normalize(a.poly);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<QffProjectionSpec> specs_of(const std::vector<Qff>& qs) {
  std::vector<QffProjectionSpec> out;
  for (const auto& q : qs) {
    QffProjectionSpec s{normalize(designated(q)), {}};
    for (std::size_t i = 0; i < q.conjuncts.size(); ++i) {
      Polynomial p = normalize(q.conjuncts[i].poly);
      if (i == *q.designated_ec || p == s.ec) continue;
      if (std::find(s.others.begin(), s.others.end(), p) == s.others.end()) s.others.push_back(std::move(p));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<std::size_t> first_equation(const Qff& q) {
  auto eqs = q.equation_indices();
  if (eqs.empty()) return std::nullopt;
  return eqs.front();
}

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > (cap + 1) / b + 1) return cap + 1;
  return std::min(a * b, cap + 1);
}

std::size_t admissible_count(const ProblemFile& p, std::size_t cap) {
  std::size_t n = 1;
  for (const auto& b : p.blocks) {
    for (std::size_t k = 2; k <= b.size(); ++k) n = saturating_mul(n, k, cap);
  }
  return n;
}

// Restricted growth strings: calls f with block labels for every set
// partition of m elements until f returns false.
template <class F>
void for_each_set_partition(std::size_t m, F&& f) {
  if (m == 0) {
    f(std::vector<std::size_t>{});
    return;
  }
  std::vector<std::size_t> a(m, 0), maxp(m, 0);
  for (;;) {
    if (!f(a)) return;
    // Next restricted growth string.
    std::size_t i = m;
    while (i-- > 1) {
      if (a[i] <= maxp[i - 1]) break;
    }
    if (i == 0) return;
    ++a[i];
    for (std::size_t j = i; j < m; ++j) {
      if (j > i) a[j] = 0;
      maxp[j] = std::max(j == 0 ? 0 : maxp[j - 1], a[j]);
    }
  }
}

}  // namespace

std::string FormulationCandidate::serialize() const {
  std::string out = order.to_string() + " | " + to_string(kind) + (preconditioned ? " | groebner" : "");
  for (std::size_t i = 0; i < qffs.size(); ++i) {
    out += " | ";
    if (i < clause_of.size()) out += "c" + std::to_string(clause_of[i]) + ": ";
    out += qffs[i].to_string(order);
  }
  return out;
}

Formula FormulationCandidate::as_formula() const {
  std::map<std::size_t, std::vector<Formula>> groups;
  for (std::size_t i = 0; i < qffs.size(); ++i) {
    std::vector<Formula> atoms;
    for (const auto& a : qffs[i].conjuncts) atoms.push_back(Formula::atom(a));
    groups[i < clause_of.size() ? clause_of[i] : i].push_back(Formula::conjunction(std::move(atoms)));
  }
  std::vector<Formula> ds;
  for (auto& [c, parts] : groups) ds.push_back(Formula::conjunction(std::move(parts)));
  return Formula::disjunction(std::move(ds));
}

ProjectionTable project_candidate(const FormulationCandidate& c) {
  switch (c.kind) {
    case ProjectionKind::Full: return project_full(distinct_polys(c.qffs), c.order);
    case ProjectionKind::Reduced: {
      if (c.qffs.empty() || !c.qffs.front().designated_ec) throw ModeError("no designated equational constraint");
      Polynomial ec = normalize(designated(c.qffs.front()));
      std::vector<Polynomial> others;
      for (auto& p : distinct_polys(c.qffs)) {
        if (p != ec) others.push_back(std::move(p));
      }
      return project_reduced(ec, others, c.order);
    }
    case ProjectionKind::Tticad: {
      for (const auto& q : c.qffs) {
        if (!q.designated_ec) throw ModeError("every QFF needs a designated equational constraint");
      }
      auto specs = specs_of(c.qffs);
      return project_tticad(specs, c.order);
    }
  }
  throw DomainError("unknown projection kind");
}

FormulationReport evaluate(const FormulationCandidate& c) {
  ProjectionTable t = project_candidate(c);
  FormulationReport r{c, measure(t), std::nullopt, t.warnings, 0};
  auto inputs = distinct_polys(c.qffs);
  r.measures.tnoi = tnoi(inputs);
  return r;
}

void rank_reports(std::vector<FormulationReport>& reports, const RankingOptions& options) {
  // Equal scores: fewer QFFs first, so a split must earn its place.
  std::vector<std::tuple<std::vector<Rational>, std::size_t, std::string>> keys;
  std::vector<std::size_t> idx(reports.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (const auto& r : reports) {
    keys.emplace_back(score_key(r.measures, options), r.candidate.qffs.size(), r.candidate.serialize());
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<FormulationReport> sorted;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || std::get<0>(keys[idx[k]]) != std::get<0>(keys[idx[k - 1]])) ++rank;
    sorted.push_back(std::move(reports[idx[k]]));
    sorted.back().rank = rank;
  }
  reports = std::move(sorted);
}

std::vector<Atom> implied_equations(const std::vector<Qff>& dnf) {
  std::vector<Atom> out;
  if (dnf.empty()) return out;
  for (const auto& a : dnf.front().conjuncts) {
    if (!a.is_equation()) continue;
    Atom n = a.normalized();
    bool everywhere = std::all_of(dnf.begin() + 1, dnf.end(), [&](const Qff& q) {
      return std::any_of(q.conjuncts.begin(), q.conjuncts.end(),
                         [&](const Atom& b) { return b.is_equation() && b.normalized() == n; });
    });
    if (everywhere && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  std::sort(out.begin(), out.end(), atom_less);
  return out;
}

FormulationCandidate make_candidate(const Formula& f, const VariableOrder& declared, const VariableOrder& order,
                                    Mode mode) {
  auto dnf = canonical(to_dnf(remap(f, declared, order)), order);
  if (dnf.empty()) throw DegenerateInput("formula is unsatisfiable by its boolean structure");
  FormulationCandidate c;
  c.order = order;
  c.qffs = dnf;
  c.clause_of.resize(dnf.size());
  std::iota(c.clause_of.begin(), c.clause_of.end(), 0);
  switch (mode) {
    case Mode::Full: c.kind = ProjectionKind::Full; break;
    case Mode::Ec: {
      auto ecs = implied_equations(dnf);
      if (ecs.empty()) throw ModeError("no equation is implied by the formula; equational-constraint mode needs one");
      c.kind = ProjectionKind::Reduced;
      for (auto& q : c.qffs) {
        q.designated_ec = static_cast<std::size_t>(std::find(q.conjuncts.begin(), q.conjuncts.end(), ecs.front()) -
                                                   q.conjuncts.begin());
      }
      break;
    }
    case Mode::Tticad:
      c.kind = ProjectionKind::Tticad;
      for (std::size_t i = 0; i < c.qffs.size(); ++i) {
        c.qffs[i].designated_ec = first_equation(c.qffs[i]);
        if (!c.qffs[i].designated_ec) {
          throw ModeError("clause " + std::to_string(i + 1) + " (" + c.qffs[i].to_string(order) +
                          ") has no equational constraint and is not suitable for TTICAD");
        }
      }
      break;
  }
  return c;
}

namespace {

struct GreedyState {
  std::vector<std::string> remaining;  // declared order
  std::vector<std::string> chosen;     // projection order
};

VariableOrder step_order(const GreedyState& s, const std::string& v) {
  std::vector<std::string> names;
  for (const auto& r : s.remaining) {
    if (r != v) names.push_back(r);
  }
  names.push_back(v);
  for (auto it = s.chosen.rbegin(); it != s.chosen.rend(); ++it) names.push_back(*it);
  return VariableOrder(names);
}

FormulationReport greedy(const ProblemFile& p, Mode mode) {
  const VariableOrder& declared = p.variables;
  // Designations are fixed on the declared order and carried through remapping.
  FormulationCandidate base = make_candidate(p.formula, declared, declared, mode);
  GreedyState s{declared.names(), {}};
  std::vector<Polynomial> pending = distinct_polys(base.qffs);  // over `declared`
  std::size_t accumulated = 0;
  bool first = true;
  while (s.remaining.size() > 1) {
    // Only the last block with variables left may be projected next.
    std::vector<std::string> allowed;
    for (auto b = p.blocks.rbegin(); b != p.blocks.rend() && allowed.empty(); ++b) {
      for (const auto& v : *b) {
        if (std::find(s.remaining.begin(), s.remaining.end(), v) != s.remaining.end()) allowed.push_back(v);
      }
    }
    std::sort(allowed.begin(), allowed.end());
    struct Best {
      std::vector<std::size_t> key;
      std::string var;
      std::size_t level_sotd;
      std::vector<Polynomial> pending;
    };
    std::optional<Best> best;
    for (const auto& v : allowed) {
      VariableOrder o = step_order(s, v);
      std::size_t var = s.remaining.size() - 1;
      ProjectionStep step;
      if (first && mode != Mode::Full) {
        std::vector<Qff> qs;
        for (const auto& q : base.qffs) qs.push_back(remap(q, declared, o));
        if (mode == Mode::Ec) {
          Polynomial ec = normalize(designated(qs.front()));
          std::vector<Polynomial> others;
          for (auto& q : distinct_polys(qs)) {
            if (q != ec) others.push_back(std::move(q));
          }
          std::vector<QffProjectionSpec> spec{{ec, others}};
          step = project_step(spec, var, o);
        } else {
          auto specs = specs_of(qs);
          step = project_step(specs, var, o);
        }
      } else {
        std::vector<Polynomial> ps;
        for (const auto& q : pending) ps.push_back(remap(q, declared, o));
        step = project_step(ps, var);
      }
      std::vector<Polynomial> next = squarefree_coprime_basis(step.pending);
      std::size_t level = sotd(step.level);
      std::vector<std::size_t> key{accumulated + level + sotd(next)};
      if (s.remaining.size() == 2) key.push_back(next.empty() ? 0 : ndrr(next));
      for (auto& q : next) q = remap(q, o, declared);
      if (!best || key < best->key) best = Best{key, v, level, std::move(next)};
    }
    accumulated += best->level_sotd;
    pending = std::move(best->pending);
    s.chosen.push_back(best->var);
    s.remaining.erase(std::find(s.remaining.begin(), s.remaining.end(), best->var));
    first = false;
  }
  std::vector<std::string> names = s.remaining;
  for (auto it = s.chosen.rbegin(); it != s.chosen.rend(); ++it) names.push_back(*it);
  FormulationReport r = evaluate(make_candidate(p.formula, declared, VariableOrder(names), mode));
  r.rank = 1;
  return r;
}

}  // namespace

std::vector<FormulationReport> advise_order(const ProblemFile& problem, Mode mode, const AdviceOptions& options) {
  if (problem.metadata_only) throw ModeError("problem '" + problem.name + "' is metadata only");
  if (options.greedy) return {greedy(problem, mode)};
  if (problem.orderings.empty()) {
    std::size_t n = admissible_count(problem, options.max_orderings);
    if (n > options.max_orderings) {
      throw SizeCapError("more than " + std::to_string(options.max_orderings) +
                             " admissible orderings; use greedy mode or raise the ordering cap",
                         n, options.max_orderings);
    }
  }
  std::vector<FormulationReport> out;
  for (const auto& o : problem.candidate_orderings()) {
    out.push_back(evaluate(make_candidate(problem.formula, problem.variables, o, mode)));
  }
  rank_reports(out, options);
  return out;
}

std::vector<FormulationReport> advise_ec(const Qff& qff, const VariableOrder& order, const RankingOptions& options) {
  Qff q = canonical(Qff{qff.conjuncts, std::nullopt});
  auto eqs = q.equation_indices();
  if (eqs.empty()) throw ModeError("no equation to designate");
  std::vector<FormulationReport> out;
  for (auto i : eqs) {
    Qff d = q;
    d.designated_ec = i;
    out.push_back(evaluate({order, ProjectionKind::Reduced, {d}, {0}, false}));
  }
  rank_reports(out, options);
  return out;
}

std::size_t count_partitions(std::size_t m, std::size_t r, std::size_t cap) {
  std::size_t total = 0;
  for_each_set_partition(m, [&](const std::vector<std::size_t>& a) {
    std::size_t blocks = a.empty() ? 0 : *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::size_t> sizes(blocks, 0);
    for (auto b : a) ++sizes[b];
    std::size_t n = 1;
    for (std::size_t i = 0; i < r; ++i) n = saturating_mul(n, blocks, cap);
    for (auto sz : sizes) n = saturating_mul(n, sz, cap);
    total = std::min(total + n, cap + 1);
    return total <= cap;
  });
  return total;
}

std::vector<std::vector<Qff>> clause_options(const Qff& clause, std::size_t max_partitions) {
  auto eqs = clause.equation_indices();
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < clause.conjuncts.size(); ++i) {
    if (!clause.conjuncts[i].is_equation()) rest.push_back(i);
  }
  if (eqs.empty()) throw ModeError("clause has no equational constraint");
  std::size_t count = count_partitions(eqs.size(), rest.size(), max_partitions);
  if (count > max_partitions) {
    throw SizeCapError("a clause with " + std::to_string(eqs.size()) + " equations and " +
                           std::to_string(rest.size()) + " other atoms has more than " +
                           std::to_string(max_partitions) + " formulation options",
                       count, max_partitions);
  }
  std::vector<std::vector<Qff>> out;
  for_each_set_partition(eqs.size(), [&](const std::vector<std::size_t>& a) {
    std::size_t blocks = *std::max_element(a.begin(), a.end()) + 1;
    // Odometer over the block of each other atom.
    std::vector<std::size_t> assign(rest.size(), 0);
    for (;;) {
      std::vector<std::vector<std::size_t>> members(blocks);
      for (std::size_t i = 0; i < eqs.size(); ++i) members[a[i]].push_back(eqs[i]);
      for (std::size_t i = 0; i < rest.size(); ++i) members[assign[i]].push_back(rest[i]);
      for (auto& m : members) std::sort(m.begin(), m.end());
      // Odometer over designations.
      std::vector<std::size_t> pick(blocks, 0);
      for (;;) {
        std::vector<Qff> option;
        for (std::size_t b = 0; b < blocks; ++b) {
          Qff q;
          std::size_t seen = 0;
          for (auto idx : members[b]) {
            if (clause.conjuncts[idx].is_equation() && seen++ == pick[b]) q.designated_ec = q.conjuncts.size();
            q.conjuncts.push_back(clause.conjuncts[idx]);
          }
          option.push_back(std::move(q));
        }
        out.push_back(std::move(option));
        std::size_t b = 0;
        for (; b < blocks; ++b) {
          std::size_t neq = static_cast<std::size_t>(std::count(a.begin(), a.end(), b));
          if (++pick[b] < neq) break;
          pick[b] = 0;
        }
        if (b == blocks) break;
      }
      std::size_t i = 0;
      for (; i < rest.size(); ++i) {
        if (++assign[i] < blocks) break;
        assign[i] = 0;
      }
      if (i == rest.size()) break;
    }
    return true;
  });
  return out;
}

FormulateResult formulate_tticad(const std::vector<Qff>& input, const VariableOrder& order,
                                 const FormulateOptions& options) {
  FormulateResult result;
  std::vector<Qff> clauses;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < input.size(); ++i) {
    Qff c = canonical(Qff{input[i].conjuncts, std::nullopt});
    if (c.equation_indices().empty()) {
      throw ModeError("clause " + std::to_string(i + 1) + " (" + c.to_string(order) +
                      ") has no equational constraint and is not suitable for TTICAD");
    }
    if (options.precondition) {
      auto pre = precondition_qff(c, order);
      for (const auto& n : pre.notes) result.warnings.push_back("clause " + std::to_string(i + 1) + ": " + n);
      if (pre.is_false) {
        result.warnings.push_back("clause " + std::to_string(i + 1) + " is false after preconditioning; dropped");
        continue;
      }
      // Generators keep the basis order, which the designation labels follow.
      c = pre.qff;
    }
    clauses.push_back(std::move(c));
    source.push_back(i);
  }
  if (clauses.empty()) throw DegenerateInput("every clause is false after preconditioning");

  std::vector<std::vector<std::vector<Qff>>> all_options;
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    const Qff& c = clauses[k];
    ClauseChoice choice{source[k], c.equation_indices().size(), {}};
    if (choice.equations == 1) {
      Qff d = c;
      d.designated_ec = first_equation(c);
      all_options.push_back({{d}});
    } else {
      auto opts = clause_options(c, options.max_partitions);
      for (const auto& o : opts) {
        choice.options.push_back(
            evaluate({order, ProjectionKind::Tticad, o, std::vector<std::size_t>(o.size(), source[k]), options.precondition}));
      }
      rank_reports(choice.options, options);
      std::vector<std::vector<Qff>> ranked;
      for (const auto& r : choice.options) ranked.push_back(r.candidate.qffs);
      all_options.push_back(std::move(ranked));
    }
    result.clauses.push_back(std::move(choice));
  }

  auto assemble = [&](const std::vector<std::size_t>& pick) {
    FormulationCandidate c{order, ProjectionKind::Tticad, {}, {}, options.precondition};
    for (std::size_t k = 0; k < clauses.size(); ++k) {
      for (const auto& q : all_options[k][pick[k]]) {
        c.qffs.push_back(q);
        c.clause_of.push_back(source[k]);
      }
    }
    return c;
  };

  if (!options.full_rescoring) {
    result.chosen = evaluate(assemble(std::vector<std::size_t>(clauses.size(), 0)));
    result.chosen.rank = 1;
    return result;
  }
  std::size_t combos = 1;
  for (const auto& o : all_options) combos = saturating_mul(combos, o.size(), options.max_partitions);
  if (combos > options.max_partitions) {
    throw SizeCapError("more than " + std::to_string(options.max_partitions) + " combinations to rescore", combos,
                       options.max_partitions);
  }
  std::vector<FormulationReport> reports;
  std::vector<std::size_t> pick(clauses.size(), 0);
  for (;;) {
    reports.push_back(evaluate(assemble(pick)));
    std::size_t k = 0;
    for (; k < pick.size(); ++k) {
      if (++pick[k] < all_options[k].size()) break;
      pick[k] = 0;
    }
    if (k == pick.size()) break;
  }
  rank_reports(reports, options);
  result.chosen = reports.front();
  return result;
}

std::vector<MergeFinding> merge_analysis(const std::vector<Qff>& qffs) {
  std::vector<MergeFinding> out;
  auto has_equation = [](const Qff& q, const Polynomial& p) {
    return std::any_of(q.conjuncts.begin(), q.conjuncts.end(),
                       [&](const Atom& a) { return a.is_equation() && normalize(a.poly) == p; });
  };
  for (std::size_t i = 0; i < qffs.size(); ++i) {
    if (!qffs[i].designated_ec) continue;
    Polynomial ei = normalize(designated(qffs[i]));
    for (std::size_t j = i + 1; j < qffs.size(); ++j) {
      if (!qffs[j].designated_ec) continue;
      Polynomial ej = normalize(designated(qffs[j]));
      if (ei == ej) {
        out.push_back({MergeFinding::Kind::Neutral, i, j,
                       "same designated equation; merging leaves the projection factors unchanged"});
      } else if (has_equation(qffs[j], ei) || has_equation(qffs[i], ej)) {
        out.push_back({MergeFinding::Kind::NeedsRedesignation, i, j,
                       "shared equation designated in only one QFF; merging requires changing a designation"});
      }
    }
  }
  return out;
}

}  // namespace cadform
