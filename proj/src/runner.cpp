#include "cadform/runner.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cadform/parser.hpp"
#include "cadform/real_roots.hpp"
#include "cadform/univariate.hpp"

namespace cadform {

namespace {

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::Project, "project"},     {Command::Measure, "measure"},
    {Command::AdviseOrder, "advise-order"}, {Command::AdviseEc, "advise-ec"},
    {Command::Formulate, "formulate"}, {Command::Precondition, "precondition"},
    {Command::Cells, "cells"},         {Command::Bench, "bench"},
};

std::vector<VariableOrder> orderings(const ProblemFile& p, const RunOptions& o) {
  if (!o.order) return p.candidate_orderings();
  VariableOrder v = parse_ordering(*o.order, p.variables);
  auto admissible = p.admissible_orderings();
  if (std::find(admissible.begin(), admissible.end(), v) == admissible.end()) {
    throw ModeError("ordering " + v.to_string() + " breaks the quantifier blocks");
  }
  return {v};
}

Mode mode_for(Command c, const ProblemFile& p, const RunOptions& o) {
  if (o.mode) return *o.mode;
  if (p.mode) return *p.mode;
  switch (c) {
    case Command::AdviseEc: return Mode::Ec;
    case Command::Formulate:
    case Command::Bench: return Mode::Tticad;
    default: return Mode::Full;
  }
}

std::vector<Qff> dnf_over(const ProblemFile& p, const VariableOrder& order) {
  return to_dnf(remap(p.formula, p.variables, order));
}

FormulateOptions formulate_options(const RunOptions& o) {
  FormulateOptions f;
  f.heuristic = o.heuristic;
  f.max_partitions = o.max_partitions;
  f.full_rescoring = o.rescore;
  f.precondition = o.precondition;
  return f;
}

RankingOptions ranking(const RunOptions& o) {
  RankingOptions r;
  r.heuristic = o.heuristic;
  return r;
}

void append_unique(std::vector<std::string>& to, const std::vector<std::string>& from) {
  for (const auto& s : from) {
    if (std::find(to.begin(), to.end(), s) == to.end()) to.push_back(s);
  }
}

// Replaces each clause with equations by its preconditioned form; false
// clauses are dropped.
void precondition_candidate(FormulationCandidate& c, std::vector<std::string>& warnings) {
  std::vector<Qff> qffs;
  std::vector<std::size_t> clause_of;
  for (std::size_t i = 0; i < c.qffs.size(); ++i) {
    std::size_t clause = i < c.clause_of.size() ? c.clause_of[i] : i;
    Qff q = c.qffs[i];
    if (!q.equation_indices().empty()) {
      auto designated = q.designated_ec;
      auto pre = precondition_qff(Qff{q.conjuncts, std::nullopt}, c.order);
      for (const auto& n : pre.notes) warnings.push_back("clause " + std::to_string(clause + 1) + ": " + n);
      if (pre.is_false) {
        warnings.push_back("clause " + std::to_string(clause + 1) + " is false after preconditioning; dropped");
        continue;
      }
      q = pre.qff;
      if (designated) q.designated_ec = q.equation_indices().front();
    }
    qffs.push_back(std::move(q));
    clause_of.push_back(clause);
  }
  if (qffs.empty()) throw DegenerateInput("every clause is false after preconditioning");
  c.qffs = std::move(qffs);
  c.clause_of = std::move(clause_of);
  c.preconditioned = true;
}

std::vector<FormulationReport> ec_reports(const ProblemFile& p, const VariableOrder& order, const RunOptions& o,
                                          std::vector<std::string>& warnings) {
  auto dnf = dnf_over(p, order);
  if (dnf.size() != 1) {
    throw ModeError("designation advice needs a single conjunction; the formula has " + std::to_string(dnf.size()) +
                    " clauses (formulate handles several)");
  }
  Qff q = dnf.front();
  if (o.precondition) {
    FormulationCandidate c{order, ProjectionKind::Reduced, {q}, {0}, false};
    precondition_candidate(c, warnings);
    q = c.qffs.front();
  }
  auto reports = advise_ec(q, order, ranking(o));
  for (auto& r : reports) r.candidate.preconditioned = o.precondition;
  return reports;
}

// One formulation for the ordering under the mode, chosen by the advisors
// where there is a choice.
FormulationReport resolve(const ProblemFile& p, const VariableOrder& order, Mode mode, const RunOptions& o,
                          std::vector<std::string>& warnings) {
  switch (mode) {
    case Mode::Full: {
      auto c = make_candidate(p.formula, p.variables, order, Mode::Full);
      if (o.precondition) precondition_candidate(c, warnings);
      return evaluate(c);
    }
    case Mode::Ec: {
      if (dnf_over(p, order).size() == 1) return ec_reports(p, order, o, warnings).front();
      auto c = make_candidate(p.formula, p.variables, order, Mode::Ec);
      if (o.precondition) warnings.push_back("preconditioning skipped: equational-constraint mode over several clauses");
      return evaluate(c);
    }
    case Mode::Tticad: {
      auto res = formulate_tticad(dnf_over(p, order), order, formulate_options(o));
      append_unique(warnings, res.warnings);
      return res.chosen;
    }
  }
  throw DomainError("unknown mode");
}

bool liftable(const FormulationCandidate& c) { return c.order.size() <= 2; }

void add_cells(FormulationReport& r, const RunOptions& o, std::vector<std::string>& warnings) {
  if (!o.cells) return;
  if (!liftable(r.candidate)) {
    std::string w = "cell counts need at most two variables; skipped";
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
    return;
  }
  auto tree = lift(project_candidate(r.candidate));
  r.cells = tree.cell_count();
  append_unique(r.warnings, tree.warnings);
}

void trace_table(const ProjectionTable& t, std::vector<std::string>& trace) {
  for (const auto& f : t.level(1)) {
    std::string head = "sturm chain of " + f.to_string(t.order) + " (order " + t.order.to_string() + ")\n";
    trace.push_back(head + describe(SturmChain(UPoly::from_polynomial(f, 0)), t.order.name(0)));
  }
}

void trace_report(const FormulationReport& r, const RunOptions& o, std::vector<std::string>& trace) {
  if (o.trace) trace_table(project_candidate(r.candidate), trace);
}

std::string designation_label(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i] + 1);
  return s + ")";
}

// Rows for one ordering and method: every choice of one equation per clause,
// labelled by the equation's position within its clause.
void bench_block(const std::vector<Qff>& clauses, const VariableOrder& order, bool preconditioned,
                 const RunOptions& o, RunReport& out, std::vector<std::vector<std::string>>& rows) {
  std::size_t combos = 1;
  for (const auto& c : clauses) combos *= std::max<std::size_t>(c.equation_indices().size(), 1);
  if (combos > o.max_partitions) {
    throw SizeCapError(std::to_string(combos) + " designation combinations exceed the cap of " +
                           std::to_string(o.max_partitions),
                       combos, o.max_partitions);
  }
  std::vector<std::size_t> pick(clauses.size(), 0);
  std::string method = preconditioned ? "tticad+groebner" : "tticad";
  for (;;) {
    FormulationCandidate c{order, ProjectionKind::Tticad, clauses, {}, preconditioned};
    c.clause_of.resize(clauses.size());
    std::iota(c.clause_of.begin(), c.clause_of.end(), 0);
    for (std::size_t k = 0; k < clauses.size(); ++k) c.qffs[k].designated_ec = clauses[k].equation_indices()[pick[k]];
    auto r = evaluate(c);
    if (liftable(c)) {
      auto tree = lift(project_candidate(c));
      r.cells = tree.cell_count();
      append_unique(r.warnings, tree.warnings);
    }
    Json row;
    row["ordering"] = order.names();
    row["method"] = method;
    row["designation"] = designation_label(pick);
    row["cells"] = r.cells ? Json(*r.cells) : Json(nullptr);
    row["sotd"] = r.measures.sotd;
    row["ndrr"] = r.measures.ndrr;
    out.details["rows"].push_back(std::move(row));
    rows.push_back({order.to_string(), method, designation_label(pick), cell_text(r.cells),
                    std::to_string(r.measures.sotd), std::to_string(r.measures.ndrr)});
    out.candidates.push_back(std::move(r));

    // Last clause varies fastest.
    std::size_t k = pick.size();
    for (; k > 0; --k) {
      if (++pick[k - 1] < clauses[k - 1].equation_indices().size()) break;
      pick[k - 1] = 0;
    }
    if (k == 0) break;
  }
}

void run_bench(const ProblemFile& p, const RunOptions& o, RunReport& out) {
  out.details["rows"] = Json::array();
  std::vector<std::vector<std::string>> rows{{"Order", "Method", "Eq const", "Cells", "S", "N"}};
  for (const auto& order : orderings(p, o)) {
    auto clauses = dnf_over(p, order);
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      if (clauses[i].equation_indices().empty()) {
        throw ModeError("clause " + std::to_string(i + 1) + " (" + clauses[i].to_string(order) +
                        ") has no equational constraint and is not suitable for TTICAD");
      }
    }
    auto full = evaluate(make_candidate(p.formula, p.variables, order, Mode::Full));
    add_cells(full, o, out.warnings);
    Json row;
    row["ordering"] = order.names();
    row["method"] = "full";
    row["designation"] = "";
    row["cells"] = full.cells ? Json(*full.cells) : Json(nullptr);
    row["sotd"] = full.measures.sotd;
    row["ndrr"] = full.measures.ndrr;
    out.details["rows"].push_back(std::move(row));
    rows.push_back({order.to_string(), "full", "", cell_text(full.cells), std::to_string(full.measures.sotd),
                    std::to_string(full.measures.ndrr)});
    out.candidates.push_back(std::move(full));

    bench_block(clauses, order, false, o, out, rows);

    std::vector<Qff> pre;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      auto r = precondition_qff(clauses[i], order);
      for (const auto& n : r.notes) out.warnings.push_back(order.to_string() + ", clause " + std::to_string(i + 1) + ": " + n);
      if (r.is_false) continue;
      pre.push_back(r.qff);
    }
    if (pre.empty()) {
      out.warnings.push_back(order.to_string() + ": every clause is false after preconditioning");
      continue;
    }
    bench_block(pre, order, true, o, out, rows);
  }
  out.text = format_columns(rows);
}

void run_precondition(const ProblemFile& p, const RunOptions& o, RunReport& out) {
  out.details["orderings"] = Json::array();
  std::ostringstream text;
  for (const auto& order : orderings(p, o)) {
    Json entry;
    entry["ordering"] = order.names();
    entry["clauses"] = Json::array();
    auto clauses = dnf_over(p, order);
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      Json c;
      c["clause"] = i + 1;
      c["input"] = to_json(clauses[i], order);
      text << order.to_string() << ", clause " << i + 1 << ": " << clauses[i].to_string(order) << "\n";
      if (clauses[i].equation_indices().empty()) {
        c["skipped"] = "no equation";
        text << "  no equation; left as is\n";
        entry["clauses"].push_back(std::move(c));
        continue;
      }
      auto r = precondition_qff(clauses[i], order);
      std::vector<Polynomial> eqs;
      for (auto k : clauses[i].equation_indices()) eqs.push_back(clauses[i].conjuncts[k].poly);
      std::size_t before = tnoi(eqs), after = tnoi(r.basis.generators);
      auto verdict = tnoi_verdict(eqs, r.basis.generators);
      c["basis"] = to_json(r.basis);
      c["output"] = to_json(r.qff, order);
      c["identity"] = r.unchanged;
      c["false"] = r.is_false;
      c["notes"] = r.notes;
      c["tnoi_before"] = before;
      c["tnoi_after"] = after;
      c["verdict"] = std::string(to_string(verdict));
      text << format_basis(r.basis);
      text << "  tnoi " << before << " -> " << after << ": " << to_string(verdict) << "\n";
      if (r.unchanged) text << "  identity: the clause is already in preconditioned form\n";
      if (r.is_false) text << "  the clause is false\n";
      for (const auto& n : r.notes) text << "  note: " << n << "\n";
      entry["clauses"].push_back(std::move(c));
    }
    out.details["orderings"].push_back(std::move(entry));
  }
  out.text = text.str();
}

void run_formulate(const ProblemFile& p, const RunOptions& o, RunReport& out) {
  out.details["orderings"] = Json::array();
  std::ostringstream text;
  for (const auto& order : orderings(p, o)) {
    auto res = formulate_tticad(dnf_over(p, order), order, formulate_options(o));
    append_unique(out.warnings, res.warnings);
    Json entry;
    entry["ordering"] = order.names();
    entry["clauses"] = Json::array();
    for (const auto& ch : res.clauses) {
      Json c;
      c["clause"] = ch.clause + 1;
      c["equations"] = ch.equations;
      c["options"] = Json::array();
      std::vector<std::vector<std::string>> rows{{"Rank", "Sub-QFFs", "S", "N"}};
      for (const auto& r : ch.options) {
        c["options"].push_back(to_json(r));
        std::string qffs;
        for (std::size_t i = 0; i < r.candidate.qffs.size(); ++i) {
          qffs += (i ? " | " : "") + r.candidate.qffs[i].to_string(order);
        }
        rows.push_back({std::to_string(r.rank), qffs, std::to_string(r.measures.sotd), std::to_string(r.measures.ndrr)});
      }
      text << order.to_string() << ", clause " << ch.clause + 1 << ": " << ch.equations << " equations";
      if (ch.options.empty()) {
        text << ", designated trivially\n";
      } else {
        text << ", " << ch.options.size() << " options\n" << format_columns(rows);
      }
      entry["clauses"].push_back(std::move(c));
    }
    Json merges = Json::array();
    for (const auto& m : merge_analysis(res.chosen.candidate.qffs)) {
      Json f;
      f["kind"] = m.kind == MergeFinding::Kind::Neutral ? "neutral" : "needs-redesignation";
      f["qffs"] = {m.first + 1, m.second + 1};
      f["note"] = m.note;
      text << order.to_string() << ", merge QFFs " << m.first + 1 << " and " << m.second + 1 << ": " << m.note << "\n";
      merges.push_back(std::move(f));
    }
    entry["merges"] = std::move(merges);
    out.details["orderings"].push_back(std::move(entry));
    auto chosen = res.chosen;
    add_cells(chosen, o, out.warnings);
    trace_report(chosen, o, out.trace);
    out.candidates.push_back(std::move(chosen));
  }
  rank_reports(out.candidates, ranking(o));
  out.chosen = out.candidates.front();
  out.text = text.str();
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& n : kCommands) {
    if (n.command == c) return n.name;
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view text) {
  for (const auto& n : kCommands) {
    if (text == n.name) return n.command;
  }
  return std::nullopt;
}

std::map<std::string, std::string> RunOptions::flags() const {
  std::map<std::string, std::string> f;
  f["order"] = order.value_or("");
  f["mode"] = mode ? std::string(to_string(*mode)) : "";
  f["heuristic"] = std::string(to_string(heuristic));
  f["greedy"] = greedy ? "true" : "false";
  f["max-orderings"] = std::to_string(max_orderings);
  f["max-partitions"] = std::to_string(max_partitions);
  f["cells"] = cells ? "true" : "false";
  f["precondition"] = precondition ? "true" : "false";
  f["rescore"] = rescore ? "true" : "false";
  f["trace"] = trace ? "true" : "false";
  return f;
}

RunReport run_command(Command command, const ProblemFile& problem, const RunOptions& o) {
  RunReport out;
  out.command = std::string(to_string(command));
  out.problem = problem.name;
  out.provenance.flags = o.flags();
  if (problem.metadata_only) {
    throw ModeError("problem '" + problem.name + "' is metadata only and has no polynomials");
  }
  Mode mode = mode_for(command, problem, o);
  out.details["mode"] = std::string(to_string(mode));

  switch (command) {
    case Command::Project:
    case Command::Measure: {
      std::ostringstream text;
      if (command == Command::Project) out.details["tables"] = Json::array();
      for (const auto& order : orderings(problem, o)) {
        auto r = resolve(problem, order, mode, o, out.warnings);
        add_cells(r, o, out.warnings);
        if (command == Command::Project) {
          auto t = project_candidate(r.candidate);
          out.details["tables"].push_back(to_json(t));
          text << format_table(t) << "\n";
        }
        trace_report(r, o, out.trace);
        out.candidates.push_back(std::move(r));
      }
      out.text = text.str();
      break;
    }
    case Command::AdviseOrder: {
      AdviceOptions a;
      a.heuristic = o.heuristic;
      a.greedy = o.greedy;
      a.max_orderings = o.max_orderings;
      ProblemFile p = problem;
      if (o.order) p.orderings = orderings(problem, o);
      if (o.precondition) out.warnings.push_back("--precondition is not used by advise-order");
      out.candidates = advise_order(p, mode, a);
      for (auto& r : out.candidates) {
        add_cells(r, o, out.warnings);
        trace_report(r, o, out.trace);
      }
      out.chosen = out.candidates.front();
      break;
    }
    case Command::AdviseEc: {
      for (const auto& order : orderings(problem, o)) {
        for (auto& r : ec_reports(problem, order, o, out.warnings)) out.candidates.push_back(std::move(r));
      }
      rank_reports(out.candidates, ranking(o));
      for (auto& r : out.candidates) {
        add_cells(r, o, out.warnings);
        trace_report(r, o, out.trace);
      }
      out.chosen = out.candidates.front();
      break;
    }
    case Command::Formulate:
      run_formulate(problem, o, out);
      break;
    case Command::Precondition:
      run_precondition(problem, o, out);
      break;
    case Command::Cells: {
      if (problem.variables.size() > 2) {
        throw ModeError("lifting supports at most two variables; the problem has " +
                        std::to_string(problem.variables.size()));
      }
      out.details["decompositions"] = Json::array();
      std::ostringstream text;
      for (const auto& order : orderings(problem, o)) {
        auto r = resolve(problem, order, mode, o, out.warnings);
        auto tree = lift(project_candidate(r.candidate));
        r.cells = tree.cell_count();
        append_unique(r.warnings, tree.warnings);
        out.details["decompositions"].push_back(to_json(tree));
        text << format_cells(tree) << "\n";
        trace_report(r, o, out.trace);
        out.candidates.push_back(std::move(r));
      }
      out.text = text.str();
      break;
    }
    case Command::Bench:
      run_bench(problem, o, out);
      break;
  }
  for (const auto& c : out.candidates) append_unique(out.warnings, c.warnings);
  return out;
}

RunReport run_corpus(const std::vector<std::pair<std::string, std::string>>& problems, const RunOptions& o) {
  RunReport out;
  out.command = "report";
  out.provenance.flags = o.flags();
  out.details["problems"] = Json::array();
  std::vector<std::vector<std::string>> rows{{"Problem", "Mode", "Chosen order", "Cells", "S", "N", "Status"}};
  for (const auto& [label, text] : problems) {
    Json entry;
    entry["source"] = label;
    try {
      ProblemFile p = parse_problem(text);
      entry["name"] = p.name;
      entry["metadata_only"] = p.metadata_only;
      entry["expected"] = p.expected;
      if (p.metadata_only) {
        entry["description"] = p.description;
        rows.push_back({p.name, "-", "-", "-", "-", "-", "metadata only"});
        out.details["problems"].push_back(std::move(entry));
        continue;
      }
      Mode mode = o.mode ? *o.mode : p.mode.value_or(Mode::Full);
      Command c = mode == Mode::Full ? Command::AdviseOrder : mode == Mode::Ec ? Command::AdviseEc : Command::Formulate;
      RunOptions po = o;
      po.mode = mode;
      auto r = run_command(c, p, po);
      entry["command"] = std::string(to_string(c));
      entry["mode"] = std::string(to_string(mode));
      entry["chosen"] = to_json(*r.chosen);
      entry["warnings"] = r.warnings;
      const auto& ch = *r.chosen;
      rows.push_back({p.name, std::string(to_string(mode)), ch.candidate.order.to_string(), cell_text(ch.cells),
                      std::to_string(ch.measures.sotd), std::to_string(ch.measures.ndrr), "ok"});
    } catch (const std::exception& e) {
      entry["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
      rows.push_back({label, "-", "-", "-", "-", "-", error_kind(e) + " error"});
    }
    out.details["problems"].push_back(std::move(entry));
  }
  out.text = format_columns(rows);
  return out;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const ModeError*>(&e)) return "mode";
  if (dynamic_cast<const SizeCapError*>(&e)) return "size-cap";
  if (dynamic_cast<const DegenerateInput*>(&e)) return "degenerate";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  return "internal";
}

int exit_code(const std::exception& e) {
  std::string k = error_kind(e);
  if (k == "parse") return 2;
  if (k == "mode") return 3;
  if (k == "size-cap") return 4;
  if (k == "degenerate" || k == "domain") return 5;
  return 1;
}

Json error_json(const std::exception& e, const RunOptions& options, std::string_view command) {
  Json j;
  Json prov;
  prov["tool"] = kToolName;
  prov["version"] = kToolVersion;
  prov["flags"] = Json(options.flags());
  j["provenance"] = std::move(prov);
  j["command"] = std::string(command);
  Json err;
  err["kind"] = error_kind(e);
  err["message"] = e.what();
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = pe->line();
    err["column"] = pe->column();
  }
  if (auto* se = dynamic_cast<const SizeCapError*>(&e)) {
    err["count"] = se->count();
    err["cap"] = se->cap();
  }
  j["error"] = std::move(err);
  return j;
}

}  // namespace cadform
