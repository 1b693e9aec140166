#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cadform/formula.hpp"
#include "cadform/measures.hpp"
#include "cadform/parser.hpp"
#include "cadform/projection.hpp"

namespace cadform {

/// How measure vectors are ranked. The two-letter forms compare the first
/// measure and break ties with the second; Sum uses weighted totals.
enum class Heuristic { Sotd, Ndrr, SotdNdrr, NdrrSotd, Sum };

std::string_view to_string(Heuristic h);
/// Accepts sotd, ndrr, sotd+ndrr, ndrr+sotd and sum.
std::optional<Heuristic> parse_heuristic(std::string_view text);

struct RankingOptions {
  Heuristic heuristic = Heuristic::SotdNdrr;
  Rational sotd_weight = 1;
  Rational ndrr_weight = 1;
};

/// Lexicographic key, smaller is better.
std::vector<Rational> score_key(const MeasureVector& m, const RankingOptions& options);

struct FormulationCandidate {
  VariableOrder order;
  ProjectionKind kind = ProjectionKind::Full;
  /// Polynomials are over `order`.
  std::vector<Qff> qffs;
  /// Source clause of each QFF: the formula is the disjunction over clauses
  /// of the conjunction of their QFFs.
  std::vector<std::size_t> clause_of;
  bool preconditioned = false;

  /// Canonical text used for deterministic tie-breaks.
  std::string serialize() const;
  Formula as_formula() const;
};

struct FormulationReport {
  FormulationCandidate candidate;
  MeasureVector measures;
  std::optional<std::size_t> cells;
  std::vector<std::string> warnings;
  /// Dense rank after ranking; 1 is best and equal scores share a rank.
  std::size_t rank = 0;
};

/// Table under the candidate's own operator: full for Full, the reduced
/// operator on the first QFF's designated equation for Reduced, TTICAD
/// for Tticad.
ProjectionTable project_candidate(const FormulationCandidate& c);
FormulationReport evaluate(const FormulationCandidate& c);

/// Sorts by score key, then by serialization, and assigns dense ranks.
void rank_reports(std::vector<FormulationReport>& reports, const RankingOptions& options);

/// Equations (normalized) present in every clause of the DNF.
std::vector<Atom> implied_equations(const std::vector<Qff>& dnf);

/// Candidate for one ordering. `f` is over `declared`. Ec mode designates
/// the first implied equation; Tticad mode the first equation of each
/// clause. Throws ModeError when the mode's requirements are not met.
FormulationCandidate make_candidate(const Formula& f, const VariableOrder& declared, const VariableOrder& order,
                                    Mode mode);

struct AdviceOptions : RankingOptions {
  bool greedy = false;
  std::size_t max_orderings = 720;
};

/// Exhaustive: one report per candidate ordering of the problem, ranked.
/// Greedy: one report for an ordering built one variable at a time, from
/// the variable projected first, minimizing the sotd of the projection
/// polynomials accumulated so far (ndrr breaks ties at the last choice).
/// Throws SizeCapError when exhaustive mode would exceed max_orderings.
std::vector<FormulationReport> advise_order(const ProblemFile& problem, Mode mode, const AdviceOptions& options);

/// One report per designation of an equation of qff, built with the reduced
/// operator and ranked. With a single equation the designation is trivial
/// and one report is returned. Throws ModeError without equations.
std::vector<FormulationReport> advise_ec(const Qff& qff, const VariableOrder& order, const RankingOptions& options);

struct FormulateOptions : RankingOptions {
  std::size_t max_partitions = 2000;
  /// Score combinations of clause options on the whole TTICAD table
  /// instead of clause by clause.
  bool full_rescoring = false;
  bool precondition = false;
};

struct ClauseChoice {
  std::size_t clause = 0;
  std::size_t equations = 0;
  /// Local options, ranked. Empty when the designation is trivial.
  std::vector<FormulationReport> options;
};

struct FormulateResult {
  FormulationReport chosen;
  std::vector<ClauseChoice> clauses;
  std::vector<std::string> warnings;
};

/// Number of ways to split a clause with m equations and r other atoms into
/// sub-QFFs with one designated equation each.
std::size_t count_partitions(std::size_t m, std::size_t r, std::size_t cap);

/// Sub-QFF options for one clause: set partitions of its equations, each
/// other atom assigned to one block, one designated equation per block.
/// Throws SizeCapError beyond the cap.
std::vector<std::vector<Qff>> clause_options(const Qff& clause, std::size_t max_partitions);

/// Chooses a TTICAD formulation clause by clause. Throws ModeError for a
/// clause without equations.
FormulateResult formulate_tticad(const std::vector<Qff>& clauses, const VariableOrder& order,
                                 const FormulateOptions& options);

struct MergeFinding {
  enum class Kind { Neutral, NeedsRedesignation };
  Kind kind;
  std::size_t first;
  std::size_t second;
  std::string note;
};

/// QFFs sharing a designated equation merge without changing the projection
/// factors; an equation designated in one QFF but only present in another
/// can merge only by redesignation.
std::vector<MergeFinding> merge_analysis(const std::vector<Qff>& qffs);

}  // namespace cadform
