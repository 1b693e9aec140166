#pragma once

#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cadform/report.hpp"

namespace cadform {

enum class Command { Project, Measure, AdviseOrder, AdviseEc, Formulate, Precondition, Cells, Bench };

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view text);

struct RunOptions {
  /// "y < x"; restricts the run to this ordering.
  std::optional<std::string> order;
  /// Overrides the problem file's mode.
  std::optional<Mode> mode;
  Heuristic heuristic = Heuristic::SotdNdrr;
  bool greedy = false;
  std::size_t max_orderings = 720;
  std::size_t max_partitions = 2000;
  /// Count cells by lifting when there are at most two variables.
  bool cells = false;
  bool precondition = false;
  /// Score whole TTICAD tables rather than clause by clause.
  bool rescore = false;
  bool trace = false;

  std::map<std::string, std::string> flags() const;
};

/// Runs one command on a parsed problem. Library errors propagate.
///
/// Without a mode in the options or the problem, project, measure,
/// advise-order and cells use the full operator, advise-ec the reduced one
/// and formulate and bench TTICAD. For ec and tticad the commands that build
/// a single formulation per ordering use the advisors' choice.
RunReport run_command(Command command, const ProblemFile& problem, const RunOptions& options);

/// Corpus runner. Each entry is (label, problem text). Problems run the
/// advisor matching their mode; metadata-only entries report their expected
/// values. Per-problem errors are recorded, not thrown.
RunReport run_corpus(const std::vector<std::pair<std::string, std::string>>& problems, const RunOptions& options);

/// "parse", "mode", "size-cap", "degenerate", "domain" or "internal".
std::string error_kind(const std::exception& e);
/// 2 parse, 3 mode, 4 size cap, 5 degenerate or domain, 1 otherwise.
int exit_code(const std::exception& e);
Json error_json(const std::exception& e, const RunOptions& options, std::string_view command);

}  // namespace cadform
