#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cadform/formulation.hpp"
#include "cadform/groebner.hpp"
#include "cadform/lifting.hpp"
#include "json.hpp"

namespace cadform {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "cadform";
inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const Atom& a, const VariableOrder& order, bool designated = false);
Json to_json(const Qff& q, const VariableOrder& order);
Json to_json(const MeasureVector& m);
/// Ordering, operator, per-QFF atoms with the designated equation marked,
/// measures, optional cell count, warnings and rank.
Json to_json(const FormulationReport& r);
Json to_json(const ProjectionTable& t);
Json to_json(const GroebnerBasis& b);
/// Cell count, counts by dimension and one entry per leaf.
Json to_json(const CadTree& tree);

struct Provenance {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  /// Flag values as given or defaulted, by flag name.
  std::map<std::string, std::string> flags;
};

struct RunReport {
  std::string command;
  std::string problem;
  Provenance provenance;
  std::vector<FormulationReport> candidates;
  std::optional<FormulationReport> chosen;
  /// Command-specific payload (tables, bases, cells, bench rows).
  Json details = Json::object();
  /// Rendering of `details` for the text output.
  std::string text;
  std::vector<std::string> warnings;
  std::vector<std::string> trace;
};

Json to_json(const RunReport& r);

/// Aligned text: provenance line, candidate table (Cells, S, N per
/// candidate), command-specific text and warnings.
std::string format_text(const RunReport& r);

/// Left-aligned columns separated by two spaces; rows shorter than the
/// header are padded.
std::string format_columns(const std::vector<std::vector<std::string>>& rows);

/// "1" for 1, "-" when absent.
std::string cell_text(const std::optional<std::size_t>& v);

}  // namespace cadform
