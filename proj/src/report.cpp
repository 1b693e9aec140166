#include "cadform/report.hpp"

#include <algorithm>
#include <sstream>

namespace cadform {

Json to_json(const Atom& a, const VariableOrder& order, bool designated) {
  Json j;
  j["poly"] = a.poly.to_string(order);
  j["rel"] = std::string(to_string(a.rel));
  j["designated"] = designated;
  return j;
}

Json to_json(const Qff& q, const VariableOrder& order) {
  Json atoms = Json::array();
  for (std::size_t i = 0; i < q.conjuncts.size(); ++i) {
    atoms.push_back(to_json(q.conjuncts[i], order, q.designated_ec == i));
  }
  return atoms;
}

Json to_json(const MeasureVector& m) {
  Json j;
  j["sotd"] = m.sotd;
  j["ndrr"] = m.ndrr;
  j["tnoi"] = m.tnoi ? Json(*m.tnoi) : Json(nullptr);
  return j;
}

Json to_json(const FormulationReport& r) {
  const auto& c = r.candidate;
  Json j;
  j["ordering"] = c.order.names();
  j["operator"] = to_string(c.kind);
  j["preconditioned"] = c.preconditioned;
  Json qffs = Json::array();
  for (std::size_t i = 0; i < c.qffs.size(); ++i) {
    Json q;
    q["clause"] = i < c.clause_of.size() ? c.clause_of[i] + 1 : i + 1;
    q["atoms"] = to_json(c.qffs[i], c.order);
    qffs.push_back(std::move(q));
  }
  j["qffs"] = std::move(qffs);
  j["measures"] = to_json(r.measures);
  j["cells"] = r.cells ? Json(*r.cells) : Json(nullptr);
  j["rank"] = r.rank;
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const ProjectionTable& t) {
  Json j;
  j["ordering"] = t.order.names();
  j["operator"] = to_string(t.kind);
  Json levels = Json::array();
  for (std::size_t k = t.dimension(); k >= 1; --k) {
    Json l;
    l["level"] = k;
    l["variable"] = t.order.name(k - 1);
    Json fs = Json::array();
    for (const auto& f : t.level(k)) fs.push_back(f.to_string(t.order));
    l["factors"] = std::move(fs);
    l["sotd"] = sotd(std::span<const Polynomial>(t.level(k)));
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  j["measures"] = to_json(measure(t));
  j["warnings"] = t.warnings;
  return j;
}

Json to_json(const GroebnerBasis& b) {
  Json j;
  j["ordering"] = b.order.names();
  Json gs = Json::array();
  for (const auto& g : b.generators) gs.push_back(g.to_string(b.order));
  j["generators"] = std::move(gs);
  return j;
}

Json to_json(const CadTree& tree) {
  Json j;
  auto leaves = tree.leaves();
  j["ordering"] = tree.order.names();
  j["operator"] = to_string(tree.kind);
  j["count"] = leaves.size();
  Json dims = Json::array();
  for (std::size_t d = 0; d <= tree.order.size(); ++d) dims.push_back(tree.count_of_dimension(d));
  j["by_dimension"] = std::move(dims);
  Json cells = Json::array();
  for (const CadCell* c : leaves) {
    Json cell;
    cell["index"] = c->index;
    cell["dimension"] = c->dimension;
    Json sample = Json::array();
    for (const auto& s : c->sample) {
      Json coord;
      if (s.rational) {
        coord["value"] = to_string(s.value);
      } else {
        coord["root_of"] = s.defining.to_string(tree.order);
        coord["interval"] = {to_string(s.interval.lo), to_string(s.interval.hi)};
      }
      sample.push_back(std::move(coord));
    }
    cell["sample"] = std::move(sample);
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  j["warnings"] = tree.warnings;
  return j;
}

Json to_json(const RunReport& r) {
  Json j;
  Json prov;
  prov["tool"] = r.provenance.tool;
  prov["version"] = r.provenance.version;
  prov["flags"] = Json(r.provenance.flags);
  j["provenance"] = std::move(prov);
  j["command"] = r.command;
  j["problem"] = r.problem;
  Json cands = Json::array();
  for (const auto& c : r.candidates) cands.push_back(to_json(c));
  j["candidates"] = std::move(cands);
  j["chosen"] = r.chosen ? to_json(*r.chosen) : Json(nullptr);
  j["details"] = r.details;
  j["warnings"] = r.warnings;
  if (!r.trace.empty()) j["trace"] = r.trace;
  return j;
}

std::string cell_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string format_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string cell = i < row.size() ? row[i] : "";
      line += cell;
      if (i + 1 < width.size()) line += std::string(width[i] - cell.size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string format_text(const RunReport& r) {
  std::ostringstream os;
  os << r.provenance.tool << " " << r.provenance.version << "  " << r.command;
  if (!r.problem.empty()) os << "  " << r.problem;
  os << "\n";
  // Bench rows already tabulate their candidates.
  if (!r.candidates.empty() && r.command != "bench") {
    std::vector<std::vector<std::string>> rows{{"Rank", "Order", "Operator", "QFFs", "Cells", "S", "N", "TNoI"}};
    for (const auto& c : r.candidates) {
      std::string qffs;
      for (std::size_t i = 0; i < c.candidate.qffs.size(); ++i) {
        qffs += (i ? " | " : "") + c.candidate.qffs[i].to_string(c.candidate.order);
      }
      std::string op = to_string(c.candidate.kind) + (c.candidate.preconditioned ? "+groebner" : "");
      rows.push_back({c.rank ? std::to_string(c.rank) : "-", c.candidate.order.to_string(), op, qffs, cell_text(c.cells),
                      std::to_string(c.measures.sotd), std::to_string(c.measures.ndrr),
                      cell_text(c.measures.tnoi)});
    }
    os << "\n" << format_columns(rows);
  }
  if (r.chosen) {
    os << "\nchosen: " << r.chosen->candidate.serialize() << "\n";
  }
  if (!r.text.empty()) os << "\n" << r.text;
  if (!r.warnings.empty()) {
    os << "\nwarnings:\n";
    for (const auto& w : r.warnings) os << "  " << w << "\n";
  }
  for (const auto& t : r.trace) os << "\n" << t;
  return os.str();
}

}  // namespace cadform
