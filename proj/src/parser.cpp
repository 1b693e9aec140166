#include "cadform/parser.hpp"

#include <algorithm>
#include <map>

#include "expr_scanner.hpp"

namespace cadform {

Polynomial parse_polynomial(std::string_view text, const VariableOrder& vars) {
  detail::ExprScanner s(text, vars);
  Polynomial p = s.sum();
  if (!s.at_end()) s.fail("unexpected trailing input");
  return p;
}

namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const VariableOrder& vars, std::size_t line, std::size_t column0)
      : s_(text, vars, line, column0), vars_(vars) {}

  Formula parse() {
    if (s_.at_end()) s_.fail("empty formula");
    Formula f = disjunction();
    if (!s_.at_end()) s_.fail("unexpected trailing input");
    return f;
  }

 private:
  Formula disjunction() {
    std::vector<Formula> kids{conjunction()};
    while (s_.accept("\\/")) kids.push_back(conjunction());
    return Formula::disjunction(std::move(kids));
  }

  Formula conjunction() {
    std::vector<Formula> kids{unary()};
    while (s_.accept("/\\")) kids.push_back(unary());
    return Formula::conjunction(std::move(kids));
  }

  Formula unary() {
    if (s_.accept("~")) return Formula::negation(unary());
    std::size_t start = s_.pos();
    for (const char* kw : {"true", "false"}) {
      if (s_.starts_with(kw) && !vars_.index_of(kw)) {
        std::string id = s_.identifier();
        if (id == kw) return Formula::constant(id == "true");
        s_.set_pos(start);
      }
    }
    if (s_.peek() != '(') return relation();
    // A parenthesis opens either an expression or a subformula.
    try {
      return relation();
    } catch (const ParseError& as_relation) {
      s_.set_pos(start);
      s_.accept("(");
      try {
        Formula f = disjunction();
        if (!s_.accept(")")) s_.fail("expected ')'");
        return f;
      } catch (const ParseError& as_formula) {
        if (as_relation.line() > as_formula.line() ||
            (as_relation.line() == as_formula.line() && as_relation.column() > as_formula.column())) {
          throw as_relation;
        }
        throw;
      }
    }
  }

  Formula relation() {
    Polynomial lhs = s_.sum();
    std::optional<Relation> rel;
    // Longer operators first.
    for (auto [text, r] : {std::pair{"<=", Relation::Le}, {">=", Relation::Ge}, {"!=", Relation::Ne},
                           {"==", Relation::Eq}, {"=", Relation::Eq}, {"<", Relation::Lt}, {">", Relation::Gt}}) {
      if (s_.accept(text)) {
        rel = r;
        break;
      }
    }
    if (!rel) s_.fail("malformed relation: expected one of = != < > <= >=");
    Polynomial rhs = s_.sum();
    for (const char* op : {"<", ">", "=", "!"}) {
      if (s_.starts_with(op)) s_.fail("malformed relation: chained comparison");
    }
    return Formula::atom({lhs - rhs, *rel});
  }

  detail::ExprScanner s_;
  const VariableOrder& vars_;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits on a separator, returning pieces with their offsets.
std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view s, char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start), start);
      start = i + 1;
    }
  }
  return out;
}

bool valid_identifier(std::string_view id) {
  if (id.empty() || !(std::isalpha(static_cast<unsigned char>(id[0])) || id[0] == '_')) return false;
  return std::all_of(id.begin(), id.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; });
}

struct Entry {
  std::string key;
  std::string_view value;  // raw, may span lines
  std::size_t line;
  std::size_t column0;     // offset of value on its first line
};

std::vector<Entry> split_entries(std::string_view text) {
  std::vector<Entry> out;
  std::size_t line = 0, pos = 0;
  const char* value_begin = nullptr;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    ++line;
    std::string t = trim(row);
    if (t.empty() || t.front() == '#') {
      // Blank and comment lines end nothing; continuation resumes after them.
    } else if (std::isspace(static_cast<unsigned char>(row.front()))) {
      if (out.empty()) throw ParseError("continuation line without a key", line, 1);
      out.back().value = std::string_view(value_begin, static_cast<std::size_t>(text.data() + end - value_begin));
    } else {
      std::size_t colon = row.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line, 1);
      std::string key = trim(row.substr(0, colon));
      value_begin = row.data() + colon + 1;
      out.push_back({key, row.substr(colon + 1), line, colon + 1});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

void permute_blocks(const std::vector<std::vector<std::string>>& blocks, std::size_t i, std::vector<std::string>& acc,
                    std::vector<VariableOrder>& out) {
  if (i == blocks.size()) {
    out.emplace_back(acc);
    return;
  }
  auto b = blocks[i];
  std::sort(b.begin(), b.end());
  do {
    std::size_t n = acc.size();
    acc.insert(acc.end(), b.begin(), b.end());
    permute_blocks(blocks, i + 1, acc, out);
    acc.resize(n);
  } while (std::next_permutation(b.begin(), b.end()));
}

}  // namespace

Formula parse_formula(std::string_view text, const VariableOrder& vars, std::size_t line, std::size_t column0) {
  return FormulaParser(text, vars, line, column0).parse();
}

VariableOrder parse_ordering(std::string_view text, const VariableOrder& declared, std::size_t line,
                             std::size_t column0) {
  std::vector<std::string> names;
  for (auto [piece, off] : split(text, '<')) {
    std::string name = trim(piece);
    std::size_t col = column0 + off + 1;
    if (!valid_identifier(name)) throw ParseError("expected a variable name in ordering", line, col);
    if (!declared.index_of(name)) throw ParseError("unknown variable '" + name + "' in ordering", line, col);
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw ParseError("variable '" + name + "' repeated in ordering", line, col);
    }
    names.push_back(name);
  }
  if (names.size() != declared.size()) throw ParseError("ordering must list every declared variable", line, column0 + 1);
  return VariableOrder(names);
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Full: return "full";
    case Mode::Ec: return "ec";
    case Mode::Tticad: return "tticad";
  }
  return "?";
}

std::vector<VariableOrder> ProblemFile::admissible_orderings() const {
  std::vector<VariableOrder> out;
  std::vector<std::string> acc;
  permute_blocks(blocks, 0, acc, out);
  std::sort(out.begin(), out.end(), [](const VariableOrder& a, const VariableOrder& b) { return a.names() < b.names(); });
  return out;
}

std::vector<VariableOrder> ProblemFile::candidate_orderings() const {
  return orderings.empty() ? admissible_orderings() : orderings;
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  auto entries = split_entries(text);
  std::map<std::string, const Entry*> seen;
  const Entry* formula_entry = nullptr;
  std::vector<const Entry*> ordering_entries;
  for (const auto& e : entries) {
    static const std::vector<std::string> repeatable{"orderings", "expected"};
    bool repeat = std::find(repeatable.begin(), repeatable.end(), e.key) != repeatable.end();
    if (!repeat && seen.count(e.key)) throw ParseError("duplicate key '" + e.key + "'", e.line, 1);
    seen[e.key] = &e;
    std::string v = trim(e.value);
    if (e.key == "name") {
      p.name = v;
    } else if (e.key == "description") {
      // Continuation lines fold into single spaces.
      std::string folded;
      for (auto [piece, off] : split(e.value, '\n')) {
        std::string t = trim(piece);
        if (t.empty() || t.front() == '#') continue;
        if (!folded.empty()) folded += " ";
        folded += t;
      }
      p.description = folded;
    } else if (e.key == "vars") {
      std::vector<std::string> names;
      for (auto [block, boff] : split(e.value, '|')) {
        std::vector<std::string> b;
        for (auto [piece, off] : split(block, ',')) {
          std::string name = trim(piece);
          std::size_t col = e.column0 + boff + off + 1;
          if (!valid_identifier(name)) throw ParseError("expected a variable name", e.line, col);
          if (std::find(names.begin(), names.end(), name) != names.end()) {
            throw ParseError("variable '" + name + "' declared twice", e.line, col);
          }
          names.push_back(name);
          b.push_back(name);
        }
        p.blocks.push_back(std::move(b));
      }
      p.variables = VariableOrder(names);
    } else if (e.key == "formula") {
      formula_entry = &e;
    } else if (e.key == "orderings") {
      ordering_entries.push_back(&e);
    } else if (e.key == "mode") {
      if (v == "full") {
        p.mode = Mode::Full;
      } else if (v == "ec") {
        p.mode = Mode::Ec;
      } else if (v == "tticad") {
        p.mode = Mode::Tticad;
      } else {
        throw ParseError("mode must be full, ec or tticad", e.line, e.column0 + 2);
      }
    } else if (e.key == "metadata-only") {
      if (v != "yes" && v != "no") throw ParseError("metadata-only must be yes or no", e.line, e.column0 + 2);
      p.metadata_only = v == "yes";
    } else if (e.key == "expected") {
      p.expected.push_back(v);
    } else {
      throw ParseError("unknown key '" + e.key + "'", e.line, 1);
    }
  }
  if (p.metadata_only) {
    if (p.name.empty()) throw ParseError("metadata-only entry needs a name", 1, 1);
    return p;
  }
  if (!seen.count("vars")) throw ParseError("missing 'vars:' section", entries.empty() ? 1 : entries.back().line, 1);
  if (!formula_entry) throw ParseError("missing 'formula:' section", entries.back().line, 1);
  p.formula = parse_formula(formula_entry->value, p.variables, formula_entry->line, formula_entry->column0);
  for (const auto* e : ordering_entries) {
    for (auto [piece, off] : split(e->value, ',')) {
      VariableOrder o = parse_ordering(piece, p.variables, e->line, e->column0 + off);
      auto admissible = p.admissible_orderings();
      if (std::find(admissible.begin(), admissible.end(), o) == admissible.end()) {
        throw ParseError("ordering " + o.to_string() + " breaks the quantifier blocks", e->line, e->column0 + off + 1);
      }
      p.orderings.push_back(std::move(o));
    }
  }
  return p;
}

std::string to_string(const ProblemFile& p) {
  std::string out;
  if (!p.name.empty()) out += "name: " + p.name + "\n";
  if (!p.description.empty()) out += "description: " + p.description + "\n";
  if (p.metadata_only) out += "metadata-only: yes\n";
  if (!p.blocks.empty()) {
    out += "vars: ";
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      if (i > 0) out += " | ";
      for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
        if (j > 0) out += ", ";
        out += p.blocks[i][j];
      }
    }
    out += "\n";
  }
  if (!p.metadata_only) out += "formula: " + p.formula.to_string(p.variables) + "\n";
  for (const auto& o : p.orderings) out += "orderings: " + o.to_string() + "\n";
  if (p.mode) out += "mode: " + std::string(to_string(*p.mode)) + "\n";
  for (const auto& e : p.expected) out += "expected: " + e + "\n";
  return out;
}

}  // namespace cadform
