#include <algorithm>
#include <map>
#include <random>

#include "cadform/formula.hpp"
#include "cadform/parser.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cadform;
using test::P;

namespace {

Formula F(const std::string& s, const VariableOrder& v) { return parse_formula(s, v); }

Formula random_formula(std::mt19937& rng, const std::vector<Polynomial>& polys, int& budget, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 3 ? 0 : 3), pick(0, static_cast<int>(polys.size()) - 1),
      rel(0, 5), width(2, 3);
  int k = budget <= 1 ? 0 : kind(rng);
  if (k == 0) {
    --budget;
    return Formula::atom({polys[static_cast<std::size_t>(pick(rng))], static_cast<Relation>(rel(rng))});
  }
  if (k == 3) return Formula::negation(random_formula(rng, polys, budget, depth + 1));
  std::vector<Formula> kids;
  int w = width(rng);
  for (int i = 0; i < w && budget > 0; ++i) kids.push_back(random_formula(rng, polys, budget, depth + 1));
  return k == 1 ? Formula::conjunction(std::move(kids)) : Formula::disjunction(std::move(kids));
}

}  // namespace

TEST_CASE("relations") {
  for (int r = 0; r < 6; ++r) {
    auto rel = static_cast<Relation>(r);
    for (int s : {-1, 0, 1}) {
      CHECK(holds(negate(rel), s) == !holds(rel, s));
      CHECK(holds(mirror(rel), -s) == holds(rel, s));
    }
  }
  auto v = test::vars({"x"});
  Atom a{P("-2*x+4", v), Relation::Lt};
  CHECK(a.normalized() == Atom{P("x-2", v), Relation::Gt});
}

TEST_CASE("formula parsing") {
  auto v = test::vars({"x", "y"});
  auto f = F("(x-1)*(y^2+1) - 1 = 0", v);
  REQUIRE(f.kind() == Formula::Kind::Atom);
  CHECK(f.atom() == Atom{P("(x-1)*(y^2+1) - 1", v), Relation::Eq});

  f = F("x^2 + y^2 = 1 /\\ x*y > 1/4 \\/ ~(y <= x)", v);
  REQUIRE(f.kind() == Formula::Kind::Or);
  CHECK(f.children()[0].kind() == Formula::Kind::And);
  CHECK(f.children()[1].kind() == Formula::Kind::Not);
  CHECK(f.children()[0].children()[1].atom() == Atom{P("x*y-1/4", v), Relation::Gt});

  CHECK(F("((x-1)*y = 0)", v).kind() == Formula::Kind::Atom);
  CHECK(F("(x = 0 \\/ y = 0) /\\ x != y", v).kind() == Formula::Kind::And);
  CHECK(F("1 < 2", v).kind() == Formula::Kind::True);
  CHECK(F("true /\\ x >= 0", v).kind() == Formula::Kind::And);
  CHECK(F("x == y", v).atom().rel == Relation::Eq);
}

TEST_CASE("formula parse errors carry positions") {
  auto v = test::vars({"x", "y"});
  auto error_at = [&](const std::string& s) -> std::pair<std::size_t, std::size_t> {
    try {
      F(s, v);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("x + z = 0") == std::pair<std::size_t, std::size_t>{1, 5});
  CHECK(error_at("x + y") == std::pair<std::size_t, std::size_t>{1, 6});
  CHECK(error_at("") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("x = 0 /\\ (y > 0") == std::pair<std::size_t, std::size_t>{1, 16});
  CHECK(error_at("x < y < 1") == std::pair<std::size_t, std::size_t>{1, 7});
  CHECK(error_at("x = 0 /\\\n  y ? 0") == std::pair<std::size_t, std::size_t>{2, 5});
  try {
    F("x*w = 1", v);
  } catch (const ParseError& e) {
    CHECK(e.detail() == "unknown variable 'w'");
  }
}

TEST_CASE("printing formulas round-trips") {
  auto v = test::vars({"x", "y", "z"});
  std::mt19937 rng(3);
  std::vector<Polynomial> polys;
  for (int i = 0; i < 4; ++i) polys.push_back(test::random_poly(rng, 3, 3, 2) + P("x*y*z", v));
  for (int trial = 0; trial < 100; ++trial) {
    int budget = 8;
    Formula f = random_formula(rng, polys, budget, 0);
    Formula back = parse_formula(f.to_string(v), v);
    CHECK(back == f);
  }
  Formula nested = Formula::conjunction({F("x = 0 /\\ y = 0", v), F("z > 0", v)});
  CHECK(parse_formula(nested.to_string(v), v) == nested);
}

TEST_CASE("disjunctive normal form") {
  auto v = test::vars({"x", "y"});
  auto a = Atom{P("x", v), Relation::Eq}, b = Atom{P("y", v), Relation::Eq}, c = Atom{P("x-y", v), Relation::Gt};
  auto dnf = to_dnf(F("(x = 0 \\/ y = 0) /\\ x - y > 0", v));
  REQUIRE(dnf.size() == 2);
  CHECK(dnf[0].conjuncts == std::vector<Atom>{a, c});
  CHECK(dnf[1].conjuncts == std::vector<Atom>{b, c});

  dnf = to_dnf(F("x = 0 /\\ x - y > 0 \\/ y = 0", v));
  REQUIRE(dnf.size() == 2);
  CHECK(dnf[0].conjuncts == std::vector<Atom>{a, c});
  CHECK(dnf[1].conjuncts == std::vector<Atom>{b});

  dnf = to_dnf(F("~(x = 0 \\/ x - y <= 0)", v));
  REQUIRE(dnf.size() == 1);
  CHECK(dnf[0].conjuncts == std::vector<Atom>{Atom{P("x", v), Relation::Ne}, c});

  CHECK(to_dnf(F("x = 0 /\\ x = 0", v)).front().conjuncts.size() == 1);
  CHECK(to_dnf(F("false \\/ x = 0", v)).size() == 1);
  CHECK(to_dnf(F("1 = 0", v)).empty());
  REQUIRE(to_dnf(F("0 = 0", v)).size() == 1);
  CHECK(to_dnf(F("0 = 0", v)).front().conjuncts.empty());

  // Two bracketed clauses of equations and an inequality.
  auto w = test::vars({"x", "y"});
  auto two = to_dnf(F("(x^2+y^2-1 = 0 /\\ x^3+y^3-1 = 0 /\\ x*y-1/4 > 0) \\/ "
                      "((x-4)^2+(y-1)^2-1 = 0 /\\ (x-4)^3+(y-1)^3-1 = 0 /\\ (x-4)*(y-1)-1/4 > 0)",
                      w));
  REQUIRE(two.size() == 2);
  CHECK(two[0].conjuncts.size() == 3);
  CHECK(two[0].equation_indices() == std::vector<std::size_t>{0, 1});
  CHECK(two[1].conjuncts[2].poly == P("(x-4)*(y-1)-1/4", w));
}

TEST_CASE("DNF is equivalent on random formulas") {
  auto v = test::vars({"x", "y"});
  std::mt19937 rng(17);
  std::vector<Polynomial> polys;
  for (int i = 0; i < 5; ++i) polys.push_back(P("x", v) + Polynomial::constant(2, i) + P("y", v) * Polynomial::constant(2, i * i));
  for (int trial = 0; trial < 200; ++trial) {
    int budget = 10;
    Formula f = random_formula(rng, polys, budget, 0);
    auto dnf = to_dnf(f);
    CHECK(test::equivalent(f, from_dnf(dnf)));
    for (const auto& q : dnf) {
      for (std::size_t i = 0; i < q.conjuncts.size(); ++i) {
        CHECK(std::count(q.conjuncts.begin(), q.conjuncts.end(), q.conjuncts[i]) == 1);
      }
    }
  }
}

TEST_CASE("problem files") {
  std::string text =
      "# two clauses\n"
      "name: demo\n"
      "description: a small\n"
      "  two-line note\n"
      "vars: x, y\n"
      "formula: x^2 + y^2 - 1 = 0 /\\ x*y > 1/4\n"
      "   \\/ y = x\n"
      "orderings: x < y, y < x\n"
      "mode: tticad\n";
  auto p = parse_problem(text);
  CHECK(p.name == "demo");
  CHECK(p.description == "a small two-line note");
  CHECK(p.variables == test::vars({"x", "y"}));
  CHECK(p.orderings == std::vector<VariableOrder>{test::vars({"x", "y"}), test::vars({"y", "x"})});
  CHECK(p.mode == Mode::Tticad);
  CHECK(p.formula.kind() == Formula::Kind::Or);
  CHECK(parse_problem(to_string(p)) == p);

  auto q = parse_problem("vars: p, q, r | x\nformula: x^4 + p*x^2 + q*x + r >= 0\n");
  CHECK(q.admissible_orderings().size() == 6);
  for (const auto& o : q.admissible_orderings()) CHECK(o.name(3) == "x");
  CHECK(q.candidate_orderings().size() == 6);
  CHECK(parse_problem(to_string(q)) == q);

  auto m = parse_problem("name: Intersection A\nmetadata-only: yes\nexpected: ec1 cells=657 S=61 N=7\n");
  CHECK(m.metadata_only);
  CHECK(m.expected.size() == 1);
  CHECK(parse_problem(to_string(m)) == m);
}

TEST_CASE("problem file errors") {
  auto error = [](const std::string& s) -> std::tuple<std::size_t, std::size_t, std::string> {
    try {
      parse_problem(s);
    } catch (const ParseError& e) {
      return {e.line(), e.column(), e.detail()};
    }
    return {0, 0, ""};
  };
  CHECK(error("vars: x, y\nformula: x + t = 0\n") == std::tuple<std::size_t, std::size_t, std::string>{2, 14, "unknown variable 't'"});
  CHECK(std::get<0>(error("vars: x, y\nformula: x +\n  = 0\n")) == 3);
  CHECK(std::get<2>(error("vars: x, y\nformula: x = 0 /\\ y = 1 x\n")) == "unexpected trailing input");
  CHECK(std::get<2>(error("vars: x, y\nformula: x y = 0\n")).find("malformed relation") == 0);
  CHECK(std::get<2>(error("vars: x, y\nformula:\n")) == "empty formula");
  CHECK(std::get<2>(error("vars: x, y\n")) == "missing 'formula:' section");
  CHECK(std::get<2>(error("vars: x, x\nformula: x = 0\n")) == "variable 'x' declared twice");
  CHECK(std::get<2>(error("vars: x, y\nformula: x = 0\nbogus: 1\n")) == "unknown key 'bogus'");
  CHECK(std::get<2>(error("vars: x | y\nformula: x = 0\norderings: y < x\n")).find("quantifier blocks") != std::string::npos);
  CHECK(std::get<2>(error("vars: x, y\nformula: x = 0\norderings: x < z\n")) == "unknown variable 'z' in ordering");
}
