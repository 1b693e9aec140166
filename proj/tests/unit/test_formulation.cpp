#include <algorithm>
#include <random>

#include "cadform/formulation.hpp"
#include "cadform/groebner.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cadform;
using test::P;

namespace {

const char* kTwoCurves =
    "y - 1 - x^3 + x^2 + x = 0 /\\ y - x/4 + 1/2 > 0 /\\ -y - 1 - x^3 + x^2 + x = 0 /\\ -y - x/4 + 1/2 < 0";
const char* kCircleCubic =
    "(x^2+y^2-1 = 0 /\\ x^3+y^3-1 = 0 /\\ x*y-1/4 > 0) \\/ "
    "((x-4)^2+(y-1)^2-1 = 0 /\\ (x-4)^3+(y-1)^3-1 = 0 /\\ (x-4)*(y-1)-1/4 > 0)";

ProblemFile problem(const std::string& vars, const std::string& formula) {
  return parse_problem("vars: " + vars + "\nformula: " + formula + "\n");
}

RankingOptions with(Heuristic h) {
  RankingOptions o;
  o.heuristic = h;
  return o;
}

Formula normalized(const Qff& q) {
  std::vector<Formula> atoms;
  for (const auto& a : q.conjuncts) atoms.push_back(Formula::atom(a.normalized()));
  return Formula::conjunction(std::move(atoms));
}

std::string designated_text(const Qff& q, const VariableOrder& v) {
  return q.conjuncts.at(q.designated_ec.value()).poly.to_string(v);
}

}  // namespace

TEST_CASE("heuristic names and keys") {
  for (auto h : {Heuristic::Sotd, Heuristic::Ndrr, Heuristic::SotdNdrr, Heuristic::NdrrSotd, Heuristic::Sum}) {
    CHECK(parse_heuristic(to_string(h)) == h);
  }
  CHECK(!parse_heuristic("cells"));
  MeasureVector m;
  m.sotd = 7;
  m.ndrr = 2;
  CHECK(score_key(m, with(Heuristic::NdrrSotd)) == std::vector<Rational>{2, 7});
  RankingOptions sum = with(Heuristic::Sum);
  sum.ndrr_weight = Rational(1, 2);
  CHECK(score_key(m, sum) == std::vector<Rational>{8});
}

TEST_CASE("ordering advice for a single curve") {
  auto p = problem("x, y", "(x-1)*(y^2+1) - 1 = 0");
  AdviceOptions o;
  o.heuristic = Heuristic::Ndrr;
  auto r = advise_order(p, Mode::Full, o);
  REQUIRE(r.size() == 2);
  CHECK(r[0].candidate.order == test::vars({"y", "x"}));
  CHECK(r[0].measures.ndrr == 0);
  CHECK(r[1].measures.ndrr == 2);
  CHECK(r[0].rank == 1);
  CHECK(r[1].rank == 2);

  o.heuristic = Heuristic::Sotd;
  r = advise_order(p, Mode::Full, o);
  CHECK(r[0].measures.sotd == r[1].measures.sotd);
  CHECK(r[0].rank == 1);
  CHECK(r[1].rank == 1);
  // Equal scores fall back to the serialization, so the order is fixed.
  CHECK(r[0].candidate.order == test::vars({"x", "y"}));

  // The default priority breaks the sotd tie with ndrr.
  r = advise_order(p, Mode::Full, AdviceOptions{});
  CHECK(r[0].candidate.order == test::vars({"y", "x"}));

  o.greedy = true;
  r = advise_order(p, Mode::Full, o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].candidate.order == test::vars({"y", "x"}));
}

TEST_CASE("quartic with its quantified variable projected first") {
  auto p = problem("p, q, r | x", "x^4 + p*x^2 + q*x + r >= 0");
  AdviceOptions o;
  o.heuristic = Heuristic::Ndrr;
  auto r = advise_order(p, Mode::Full, o);
  REQUIRE(r.size() == 6);
  for (const auto& rep : r) {
    CHECK(rep.measures.ndrr == 1);
    CHECK(rep.rank == 1);
    CHECK(rep.candidate.order.name(3) == "x");
  }
  // sotd separates at least some orderings.
  o.heuristic = Heuristic::Sotd;
  r = advise_order(p, Mode::Full, o);
  CHECK(r.back().rank > 1);

  o.greedy = true;
  r = advise_order(p, Mode::Full, o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].candidate.order.name(3) == "x");

  AdviceOptions capped;
  capped.max_orderings = 5;
  CHECK_THROWS_AS(advise_order(p, Mode::Full, capped), SizeCapError);
  try {
    advise_order(p, Mode::Full, capped);
  } catch (const SizeCapError& e) {
    CHECK(std::string(e.what()).find("greedy") != std::string::npos);
  }
}

TEST_CASE("declared orderings restrict the advice") {
  auto p = parse_problem("vars: x, y, z\nformula: x*y - z = 0\norderings: x < y < z,\n  z < y < x\n");
  auto r = advise_order(p, Mode::Full, AdviceOptions{});
  CHECK(r.size() == 2);
}

TEST_CASE("equational constraint designation") {
  auto v = test::vars({"x", "y"});
  Qff q{{{P("y^5 - 2*y^3*x + y*x^2 + y", v), Relation::Eq}, {P("y^5 - 2*y^3*x + y*x^2 - y", v), Relation::Eq}}, {}};
  auto r = advise_ec(q, v, with(Heuristic::Ndrr));
  REQUIRE(r.size() == 2);
  CHECK(designated_text(r[0].candidate.qffs[0], v) == "y^5 - 2*x*y^3 + x^2*y + y");
  CHECK(r[0].measures.ndrr == 0);
  CHECK(r[1].measures.ndrr == 2);
  CHECK(r[0].candidate.kind == ProjectionKind::Reduced);

  r = advise_ec(q, v, with(Heuristic::Sotd));
  CHECK(r[0].measures.sotd == r[1].measures.sotd);
  CHECK(r[1].rank == 1);

  Qff one{{{P("x*y-1", v), Relation::Eq}, {P("x", v), Relation::Gt}}, {}};
  r = advise_ec(one, v, RankingOptions{});
  REQUIRE(r.size() == 1);
  CHECK(designated_text(r[0].candidate.qffs[0], v) == "x*y - 1");

  Qff none{{{P("x", v), Relation::Gt}}, {}};
  CHECK_THROWS_AS(advise_ec(none, v, RankingOptions{}), ModeError);
}

TEST_CASE("modes of a candidate") {
  auto p = problem("x, y", "x*y - 1 = 0 /\\ x > 0 \\/ x*y - 1 = 0 /\\ y > 2");
  auto ec = make_candidate(p.formula, p.variables, p.variables, Mode::Ec);
  CHECK(ec.kind == ProjectionKind::Reduced);
  CHECK(implied_equations(to_dnf(p.formula)).size() == 1);

  auto none = problem("x, y", "x*y - 1 = 0 \\/ y > 2");
  CHECK_THROWS_AS(make_candidate(none.formula, none.variables, none.variables, Mode::Ec), ModeError);
  try {
    make_candidate(none.formula, none.variables, none.variables, Mode::Tticad);
    FAIL("expected a mode error");
  } catch (const ModeError& e) {
    CHECK(std::string(e.what()).find("not suitable for TTICAD") != std::string::npos);
  }
  CHECK_THROWS_AS(formulate_tticad(to_dnf(none.formula), none.variables, FormulateOptions{}), ModeError);
}

TEST_CASE("partition counts") {
  // Sum over set partitions of the product of block sizes, times blocks^r.
  CHECK(count_partitions(0, 0, 2000) == 1);
  CHECK(count_partitions(3, 0, 2000) == 10);
  CHECK(count_partitions(1, 3, 2000) == 1);
  CHECK(count_partitions(2, 0, 2000) == 3);  // {ab}: 2 designations, {a}{b}: 1
  CHECK(count_partitions(2, 2, 2000) == 6);
  CHECK(count_partitions(3, 1, 2000) == 18);
  CHECK(count_partitions(12, 6, 2000) == 2001);

  auto v = test::vars({"x", "y"});
  Qff c{{{P("x", v), Relation::Eq}, {P("y", v), Relation::Eq}, {P("x+y", v), Relation::Gt}, {P("x-y", v), Relation::Lt}},
        {}};
  auto opts = clause_options(c, 2000);
  CHECK(opts.size() == count_partitions(2, 2, 2000));
  for (const auto& o : opts) {
    std::vector<Formula> parts;
    for (const auto& q : o) {
      REQUIRE(q.designated_ec);
      CHECK(q.conjuncts[*q.designated_ec].is_equation());
      parts.push_back(normalized(q));
    }
    CHECK(test::equivalent(Formula::conjunction(parts), normalized(c)));
  }
  CHECK_THROWS_AS(clause_options(c, 5), SizeCapError);
}

TEST_CASE("splitting a clause of two curves") {
  auto p = problem("x, y", kTwoCurves);
  auto dnf = to_dnf(p.formula);
  REQUIRE(dnf.size() == 1);
  CHECK(dnf[0].equation_indices().size() == 2);

  // Both single-designation formulations.
  for (auto r : advise_ec(dnf[0], p.variables, RankingOptions{})) {
    CHECK(r.measures.sotd == 30);
    CHECK(r.measures.ndrr == 6);
  }

  FormulateOptions o;
  o.heuristic = Heuristic::NdrrSotd;
  auto r = formulate_tticad(dnf, p.variables, o);
  REQUIRE(r.chosen.candidate.qffs.size() == 2);
  CHECK(r.chosen.measures.sotd == 26);
  CHECK(r.chosen.measures.ndrr == 3);
  auto v = p.variables;
  Atom f1{P("y - 1 - x^3 + x^2 + x", v), Relation::Eq}, g1{P("y - x/4 + 1/2", v), Relation::Gt};
  Atom f2{P("-y - 1 - x^3 + x^2 + x", v), Relation::Eq}, g2{P("-y - x/4 + 1/2", v), Relation::Lt};
  auto expect = [&](const Atom& f, const Atom& g) {
    return std::any_of(r.chosen.candidate.qffs.begin(), r.chosen.candidate.qffs.end(), [&](const Qff& q) {
      return q.conjuncts.size() == 2 && q.conjuncts[*q.designated_ec] == f.normalized() &&
             std::find(q.conjuncts.begin(), q.conjuncts.end(), g.normalized()) != q.conjuncts.end();
    });
  };
  CHECK(expect(f1, g1));
  CHECK(expect(f2, g2));

  // Under sotd priority another split is cheaper still; the pairing above is
  // still an option below the single designations.
  r = formulate_tticad(dnf, p.variables, FormulateOptions{});
  CHECK(r.chosen.candidate.qffs.size() == 2);
  CHECK(r.chosen.measures.sotd <= 26);
  REQUIRE(r.clauses.size() == 1);
  bool found = false;
  for (const auto& opt : r.clauses[0].options) {
    found = found || (opt.measures.sotd == 26 && opt.measures.ndrr == 3);
  }
  CHECK(found);

  for (const auto& opt : r.clauses[0].options) {
    std::vector<Formula> parts;
    for (const auto& q : opt.candidate.qffs) parts.push_back(normalized(q));
    CHECK(test::equivalent(Formula::conjunction(parts), normalized(dnf[0])));
  }
}

TEST_CASE("two clauses of circle and cubic") {
  auto p = problem("y, x", kCircleCubic);
  auto dnf = to_dnf(p.formula);
  REQUIRE(dnf.size() == 2);

  // Without preconditioning: sotd picks the circles, ndrr the cubics.
  auto r = formulate_tticad(dnf, p.variables, FormulateOptions{});
  REQUIRE(r.chosen.candidate.qffs.size() == 2);
  auto v = p.variables;
  CHECK(r.chosen.candidate.qffs[0].conjuncts[*r.chosen.candidate.qffs[0].designated_ec].poly == P("x^2+y^2-1", v));
  CHECK(r.chosen.measures.sotd == 62);
  CHECK(r.chosen.measures.ndrr == 12);
  FormulateOptions n;
  n.heuristic = Heuristic::NdrrSotd;
  r = formulate_tticad(dnf, p.variables, n);
  CHECK(r.chosen.measures.ndrr == 7);

  // Preconditioned: each clause keeps its three basis equations and the
  // univariate eliminants are designated.
  n.precondition = true;
  r = formulate_tticad(dnf, p.variables, n);
  REQUIRE(r.chosen.candidate.qffs.size() == 2);
  CHECK(r.chosen.candidate.preconditioned);
  for (const auto& q : r.chosen.candidate.qffs) {
    CHECK(q.equation_indices().size() == 3);
    CHECK(q.conjuncts[*q.designated_ec].poly.variables() == std::vector<std::size_t>{0});
  }
  CHECK(r.chosen.measures.ndrr == 3);
}

TEST_CASE("single equations designate trivially") {
  auto p = problem("x, y", "x^2 + y^2 - 1 = 0 /\\ x > 0 \\/ y - x = 0 /\\ y < 1/2");
  auto r = formulate_tticad(to_dnf(p.formula), p.variables, FormulateOptions{});
  CHECK(r.chosen.candidate.qffs.size() == 2);
  for (const auto& c : r.clauses) CHECK(c.options.empty());
  std::vector<Formula> clauses;
  for (const auto& q : to_dnf(p.formula)) clauses.push_back(normalized(q));
  CHECK(test::equivalent(r.chosen.candidate.as_formula(), Formula::disjunction(clauses)));
}

TEST_CASE("preconditioning drops false clauses") {
  auto p = problem("x, y", "x = 0 /\\ x - 1 = 0 \\/ x*y - 1 = 0");
  FormulateOptions o;
  o.precondition = true;
  auto r = formulate_tticad(to_dnf(p.formula), p.variables, o);
  CHECK(r.chosen.candidate.qffs.size() == 1);
  CHECK(!r.warnings.empty());
}

TEST_CASE("merge analysis") {
  auto v = test::vars({"x", "y"});
  Atom e{P("x^2+y^2-1", v), Relation::Eq}, h{P("x-y", v), Relation::Eq};
  Atom a{P("x", v), Relation::Gt}, b{P("y", v), Relation::Lt};
  std::vector<Qff> same{{{e, a}, 0}, {{e, b}, 0}};
  auto m = merge_analysis(same);
  REQUIRE(m.size() == 1);
  CHECK(m[0].kind == MergeFinding::Kind::Neutral);

  std::vector<Qff> disjoint{{{e, a}, 0}, {{h, b}, 0}};
  CHECK(merge_analysis(disjoint).empty());

  std::vector<Qff> redesign{{{e, a}, 0}, {{h, e}, 0}};
  m = merge_analysis(redesign);
  REQUIRE(m.size() == 1);
  CHECK(m[0].kind == MergeFinding::Kind::NeedsRedesignation);
}

TEST_CASE("advice is invariant under atom permutation and positive scaling") {
  std::mt19937 rng(23);
  auto v = test::vars({"x", "y"});
  std::vector<Atom> atoms{{P("y^5 - 2*y^3*x + y*x^2 + y", v), Relation::Eq},
                          {P("y^5 - 2*y^3*x + y*x^2 - y", v), Relation::Eq},
                          {P("x - 1/3", v), Relation::Gt}};
  auto base = advise_ec(Qff{atoms, {}}, v, RankingOptions{});
  std::uniform_int_distribution<int> scale(1, 9);
  for (int trial = 0; trial < 5; ++trial) {
    auto shuffled = atoms;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& a : shuffled) a.poly = a.poly * Polynomial::constant(2, Rational(scale(rng), scale(rng)));
    auto r = advise_ec(Qff{shuffled, {}}, v, RankingOptions{});
    REQUIRE(r.size() == base.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(r[i].candidate.serialize() == base[i].candidate.serialize());
      CHECK(r[i].measures.sotd == base[i].measures.sotd);
    }
  }

  auto p = problem("x, y", kTwoCurves);
  auto ref = formulate_tticad(to_dnf(p.formula), p.variables, FormulateOptions{}).chosen.candidate.serialize();
  auto q = problem("x, y",
                   "-2*y - 2*x^3 + 2*x^2 + 2*x - 2 = 0 /\\ -4*y - x + 2 < 0 /\\ 3*y - 3/4*x + 3/2 > 0 /\\ "
                   "y - 1 - x^3 + x^2 + x = 0");
  CHECK(formulate_tticad(to_dnf(q.formula), q.variables, FormulateOptions{}).chosen.candidate.serialize() == ref);
}
