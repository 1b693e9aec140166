#include <algorithm>
#include <random>

#include "cadform/algorithms.hpp"
#include "cadform/measures.hpp"
#include "cadform/projection.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cadform;
using test::P;

namespace {

std::vector<Polynomial> Ps(std::initializer_list<const char*> src, const VariableOrder& v) {
  std::vector<Polynomial> out;
  for (const char* s : src) out.push_back(P(s, v));
  return out;
}

bool contains(const std::vector<Polynomial>& set, const Polynomial& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

}  // namespace

TEST_CASE("needed coefficients") {
  auto v = test::vars({"x", "y"});
  auto c = needed_coefficients(P("(x-1)*y^2 + x - 2", v), 1);
  CHECK(c == Ps({"x-1", "x-2"}, v));
  CHECK(needed_coefficients(P("y^2 + x*y + 1", v), 1).empty());
  c = needed_coefficients(P("x*y^3 + x^2*y^2 + 3*y + x", v), 1);
  CHECK(c == Ps({"x", "x^2"}, v));
  // A leading coefficient without real zeros is the last one needed.
  CHECK(needed_coefficients(P("(y^2+1)*x - y^2 - 2", v), 0) == Ps({"y^2+1"}, v));
  CHECK(needed_coefficients(P("(x^2+1)*y - x", v), 1) == Ps({"x^2+1"}, v));
  auto w = test::vars({"x", "y", "z"});
  CHECK(needed_coefficients(P("(x^2+y^4+2)*z + x", w), 2) == Ps({"x^2+y^4+2"}, w));
  CHECK(needed_coefficients(P("(x^2-y^2+2)*z + x", w), 2) == Ps({"x^2-y^2+2", "x"}, w));
}

TEST_CASE("full projection of a single curve") {
  auto xy = test::vars({"x", "y"});
  std::vector<Polynomial> in{P("(x-1)*(y^2+1) - 1", xy)};
  auto t = project_full(in, xy);
  CHECK(t.level(1) == Ps({"x-1", "x-2"}, xy));
  CHECK(t.level(2) == Ps({"x*y^2 - y^2 + x - 2"}, xy));
  CHECK(sotd(t) == 8);
  CHECK(ndrr(t) == 2);

  auto yx = test::vars({"y", "x"});
  std::vector<Polynomial> in2{P("(x-1)*(y^2+1) - 1", yx)};
  auto t2 = project_full(in2, yx);
  CHECK(t2.level(1) == Ps({"y^2+1"}, yx));
  CHECK(sotd(t2) == 8);
  CHECK(ndrr(t2) == 0);

  std::vector<Polynomial> line{P("y-x", xy)};
  CHECK(project_full(line, xy).level(1).empty());
  std::vector<Polynomial> zero{Polynomial(2)};
  CHECK_THROWS_AS(project_full(zero, xy), DegenerateInput);
}

TEST_CASE("univariate input gives a one-level table") {
  auto v = test::vars({"x"});
  auto in = Ps({"x^2-1", "3*x+3", "x^2+1"}, v);
  CHECK(project_full(in, v).level(1) == squarefree_coprime_basis(in));
  CHECK(project_reduced(in[0], std::span(in).subspan(1), v).level(1) == squarefree_coprime_basis(in));
}

TEST_CASE("reduced projection with a shared factor") {
  auto v = test::vars({"x", "y"});
  auto f = P("y^5 - 2*y^3*x + y*x^2 + y", v);
  auto g = P("y^5 - 2*y^3*x + y*x^2 - y", v);
  std::vector<Polynomial> gs{g}, fs{f};
  auto tf = project_reduced(f, gs, v);
  CHECK(tf.level(1) == Ps({"x^2+1"}, v));
  CHECK(ndrr(tf) == 0);
  CHECK(!tf.warnings.empty());
  auto tg = project_reduced(g, fs, v);
  CHECK(contains(tg.level(1), P("x-1", v)));
  CHECK(contains(tg.level(1), P("x+1", v)));
  CHECK(ndrr(tg) == 2);
  CHECK(sotd(tf) == sotd(tg));

  std::vector<Polynomial> none;
  auto t0 = project_reduced(P("(x-1)*y^2 + x - 2", v), none, v);
  CHECK(t0.level(1) == Ps({"x-1", "x-2"}, v));
}

TEST_CASE("TTICAD and equational-constraint tables for two cubic curves") {
  auto v = test::vars({"x", "y"});
  auto f1 = P("(y-1) - x^3 + x^2 + x", v), g1 = P("y - x/4 + 1/2", v);
  auto f2 = P("(-y-1) - x^3 + x^2 + x", v), g2 = P("-y - x/4 + 1/2", v);
  std::vector<QffProjectionSpec> two{{f1, {g1}}, {f2, {g2}}};
  auto t = project_tticad(two, v);
  CHECK(sotd(t) == 26);
  CHECK(ndrr(t) == 3);
  std::vector<QffProjectionSpec> one{{f1, {g1, f2, g2}}};
  auto e = project_tticad(one, v);
  CHECK(sotd(e) == 30);
  CHECK(ndrr(e) == 6);
  std::vector<Polynomial> others{g1, f2, g2};
  auto r = project_reduced(f1, others, v);
  CHECK(r.levels == e.levels);
  std::vector<QffProjectionSpec> other_ec{{f2, {g2, f1, g1}}};
  CHECK(sotd(project_tticad(other_ec, v)) == 30);
  CHECK(ndrr(project_tticad(other_ec, v)) == 6);

  std::vector<QffProjectionSpec> missing{{P("3", v), {g1}}};
  CHECK_THROWS_AS(project_tticad(missing, v), ModeError);
}

TEST_CASE("TTICAD measures for two circle/cubic clauses") {
  struct Row {
    int a, b;
    std::size_t s, n;
  };
  // Orders: x projected first (y < x) and y projected first (x < y).
  for (bool y_low : {true, false}) {
    auto v = y_low ? test::vars({"y", "x"}) : test::vars({"x", "y"});
    std::vector<Polynomial> f1{P("x^2+y^2-1", v), P("x^3+y^3-1", v)};
    std::vector<Polynomial> f2{P("(x-4)^2+(y-1)^2-1", v), P("(x-4)^3+(y-1)^3-1", v)};
    auto g1 = P("x*y-1/4", v), g2 = P("(x-4)*(y-1)-1/4", v);
    std::vector<Row> rows = y_low ? std::vector<Row>{{0, 0, 62, 12}, {0, 1, 94, 10}, {1, 0, 85, 9}, {1, 1, 99, 7}}
                                  : std::vector<Row>{{0, 0, 65, 14}, {0, 1, 96, 11}, {1, 0, 88, 11}, {1, 1, 101, 8}};
    for (const auto& row : rows) {
      CAPTURE(y_low);
      CAPTURE(row.a);
      CAPTURE(row.b);
      std::vector<QffProjectionSpec> q{{f1[row.a], {f1[1 - row.a], g1}}, {f2[row.b], {f2[1 - row.b], g2}}};
      auto t = project_tticad(q, v);
      CHECK(sotd(t) == row.s);
      CHECK(ndrr(t) == row.n);
    }
  }
}

TEST_CASE("projection properties") {
  auto v = test::vars({"x", "y"});
  auto in = Ps({"x^2+y^2-1", "x*y-1/4", "y-x^2", "(x-2)*y+1"}, v);
  auto full = project_full(in, v);
  std::mt19937 rng(1);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(in.begin(), in.end(), rng);
    CHECK(project_full(in, v).levels == full.levels);
  }
  // Reduced level-1 factors divide products of full level-1 factors.
  std::vector<Polynomial> others(in.begin() + 1, in.end());
  auto red = project_reduced(in[0], others, v);
  for (const auto& p : red.level(1)) CHECK(contains(full.level(1), p));
  // Fixed points of the basis operation.
  for (const auto& lvl : full.levels) CHECK(squarefree_coprime_basis(lvl) == lvl);
}

TEST_CASE("measures") {
  auto xyz = test::vars({"x", "y", "z"});
  CHECK(tnoi(Ps({"x^2+y", "z"}, xyz)) == 3);
  CHECK(tnoi(std::vector<Polynomial>{}) == 0);
  CHECK(tnoi(Ps({"x*y", "x"}, xyz)) == 3);
  CHECK(tnoi(Ps({"x*y", "x*y"}, xyz)) == 4);
  CHECK(sotd(Ps({"x*y^2 - y^2 + x - 2", "x-1", "x-2"}, xyz)) == 8);
  CHECK(sotd(Ps({"x^2*y^3*z"}, xyz)) == 6);
  ProjectionTable empty;
  CHECK(sotd(empty) == 0);
  CHECK(ndrr(empty) == 0);
  auto x = test::vars({"x"});
  CHECK(ndrr(Ps({"x-1", "x-2"}, x)) == 2);
  CHECK(ndrr(Ps({"7/3*x-7/3", "x-2", "(x-1)*(x-3)"}, x)) == 3);
  CHECK(ndrr(Ps({"x^2+1"}, x)) == 0);
}

TEST_CASE("table report") {
  auto v = test::vars({"x", "y"});
  std::vector<Polynomial> in{P("(x-1)*(y^2+1) - 1", v)};
  auto text = format_table(project_full(in, v));
  CHECK(text.find("level 2 (y)") != std::string::npos);
  CHECK(text.find("level 1 (x): 2 factors, sotd 2, ndrr 2") != std::string::npos);
  CHECK(text.find("total: sotd 8, ndrr 2") != std::string::npos);
}
