#include <random>

#include "cadform/algorithms.hpp"
#include "cadform/extension.hpp"
#include "cadform/real_roots.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cadform;
using test::P;

namespace {

UPoly random_upoly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree), coef(-9, 9), den(1, 4);
  std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& x : c) {
    x = Rational(coef(rng), den(rng));
    x.canonicalize();
  }
  if (c.back() == 0) c.back() = 1;
  return UPoly(c);
}

}  // namespace

TEST_CASE("Sturm counting") {
  auto v = test::vars({"x"});
  CHECK(count_distinct_real_roots(P("x^2+1", v)) == 0);
  CHECK(count_distinct_real_roots(P("(x-1)*(x-2)", v)) == 2);
  CHECK(count_distinct_real_roots(P("x^3-x", v)) == 3);
  CHECK(count_distinct_real_roots(P("(x-1)^4*(x+3)^2", v)) == 2);
  CHECK(count_distinct_real_roots(P("5", v)) == 0);
  CHECK_THROWS_AS(count_distinct_real_roots(Polynomial(1)), DomainError);
  auto w = test::vars({"x", "y"});
  CHECK_THROWS_AS(count_distinct_real_roots(P("x*y", w)), DomainError);
  std::vector<Polynomial> set{P("x-1", v), P("(x-1)*(x+1)", v), P("x^2+1", v)};
  CHECK(count_distinct_real_roots(set) == 2);

  SturmChain c(UPoly::from_polynomial(P("x^3-x", v), 0));
  CHECK(c.count_in(Rational(-1), Rational(0)) == 1);  // (-1, 0] contains 0 only
  CHECK(c.count_in(Rational(-2), Rational(2)) == 3);
}

TEST_CASE("root isolation") {
  auto v = test::vars({"x"});
  auto r = isolate_real_roots(P("(x-1)*(x-2)", v));
  REQUIRE(r.size() == 2);
  CHECK(r[0].is_rational());
  CHECK(r[0].rational_value() == 1);
  CHECK(r[1].rational_value() == 2);
  CHECK(isolate_real_roots(P("x^2+1", v)).empty());
  r = isolate_real_roots(P("x^2-2", v));
  REQUIRE(r.size() == 2);
  CHECK(r[0].minimal_poly() == UPoly::from_polynomial(P("x^2-2", v), 0));
  CHECK(r[0].interval().hi <= r[1].interval().lo);
  CHECK(r[0].to_double() == doctest::Approx(-1.41421356));
  CHECK(r[1].to_double() == doctest::Approx(1.41421356));
}

TEST_CASE("sign at algebraic points") {
  auto v = test::vars({"x"});
  auto r = isolate_real_roots(P("x^2-2", v));
  AlgebraicNumber a = r[1];
  CHECK(sign_at(P("x^2-2", v), a) == 0);
  CHECK(sign_at(P("x", v), a) == 1);
  CHECK(sign_at(P("x^2-3", v), a) == -1);
  CHECK(sign_at(P("x^3-2*x", v), a) == 0);
  CHECK(sign_at(P("x-7/5", v), a) == 1);
  CHECK(sign_at(P("x-17/12", v), a) == -1);
}

TEST_CASE("Sturm count matches isolation on random polynomials") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    UPoly p = random_upoly(rng, 8);
    // Products of random pieces give repeated and shared roots.
    if (trial % 3 == 0) p = p * random_upoly(rng, 3) * random_upoly(rng, 2);
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == SturmChain(squarefree_part(p)).count());
    // Each isolating interval holds exactly one sign change of the squarefree part.
    UPoly s = squarefree_part(p);
    for (size_t i = 0; i < roots.size(); ++i) {
      auto iv = roots[i].interval();
      if (iv.is_point()) {
        CHECK(s.eval(iv.lo) == 0);
      } else {
        CHECK(s.sign_at(iv.lo) * s.sign_at(iv.hi) < 0);
        CHECK(SturmChain(s).count_in(iv.lo, iv.hi) == 1);
      }
      if (i + 1 < roots.size()) CHECK(compare(roots[i], roots[i + 1]) < 0);
    }
  }
}

TEST_CASE("sign_at agrees with conclusive interval evaluation") {
  std::mt19937 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    UPoly m = random_upoly(rng, 5);
    auto roots = isolate_real_roots(m);
    for (auto& a : roots) {
      UPoly q = random_upoly(rng, 4);
      AlgebraicNumber fine = a;
      fine.refine_to(Rational(1, 1000000));
      int s = a.sign_of(q);
      auto iv = q.eval(RationalInterval{fine.interval().lo, fine.interval().hi});
      if (iv.strict_sign() != 0) {
        CHECK(s == iv.strict_sign());
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("roots over an algebraic extension") {
  auto v = test::vars({"x", "y"});
  auto f = P("y*((y^2-x)^2+1)", v);
  auto rs = isolate_roots_over_extension(f, AlgebraicNumber(Rational(0)), 0, 1);
  REQUIRE(rs.roots.size() == 1);
  CHECK(rs.roots[0].exact);
  CHECK(rs.roots[0].interval.lo == 0);

  auto sqrt2 = isolate_real_roots(P("x^2-2", test::vars({"x"})))[1];
  rs = isolate_roots_over_extension(P("y^2-x", v), sqrt2, 0, 1);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.roots[0].interval.hi <= rs.roots[1].interval.lo);
  CHECK(rs.roots[0].interval.lo < Rational(-1189, 1000));
  CHECK(rs.roots[0].interval.hi > Rational(-1190, 1000));
  CHECK(rs.roots[1].interval.lo < Rational(1189, 1000));
  CHECK(rs.roots[1].interval.hi > Rational(1190, 1000));

  rs = isolate_roots_over_extension(P("y-x", v), AlgebraicNumber(Rational(1)), 0, 1);
  REQUIRE(rs.roots.size() == 1);
  CHECK(rs.roots[0].interval.lo == 1);

  // (y - x)(y + x) over x = sqrt2: two irrational sections, signs of y^2 - 2 vanish on both.
  NumberField k(sqrt2);
  auto set = isolate_roots_over_extension(specialize(P("(y-x)*(y+x)*(y-1)", v), 0, 1, k), k);
  REQUIRE(set.roots.size() == 3);
  CHECK(sign_at_section(P("y^2-2", test::vars({"x", "y"})), 0, 1, k, set, 0) == 0);
  CHECK(sign_at_section(P("y-1", v), 0, 1, k, set, 0) == -1);
  CHECK(sign_at_section(P("y-1", v), 0, 1, k, set, 1) == 0);
  CHECK(sign_at_section(P("y-1", v), 0, 1, k, set, 2) == 1);
  CHECK(sign_at_section(P("y-x", v), 0, 1, k, set, 2) == 0);
  CHECK(sign_at_section(P("y-x+1/1000", v), 0, 1, k, set, 2) == 1);
  CHECK_THROWS_AS(isolate_roots_over_extension(P("x^2-2", v) * P("y", v), sqrt2, 0, 1), NullifiedOverSample);
}

TEST_CASE("extension isolation agrees with rational substitution") {
  auto v = test::vars({"x", "y"});
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-4, 4), ex(0, 3), val(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Term> ts;
    for (int i = 0; i < 5; ++i) ts.push_back({{static_cast<uint32_t>(ex(rng)), static_cast<uint32_t>(ex(rng))}, Rational(coef(rng))});
    ts.push_back({{0, 2}, Rational(1)});
    Polynomial f = Polynomial::from_terms(2, ts);
    Rational a(val(rng), 2);
    a.canonicalize();
    Polynomial fa = f.substitute(0, a);
    if (fa.is_zero()) continue;
    auto rs = isolate_roots_over_extension(f, AlgebraicNumber(a), 0, 1);
    unsigned expect = fa.is_constant() ? 0 : count_distinct_real_roots(fa);
    CHECK(rs.roots.size() == expect);
  }
}

TEST_CASE("extension isolation over conjugates matches the norm") {
  auto v = test::vars({"x", "y"});
  auto m = P("x^2-2", v);
  auto roots = isolate_real_roots(P("x^2-2", test::vars({"x"})));
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(-4, 4), ex(0, 3);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Term> ts;
    for (int i = 0; i < 5; ++i) ts.push_back({{static_cast<uint32_t>(ex(rng)), static_cast<uint32_t>(ex(rng))}, Rational(coef(rng))});
    ts.push_back({{0, 3}, Rational(1)});
    Polynomial f = Polynomial::from_terms(2, ts);
    Polynomial norm = resultant(m, f, 0);
    // The norm's roots split between the two conjugates when it is squarefree.
    if (norm.is_constant() || !gcd(norm, norm.derivative(1)).is_constant()) continue;
    std::size_t total = 0;
    for (const auto& a : roots) total += isolate_roots_over_extension(f, a, 0, 1).roots.size();
    CHECK(total == count_distinct_real_roots(norm));
    ++checked;
  }
  CHECK(checked > 20);
}
