#include <random>

#include "cadform/algorithms.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cadform;
using test::P;

TEST_CASE("arithmetic") {
  auto v = test::vars({"x", "y"});
  CHECK(P("x+1", v) + P("x-1", v) == P("2*x", v));
  CHECK(P("(x-1)*(y^2+1) - 1", v) == P("x*y^2 - y^2 + x - 2", v));
  CHECK((P("x*y+3", v) * Polynomial(2)).is_zero());
  CHECK(P("3/6*x", v) == P("x", v) * Rational(1, 2));
  CHECK(P("-x^2", v) == -(P("x", v) * P("x", v)));
}

TEST_CASE("printing round-trips through the parser") {
  auto v = test::vars({"x", "y", "z"});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    auto rnd = [&] {
      std::vector<Term> ts;
      for (int i = 0; i < 4; ++i) {
        ts.push_back({{static_cast<uint32_t>(ex(rng)), static_cast<uint32_t>(ex(rng)), static_cast<uint32_t>(ex(rng))},
                      Rational(coef(rng), 1 + ex(rng))});
      }
      return Polynomial::from_terms(3, ts);
    };
    Polynomial pq = rnd() * rnd();
    Polynomial back = parse_polynomial(pq.to_string(v), v);
    REQUIRE(back == pq);
    CHECK(back.terms().size() == pq.terms().size());
  }
}

TEST_CASE("content and primitive part") {
  auto v = test::vars({"y", "x"});  // x is the main variable
  auto cp = content_primitive(P("2*x^2*y + 4*y", v), 1);
  CHECK(cp.content == P("2*y", v));
  CHECK(cp.primitive == P("x^2 + 2", v));
  cp = content_primitive(P("x+1", v), 1);
  CHECK(cp.content == P("1", v));
  CHECK(cp.primitive == P("x+1", v));
  cp = content_primitive(P("6", v), 1);
  CHECK(cp.content == P("6", v));
  CHECK(cp.primitive == P("1", v));
  CHECK_THROWS_AS(content_primitive(Polynomial(2), 1), DomainError);
}

TEST_CASE("gcd") {
  auto v = test::vars({"x", "y"});
  auto f = P("y^5 - 2*y^3*x + y*x^2 + y", v);
  auto g = P("y^5 - 2*y^3*x + y*x^2 - y", v);
  CHECK(gcd(f, g) == P("y", v));
  CHECK(gcd(P("-2*x*y - 2", v), P("-2*x*y - 2", v)) == P("x*y + 1", v));
  CHECK(gcd(P("x-1", v), P("x-2", v)) == P("1", v));
  CHECK(gcd(P("-3*x+6", v), Polynomial(2)) == P("x-2", v));
  CHECK(gcd(P("(x+y)^2*(x-y)", v), P("(x+y)*(x-y)^3*(y+1)", v)) == normalize(P("(x+y)*(x-y)", v)));
}

TEST_CASE("gcd divides both and is maximal on small univariates") {
  auto v = test::vars({"x"});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> root(-3, 3), cnt(0, 3);
  std::vector<Polynomial> linear;
  for (int r = -3; r <= 3; ++r) linear.push_back(P("x - (" + std::to_string(r) + ")", v));
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = P("1", v), b = P("2", v);
    for (int i = 0, n = cnt(rng); i < n; ++i) a *= linear[static_cast<size_t>(root(rng) + 3)];
    for (int i = 0, n = cnt(rng); i < n; ++i) b *= linear[static_cast<size_t>(root(rng) + 3)];
    Polynomial g = gcd(a, b);
    REQUIRE(divide_exact(a, g).has_value());
    REQUIRE(divide_exact(b, g).has_value());
    // Brute force: every product of linear factors dividing both divides g.
    for (const auto& l1 : linear) {
      for (const auto& l2 : linear) {
        Polynomial c = l1 * l2;
        if (divide_exact(a, c) && divide_exact(b, c)) CHECK(divide_exact(g, c).has_value());
      }
      if (divide_exact(a, l1) && divide_exact(b, l1)) CHECK(divide_exact(g, l1).has_value());
    }
  }
}

TEST_CASE("resultant") {
  auto v = test::vars({"x", "y"});
  auto r = resultant(P("x*y", v), P("-y^2 + x^2 + 1", v), 1);
  CHECK((r == P("x^2*(x^2+1)", v) || r == -P("x^2*(x^2+1)", v)));
  CHECK(resultant(P("(y-x)*(y+1)", v), P("(y-x)*(y-3)", v), 1).is_zero());
  auto u = test::vars({"u"});
  CHECK(resultant(P("u^2+1", u), P("u^2-1", u), 0) == P("4", u));
  CHECK_THROWS_AS(resultant(P("x", v), P("y+1", v), 1), DomainError);
}

TEST_CASE("resultant equals the product of root differences") {
  auto v = test::vars({"x"});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> root(-6, 6), deg(1, 4), lc(1, 4), sign(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> rp, rq;
    Rational lp = lc(rng) * (sign(rng) ? 1 : -1), lq = lc(rng) * (sign(rng) ? 1 : -1);
    Polynomial p = Polynomial::constant(1, lp), q = Polynomial::constant(1, lq);
    for (int i = 0, n = deg(rng); i < n; ++i) {
      rp.emplace_back(root(rng), 1 + sign(rng));
      rp.back().canonicalize();
      p *= P("x", v) - Polynomial::constant(1, rp.back());
    }
    for (int i = 0, n = deg(rng); i < n; ++i) {
      rq.emplace_back(root(rng), 1 + sign(rng));
      rq.back().canonicalize();
      q *= P("x", v) - Polynomial::constant(1, rq.back());
    }
    Rational expected = 1;
    for (size_t i = 0; i < rq.size(); ++i) expected *= lp;
    for (size_t i = 0; i < rp.size(); ++i) expected *= lq;
    for (const auto& a : rp) {
      for (const auto& b : rq) expected *= a - b;
    }
    REQUIRE(resultant(p, q, 0) == Polynomial::constant(1, expected));
  }
}

TEST_CASE("discriminant") {
  auto v = test::vars({"x", "y"});
  CHECK(discriminant(P("y^5 - 2*y^3*x + y*x^2 + y", v), 1) == P("256*(x^2+1)^3", v));
  CHECK(discriminant(P("y^5 - 2*y^3*x + y*x^2 - y", v), 1) == P("256*(x-1)^3*(x+1)^3", v));
  CHECK(discriminant(P("(x-1)*y^2 + (x-2)", v), 1) == P("-4*(x-1)*(x-2)", v));
  CHECK_THROWS_AS(discriminant(P("x*y + 1", v), 1), DegreeTooLow);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    Rational b(num(rng), den(rng)), c(num(rng), den(rng));
    b.canonicalize();
    c.canonicalize();
    auto p = P("y^2", v) + P("y", v) * b + Polynomial::constant(2, c);
    REQUIRE(discriminant(p, 1) == Polynomial::constant(2, b * b - 4 * c));
  }
}

TEST_CASE("squarefree coprime basis") {
  auto v = test::vars({"x", "y"});
  std::vector<Polynomial> in{P("-4*(x-1)*(x-2)", v)};
  CHECK(squarefree_coprime_basis(in) == std::vector<Polynomial>{P("x-1", v), P("x-2", v)});
  in = {P("256*(x^2+1)^3", v)};
  CHECK(squarefree_coprime_basis(in) == std::vector<Polynomial>{P("x^2+1", v)});
  in = {P("7", v)};
  CHECK(squarefree_coprime_basis(in).empty());
  in = {P("(x*y+1)^2*(x-1)", v), P("(x*y+1)*(y^2+x)", v), P("x^2-1", v)};
  auto b = squarefree_coprime_basis(in);
  CHECK(b.size() == 4);
}

TEST_CASE("basis properties on random inputs") {
  auto v = test::vars({"x", "y"});
  std::mt19937 rng(19);
  std::vector<Polynomial> atoms{P("x-1", v),     P("x+2", v),       P("x^2-2", v),   P("y-x", v),
                                P("x*y+1", v),   P("y^2+x^2-1", v), P("y+1", v),     P("2*x*y-y+3", v)};
  std::uniform_int_distribution<size_t> pick(0, atoms.size() - 1);
  std::uniform_int_distribution<int> cnt(1, 3), ex(1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> in;
    Polynomial prod_in = P("1", v);
    for (int k = 0, n = cnt(rng); k < n; ++k) {
      Polynomial p = P("3", v);
      for (int i = 0, m = cnt(rng); i < m; ++i) p *= atoms[pick(rng)].pow(static_cast<unsigned>(ex(rng)));
      in.push_back(p);
      prod_in *= p;
    }
    auto basis = squarefree_coprime_basis(in);
    Polynomial prod_out = P("1", v);
    for (size_t i = 0; i < basis.size(); ++i) {
      prod_out *= basis[i];
      CHECK(!basis[i].is_constant());
      for (size_t j = i + 1; j < basis.size(); ++j) CHECK(gcd(basis[i], basis[j]).is_constant());
      // Elements are primitive in their main variable, so squarefreeness is
      // decided by the derivative in that variable.
      CAPTURE(basis[i]);
      CHECK(gcd(basis[i], basis[i].derivative(*basis[i].main_variable())).is_constant());
      CHECK(squarefree_part(basis[i]) == basis[i]);
    }
    CHECK(squarefree_part(prod_out) == squarefree_part(prod_in));
  }
}

TEST_CASE("univariate factorization") {
  auto v = test::vars({"x"});
  auto f = factor_univariate(P("x^2 - 3*x + 2", v));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].factor == P("x-1", v));
  CHECK(f.factors[1].factor == P("x-2", v));
  f = factor_univariate(P("x^2+1", v));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].multiplicity == 1);
  f = factor_univariate(P("(x-1)^3*(x+1)^3", v));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].factor == P("x+1", v));
  CHECK(f.factors[0].multiplicity == 3);
  CHECK(f.factors[1].factor == P("x-1", v));
  CHECK(f.factors[1].multiplicity == 3);
  f = factor_univariate(P("4*x^3 - 4*x^2 - 3*x + 2", v));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].factor == P("2*x-1", v));
  CHECK(f.factors[1].factor == P("2*x^2-x-2", v));
  CHECK_THROWS(factor_univariate(P("x", test::vars({"x", "y"})) * P("y", test::vars({"x", "y"}))));
}

TEST_CASE("factorization reconstructs its input") {
  auto v = test::vars({"x"});
  // Swinnerton-Dyer style polynomial: irreducible but splits modulo every prime.
  auto sd = P("x^4 - 10*x^2 + 1", v);
  auto f = factor_univariate(sd);
  REQUIRE(f.factors.size() == 1);
  std::vector<Polynomial> pieces{P("x^2-2", v), P("x^3-x-1", v), P("3*x+5", v), P("x^4+1", v), P("x^2+x+1", v),
                                 P("x^5-5*x+12", v), P("x", v), P("x^6+x^3+1", v)};
  std::mt19937 rng(23);
  std::uniform_int_distribution<size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> cnt(1, 4), ex(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial p = P("-5/3", v);
    for (int i = 0, n = cnt(rng); i < n; ++i) p *= pieces[pick(rng)].pow(static_cast<unsigned>(ex(rng)));
    auto fac = factor_univariate(p);
    Polynomial back = Polynomial::constant(1, fac.unit);
    for (const auto& fm : fac.factors) {
      back *= fm.factor.pow(fm.multiplicity);
      bool known = false;
      for (const auto& q : pieces) known = known || normalize(q) == fm.factor;
      CHECK(known);
    }
    REQUIRE(back == p);
  }
}
