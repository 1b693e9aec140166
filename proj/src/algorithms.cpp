#include "cadform/algorithms.hpp"

#include <algorithm>

namespace cadform {

namespace {

bool divides_monomial(const Exponents& num, const Exponents& den) {
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (den[i] > num[i]) return false;
  }
  return true;
}

Polynomial monomial_times(const Polynomial& p, const Term& t) {
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& s : p.terms()) {
    Term u{s.exponents, s.coeff * t.coeff};
    for (std::size_t i = 0; i < u.exponents.size(); ++i) u.exponents[i] += t.exponents[i];
    terms.push_back(std::move(u));
  }
  // Multiplying by a monomial preserves lex order; from_terms is still cheap.
  return Polynomial::from_terms(p.nvars(), std::move(terms));
}

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.nvars(), Rational(1)); }

/// Normalized gcd of the coefficients of p with respect to var.
Polynomial content_poly(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (const auto& c : p.coefficients(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  auto q = divide_exact(p, content_poly(p, var));
  return normalize(*q);
}

}  // namespace

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  std::size_t n = std::max(a.nvars(), b.nvars());
  std::vector<Term> quotient;
  Polynomial r = a;
  const Term& lb = b.leading_term();
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!divides_monomial(lr.exponents, lb.exponents)) return std::nullopt;
    Term t{lr.exponents, lr.coeff / lb.coeff};
    for (std::size_t i = 0; i < t.exponents.size(); ++i) t.exponents[i] -= lb.exponents[i];
    r -= monomial_times(b, t);
    quotient.push_back(std::move(t));
  }
  return Polynomial::from_terms(n, std::move(quotient));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  int db = b.degree(var);
  if (db < 0) throw DomainError("pseudo-remainder by zero polynomial");
  int dr = a.degree(var);
  if (dr < db) return a;
  Polynomial lcb = b.leading_coefficient_in(var);
  Polynomial r = a;
  int e = dr - db + 1;
  while (!r.is_zero() && r.degree(var) >= db) {
    auto k = static_cast<std::uint32_t>(r.degree(var) - db);
    Polynomial lcr = r.leading_coefficient_in(var);
    r = lcb * r - (lcr * b).shifted(var, k);
    --e;
  }
  if (e > 0) r = lcb.pow(static_cast<unsigned>(e)) * r;
  return r;
}

ContentPrimitive content_primitive(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) throw DomainError("content of the zero polynomial");
  Polynomial g = content_poly(p, var);
  Polynomial prim = *divide_exact(p, g);
  Rational f = normalization_factor(prim);
  return {g * f, prim * (1 / f)};
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (p.is_constant() || q.is_constant()) return one_like(p.nvars() >= q.nvars() ? p : q);
  std::size_t v = std::max(*p.main_variable(), *q.main_variable());
  if (!p.involves(v)) return gcd(p, content_poly(q, v));
  if (!q.involves(v)) return gcd(content_poly(p, v), q);

  Polynomial cp = content_poly(p, v), cq = content_poly(q, v);
  Polynomial c = gcd(cp, cq);
  Polynomial a = normalize(*divide_exact(p, cp));
  Polynomial b = normalize(*divide_exact(q, cq));
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  Polynomial g;
  for (;;) {
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) {
      g = b;
      break;
    }
    if (!r.involves(v)) {
      g = one_like(p);
      break;
    }
    a = std::move(b);
    b = primitive_part(r, v);
  }
  return normalize(c * g);
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var) {
  if (p.degree(var) < 1 || q.degree(var) < 1) {
    throw DomainError("resultant requires positive degree in the main variable");
  }
  Polynomial a = p, b = q;
  int s = 1;
  if (a.degree(var) < b.degree(var)) {
    std::swap(a, b);
    if (a.degree(var) % 2 == 1 && b.degree(var) % 2 == 1) s = -s;
  }
  Polynomial g = one_like(a), h = one_like(a);
  for (;;) {
    int da = a.degree(var), db = b.degree(var);
    int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) s = -s;
    Polynomial r = pseudo_remainder(a, b, var);
    a = std::move(b);
    if (r.is_zero()) return Polynomial(p.nvars());
    b = *divide_exact(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.leading_coefficient_in(var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = *divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (b.degree(var) == 0) {
      int dA = a.degree(var);
      Polynomial out;
      if (dA == 1) {
        out = b;
      } else {
        out = *divide_exact(b.pow(static_cast<unsigned>(dA)), h.pow(static_cast<unsigned>(dA - 1)));
      }
      return s < 0 ? -out : out;
    }
  }
}

Polynomial discriminant(const Polynomial& p, std::size_t var) {
  int d = p.degree(var);
  if (d < 2) throw DegreeTooLow("discriminant requires degree >= 2 in the main variable");
  Polynomial r = resultant(p, p.derivative(var), var);
  auto q = divide_exact(r, p.leading_coefficient_in(var));
  if (!q) throw Error("internal: resultant not divisible by leading coefficient");
  return ((d * (d - 1) / 2) % 2 == 1) ? -*q : *q;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) return p.is_zero() ? p : one_like(p);
  Polynomial g = p;
  for (std::size_t v : p.variables()) {
    g = gcd(g, p.derivative(v));
    if (g.is_constant()) break;
  }
  return normalize(*divide_exact(p, g));
}

namespace {

// q is normalized, squarefree, non-constant and coprime to nothing in
// particular; split it against every element.
void push_piece(std::vector<Polynomial>& out, const Polynomial& piece) {
  if (piece.is_constant()) return;
  if (piece.is_univariate()) {
    for (auto& f : factor_univariate(piece).factors) out.push_back(std::move(f.factor));
  } else {
    out.push_back(normalize(piece));
  }
}

// Every element of basis is squarefree and coprime to the others; so is q.
// An element sharing a factor with q splits into gcd and cofactor.
void insert_coprime(std::vector<Polynomial>& basis, Polynomial q) {
  std::vector<Polynomial> out;
  out.reserve(basis.size() + 2);
  for (auto& b : basis) {
    if (q.is_constant()) {
      out.push_back(std::move(b));
      continue;
    }
    Polynomial g = gcd(b, q);
    if (g.is_constant()) {
      out.push_back(std::move(b));
      continue;
    }
    Polynomial rest = *divide_exact(b, g);
    q = normalize(*divide_exact(q, g));
    push_piece(out, g);
    push_piece(out, rest);
  }
  push_piece(out, q);
  basis = std::move(out);
}

}  // namespace

void refine_basis(std::vector<Polynomial>& basis, const Polynomial& p) {
  if (p.is_constant()) return;
  std::size_t v = *p.main_variable();
  auto cp = content_primitive(p, v);
  if (!cp.content.is_constant()) refine_basis(basis, cp.content);
  Polynomial q = squarefree_part(cp.primitive);
  if (q.is_univariate()) {
    for (auto& f : factor_univariate(q).factors) insert_coprime(basis, std::move(f.factor));
  } else {
    insert_coprime(basis, std::move(q));
  }
  sort_unique(basis);
}

std::vector<Polynomial> squarefree_coprime_basis(std::span<const Polynomial> ps) {
  std::vector<Polynomial> basis;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    refine_basis(basis, p);
  }
  sort_unique(basis);
  return basis;
}

}  // namespace cadform
