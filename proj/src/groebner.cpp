#include "cadform/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "cadform/measures.hpp"

namespace cadform {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Polynomial monomial(std::size_t nvars, Exponents e, const Rational& c) {
  return Polynomial::from_terms(nvars, {{std::move(e), c}});
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

Polynomial monic(const Polynomial& p) { return p * (1 / p.leading_coefficient()); }

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of zero");
  const auto& tf = f.leading_term();
  const auto& tg = g.leading_term();
  Exponents l = lcm(tf.exponents, tg.exponents);
  std::size_t n = f.nvars();
  return monomial(n, quotient(l, tf.exponents), 1 / tf.coeff) * f -
         monomial(n, quotient(l, tg.exponents), 1 / tg.coeff) * g;
}

Polynomial reduce(const Polynomial& g, std::span<const Polynomial> basis) {
  std::size_t n = g.nvars();
  std::vector<Term> rest;
  Polynomial p = g;
  while (!p.is_zero()) {
    Term lt = p.leading_term();
    const Polynomial* by = nullptr;
    for (const auto& b : basis) {
      if (!b.is_zero() && divides(b.leading_term().exponents, lt.exponents)) {
        by = &b;
        break;
      }
    }
    if (by) {
      p -= monomial(n, quotient(lt.exponents, by->leading_term().exponents), lt.coeff / by->leading_coefficient()) * *by;
    } else {
      p -= monomial(n, lt.exponents, lt.coeff);
      rest.push_back(std::move(lt));
    }
  }
  return Polynomial::from_terms(n, std::move(rest));
}

Polynomial reduce(const Polynomial& g, const GroebnerBasis& basis) { return reduce(g, basis.generators); }

GroebnerBasis buchberger(std::span<const Polynomial> fs, const VariableOrder& order) {
  std::vector<Polynomial> g;
  for (const auto& f : fs) {
    if (f.nvars() != order.size()) throw DomainError("polynomial variable count does not match the order");
    if (!f.is_zero()) g.push_back(monic(f));
  }
  if (g.empty()) throw DomainError("Gröbner basis of the zero ideal");
  std::size_t n = order.size();
  auto unit = [&] { return GroebnerBasis{order, {Polynomial::constant(n, 1)}}; };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  for (const auto& p : g) {
    if (p.is_constant()) return unit();
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.erase(pairs.begin());
    const auto& ei = g[i].leading_term().exponents;
    const auto& ej = g[j].leading_term().exponents;
    if (coprime(ei, ej)) continue;
    // Chain criterion: some g_k with LM(g_k) | lcm whose pairs are already done.
    Exponents l = lcm(ei, ej);
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == i || k == j || !divides(g[k].leading_term().exponents, l)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        auto key = std::minmax(a, b);
        return std::find(pairs.begin(), pairs.end(), std::pair{key.first, key.second}) != pairs.end();
      };
      skip = !pending(i, k) && !pending(j, k);
    }
    if (skip) continue;
    Polynomial r = reduce(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit();
    g.push_back(monic(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimal basis: drop generators whose leading monomial another one divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      const auto& ek = g[k].leading_term().exponents;
      const auto& ei = g[i].leading_term().exponents;
      redundant = divides(ek, ei) && (ek != ei || k < i);
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Interreduce.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    minimal[i] = monic(reduce(minimal[i], others));
  }
  for (auto& p : minimal) p = normalize(p);
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return lex_compare(a.leading_term().exponents, b.leading_term().exponents) < 0;
  });
  return {order, std::move(minimal)};
}

PreconditionResult precondition_qff(const Qff& qff, const VariableOrder& order) {
  std::vector<Polynomial> eqs;
  for (const auto& a : qff.conjuncts) {
    if (a.is_equation()) eqs.push_back(a.poly);
  }
  if (eqs.empty()) throw DomainError("preconditioning needs at least one equation");
  PreconditionResult out;
  out.basis = buchberger(eqs, order);
  if (out.basis.is_unit()) {
    out.is_false = true;
    out.notes.push_back("equations are inconsistent: the basis is {1}");
    return out;
  }
  for (const auto& g : out.basis.generators) out.qff.conjuncts.push_back({g, Relation::Eq});
  for (const auto& a : qff.conjuncts) {
    if (a.is_equation()) continue;
    Polynomial nf = reduce(a.poly, out.basis);
    if (nf.is_constant()) {
      bool value = holds(a.rel, sgn(nf.constant_value()));
      out.notes.push_back(a.to_string(order) + " reduces to a constant and is " + (value ? "true" : "false"));
      if (!value) {
        out.is_false = true;
        out.qff.conjuncts.clear();
        return out;
      }
      continue;
    }
    Atom r = Atom{nf, a.rel}.normalized();
    if (std::find(out.qff.conjuncts.begin(), out.qff.conjuncts.end(), r) == out.qff.conjuncts.end()) {
      out.qff.conjuncts.push_back(std::move(r));
    }
  }
  out.unchanged = out.qff.conjuncts == qff.conjuncts;
  return out;
}

std::string_view to_string(TnoiVerdict verdict) {
  return verdict == TnoiVerdict::Beneficial ? "beneficial" : "inconclusive";
}

TnoiVerdict tnoi_verdict(std::span<const Polynomial> before, std::span<const Polynomial> after) {
  return tnoi(after) < tnoi(before) ? TnoiVerdict::Beneficial : TnoiVerdict::Inconclusive;
}

std::string format_basis(const GroebnerBasis& basis) {
  std::ostringstream os;
  os << "groebner basis, lex";
  for (std::size_t i = basis.order.size(); i-- > 0;) os << (i + 1 == basis.order.size() ? " " : " > ") << basis.order.name(i);
  os << ", " << basis.generators.size() << " generators by increasing leading monomial\n";
  for (std::size_t i = 0; i < basis.generators.size(); ++i) {
    os << "  [" << i + 1 << "] " << basis.generators[i].to_string(basis.order) << "\n";
  }
  return os.str();
}

}  // namespace cadform
