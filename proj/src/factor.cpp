// Univariate factorization over Q: squarefree decomposition, then
// Zassenhaus (Cantor-Zassenhaus mod p, Hensel lifting, recombination).

#include <algorithm>
#include <random>

#include "cadform/algorithms.hpp"
#include "cadform/univariate.hpp"

namespace cadform {

namespace {

using ZP = std::vector<Integer>;

int deg(const ZP& a) { return static_cast<int>(a.size()) - 1; }

void trim(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer md(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inv(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error("internal: non-invertible element in modular arithmetic");
  }
  return r;
}

ZP reduce(ZP a, const Integer& m) {
  for (auto& c : a) c = md(c, m);
  trim(a);
  return a;
}

ZP add(const ZP& a, const ZP& b, const Integer& m) {
  ZP r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(std::move(r), m);
}

ZP sub(const ZP& a, const ZP& b, const Integer& m) {
  ZP r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(std::move(r), m);
}

ZP mul(const ZP& a, const ZP& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(std::move(r), m);
}

ZP scale(const ZP& a, const Integer& c, const Integer& m) {
  ZP r = a;
  for (auto& x : r) x *= c;
  return reduce(std::move(r), m);
}

struct ZDivMod {
  ZP q, r;
};

// Leading coefficient of b must be a unit mod m.
ZDivMod divmod(const ZP& a, const ZP& b, const Integer& m) {
  ZP r = a;
  if (deg(r) < deg(b)) return {{}, r};
  ZP q(static_cast<std::size_t>(deg(r) - deg(b)) + 1, Integer(0));
  Integer li = inv(b.back(), m);
  for (int k = deg(r); k >= deg(b); --k) {
    auto ku = static_cast<std::size_t>(k);
    Integer c = md(r[ku] * li, m);
    if (c == 0) continue;
    auto shift = static_cast<std::size_t>(k - deg(b));
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = md(r[shift + j] - c * b[j], m);
  }
  trim(q);
  trim(r);
  return {std::move(q), std::move(r)};
}

ZP monic(const ZP& a, const Integer& m) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), m), m);
}

ZP gcd_p(ZP a, ZP b, const Integer& p) {
  while (!b.empty()) {
    ZP r = divmod(a, b, p).r;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s*a + t*b = 1 mod p for coprime a, b.
void xgcd_p(const ZP& a, const ZP& b, const Integer& p, ZP& s, ZP& t) {
  ZP r0 = a, r1 = b, s0{Integer(1)}, s1, t0, t1{Integer(1)};
  while (!r1.empty()) {
    auto d = divmod(r0, r1, p);
    ZP r2 = d.r;
    ZP s2 = sub(s0, mul(d.q, s1, p), p);
    ZP t2 = sub(t0, mul(d.q, t1, p), p);
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw Error("internal: Hensel factors not coprime");
  Integer c = inv(r0[0], p);
  s = scale(s0, c, p);
  t = scale(t0, c, p);
}

ZP powmod(const ZP& base, const Integer& e, const ZP& f, const Integer& p) {
  ZP result{Integer(1)};
  ZP b = divmod(base, f, p).r;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(mul(result, result, p), f, p).r;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(mul(result, b, p), f, p).r;
  }
  return result;
}

ZP derivative(const ZP& a, const Integer& m) {
  if (a.size() <= 1) return {};
  ZP r(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * static_cast<unsigned long>(k);
  return reduce(std::move(r), m);
}

void equal_degree(const ZP& g, int d, const Integer& p, std::mt19937_64& rng, std::vector<ZP>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  unsigned long pu = p.get_ui();
  for (;;) {
    ZP a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = static_cast<unsigned long>(rng() % pu);
    trim(a);
    if (deg(a) < 1) continue;
    ZP b = sub(powmod(a, e, g, p), ZP{Integer(1)}, p);
    ZP c = gcd_p(g, b, p);
    if (deg(c) > 0 && deg(c) < deg(g)) {
      equal_degree(c, d, p, rng, out);
      equal_degree(divmod(g, c, p).q, d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial mod an odd prime.
std::vector<ZP> factor_mod_p(ZP f, const Integer& p, std::mt19937_64& rng) {
  std::vector<ZP> out;
  ZP x{Integer(0), Integer(1)};
  ZP h = x;
  for (int i = 1; deg(f) >= 2 * i; ++i) {
    h = powmod(h, p, f, p);
    ZP g = gcd_p(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      equal_degree(g, i, p, rng, out);
      f = divmod(f, g, p).q;
      h = divmod(h, f, p).r;
    }
  }
  if (deg(f) > 0) out.push_back(f);
  return out;
}

// Lifts f = lc*g*h (mod p) with g, h monic to the same identity mod p^k.
void hensel_pair(const ZP& f, ZP& g, ZP& h, const Integer& p, unsigned k) {
  ZP s, t;
  xgcd_p(g, h, p, s, t);
  Integer lc_inv = inv(md(f.back(), p), p);
  Integer pm = p;
  for (unsigned m = 1; m < k; ++m) {
    Integer next = pm * p;
    ZP prod = scale(mul(g, h, next), f.back(), next);
    ZP e = sub(f, prod, next);
    for (auto& c : e) c /= pm;
    e = scale(e, lc_inv, p);
    auto d = divmod(mul(s, e, p), h, p);
    ZP sigma = d.r;
    ZP tau = add(mul(t, e, p), mul(d.q, g, p), p);
    g = add(g, scale(tau, pm, next), next);
    h = add(h, scale(sigma, pm, next), next);
    pm = next;
  }
}

std::vector<ZP> lift_all(const ZP& f, const std::vector<ZP>& facs, const Integer& p, unsigned k,
                         const Integer& pk) {
  if (facs.size() == 1) return {monic(reduce(f, pk), pk)};
  std::size_t half = facs.size() / 2;
  ZP a{Integer(1)}, b{Integer(1)};
  for (std::size_t i = 0; i < half; ++i) a = mul(a, facs[i], p);
  for (std::size_t i = half; i < facs.size(); ++i) b = mul(b, facs[i], p);
  hensel_pair(f, a, b, p, k);
  std::vector<ZP> left(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ZP> right(facs.begin() + static_cast<std::ptrdiff_t>(half), facs.end());
  auto out = lift_all(a, left, p, k, pk);
  auto more = lift_all(b, right, p, k, pk);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

ZP to_z(const UPoly& u) {
  ZP r;
  for (const auto& c : u.coeffs()) r.push_back(c.get_num());
  return r;
}

UPoly from_z(const ZP& a) {
  std::vector<Rational> v;
  for (const auto& c : a) v.emplace_back(c);
  return UPoly(std::move(v));
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors over Z of a primitive squarefree polynomial.
std::vector<UPoly> zassenhaus(const UPoly& fu) {
  int n = fu.degree();
  if (n <= 1) return {fu};
  ZP f = to_z(fu);
  const Integer& lc = f.back();

  // Pick the prime with fewest modular factors among a handful of candidates.
  std::mt19937_64 rng(0x5eed);
  Integer p = 2, best_p;
  std::vector<ZP> best;
  int tried = 0;
  while (tried < 5) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (md(lc, p) == 0) continue;
    ZP fp = reduce(f, p);
    if (deg(gcd_p(fp, derivative(fp, p), p)) != 0) continue;
    auto facs = factor_mod_p(monic(fp, p), p, rng);
    ++tried;
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {fu};
  p = best_p;

  // Coefficient bound for factors (Mignotte) times the leading coefficient.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = 2 * abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  unsigned k = 1;
  Integer pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  std::vector<ZP> lifted = lift_all(f, best, p, k, pk);
  Integer half = pk / 2;
  std::vector<UPoly> out;
  UPoly rest = fu;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZP cand{rest.lc().get_num()};
      for (auto i : idx) cand = mul(cand, lifted[i], pk);
      for (auto& c : cand) {
        if (c > half) c -= pk;
      }
      UPoly h = from_z(cand).primitive();
      auto d = divmod(rest, h);
      if (d.remainder.is_zero()) {
        out.push_back(h);
        rest = d.quotient.primitive();
        for (std::size_t j = idx.size(); j-- > 0;) {
          lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[j]));
        }
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

}  // namespace

Factorization factor_univariate(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization out;
  if (p.is_constant()) {
    out.unit = p.constant_value();
    return out;
  }
  std::size_t var = *p.main_variable();
  UPoly u = UPoly::from_polynomial(p, var);

  // Yun's squarefree decomposition.
  UPoly a = u.monic();
  UPoly b = a.derivative();
  UPoly c = gcd(a, b);
  UPoly w = divmod(a, c).quotient;
  UPoly y = divmod(b, c).quotient;
  UPoly z = y - w.derivative();
  unsigned mult = 1;
  while (w.degree() > 0) {
    UPoly g = gcd(w, z);
    if (g.degree() > 0) {
      for (auto& f : zassenhaus(g.primitive())) {
        out.factors.push_back({normalize(f.to_polynomial(p.nvars(), var)), mult});
      }
    }
    w = divmod(w, g).quotient;
    y = divmod(z, g).quotient;
    z = y - w.derivative();
    ++mult;
  }

  Rational lc_prod = 1;
  for (const auto& f : out.factors) {
    Rational l = f.factor.leading_coefficient();
    for (unsigned i = 0; i < f.multiplicity; ++i) lc_prod *= l;
  }
  out.unit = p.leading_coefficient() / lc_prod;
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& x, const Factor& y) { return canonical_less(x.factor, y.factor); });
  return out;
}

}  // namespace cadform
