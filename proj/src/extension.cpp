#include "cadform/extension.hpp"

#include <algorithm>

namespace cadform {

namespace {

// s with s*a = gcd(a, m) (mod m), over Q.
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = a, t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto d = divmod(r0, r1);
    UPoly t2 = t0 - d.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(d.remainder);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw Error("internal: element not invertible in number field");
  return rem(t0 * (1 / r0.lc()), m);
}

void trim(ExtPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Positive rational rescaling that makes every coefficient integral and coprime.
ExtPoly rescale_positive(ExtPoly a) {
  Integer den = 1, num = 0;
  for (const auto& c : a) {
    for (const auto& q : c.coeffs()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    }
  }
  if (num == 0) return a;
  Rational f(den, num);
  f.canonicalize();
  for (auto& c : a) c = c * f;
  return a;
}

RationalInterval hull_eval(const ExtPoly& a, const RationalInterval& y, const NumberField& k) {
  RationalInterval acc{Rational(0), Rational(0)};
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * y + k.enclose(a[i]);
  return acc;
}

int sign_at_infinity(const ExtPoly& p, bool negative, NumberField& k) {
  int s = k.sign(p.back());
  return (negative && ext::degree(p) % 2 == 1) ? -s : s;
}

class ExtSturm {
 public:
  ExtSturm(const ExtPoly& p, NumberField& k) : k_(k) {
    seq_.push_back(p);
    if (ext::degree(p) <= 0) return;
    seq_.push_back(rescale_positive(ext::derivative(p)));
    for (;;) {
      ExtPoly r = ext::rem(seq_[seq_.size() - 2], seq_.back(), k);
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      seq_.push_back(rescale_positive(std::move(r)));
    }
  }

  unsigned variations(const std::vector<int>& signs) const {
    unsigned n = 0;
    int last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++n;
      last = s;
    }
    return n;
  }

  unsigned at(const Rational& y) {
    std::vector<int> s;
    for (const auto& q : seq_) s.push_back(k_.sign(ext::eval(q, y, k_)));
    return variations(s);
  }

  unsigned at_infinity(bool negative) {
    std::vector<int> s;
    for (const auto& q : seq_) s.push_back(sign_at_infinity(q, negative, k_));
    return variations(s);
  }

 private:
  NumberField& k_;
  std::vector<ExtPoly> seq_;
};

struct ExtDivMod {
  ExtPoly q, r;
};

ExtDivMod ext_divmod(const ExtPoly& a, const ExtPoly& b, const NumberField& k) {
  if (b.empty()) throw DomainError("division by zero over number field");
  ExtPoly r = a;
  int db = ext::degree(b);
  ExtPoly q(static_cast<std::size_t>(std::max(ext::degree(a) - db + 1, 0)));
  UPoly inv = k.inverse(b.back());
  while (ext::degree(r) >= db) {
    int shift = ext::degree(r) - db;
    UPoly c = k.mul(r.back(), inv);
    q[static_cast<std::size_t>(shift)] = c;
    for (int j = 0; j < db; ++j) {
      auto idx = static_cast<std::size_t>(shift + j);
      r[idx] = k.reduce(r[idx] - k.mul(c, b[static_cast<std::size_t>(j)]));
    }
    r.pop_back();
    trim(r);
  }
  trim(q);
  return {std::move(q), std::move(r)};
}

Rational integer_above(const Rational& x) { return Rational(Integer(x.get_num() / x.get_den()) + 1); }

}  // namespace

NumberField::NumberField(AlgebraicNumber alpha) : alpha_(std::move(alpha)) {}

UPoly NumberField::reduce(const UPoly& a) const { return rem(a, alpha_.minimal_poly()); }

UPoly NumberField::mul(const UPoly& a, const UPoly& b) const { return reduce(a * b); }

UPoly NumberField::inverse(const UPoly& a) const {
  UPoly r = reduce(a);
  if (r.is_zero()) throw DomainError("inverse of zero in number field");
  return inverse_mod(r, alpha_.minimal_poly());
}

int NumberField::sign(const UPoly& a) { return alpha_.sign_of(a); }

RationalInterval NumberField::enclose(const UPoly& a) const {
  return a.eval(RationalInterval{alpha_.interval().lo, alpha_.interval().hi});
}

namespace ext {

int degree(const ExtPoly& a) { return static_cast<int>(a.size()) - 1; }

ExtPoly rem(const ExtPoly& a, const ExtPoly& b, const NumberField& k) { return ext_divmod(a, b, k).r; }

ExtPoly gcd(const ExtPoly& a, const ExtPoly& b, const NumberField& k) {
  ExtPoly x = a, y = b;
  while (!y.empty()) {
    ExtPoly r = rem(x, y, k);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return x;
  UPoly inv = k.inverse(x.back());
  for (auto& c : x) c = k.mul(c, inv);
  return x;
}

ExtPoly derivative(const ExtPoly& a) {
  ExtPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rational(static_cast<unsigned long>(i)));
  trim(d);
  return d;
}

UPoly eval(const ExtPoly& a, const Rational& y, const NumberField& k) {
  UPoly acc;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * y + a[i];
  return k.reduce(acc);
}

}  // namespace ext

ExtPoly specialize(const Polynomial& f, std::size_t alpha_var, std::size_t y_var, const NumberField& k) {
  ExtPoly out(static_cast<std::size_t>(std::max(f.degree(y_var), 0)) + 1);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (i != alpha_var && i != y_var && t.exponents[i] != 0) {
        throw DomainError("polynomial involves variables other than the lifting pair");
      }
    }
    auto& slot = out[t.exponents[y_var]];
    slot = slot + UPoly::monomial(t.coeff, alpha_var < t.exponents.size() ? t.exponents[alpha_var] : 0);
  }
  for (auto& c : out) c = k.reduce(c);
  trim(out);
  return out;
}

ExtRootSet isolate_roots_over_extension(const ExtPoly& g, NumberField& k) {
  if (g.empty()) throw NullifiedOverSample("polynomial vanishes identically over the sample");
  ExtRootSet out;
  if (ext::degree(g) == 0) {
    out.squarefree = g;
    return out;
  }
  ExtPoly common = ext::gcd(g, ext::derivative(g), k);
  out.squarefree = rescale_positive(ext_divmod(g, common, k).q);
  const ExtPoly& s = out.squarefree;

  if (k.generator().is_rational()) {
    // Coefficients are rationals: factor and isolate exactly.
    std::vector<Rational> c;
    for (const auto& e : s) c.push_back(e.coeff(0));
    for (const auto& r : isolate_real_roots(UPoly(std::move(c)))) {
      out.roots.push_back({{r.interval().lo, r.interval().hi}, r.is_rational()});
    }
    return out;
  }

  // Cauchy bound from rational enclosures of the coefficients.
  while (k.enclose(s.back()).contains_zero()) k.refine();
  RationalInterval lc = k.enclose(s.back());
  Rational lc_min = std::min(abs(lc.lo), abs(lc.hi));
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    RationalInterval c = k.enclose(s[i]);
    m = std::max<Rational>({m, abs(c.lo), abs(c.hi)});
  }
  Rational bound = integer_above(1 + m / lc_min);

  ExtSturm chain(s, k);
  struct Job {
    Rational lo, hi;
    unsigned vlo, vhi;
  };
  std::vector<Job> stack{{-bound, bound, chain.at(-bound), chain.at(bound)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    unsigned n = j.vlo - j.vhi;
    if (n == 0) continue;
    if (n == 1) {
      if (k.sign(ext::eval(s, j.hi, k)) == 0) {
        out.roots.push_back({{j.hi, j.hi}, true});
      } else {
        out.roots.push_back({{j.lo, j.hi}, false});
      }
      continue;
    }
    Rational mid = (j.lo + j.hi) / 2;
    unsigned vm = chain.at(mid);
    // Push the upper half first so roots come out in increasing order.
    stack.push_back({mid, j.hi, vm, j.vhi});
    stack.push_back({j.lo, mid, j.vlo, vm});
  }
  return out;
}

ExtRootSet isolate_roots_over_extension(const Polynomial& f, const AlgebraicNumber& alpha, std::size_t alpha_var,
                                        std::size_t y_var) {
  NumberField k(alpha);
  return isolate_roots_over_extension(specialize(f, alpha_var, y_var, k), k);
}

int sign_at_rational(const Polynomial& h, std::size_t alpha_var, std::size_t y_var, NumberField& k,
                     const Rational& r) {
  ExtPoly e = specialize(h, alpha_var, y_var, k);
  return k.sign(ext::eval(e, r, k));
}

int sign_at_section(const Polynomial& h, std::size_t alpha_var, std::size_t y_var, NumberField& k,
                    ExtRootSet& roots, std::size_t index) {
  ExtRoot& root = roots.roots.at(index);
  if (root.exact) return sign_at_rational(h, alpha_var, y_var, k, root.interval.lo);
  ExtPoly e = specialize(h, alpha_var, y_var, k);
  if (e.empty()) return 0;
  if (ext::degree(e) == 0) return k.sign(e[0]);
  ExtPoly g = ext::gcd(e, roots.squarefree, k);
  if (ext::degree(g) >= 1) {
    ExtSturm chain(g, k);
    if (chain.at(root.interval.lo) - chain.at(root.interval.hi) > 0) return 0;
  }
  const ExtPoly& s = roots.squarefree;
  // lo may itself be a root of a neighbouring section; the sign just right of
  // lo is the opposite of the sign at hi.
  int s_lo = -k.sign(ext::eval(s, root.interval.hi, k));
  for (;;) {
    int sg = hull_eval(e, RationalInterval{root.interval.lo, root.interval.hi}, k).strict_sign();
    if (sg != 0) return sg;
    Rational mid = (root.interval.lo + root.interval.hi) / 2;
    int sm = k.sign(ext::eval(s, mid, k));
    if (sm == 0) {
      root.interval = {mid, mid};
      root.exact = true;
      return sign_at_rational(h, alpha_var, y_var, k, mid);
    }
    if (sm == s_lo) {
      root.interval.lo = mid;
    } else {
      root.interval.hi = mid;
    }
    k.refine();
  }
}

}  // namespace cadform
