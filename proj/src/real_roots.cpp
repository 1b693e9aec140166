#include "cadform/real_roots.hpp"

#include <cmath>
#include <sstream>

#include "cadform/algorithms.hpp"

namespace cadform {

SturmChain::SturmChain(const UPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  seq_.push_back(p);
  if (p.degree() == 0) return;
  seq_.push_back(p.derivative());
  for (;;) {
    UPoly r = rem(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    UPoly prim = r.primitive();
    if (sgn(prim.lc()) != sgn(r.lc())) prim = -prim;
    seq_.push_back(-prim);
  }
}

namespace {

unsigned variations(const std::vector<int>& signs) {
  unsigned n = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

int sign_at_infinity(const UPoly& p, bool negative) {
  int s = sgn(p.lc());
  return (negative && p.degree() % 2 == 1) ? -s : s;
}

UPoly univariate_of(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("polynomial is zero");
  auto vars = p.variables();
  if (vars.size() > 1) throw DomainError("polynomial is not univariate");
  return UPoly::from_polynomial(p, vars.empty() ? 0 : vars.front());
}

}  // namespace

unsigned SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& q : seq_) s.push_back(q.sign_at(x));
  return variations(s);
}

unsigned SturmChain::variations_at_minus_infinity() const {
  std::vector<int> s;
  for (const auto& q : seq_) s.push_back(sign_at_infinity(q, true));
  return variations(s);
}

unsigned SturmChain::variations_at_plus_infinity() const {
  std::vector<int> s;
  for (const auto& q : seq_) s.push_back(sign_at_infinity(q, false));
  return variations(s);
}

unsigned SturmChain::count() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }

unsigned SturmChain::count_in(const Rational& lo, const Rational& hi) const {
  return variations_at(lo) - variations_at(hi);
}

unsigned count_distinct_real_roots(const Polynomial& p) {
  UPoly u = univariate_of(p);
  return SturmChain(squarefree_part(u)).count();
}

unsigned count_distinct_real_roots(std::span<const Polynomial> ps) {
  UPoly prod = UPoly::constant(1);
  for (const auto& p : ps) {
    if (p.is_zero() || p.is_constant()) continue;
    prod = prod * squarefree_part(univariate_of(p));
  }
  return SturmChain(squarefree_part(prod)).count();
}

AlgebraicNumber::AlgebraicNumber(const Rational& r)
    : m_(UPoly(std::vector<Rational>{-r, Rational(1)}).primitive()), iv_{r, r} {}

AlgebraicNumber::AlgebraicNumber(UPoly minimal_poly, IsolatingInterval interval)
    : m_(std::move(minimal_poly)), iv_(std::move(interval)) {
  if (m_.degree() < 1) throw DomainError("algebraic number needs a non-constant defining polynomial");
  if (m_.degree() == 1) {
    Rational r = -m_.coeffs()[0] / m_.coeffs()[1];
    iv_ = {r, r};
  } else {
    sign_lo_ = m_.sign_at(iv_.lo);
  }
}

void AlgebraicNumber::refine() {
  if (is_rational()) return;
  Rational mid = (iv_.lo + iv_.hi) / 2;
  int s = m_.sign_at(mid);
  if (s == sign_lo_) {
    iv_.lo = mid;
  } else {
    iv_.hi = mid;
  }
}

void AlgebraicNumber::refine_to(const Rational& w) {
  while (iv_.width() > w) refine();
}

int AlgebraicNumber::sign_of(const UPoly& q) {
  if (is_rational()) return q.sign_at(iv_.lo);
  UPoly r = rem(q, m_);
  if (r.is_zero()) return 0;
  for (;;) {
    int s = r.eval(RationalInterval{iv_.lo, iv_.hi}).strict_sign();
    if (s != 0) return s;
    refine();
  }
}

Rational AlgebraicNumber::approximation() const { return (iv_.lo + iv_.hi) / 2; }

double AlgebraicNumber::to_double() const {
  if (is_rational()) return iv_.lo.get_d();
  AlgebraicNumber copy = *this;
  copy.refine_to(Rational(1, 1 << 30));
  return copy.approximation().get_d();
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return cadform::to_string(iv_.lo);
  std::ostringstream os;
  os << "root of " << m_.to_polynomial(1, 0).to_string(VariableOrder({"t"})) << " in (" << cadform::to_string(iv_.lo)
     << ", " << cadform::to_string(iv_.hi) << ") ~ " << to_double();
  return os.str();
}

int compare(AlgebraicNumber& a, const Rational& r) {
  if (a.is_rational()) return cmp(a.rational_value(), r);
  for (;;) {
    if (r <= a.interval().lo) return 1;
    if (r >= a.interval().hi) return -1;
    a.refine();
  }
}

int compare(AlgebraicNumber& a, AlgebraicNumber& b) {
  if (b.is_rational()) return compare(a, b.rational_value());
  if (a.is_rational()) return -compare(b, a.rational_value());
  if (a.minimal_poly() == b.minimal_poly()) {
    Rational lo = std::max(a.interval().lo, b.interval().lo);
    Rational hi = std::min(a.interval().hi, b.interval().hi);
    if (lo < hi && SturmChain(a.minimal_poly()).count_in(lo, hi) > 0) return 0;
  }
  // Distinct numbers: refine until the intervals separate.
  for (;;) {
    if (a.interval().hi <= b.interval().lo) return -1;
    if (b.interval().hi <= a.interval().lo) return 1;
    a.refine();
    b.refine();
  }
}

namespace {

// Roots of an irreducible polynomial of degree >= 2 by Descartes bisection.
// q is p(a + (b - a) x); roots in (a, b) correspond to roots of q in (0, 1).
void descartes(const UPoly& q, const Rational& a, const Rational& b, std::vector<IsolatingInterval>& out) {
  unsigned v = q.reversed().taylor_shift(Rational(1)).sign_variations();
  if (v == 0) return;
  if (v == 1) {
    out.push_back({a, b});
    return;
  }
  Rational mid = (a + b) / 2;
  UPoly left = q.scaled(Rational(1, 2)).primitive();
  descartes(left, a, mid, out);
  descartes(left.taylor_shift(Rational(1)), mid, b, out);
}

std::vector<AlgebraicNumber> roots_of_irreducible(const UPoly& f) {
  std::vector<AlgebraicNumber> out;
  if (f.degree() == 1) {
    out.emplace_back(-f.coeffs()[0] / f.coeffs()[1]);
    return out;
  }
  Rational bound = root_bound(f);
  std::vector<IsolatingInterval> ivs;
  descartes(f.taylor_shift(-bound).scaled(2 * bound).primitive(), -bound, bound, ivs);
  for (auto& iv : ivs) out.emplace_back(f, iv);
  return out;
}

void insert_sorted(std::vector<AlgebraicNumber>& roots, AlgebraicNumber r) {
  std::size_t i = roots.size();
  roots.push_back(std::move(r));
  while (i > 0 && compare(roots[i - 1], roots[i]) > 0) {
    std::swap(roots[i - 1], roots[i]);
    --i;
  }
}

// Refines irrational roots until each interval isolates its root with
// respect to the squarefree product s of all defining factors.
void separate(std::vector<AlgebraicNumber>& roots, const UPoly& s) {
  if (roots.empty()) return;
  SturmChain chain(s);
  for (auto& r : roots) {
    if (r.is_rational()) continue;
    while (s.sign_at(r.interval().lo) == 0 || s.sign_at(r.interval().hi) == 0 ||
           chain.count_in(r.interval().lo, r.interval().hi) != 1) {
      r.refine();
    }
  }
}

}  // namespace

std::vector<AlgebraicNumber> isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  std::vector<AlgebraicNumber> roots;
  if (p.degree() <= 0) return roots;
  for (const auto& f : factor_univariate(p.to_polynomial(1, 0)).factors) {
    for (auto& r : roots_of_irreducible(UPoly::from_polynomial(f.factor, 0))) insert_sorted(roots, std::move(r));
  }
  separate(roots, squarefree_part(p));
  return roots;
}

std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p) { return isolate_real_roots(univariate_of(p)); }

std::vector<AlgebraicNumber> isolate_real_roots(std::span<const Polynomial> ps) {
  std::vector<Polynomial> us;
  for (const auto& p : ps) {
    if (p.is_constant()) continue;
    us.push_back(univariate_of(p).to_polynomial(1, 0));
  }
  std::vector<AlgebraicNumber> roots;
  UPoly prod = UPoly::constant(1);
  for (const auto& f : squarefree_coprime_basis(us)) {
    prod = prod * UPoly::from_polynomial(f, 0);
    for (const auto& g : factor_univariate(f).factors) {
      for (auto& r : roots_of_irreducible(UPoly::from_polynomial(g.factor, 0))) insert_sorted(roots, std::move(r));
    }
  }
  separate(roots, prod);
  return roots;
}

int sign_at(const Polynomial& q, AlgebraicNumber& alpha) {
  if (q.is_constant()) return sgn(q.constant_value());
  return alpha.sign_of(univariate_of(q));
}

std::string describe(const SturmChain& chain, const std::string& var) {
  std::ostringstream os;
  VariableOrder order({var});
  for (std::size_t i = 0; i < chain.sequence().size(); ++i) {
    os << "  S" << i << " = " << chain.sequence()[i].to_polynomial(1, 0).to_string(order) << "\n";
  }
  os << "  variations: -inf " << chain.variations_at_minus_infinity() << ", +inf "
     << chain.variations_at_plus_infinity() << ", distinct real roots " << chain.count() << "\n";
  return os.str();
}

}  // namespace cadform
