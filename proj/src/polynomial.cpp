#include "cadform/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cadform {

int lex_compare(const Exponents& a, const Exponents& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

VariableOrder::VariableOrder(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw DomainError("duplicate variable '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> VariableOrder::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string VariableOrder::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += " < ";
    out += names_[i];
  }
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[index] = power;
  p.terms_.push_back({std::move(e), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.exponents.size() != nvars) throw DomainError("exponent vector length mismatch");
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lex_compare(a.exponents, b.exponents) > 0; });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.front().exponents;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw DomainError("constant_value of a non-constant polynomial");
  return terms_.front().coeff;
}

int Polynomial::degree(std::size_t var) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
  return static_cast<int>(d);
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) {
    d = std::max(d, std::accumulate(t.exponents.begin(), t.exponents.end(), std::uint32_t{0}));
  }
  return d;
}

std::optional<std::size_t> Polynomial::main_variable() const {
  // Under lex the leading term carries the highest variable present.
  if (terms_.empty()) return std::nullopt;
  const auto& e = terms_.front().exponents;
  for (std::size_t i = nvars_; i-- > 0;) {
    if (e[i] > 0) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v) {
    for (const auto& t : terms_) {
      if (t.exponents[v] > 0) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::vector<Polynomial> Polynomial::coefficients(std::size_t var) const {
  int d = degree(var);
  if (d < 0) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  for (const auto& t : terms_) {
    Term u = t;
    std::uint32_t k = u.exponents[var];
    u.exponents[var] = 0;
    buckets[k].push_back(std::move(u));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Removing the var exponent can break the lex order only across buckets,
    // so each bucket stays sorted.
    Polynomial c(nvars_);
    c.terms_ = std::move(b);
    out.push_back(std::move(c));
  }
  return out;
}

Polynomial Polynomial::leading_coefficient_in(std::size_t var) const {
  auto cs = coefficients(var);
  if (cs.empty()) throw DomainError("leading coefficient of zero polynomial");
  return cs.back();
}

Polynomial Polynomial::from_coefficients(std::size_t nvars, std::size_t var,
                                         std::span<const Polynomial> coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Term u = t;
      u.exponents[var] += static_cast<std::uint32_t>(k);
      terms.push_back(std::move(u));
    }
  }
  return from_terms(nvars, std::move(terms));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term u = t;
    u.coeff *= t.exponents[var];
    u.exponents[var] -= 1;
    terms.push_back(std::move(u));
  }
  return from_terms(nvars_, std::move(terms));
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  auto cs = coefficients(var);
  Polynomial acc(nvars_);
  for (std::size_t k = cs.size(); k-- > 0;) {
    acc *= value;
    acc += cs[k];
  }
  return acc;
}

Polynomial Polynomial::shifted(std::size_t var, std::uint32_t k) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.exponents[var] += k;
  return p;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has wrong dimension");
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (std::size_t v = 0; v < nvars_; ++v) {
      for (std::uint32_t k = 0; k < t.exponents[v]; ++k) m *= point[v];
    }
    acc += m;
  }
  return acc;
}

Polynomial Polynomial::remapped(std::span<const std::size_t> mapping, std::size_t nvars) const {
  if (mapping.size() != nvars_) throw DomainError("variable mapping has wrong length");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u{Exponents(nvars, 0), t.coeff};
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (t.exponents[v] == 0) continue;
      if (mapping[v] >= nvars) throw DomainError("variable mapping target out of range");
      u.exponents[mapping[v]] += t.exponents[v];
    }
    terms.push_back(std::move(u));
  }
  return from_terms(nvars, std::move(terms));
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_ && !terms_.empty() && !other.terms_.empty()) {
    throw DomainError("polynomials over different variable counts");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge two sorted term lists, b scaled by sign.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = lex_compare(a[i].exponents, b[j].exponents);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (subtract) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].exponents, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  if (terms_.empty()) nvars_ = std::max(nvars_, rhs.nvars_);
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  if (terms_.empty()) nvars_ = std::max(nvars_, rhs.nvars_);
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::size_t n = std::max(a.nvars_, b.nvars_);
  if (a.terms_.empty() || b.terms_.empty()) return Polynomial(n);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Term u{s.exponents, s.coeff * t.coeff};
      for (std::size_t v = 0; v < n; ++v) u.exponents[v] += t.exponents[v];
      terms.push_back(std::move(u));
    }
  }
  return Polynomial::from_terms(n, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  // Lower main variable first, then by total degree, then term by term.
  auto ma = a.main_variable(), mb = b.main_variable();
  long la = ma ? static_cast<long>(*ma) : -1, lb = mb ? static_cast<long>(*mb) : -1;
  if (la != lb) return la < lb;
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = lex_compare(a.terms_[i].exponents, b.terms_[i].exponents);
    if (c != 0) return c < 0;
    const Rational &ca = a.terms_[i].coeff, &cb = b.terms_[i].coeff;
    if (ca != cb) {
      // Smaller magnitude first, positive before negative.
      int m = cmp(abs(ca), abs(cb));
      return m != 0 ? m < 0 : ca > cb;
    }
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Polynomial::to_string(const VariableOrder& vars) const {
  if (terms_.empty()) return "0";
  if (vars.size() < nvars_) throw DomainError("variable order too short for polynomial");
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      std::uint32_t k = t.exponents[v];
      if (k == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars.name(v);
      if (k > 1) mono += '^' + std::to_string(k);
    }
    if (mono.empty()) {
      os << c.get_str();
    } else if (c == 1) {
      os << mono;
    } else {
      os << c.get_str() << '*' << mono;
    }
  }
  return os.str();
}

Polynomial normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (1 / normalization_factor(p));
}

Rational normalization_factor(const Polynomial& p) {
  if (p.is_zero()) return Rational(1);
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational f(num_gcd, den_lcm);
  f.canonicalize();
  if (p.leading_coefficient() < 0) f = -f;
  return f;
}

void sort_unique(std::vector<Polynomial>& ps) {
  std::sort(ps.begin(), ps.end(), CanonicalLess{});
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

Polynomial remap(const Polynomial& p, const VariableOrder& from, const VariableOrder& to) {
  if (from.size() != p.nvars() && !p.is_zero()) throw DomainError("polynomial does not match source order");
  std::vector<std::size_t> mapping(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto j = to.index_of(from.name(i));
    if (!j) throw DomainError("variable '" + from.name(i) + "' missing from target order");
    mapping[i] = *j;
  }
  if (p.is_zero()) return Polynomial(to.size());
  return p.remapped(mapping, to.size());
}

}  // namespace cadform
