#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cadform/formula.hpp"
#include "cadform/parser.hpp"
#include "cadform/polynomial.hpp"

namespace test {

inline cadform::VariableOrder vars(std::vector<std::string> names) { return cadform::VariableOrder(std::move(names)); }

inline cadform::Polynomial P(const std::string& s, const cadform::VariableOrder& v) {
  return cadform::parse_polynomial(s, v);
}

// Sum of random terms with total degree at most max_degree.
template <class Rng>
cadform::Polynomial random_poly(Rng& rng, std::size_t nvars, int nterms, unsigned max_degree, int coef = 5) {
  std::uniform_int_distribution<int> c(-coef, coef);
  std::uniform_int_distribution<unsigned> e(0, max_degree);
  std::vector<cadform::Term> ts;
  for (int i = 0; i < nterms; ++i) {
    cadform::Exponents ex(nvars, 0);
    unsigned budget = e(rng);
    for (std::size_t k = 0; k < nvars && budget > 0; ++k) {
      std::uniform_int_distribution<unsigned> part(0, budget);
      ex[k] = k + 1 == nvars ? budget : part(rng);
      budget -= ex[k];
    }
    ts.push_back({ex, cadform::Rational(c(rng))});
  }
  return cadform::Polynomial::from_terms(nvars, ts);
}

// Truth agreement over every sign assignment of the distinct polynomials.
inline bool equivalent(const cadform::Formula& a, const cadform::Formula& b) {
  using cadform::Polynomial;
  std::vector<Polynomial> polys;
  for (const auto& f : {a, b}) {
    for (const auto& at : f.atoms()) {
      if (std::find(polys.begin(), polys.end(), at.poly) == polys.end()) polys.push_back(at.poly);
    }
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < polys.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> signs;
    for (std::size_t c = code, i = 0; i < polys.size(); ++i, c /= 3) signs.push_back(static_cast<int>(c % 3) - 1);
    auto sign = [&](const Polynomial& p) {
      return signs[static_cast<std::size_t>(std::find(polys.begin(), polys.end(), p) - polys.begin())];
    };
    if (a.evaluate(sign) != b.evaluate(sign)) return false;
  }
  return true;
}

}  // namespace test

#include "doctest.h"

namespace doctest {
template <>
struct StringMaker<cadform::Polynomial> {
  static String convert(const cadform::Polynomial& p) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p.nvars(); ++i) names.push_back("v" + std::to_string(i));
    return p.to_string(cadform::VariableOrder(names)).c_str();
  }
};
}  // namespace doctest
