#include "markedbases/polynomial.hpp"

#include <algorithm>

namespace mb {

Rational evaluate(const RationalPolynomial& p, std::span<const Rational> point) {
  Rational sum = 0;
  for (const auto& [t, c] : p) {
    if (t.size() != point.size()) throw RingMismatch("evaluation point has wrong dimension");
    Rational v = c;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (Exponent k = 0; k < t[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

RationalPolynomial specialize(const ParametricPolynomial& p, std::span<const Rational> point) {
  std::vector<RationalPolynomial::value_type> terms;
  terms.reserve(p.size());
  for (const auto& [t, c] : p) terms.emplace_back(t, evaluate(c, point));
  return RationalPolynomial::from_terms(std::move(terms));
}

ParametricPolynomial lift_coefficients(const RationalPolynomial& p, std::size_t nparams) {
  std::vector<ParametricPolynomial::value_type> terms;
  terms.reserve(p.size());
  for (const auto& [t, c] : p) terms.emplace_back(t, constant(nparams, c));
  return ParametricPolynomial::from_terms(std::move(terms));
}

RationalPolynomial kill_variables(const RationalPolynomial& p, std::span<const std::size_t> vars) {
  std::vector<RationalPolynomial::value_type> terms;
  for (const auto& [t, c] : p) {
    bool killed = std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return t[v] > 0; });
    if (!killed) terms.emplace_back(t, c);
  }
  return RationalPolynomial::from_terms(std::move(terms));
}

}  // namespace mb
