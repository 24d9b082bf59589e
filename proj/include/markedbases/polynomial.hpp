#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "markedbases/term.hpp"

namespace mb {

using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

template <class Coeff>
class Polynomial;
template <class Coeff>
bool is_zero(const Polynomial<Coeff>& p);

/// Sparse polynomial over an exact coefficient ring.
///
/// Terms are kept strictly descending by cmp_drl with no zero
/// coefficients, so equality is structural. The polynomial does not own a
/// Ring; the arity of its terms is the only ring information it carries.
/// `Coeff` is either `Rational` or `Polynomial<Rational>` (coefficients
/// that are themselves polynomials in parameters).
template <class Coeff>
class Polynomial {
 public:
  using coefficient_type = Coeff;
  using value_type = std::pair<Term, Coeff>;

  Polynomial() = default;

  static Polynomial monomial(Term t, Coeff c) {
    Polynomial p;
    if (!mb::is_zero(c)) p.terms_.emplace_back(std::move(t), std::move(c));
    return p;
  }

  /// Builds from arbitrary (term, coefficient) pairs; duplicates are summed.
  static Polynomial from_terms(std::vector<value_type> terms) {
    Polynomial p;
    p.terms_ = canonicalize(std::move(terms));
    return p;
  }

  const std::vector<value_type>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Leading term under drl; undefined for the zero polynomial.
  const Term& leading_term() const { return terms_.front().first; }
  const Coeff& leading_coefficient() const { return terms_.front().second; }

  const Coeff* find(const Term& t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [](const value_type& v, const Term& key) { return cmp_drl(v.first, key) > 0; });
    if (it != terms_.end() && it->first == t) return &it->second;
    return nullptr;
  }

  Coeff coefficient(const Term& t) const {
    const Coeff* c = find(t);
    return c ? *c : Coeff{};
  }

  std::vector<Term> support() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [t, c] : terms_) out.push_back(t);
    return out;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const value_type& v) { return v.first.degree() == terms_.front().first.degree(); });
  }

  /// Degree of the highest term; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

  /// *this += scale * multiplier * p, in one merge pass.
  Polynomial& add_scaled(const Coeff& scale, const Term& multiplier, const Polynomial& p) {
    if (mb::is_zero(scale) || p.is_zero()) return *this;
    std::vector<value_type> out;
    out.reserve(terms_.size() + p.terms_.size());
    auto a = terms_.begin();
    auto b = p.terms_.begin();
    auto shifted = [&](auto it) { return it->first * multiplier; };
    std::optional<Term> bt;
    if (b != p.terms_.end()) bt = shifted(b);
    while (a != terms_.end() || b != p.terms_.end()) {
      if (b == p.terms_.end()) {
        out.push_back(std::move(*a++));
        continue;
      }
      if (a == terms_.end()) {
        out.emplace_back(std::move(*bt), Coeff(scale * b->second));
        if (++b != p.terms_.end()) bt = shifted(b);
        continue;
      }
      auto ord = cmp_drl(a->first, *bt);
      if (ord > 0) {
        out.push_back(std::move(*a++));
      } else if (ord < 0) {
        out.emplace_back(std::move(*bt), Coeff(scale * b->second));
        if (++b != p.terms_.end()) bt = shifted(b);
      } else {
        Coeff c = a->second + Coeff(scale * b->second);
        if (!mb::is_zero(c)) out.emplace_back(std::move(a->first), std::move(c));
        ++a;
        if (++b != p.terms_.end()) bt = shifted(b);
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  Polynomial& operator+=(const Polynomial& p) { return merge(p, false); }
  Polynomial& operator-=(const Polynomial& p) { return merge(p, true); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [t, c] : r.terms_) c = Coeff(-c);
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  /// Multiplication by a coefficient.
  Polynomial scaled(const Coeff& c) const {
    Polynomial r;
    if (mb::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [t, d] : terms_) {
      Coeff e = Coeff(c * d);
      if (!mb::is_zero(e)) r.terms_.emplace_back(t, std::move(e));
    }
    return r;
  }

  /// Multiplication by a term; order is preserved since drl is multiplicative.
  Polynomial times(const Term& t) const {
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& [s, c] : terms_) r.terms_.emplace_back(s * t, c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<value_type> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& [s, c] : a.terms_)
      for (const auto& [t, d] : b.terms_) prod.emplace_back(s * t, Coeff(c * d));
    return from_terms(std::move(prod));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  Polynomial& merge(const Polynomial& p, bool negate) {
    if (p.is_zero()) return *this;
    std::vector<value_type> out;
    out.reserve(terms_.size() + p.terms_.size());
    auto a = terms_.begin();
    auto b = p.terms_.begin();
    auto take_b = [&] { out.emplace_back(b->first, negate ? Coeff(-b->second) : b->second); ++b; };
    while (a != terms_.end() && b != p.terms_.end()) {
      auto ord = cmp_drl(a->first, b->first);
      if (ord > 0) {
        out.push_back(std::move(*a++));
      } else if (ord < 0) {
        take_b();
      } else {
        Coeff c = negate ? Coeff(a->second - b->second) : Coeff(a->second + b->second);
        if (!mb::is_zero(c)) out.emplace_back(std::move(a->first), std::move(c));
        ++a;
        ++b;
      }
    }
    while (a != terms_.end()) out.push_back(std::move(*a++));
    while (b != p.terms_.end()) take_b();
    terms_ = std::move(out);
    return *this;
  }

  static std::vector<value_type> canonicalize(std::vector<value_type> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const value_type& x, const value_type& y) { return cmp_drl(x.first, y.first) > 0; });
    std::vector<value_type> out;
    out.reserve(terms.size());
    for (auto& v : terms) {
      if (!out.empty() && out.back().first == v.first) {
        out.back().second = out.back().second + v.second;
      } else {
        if (!out.empty() && mb::is_zero(out.back().second)) out.pop_back();
        out.push_back(std::move(v));
      }
    }
    if (!out.empty() && mb::is_zero(out.back().second)) out.pop_back();
    return out;
  }

  std::vector<value_type> terms_;
};

template <class Coeff>
bool is_zero(const Polynomial<Coeff>& p) {
  return p.is_zero();
}

/// Homogeneous components keyed by degree.
template <class Coeff>
std::map<int, Polynomial<Coeff>> homogeneous_parts(const Polynomial<Coeff>& h) {
  std::map<int, std::vector<typename Polynomial<Coeff>::value_type>> parts;
  for (const auto& [t, c] : h) parts[t.degree()].emplace_back(t, c);
  std::map<int, Polynomial<Coeff>> out;
  for (auto& [d, v] : parts) out.emplace(d, Polynomial<Coeff>::from_terms(std::move(v)));
  return out;
}

/// Polynomial with rational coefficients.
using RationalPolynomial = Polynomial<Rational>;
/// Polynomial in the parameter variables; the coefficient ring of the
/// generic marked set.
using ParamPoly = Polynomial<Rational>;
/// Polynomial in x whose coefficients are parameter polynomials.
using ParametricPolynomial = Polynomial<ParamPoly>;

/// The constant polynomial c in `nvars` variables.
inline ParamPoly constant(std::size_t nvars, const Rational& c) { return ParamPoly::monomial(Term(nvars), c); }

/// Evaluate a rational polynomial at a point.
Rational evaluate(const RationalPolynomial& p, std::span<const Rational> point);

/// Specialize the coefficients of a parametric polynomial at a point.
RationalPolynomial specialize(const ParametricPolynomial& p, std::span<const Rational> point);

/// Lift a rational polynomial to parametric coefficients over `nparams` parameters.
ParametricPolynomial lift_coefficients(const RationalPolynomial& p, std::size_t nparams);

/// Set the listed variables to zero.
RationalPolynomial kill_variables(const RationalPolynomial& p, std::span<const std::size_t> vars);

}  // namespace mb
