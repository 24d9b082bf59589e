#pragma once

#include <random>
#include <string>
#include <vector>

#include "markedbases/groebner.hpp"
#include "markedbases/io.hpp"

namespace mbtest {

using namespace mb;

inline Ring xyz() { return Ring({"z", "y", "x"}); }

inline Term T(const Ring& r, const std::string& s) { return parse_term(s, r); }
inline RationalPolynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }

inline MonomialIdeal ideal(const Ring& r, const std::vector<std::string>& gens) {
  std::vector<Term> ts;
  for (const auto& g : gens) ts.push_back(T(r, g));
  return MonomialIdeal(r, ts);
}

inline MarkedSet<Rational> marked(const MonomialIdeal& J, const std::vector<std::string>& polys) {
  std::vector<MarkedPolynomial<Rational>> els;
  for (std::size_t i = 0; i < polys.size(); ++i) els.push_back({J.basis()[i], P(J.ring(), polys[i])});
  return MarkedSet<Rational>(J, els);
}

/// Marked set given as (head, polynomial) strings, any order.
inline MarkedSet<Rational> marked_by_head(const MonomialIdeal& J,
                                          const std::vector<std::pair<std::string, std::string>>& polys) {
  std::vector<MarkedPolynomial<Rational>> els;
  for (const auto& [h, p] : polys) els.push_back({T(J.ring(), h), P(J.ring(), p)});
  return MarkedSet<Rational>(J, els);
}

inline MonomialIdeal appendix_ideal() {
  return ideal(xyz(), {"x^4", "x^3*y", "x^2*y^2", "x*y^3", "x^3*z", "x^2*y*z", "x*y^2*z", "y^5"});
}

inline MarkedSet<Rational> appendix_set() {
  auto J = appendix_ideal();
  std::vector<MarkedPolynomial<Rational>> els;
  for (const auto& b : J.basis()) els.push_back({b, RationalPolynomial::monomial(b, 1)});
  for (auto& e : els)
    if (e.head == T(J.ring(), "x*y^2*z")) e.poly = P(J.ring(), "x*y^2*z - y^4 - x^2*z^2");
  return MarkedSet<Rational>(J, els);
}

// ---- random data ----

using Rng = std::mt19937_64;

inline Ring ring_of(std::size_t n) {
  static const char* names[] = {"z", "y", "x", "w"};
  std::vector<std::string> v(names, names + n);
  return Ring(v);
}

inline Term random_term(Rng& rng, std::size_t nvars, int degree) {
  auto all = terms_of_degree(nvars, degree);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

/// A strongly stable ideal in 2 or 3 variables with generators of degree
/// at most `max_degree`, as the Borel closure of random terms.
inline MonomialIdeal random_strongly_stable(Rng& rng, std::size_t nvars, int max_degree) {
  Ring r = ring_of(nvars);
  while (true) {
    std::vector<Term> seeds;
    int count = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < count; ++i) {
      int d = std::uniform_int_distribution<int>(2, max_degree)(rng);
      seeds.push_back(random_term(rng, nvars, d));
    }
    auto J = borel_closure(r, seeds);
    if (J.basis().size() >= 2) return J;
  }
}

inline Rational random_coefficient(Rng& rng, int bound = 3) {
  int v = 0;
  while (v == 0) v = std::uniform_int_distribution<int>(-bound, bound)(rng);
  return v;
}

/// Random tails: each N(J) term present with probability `density`.
inline MarkedSet<Rational> random_marked_set(Rng& rng, const MonomialIdeal& J, double density = 0.4) {
  std::bernoulli_distribution keep(density);
  std::vector<MarkedPolynomial<Rational>> els;
  for (const auto& b : J.basis()) {
    std::vector<RationalPolynomial::value_type> terms{{b, 1}};
    for (const auto& t : J.sous_escalier(b.degree()))
      if (keep(rng)) terms.emplace_back(t, random_coefficient(rng));
    els.push_back({b, RationalPolynomial::from_terms(terms)});
  }
  return MarkedSet<Rational>(J, els);
}

/// x_i -> x_i + sum_{j<i} a_ij x_j applied to p.
inline RationalPolynomial substitute(const RationalPolynomial& p, const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<RationalPolynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RationalPolynomial::value_type> t{{Term::variable(n, i), 1}};
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != 0) t.emplace_back(Term::variable(n, j), a[i][j]);
    images.push_back(RationalPolynomial::from_terms(t));
  }
  RationalPolynomial out;
  for (const auto& [t, c] : p) {
    RationalPolynomial prod = RationalPolynomial::monomial(Term(n), c);
    for (std::size_t i = 0; i < n; ++i)
      for (Exponent k = 0; k < t[i]; ++k) prod = prod * images[i];
    out += prod;
  }
  return out;
}

/// The image of J under a random substitution adding smaller variables
/// has J as initial ideal for every order, so its reduced drl basis is a
/// J-marked basis.
inline MarkedSet<Rational> random_true_basis(Rng& rng, const MonomialIdeal& J) {
  const std::size_t n = J.nvars();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) a[i][j] = coef(rng);
  std::vector<RationalPolynomial> gens;
  for (const auto& b : J.basis()) gens.push_back(substitute(RationalPolynomial::monomial(b, 1), a));
  GroebnerBasis gb(gens, n);
  std::vector<MarkedPolynomial<Rational>> els;
  for (std::size_t i = 0; i < gb.generators().size(); ++i)
    if (J.generator_index(gb.leading_terms()[i])) els.push_back({gb.leading_terms()[i], gb.generators()[i]});
  return MarkedSet<Rational>(J, els);
}

inline RationalPolynomial random_homogeneous(Rng& rng, std::size_t nvars, int degree, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  std::vector<RationalPolynomial::value_type> terms;
  for (const auto& t : terms_of_degree(nvars, degree))
    if (keep(rng)) terms.emplace_back(t, random_coefficient(rng, 5));
  return RationalPolynomial::from_terms(terms);
}

/// A random element of (G) of the given degree.
inline RationalPolynomial random_member(Rng& rng, const MarkedSet<Rational>& G, int degree) {
  RationalPolynomial out;
  for (std::size_t g = 0; g < G.size(); ++g) {
    int d = degree - G.head(g).degree();
    if (d < 0) continue;
    out += random_homogeneous(rng, G.ideal().nvars(), d, 0.3) * G.poly(g);
  }
  return out;
}

/// Random marked sets over random strongly stable ideals in at most three
/// variables with generators of degree at most four; half are bases.
struct CorpusCase {
  MarkedSet<Rational> set;
  bool constructed_basis;
};

inline std::vector<CorpusCase> random_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<CorpusCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
    auto J = random_strongly_stable(rng, n, 4);
    if (i % 2 == 0) out.push_back({random_true_basis(rng, J), true});
    else out.push_back({random_marked_set(rng, J), false});
  }
  return out;
}

}  // namespace mbtest
