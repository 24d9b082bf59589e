#pragma once

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "markedbases/linalg.hpp"
#include "markedbases/parallel.hpp"
#include "markedbases/reduction.hpp"

namespace mb {

/// x^beta f_a - x^beta' f_b with x^beta x^a = x^beta' x^b = lcm.
template <class Coeff>
struct SPolynomial {
  GeneratorPair pair;
  Term first_multiplier;
  Term second_multiplier;
  Polynomial<Coeff> poly;
};

template <class Coeff>
SPolynomial<Coeff> s_polynomial(const MarkedSet<Coeff>& G, const GeneratorPair& pair) {
  SPolynomial<Coeff> s{pair, quotient(pair.lcm, G.head(pair.first)), quotient(pair.lcm, G.head(pair.second)), {}};
  s.poly = G.poly(pair.first).times(s.first_multiplier) - G.poly(pair.second).times(s.second_multiplier);
  return s;
}

template <class Coeff>
SPolynomial<Coeff> s_polynomial(const MarkedSet<Coeff>& G, std::size_t a, std::size_t b) {
  return s_polynomial(G, GeneratorPair{a, b, lcm(G.head(a), G.head(b))});
}

/// Pairs whose S-polynomial has one side in V_m: the lcm's stable
/// decomposition uses one of the two generators. The other pairs never
/// occur in the basis criterion. Throws NotStronglyStable.
std::vector<GeneratorPair> minimal_pairs(const MonomialIdeal& J);

enum class PairSelection { All, Minimal };

std::vector<GeneratorPair> select_pairs(const MonomialIdeal& J, PairSelection selection);

template <class Coeff>
struct PairResidual {
  SPolynomial<Coeff> s_poly;
  ReductionCertificate<Coeff> certificate;

  const GeneratorPair& pair() const { return s_poly.pair; }
  const Polynomial<Coeff>& residual() const { return certificate.residual; }
};

template <class Coeff>
struct BasisCheck {
  bool is_basis = false;
  std::vector<PairResidual<Coeff>> pairs;
};

/// Reduces the S-polynomial of every selected pair by V_m; G is a marked
/// basis iff all residuals vanish. Results are in pair order regardless
/// of `threads`.
template <class Coeff>
BasisCheck<Coeff> buchberger_check(ReductionTower<Coeff>& tower, PairSelection selection = PairSelection::Minimal,
                                   unsigned threads = 1) {
  const auto& G = tower.marked_set();
  auto pairs = select_pairs(G.ideal(), selection);
  int top = tower.initial_degree();
  for (const auto& p : pairs) top = std::max(top, p.degree());
  tower.extend_to(top);
  BasisCheck<Coeff> out;
  out.pairs = parallel_map(pairs.size(), threads, [&](std::size_t i) {
    auto s = s_polynomial(G, pairs[i]);
    auto cert = normal_form(s.poly, tower.at(pairs[i].degree()));
    return PairResidual<Coeff>{std::move(s), std::move(cert)};
  });
  out.is_basis = std::all_of(out.pairs.begin(), out.pairs.end(), [](const auto& r) { return r.residual().is_zero(); });
  return out;
}

template <class Coeff>
BasisCheck<Coeff> buchberger_check(const MarkedSet<Coeff>& G, PairSelection selection = PairSelection::Minimal,
                                   unsigned threads = 1) {
  ReductionTower<Coeff> tower(G);
  return buchberger_check(tower, selection, threads);
}

/// All of W_m as (element, polynomial), multipliers descending by drl.
template <class Coeff>
std::vector<std::pair<WElement, Polynomial<Coeff>>> w_elements(const MarkedSet<Coeff>& G, int m) {
  std::vector<std::pair<WElement, Polynomial<Coeff>>> out;
  for (std::size_t g = 0; g < G.size(); ++g) {
    int d = m - G.head(g).degree();
    if (d < 0) continue;
    for (auto& t : terms_of_degree(G.ideal().nvars(), d)) {
      auto p = G.poly(g).times(t);
      out.push_back({WElement{std::move(t), g}, std::move(p)});
    }
  }
  return out;
}

struct DegreeRank {
  int degree = 0;
  std::size_t rank = 0;
  std::size_t dim_J = 0;
};

struct RankCheck {
  bool is_basis = false;
  std::vector<DegreeRank> degrees;
};

/// Degree-m monomials numbered J_m first, then N(J)_m, each descending.
/// Row reduction over these columns isolates relations supported on N(J).
struct SplitColumns {
  std::vector<Term> terms;
  std::size_t in_ideal = 0;
  std::unordered_map<Term, std::size_t, TermHash> index;

  SplitColumns(const MonomialIdeal& J, int m) {
    terms = J.terms_of_degree(m);
    in_ideal = terms.size();
    for (auto& t : J.sous_escalier(m)) terms.push_back(std::move(t));
    for (std::size_t i = 0; i < terms.size(); ++i) index.emplace(terms[i], i);
  }

  RationalPolynomial to_poly(const SparseRow& row) const {
    std::vector<RationalPolynomial::value_type> v;
    for (const auto& [c, x] : row) v.emplace_back(terms[c], x);
    return RationalPolynomial::from_terms(std::move(v));
  }
};

/// dim_K (G)_m by exact row reduction of W_m over the degree-m monomials.
std::size_t degree_rank(const MarkedSet<Rational>& G, int m);

/// Independent basis test: dim (G)_m == dim J_m for every m up to the
/// syzygy degree bound. Throws NotStronglyStable.
RankCheck basis_check_by_rank(const MarkedSet<Rational>& G);

/// Nonzero elements of (G)_m supported on N(J)_m, as a reduced basis of
/// that intersection. Any J. Nonempty means N(J) is not free mod (G).
std::vector<RationalPolynomial> sous_escalier_relations(const MarkedSet<Rational>& G, int m);

/// The J-normal form through linear algebra on W_m: the unique element of
/// span N(J)_m congruent to h when G is a basis.
RationalPolynomial normal_form_by_elimination(const MarkedSet<Rational>& G, const RationalPolynomial& h);

class NotABasis : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (h_1, ..., h_t) with sum h_i f_i of a common degree.
template <class Coeff>
struct Syzygy {
  int degree = 0;
  std::vector<Polynomial<Coeff>> components;
};

template <class Coeff>
Polynomial<Coeff> evaluate_syzygy(const MarkedSet<Coeff>& G, const Syzygy<Coeff>& H) {
  Polynomial<Coeff> sum;
  for (std::size_t i = 0; i < H.components.size(); ++i) sum += H.components[i] * G.poly(i);
  return sum;
}

/// The pair syzygy x^beta e_a - x^beta' e_b of the heads.
Syzygy<Rational> monomial_syzygy(const MonomialIdeal& J, const GeneratorPair& pair);

/// Converts a rational syzygy to the coefficient ring of G.
template <class Coeff>
Syzygy<Coeff> convert_syzygy(const Syzygy<Rational>& M, std::size_t nparams);

template <>
inline Syzygy<Rational> convert_syzygy<Rational>(const Syzygy<Rational>& M, std::size_t) {
  return M;
}

template <>
inline Syzygy<ParamPoly> convert_syzygy<ParamPoly>(const Syzygy<Rational>& M, std::size_t nparams) {
  Syzygy<ParamPoly> out{M.degree, {}};
  for (const auto& c : M.components) out.components.push_back(lift_coefficients(c, nparams));
  return out;
}

/// Head data of a syzygy: the cmp_Wm-largest W-element among the terms of
/// its components, and H^+, the part of H sharing that head.
template <class Coeff>
struct SyzygyHead {
  Term head;
  WElement max;
  Syzygy<Coeff> plus;
};

template <class Coeff>
SyzygyHead<Coeff> syzygy_head(const MarkedSet<Coeff>& G, const Syzygy<Coeff>& H,
                              TermOrder order = TermOrder::DegRevLex) {
  std::optional<WElement> best;
  for (std::size_t i = 0; i < H.components.size(); ++i) {
    for (const auto& [t, c] : H.components[i]) {
      WElement w{t, i};
      if (!best || cmp_Wm(G, w, *best, order) > 0) best = w;
    }
  }
  if (!best) throw std::invalid_argument("syzygy_head: zero syzygy");
  SyzygyHead<Coeff> out;
  out.max = *best;
  out.head = best->multiplier * G.head(best->generator);
  out.plus.degree = H.degree;
  out.plus.components.resize(H.components.size());
  for (std::size_t i = 0; i < H.components.size(); ++i) {
    if (!divides(G.head(i), out.head)) continue;
    Term beta = quotient(out.head, G.head(i));
    if (const Coeff* c = H.components[i].find(beta))
      out.plus.components[i] = Polynomial<Coeff>::monomial(beta, *c);
  }
  return out;
}

/// Lifts the pair syzygy of `pair` to a syzygy of G using the reduction
/// certificate of its S-polynomial. Throws NotABasis when the residual is
/// nonzero.
template <class Coeff>
Syzygy<Coeff> lift_syzygy(ReductionTower<Coeff>& tower, const GeneratorPair& pair, std::size_t nparams = 0) {
  const auto& G = tower.marked_set();
  tower.extend_to(pair.degree());
  auto s = s_polynomial(G, pair);
  auto cert = normal_form(s.poly, tower.at(pair.degree()));
  if (!cert.residual.is_zero()) throw NotABasis("S-polynomial does not reduce to zero; G is not a marked basis");
  Syzygy<Coeff> H = convert_syzygy<Coeff>(monomial_syzygy(G.ideal(), pair), nparams);
  for (const auto& c : cert.combination)
    H.components[c.generator] -= Polynomial<Coeff>::monomial(c.multiplier, c.coefficient);
  return H;
}

/// A marked set that passed the basis criterion; answers membership.
class VerifiedBasis {
 public:
  /// Throws NotABasis or NotStronglyStable.
  explicit VerifiedBasis(MarkedSet<Rational> G);

  const MarkedSet<Rational>& marked_set() const { return tower_.marked_set(); }
  /// Normal form of an arbitrary polynomial, degree by degree.
  RationalPolynomial normal_form(const RationalPolynomial& h);
  bool contains(const RationalPolynomial& h) { return normal_form(h).is_zero(); }

 private:
  ReductionTower<Rational> tower_;
};

/// Membership in (G); G must be a marked basis (throws NotABasis).
bool ideal_membership(const MarkedSet<Rational>& G, const RationalPolynomial& h);

}  // namespace mb
