#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "markedbases/marked_set.hpp"

namespace mb {

/// Raised by every reduction entry point when J is not strongly stable:
/// marked rewriting need not terminate there, so no reduction is attempted.
class NotStronglyStable : public std::domain_error {
 public:
  explicit NotStronglyStable(const MonomialIdeal& J);
  const std::optional<ElementaryMove>& move() const { return move_; }

 private:
  std::optional<ElementaryMove> move_;
};

inline void require_strongly_stable(const MonomialIdeal& J) {
  if (!J.is_strongly_stable()) throw NotStronglyStable(J);
}

/// An element x^delta * f_alpha of W_m.
struct WElement {
  Term multiplier;
  std::size_t generator = 0;
};

/// One element of V_m: multiplier * f_generator with head `head`.
template <class Coeff>
struct ReductionEntry {
  Term head;
  Polynomial<Coeff> poly;
  Term multiplier;
  std::size_t generator = 0;
  /// Position of g_epsilon in V_{m-1} when this entry is x_i * g_epsilon.
  std::optional<std::size_t> parent;
  /// Position in its list; 0 is the largest under the V_m order.
  std::size_t position = 0;
  int degree = 0;

  bool is_generator() const { return !parent.has_value(); }
  WElement w_element() const { return {multiplier, generator}; }
};

/// V_m, sorted strictly descending.
template <class Coeff>
class ReductionList {
 public:
  ReductionList() = default;
  ReductionList(int degree, std::vector<ReductionEntry<Coeff>> entries) : degree_(degree), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      entries_[i].position = i;
      index_.emplace(entries_[i].head, i);
    }
  }

  int degree() const { return degree_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<ReductionEntry<Coeff>>& entries() const { return entries_; }
  const ReductionEntry<Coeff>& operator[](std::size_t i) const { return entries_[i]; }
  const ReductionEntry<Coeff>* find(const Term& head) const {
    auto it = index_.find(head);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

 private:
  int degree_ = 0;
  std::vector<ReductionEntry<Coeff>> entries_;
  std::unordered_map<Term, std::size_t, TermHash> index_;
};

/// Order on V_m entries of the same list, by list position.
template <class Coeff>
std::strong_ordering cmp_Vm(const ReductionEntry<Coeff>& a, const ReductionEntry<Coeff>& b) {
  if (a.degree != b.degree) throw std::invalid_argument("cmp_Vm: entries of different degrees");
  return b.position <=> a.position;
}

/// Order on W_m: multipliers by drl, ties by generator head under `order`.
template <class Coeff>
std::strong_ordering cmp_Wm(const MarkedSet<Coeff>& G, const WElement& a, const WElement& b,
                            TermOrder order = TermOrder::DegRevLex) {
  if (a.multiplier.degree() + G.head(a.generator).degree() != b.multiplier.degree() + G.head(b.generator).degree())
    throw std::invalid_argument("cmp_Wm: elements of different degrees");
  if (auto c = cmp_drl(a.multiplier, b.multiplier); c != 0) return c;
  return compare(order, G.head(a.generator), G.head(b.generator));
}

/// The lists V_{alpha_J}, ..., V_s for a marked set over a strongly stable
/// ideal, built degree by degree and cached.
template <class Coeff>
class ReductionTower {
 public:
  /// Throws NotStronglyStable. `order` is the term order used to rank
  /// generators of equal degree.
  explicit ReductionTower(MarkedSet<Coeff> G, TermOrder order = TermOrder::DegRevLex)
      : G_(std::move(G)), order_(order) {
    require_strongly_stable(G_.ideal());
    initial_degree_ = G_.ideal().initial_degree();
    extend_to(initial_degree_);
  }

  const MarkedSet<Coeff>& marked_set() const { return G_; }
  TermOrder order() const { return order_; }
  int initial_degree() const { return initial_degree_; }
  int built_to() const { return initial_degree_ + static_cast<int>(lists_.size()) - 1; }

  void extend_to(int s) {
    while (built_to() < s) build_next();
  }

  /// V_m; empty below the initial degree. Throws std::out_of_range if
  /// m has not been built yet.
  const ReductionList<Coeff>& at(int m) const {
    if (m < initial_degree_) return empty_;
    if (m > built_to()) throw std::out_of_range("V_" + std::to_string(m) + " has not been built");
    return lists_[static_cast<std::size_t>(m - initial_degree_)];
  }

 private:
  void build_next() {
    const int m = lists_.empty() ? initial_degree_ : built_to() + 1;
    const std::size_t n = G_.ideal().nvars();
    std::vector<ReductionEntry<Coeff>> entries;
    if (!lists_.empty()) {
      const auto& prev = lists_.back();
      // x_i * g for every g in V_{m-1} with x_i <= min(Ht(g)); larger
      // variables first, then the order of V_{m-1}.
      for (std::size_t i = n; i-- > 0;) {
        Term x = Term::variable(n, i);
        for (const auto& g : prev.entries()) {
          if (i > min_var(g.head)) continue;
          ReductionEntry<Coeff> e;
          e.head = g.head * x;
          e.poly = g.poly.times(x);
          e.multiplier = g.multiplier * x;
          e.generator = g.generator;
          e.parent = g.position;
          e.degree = m;
          entries.push_back(std::move(e));
        }
      }
    }
    auto gens = G_.of_degree(m);
    std::sort(gens.begin(), gens.end(),
              [&](std::size_t a, std::size_t b) { return compare(order_, G_.head(a), G_.head(b)) > 0; });
    for (std::size_t g : gens) {
      ReductionEntry<Coeff> e;
      e.head = G_.head(g);
      e.poly = G_.poly(g);
      e.multiplier = Term(n);
      e.generator = g;
      e.degree = m;
      entries.push_back(std::move(e));
    }
    lists_.emplace_back(m, std::move(entries));
  }

  MarkedSet<Coeff> G_;
  TermOrder order_;
  int initial_degree_ = 0;
  std::vector<ReductionList<Coeff>> lists_;
  ReductionList<Coeff> empty_;
};

template <class Coeff>
struct CombinationTerm {
  Coeff coefficient;
  Term multiplier;
  std::size_t generator = 0;
};

/// h = residual + sum coefficient * multiplier * f_generator.
template <class Coeff>
struct ReductionCertificate {
  Polynomial<Coeff> input;
  Polynomial<Coeff> residual;
  std::vector<CombinationTerm<Coeff>> combination;
};

/// Single pass over V_m in descending order: at each entry, subtract the
/// running coefficient of its head times the entry.
template <class Coeff>
ReductionCertificate<Coeff> normal_form(const Polynomial<Coeff>& h, const ReductionList<Coeff>& V) {
  ReductionCertificate<Coeff> cert;
  cert.input = h;
  cert.residual = h;
  if (h.is_zero()) return cert;
  if (!h.is_homogeneous()) throw std::invalid_argument("normal_form: polynomial is not homogeneous");
  // An empty list stands for a degree below the initial degree of J.
  if (V.size() != 0 && h.degree() != V.degree())
    throw std::invalid_argument("normal_form: polynomial of degree " + std::to_string(h.degree()) +
                                " reduced against V_" + std::to_string(V.degree()));
  for (const auto& e : V.entries()) {
    const Coeff* a = cert.residual.find(e.head);
    if (!a) continue;
    Coeff coeff = *a;
    cert.residual.add_scaled(Coeff(-coeff), Term(e.head.size()), e.poly);
    cert.combination.push_back({std::move(coeff), e.multiplier, e.generator});
  }
  return cert;
}

/// Normal form of a homogeneous polynomial using a tower already built to
/// its degree.
template <class Coeff>
ReductionCertificate<Coeff> normal_form(const Polynomial<Coeff>& h, const ReductionTower<Coeff>& tower) {
  if (h.is_zero()) return {h, h, {}};
  if (!h.is_homogeneous()) throw std::invalid_argument("normal_form: polynomial is not homogeneous");
  return normal_form(h, tower.at(h.degree()));
}

/// residual + sum c * x^gamma * f_alpha, for checking certificates.
template <class Coeff>
Polynomial<Coeff> recombine(const MarkedSet<Coeff>& G, const ReductionCertificate<Coeff>& cert) {
  Polynomial<Coeff> sum = cert.residual;
  for (const auto& c : cert.combination) sum.add_scaled(c.coefficient, c.multiplier, G.poly(c.generator));
  return sum;
}

}  // namespace mb
