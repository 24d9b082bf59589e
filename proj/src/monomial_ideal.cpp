#include "markedbases/monomial_ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "markedbases/io.hpp"

namespace mb {

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Term> generators) : ring_(std::move(ring)) {
  if (generators.empty()) throw std::invalid_argument("the zero ideal is not allowed");
  for (const auto& g : generators) {
    if (g.size() != ring_.size()) throw RingMismatch("generator does not belong to the ring");
    if (g.is_one()) throw std::invalid_argument("the unit ideal is not allowed");
  }
  std::sort(generators.begin(), generators.end(), [](const Term& a, const Term& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return cmp_drl(a, b) > 0;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    bool redundant = std::any_of(basis_.begin(), basis_.end(), [&](const Term& b) { return divides(b, g); });
    if (!redundant) basis_.push_back(g);
  }
  std::sort(basis_.begin(), basis_.end(), DrlGreater{});
}

std::optional<std::size_t> MonomialIdeal::generator_index(const Term& t) const {
  auto it = std::find(basis_.begin(), basis_.end(), t);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

bool MonomialIdeal::contains(const Term& t) const {
  return std::any_of(basis_.begin(), basis_.end(), [&](const Term& b) { return divides(b, t); });
}

std::vector<Term> MonomialIdeal::terms_of_degree(int m) const {
  std::vector<Term> out;
  for (auto& t : mb::terms_of_degree(nvars(), m))
    if (contains(t)) out.push_back(std::move(t));
  return out;
}

std::vector<Term> MonomialIdeal::sous_escalier(int m) const {
  std::vector<Term> out;
  for (auto& t : mb::terms_of_degree(nvars(), m))
    if (!contains(t)) out.push_back(std::move(t));
  return out;
}

std::size_t MonomialIdeal::dim(int m) const { return terms_of_degree(m).size(); }

std::size_t MonomialIdeal::hilbert_function(int m) const { return sous_escalier(m).size(); }

int MonomialIdeal::initial_degree() const {
  int d = basis_.front().degree();
  for (const auto& b : basis_) d = std::min(d, b.degree());
  return d;
}

int MonomialIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& b : basis_) d = std::max(d, b.degree());
  return d;
}

std::optional<ElementaryMove> MonomialIdeal::stability_violation() const {
  const std::size_t n = nvars();
  for (const auto& b : basis_) {
    for (std::size_t i = 0; i < n; ++i) {
      if (b[i] == 0) continue;
      Term down = quotient(b, Term::variable(n, i));
      for (std::size_t j = i + 1; j < n; ++j) {
        Term moved = down * Term::variable(n, j);
        if (!contains(moved)) return ElementaryMove{b, i, j, moved};
      }
    }
  }
  return std::nullopt;
}

StableDecomposition MonomialIdeal::decompose(const Term& t) const {
  if (!contains(t)) throw std::domain_error("term " + format_term(t, ring_) + " is not in the ideal");
  Term rest = t;
  Term multiplier(nvars());
  while (true) {
    if (auto g = generator_index(rest)) return {multiplier, *g};
    Term x = Term::variable(nvars(), min_var(rest));
    rest = quotient(rest, x);
    multiplier = multiplier * x;
    if (!contains(rest)) throw std::domain_error("ideal is not strongly stable");
  }
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += format_term(basis_[i], ring_);
  }
  return out + ")";
}

MonomialIdeal borel_closure(const Ring& ring, const std::vector<Term>& terms) {
  const std::size_t n = ring.size();
  std::set<std::vector<Exponent>> seen;
  std::vector<Term> stack;
  for (const auto& t : terms) {
    if (seen.insert({t.exponents().begin(), t.exponents().end()}).second) stack.push_back(t);
  }
  std::vector<Term> closed;
  while (!stack.empty()) {
    Term t = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      Term down = quotient(t, Term::variable(n, i));
      for (std::size_t j = i + 1; j < n; ++j) {
        Term moved = down * Term::variable(n, j);
        if (seen.insert({moved.exponents().begin(), moved.exponents().end()}).second) stack.push_back(moved);
      }
    }
    closed.push_back(std::move(t));
  }
  return MonomialIdeal(ring, std::move(closed));
}

std::vector<GeneratorPair> generator_pairs(const MonomialIdeal& J) {
  std::vector<GeneratorPair> out;
  const auto& b = J.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) out.push_back({i, j, lcm(b[i], b[j])});
  return out;
}

std::vector<GeneratorPair> chain_criterion_pairs(const MonomialIdeal& J) {
  const auto& b = J.basis();
  std::vector<GeneratorPair> out;
  for (auto& p : generator_pairs(J)) {
    bool redundant = false;
    for (std::size_t c = 0; c < b.size() && !redundant; ++c) {
      if (c == p.first || c == p.second || !divides(b[c], p.lcm)) continue;
      redundant = lcm(b[p.first], b[c]) != p.lcm && lcm(b[p.second], b[c]) != p.lcm;
    }
    if (!redundant) out.push_back(std::move(p));
  }
  return out;
}

int syzygy_degree_bound(const MonomialIdeal& J, bool refine) {
  int bound = J.max_generator_degree();
  for (const auto& p : refine ? chain_criterion_pairs(J) : generator_pairs(J)) bound = std::max(bound, p.degree());
  return bound;
}

}  // namespace mb
