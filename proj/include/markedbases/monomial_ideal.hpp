#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markedbases/term.hpp"

namespace mb {

/// An elementary move x^a -> x^a * x_to / x_from with from < to.
struct ElementaryMove {
  Term source;
  std::size_t from = 0;
  std::size_t to = 0;
  Term target;
};

/// A pair of minimal generators with the degree of their lcm.
struct GeneratorPair {
  std::size_t first = 0;   // index into MonomialIdeal::basis()
  std::size_t second = 0;  // first < second
  Term lcm;

  int degree() const { return lcm.degree(); }
  friend bool operator==(const GeneratorPair& a, const GeneratorPair& b) {
    return a.first == b.first && a.second == b.second;
  }
};

/// The unique factorization t = multiplier * basis[generator] with
/// max(multiplier) <= min(basis[generator]), which exists for strongly
/// stable ideals.
struct StableDecomposition {
  Term multiplier;
  std::size_t generator = 0;
};

/// A proper, nonzero monomial ideal given by its minimal basis.
///
/// The basis is stored descending by drl; generator indices everywhere
/// else refer to this order.
class MonomialIdeal {
 public:
  /// Non-minimal generators are dropped. Throws std::invalid_argument on
  /// an empty list (zero ideal) or when 1 is a generator (unit ideal).
  MonomialIdeal(Ring ring, std::vector<Term> generators);

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.size(); }
  const std::vector<Term>& basis() const { return basis_; }
  std::optional<std::size_t> generator_index(const Term& t) const;

  bool contains(const Term& t) const;
  /// J_m, descending by drl.
  std::vector<Term> terms_of_degree(int m) const;
  /// N(J)_m, descending by drl.
  std::vector<Term> sous_escalier(int m) const;
  std::size_t dim(int m) const;
  std::size_t hilbert_function(int m) const;

  int initial_degree() const;
  int max_generator_degree() const;

  bool is_strongly_stable() const { return !stability_violation(); }
  /// First elementary move from a generator that leaves the ideal.
  std::optional<ElementaryMove> stability_violation() const;

  /// Throws std::domain_error unless strongly stable and t in J.
  StableDecomposition decompose(const Term& t) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> basis_;
};

/// Smallest strongly stable ideal containing the given terms.
MonomialIdeal borel_closure(const Ring& ring, const std::vector<Term>& terms);

/// All pairs of minimal generators.
std::vector<GeneratorPair> generator_pairs(const MonomialIdeal& J);

/// Pairs surviving the chain criterion: (a, b) is dropped when some other
/// generator c divides lcm(a, b) with lcm(a, c) and lcm(b, c) both proper
/// divisors of lcm(a, b).
std::vector<GeneratorPair> chain_criterion_pairs(const MonomialIdeal& J);

/// Maximal lcm degree over the pair syzygies (all pairs, or the chain
/// criterion survivors when `refine`). With a single generator this is
/// the initial degree.
int syzygy_degree_bound(const MonomialIdeal& J, bool refine = false);

}  // namespace mb
