#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markedbases/criterion.hpp"

namespace mb {

/// Reduced Groebner basis over the rationals, computed with Buchberger's
/// algorithm (product and chain criteria, normal selection strategy).
class GroebnerBasis {
 public:
  /// Zero generators are dropped; the zero ideal has an empty basis.
  GroebnerBasis(const std::vector<RationalPolynomial>& generators, std::size_t nvars,
                TermOrder order = TermOrder::DegRevLex);

  std::size_t nvars() const { return nvars_; }
  TermOrder order() const { return order_; }
  /// Monic, auto-reduced, sorted descending by leading term.
  const std::vector<RationalPolynomial>& generators() const { return gens_; }
  const std::vector<Term>& leading_terms() const { return leading_; }
  bool is_unit() const { return leading_.size() == 1 && leading_.front().is_one(); }

  RationalPolynomial normal_form(const RationalPolynomial& h) const;
  bool contains(const RationalPolynomial& h) const { return normal_form(h).is_zero(); }
  /// Number of degree-m monomials outside the leading-term ideal; the
  /// Hilbert function of a homogeneous ideal.
  std::size_t hilbert_function(int m) const;

 private:
  std::size_t nvars_;
  TermOrder order_;
  std::vector<RationalPolynomial> gens_;
  std::vector<Term> leading_;
};

/// Equality of ideals by mutual membership of generators.
bool ideal_equal(const std::vector<RationalPolynomial>& a, const std::vector<RationalPolynomial>& b,
                 std::size_t nvars);

struct Extraction {
  enum class Status { Basis, NotStronglyStable, NotHomogeneous, NoExpression, NotABasis, DoesNotGenerate };
  Status status = Status::Basis;
  std::optional<MarkedSet<Rational>> marked_set;
  /// The head with no expression modulo I_m over N(J)_m.
  std::optional<Term> missing_head;
  /// Pairs whose S-polynomial has a nonzero residual.
  std::vector<PairResidual<Rational>> residuals;
  std::optional<bool> generates;
  /// Relaxed mode: Hilbert function of (G) equals that of J up to the
  /// checked degree.
  std::optional<bool> hilbert_agrees;
  std::string message;

  bool ok() const { return status == Status::Basis; }
};

std::string to_string(Extraction::Status s);

/// Finds the J-marked set contained in the homogeneous ideal I by
/// degree-wise linear algebra, then verifies it with the basis criterion
/// and by comparing (G) with I. `relaxed` accepts J that is not strongly
/// stable, skipping the criterion and comparing Hilbert functions instead.
Extraction marked_basis_from_ideal(const std::vector<RationalPolynomial>& I, const MonomialIdeal& J,
                                   bool relaxed = false);

}  // namespace mb
