#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "markedbases/io.hpp"
#include "markedbases/monomial_ideal.hpp"
#include "markedbases/polynomial.hpp"

namespace mb {

inline bool is_one(const Rational& r) { return r == 1; }
inline bool is_one(const ParamPoly& p) {
  return p.size() == 1 && p.terms().front().first.is_one() && p.terms().front().second == 1;
}

template <class Coeff>
struct MarkedPolynomial {
  Term head;
  Polynomial<Coeff> poly;
};

struct MarkedSetViolation {
  enum class Kind {
    RingMismatch,
    HeadNotInBasis,
    DuplicateHead,
    MissingHead,
    HeadNotInSupport,
    HeadCoefficientNotOne,
    NotHomogeneous,
    TailInIdeal,
  };
  Kind kind;
  std::size_t element = 0;  // index into the input list; unused for MissingHead
  Term term;                // offending head or tail term
};

std::string describe(const MarkedSetViolation& v, const Ring& ring);

/// Checks every marked-set condition and reports each failure.
template <class Coeff>
std::vector<MarkedSetViolation> validate_marked_set(const MonomialIdeal& J,
                                                    const std::vector<MarkedPolynomial<Coeff>>& elements) {
  using Kind = MarkedSetViolation::Kind;
  std::vector<MarkedSetViolation> out;
  std::vector<bool> seen(J.basis().size(), false);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& [head, poly] = elements[i];
    bool ring_ok = head.size() == J.nvars() &&
                   std::all_of(poly.begin(), poly.end(), [&](const auto& v) { return v.first.size() == J.nvars(); });
    if (!ring_ok) {
      out.push_back({Kind::RingMismatch, i, head});
      continue;
    }
    auto g = J.generator_index(head);
    if (!g) {
      out.push_back({Kind::HeadNotInBasis, i, head});
    } else if (seen[*g]) {
      out.push_back({Kind::DuplicateHead, i, head});
    } else {
      seen[*g] = true;
    }
    const Coeff* hc = poly.find(head);
    if (!hc) {
      out.push_back({Kind::HeadNotInSupport, i, head});
    } else if (!is_one(*hc)) {
      out.push_back({Kind::HeadCoefficientNotOne, i, head});
    }
    for (const auto& [t, c] : poly) {
      if (t == head) continue;
      if (t.degree() != head.degree()) {
        out.push_back({Kind::NotHomogeneous, i, t});
      } else if (J.contains(t)) {
        out.push_back({Kind::TailInIdeal, i, t});
      }
    }
  }
  for (std::size_t g = 0; g < seen.size(); ++g)
    if (!seen[g]) out.push_back({Kind::MissingHead, 0, J.basis()[g]});
  return out;
}

class InvalidMarkedSet : public std::invalid_argument {
 public:
  InvalidMarkedSet(std::vector<MarkedSetViolation> violations, const Ring& ring);
  const std::vector<MarkedSetViolation>& violations() const { return violations_; }

 private:
  std::vector<MarkedSetViolation> violations_;
};

/// A J-marked set: one marked polynomial per minimal generator of J.
///
/// Element i has head J.basis()[i]; "generator index" means this index.
template <class Coeff>
class MarkedSet {
 public:
  /// Validates and reorders `elements` to follow J.basis(); throws
  /// InvalidMarkedSet listing every violation.
  MarkedSet(MonomialIdeal J, std::vector<MarkedPolynomial<Coeff>> elements) : ideal_(std::move(J)) {
    auto violations = validate_marked_set(ideal_, elements);
    if (!violations.empty()) throw InvalidMarkedSet(std::move(violations), ideal_.ring());
    polys_.resize(elements.size());
    for (auto& e : elements) polys_[*ideal_.generator_index(e.head)] = std::move(e.poly);
  }

  const MonomialIdeal& ideal() const { return ideal_; }
  const Ring& ring() const { return ideal_.ring(); }
  std::size_t size() const { return polys_.size(); }
  const Term& head(std::size_t i) const { return ideal_.basis()[i]; }
  const Polynomial<Coeff>& poly(std::size_t i) const { return polys_[i]; }
  const std::vector<Polynomial<Coeff>>& polys() const { return polys_; }

  /// Generator indices of degree m.
  std::vector<std::size_t> of_degree(int m) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (head(i).degree() == m) out.push_back(i);
    return out;
  }

 private:
  MonomialIdeal ideal_;
  std::vector<Polynomial<Coeff>> polys_;
};

/// B_J with zero tails.
MarkedSet<Rational> monomial_marked_set(const MonomialIdeal& J);

}  // namespace mb
