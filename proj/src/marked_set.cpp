#include "markedbases/marked_set.hpp"

namespace mb {

std::string describe(const MarkedSetViolation& v, const Ring& ring) {
  using Kind = MarkedSetViolation::Kind;
  auto term = [&] { return v.term.size() == ring.size() ? format_term(v.term, ring) : std::string("?"); };
  auto where = "element " + std::to_string(v.element + 1) + ": ";
  switch (v.kind) {
    case Kind::RingMismatch:
      return where + "polynomial does not belong to the ring";
    case Kind::HeadNotInBasis:
      return where + "head " + term() + " is not a minimal generator of J";
    case Kind::DuplicateHead:
      return where + "head " + term() + " occurs twice";
    case Kind::MissingHead:
      return "no element has head " + term();
    case Kind::HeadNotInSupport:
      return where + "head " + term() + " does not occur in the polynomial";
    case Kind::HeadCoefficientNotOne:
      return where + "head " + term() + " must have coefficient 1";
    case Kind::NotHomogeneous:
      return where + "term " + term() + " has a different degree than the head";
    case Kind::TailInIdeal:
      return where + "tail term " + term() + " lies in J";
  }
  return where + "invalid";
}

namespace {

std::string join(const std::vector<MarkedSetViolation>& violations, const Ring& ring) {
  std::string out = "not a J-marked set";
  for (const auto& v : violations) out += "\n  " + describe(v, ring);
  return out;
}

}  // namespace

InvalidMarkedSet::InvalidMarkedSet(std::vector<MarkedSetViolation> violations, const Ring& ring)
    : std::invalid_argument(join(violations, ring)), violations_(std::move(violations)) {}

MarkedSet<Rational> monomial_marked_set(const MonomialIdeal& J) {
  std::vector<MarkedPolynomial<Rational>> elements;
  for (const auto& b : J.basis()) elements.push_back({b, RationalPolynomial::monomial(b, 1)});
  return MarkedSet<Rational>(J, std::move(elements));
}

}  // namespace mb
