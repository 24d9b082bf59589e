#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "markedbases/groebner.hpp"

namespace mb {

/// The parameter C_{alpha gamma}: coefficient `sign` * c_index of the tail
/// term x^gamma in F_alpha.
struct Parameter {
  std::size_t generator = 0;
  Term head;
  Term tail;
  int sign = -1;
};

/// Parameters of the generic marked set, indexed 0..N-1; parameter i is
/// printed as c<i+1>.
class ParameterRing {
 public:
  /// Generators descending by drl on heads, tails descending by drl,
  /// F_alpha = x^alpha - sum c_i x^gamma.
  static ParameterRing standard(const MonomialIdeal& J);
  /// Lines `c<index> <sign> <head> <tail>`; blank lines and lines starting
  /// with `#` are ignored. Every parameter must be named exactly once.
  static ParameterRing parse_naming(std::string_view text, const MonomialIdeal& J);

  std::size_t size() const { return params_.size(); }
  const Parameter& operator[](std::size_t i) const { return params_[i]; }
  const std::vector<Parameter>& parameters() const { return params_; }
  const Ring& names() const { return names_; }
  std::optional<std::size_t> find(std::size_t generator, const Term& tail) const;

 private:
  explicit ParameterRing(std::vector<Parameter> params);
  std::vector<Parameter> params_;
  Ring names_;
};

struct GenericMarkedSet {
  ParameterRing params;
  MarkedSet<ParamPoly> set;
};

/// Throws NotStronglyStable.
GenericMarkedSet build_generic_set(const MonomialIdeal& J, std::optional<ParameterRing> naming = std::nullopt);

/// The marked set at a rational parameter point.
MarkedSet<Rational> specialize(const GenericMarkedSet& generic, std::span<const Rational> point);

using LambdaDegree = std::vector<Exponent>;

/// alpha - gamma summed over the factors of a parameter monomial.
LambdaDegree lambda_degree(const ParameterRing& params, const Term& monomial);

struct SchemeGenerator {
  ParamPoly poly;
  LambdaDegree lambda;
  GeneratorPair pair;
  /// The N(J) monomial whose residual coefficient this is.
  Term monomial;
};

struct SchemeIdeal {
  std::size_t nparams = 0;
  std::vector<SchemeGenerator> generators;

  std::vector<ParamPoly> polys() const;
};

/// Residual coefficients of the selected S-polynomials of the generic set.
SchemeIdeal scheme_ideal(const GenericMarkedSet& generic, PairSelection selection = PairSelection::Minimal,
                         unsigned threads = 1);

/// Whether every monomial of p has the same lambda degree.
bool is_lambda_homogeneous(const ParameterRing& params, const ParamPoly& p);
bool homogeneity_check(const ParameterRing& params, const SchemeIdeal& ideal);

struct TangentSpace {
  std::size_t nparams = 0;
  std::size_t rank = 0;
  /// Reduced echelon basis of the linear parts.
  std::vector<ParamPoly> forms;
  RowEchelon echelon;

  std::size_t dimension() const { return nparams - rank; }
  /// Whether a linear form lies in the span of the linear parts.
  bool contains(const ParamPoly& linear) const;
};

/// Zariski tangent space at the origin of the scheme cut out by `polys`.
TangentSpace tangent_space(std::size_t nparams, const std::vector<ParamPoly>& polys);

class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Rows x^delta F_alpha of degree m (W_m order), columns the degree-m
/// monomials descending by drl.
struct CoefficientMatrix {
  int degree = 0;
  std::vector<WElement> rows;
  std::vector<Term> columns;
  std::vector<std::vector<ParamPoly>> entries;
};

CoefficientMatrix matrix_A(const MarkedSet<ParamPoly>& G, int m);

enum class MinorMode { Bordered, All };

struct MinorGenerator {
  ParamPoly poly;
  int degree = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> columns;
};

/// Minors of order dim J_m + 1 of A_m for alpha_J <= m <= m_0. Bordered
/// mode takes the V_m rows and J_m columns plus one further row and one
/// N(J)_m column. Throws SizeLimitExceeded when a minor order exceeds
/// `max_order`, or in All mode when more than `max_count` minors arise.
std::vector<MinorGenerator> minors_ideal(const GenericMarkedSet& generic, MinorMode mode = MinorMode::Bordered,
                                         std::size_t max_order = 16, std::size_t max_count = 200000);

/// Determinant by Laplace expansion along rows with memoized column sets.
ParamPoly determinant(const std::vector<std::vector<ParamPoly>>& matrix, std::size_t nparams);

struct StratumSection {
  std::vector<std::size_t> killed;
  std::vector<ParamPoly> generators;
};

/// Sets C_{alpha gamma} = 0 whenever x^alpha < x^gamma under `order`.
StratumSection stratum_section(const ParameterRing& params, const std::vector<ParamPoly>& ideal, TermOrder order);

/// Whether every term of J_m exceeds every term of N(J)_m under `order`.
bool is_segment(const MonomialIdeal& J, int m, TermOrder order);

/// u in J_m and v, w in N(J)_m with u^2 = v w: no term order puts u above
/// both v and w, so J_m is a segment for no term order.
struct SegmentObstruction {
  Term u, v, w;
};
std::optional<SegmentObstruction> segment_obstruction(const MonomialIdeal& J, int m);

/// Whether the homogeneous ideal I lies in the marked family of J; the
/// witness is the marked basis.
inline Extraction family_membership(const std::vector<RationalPolynomial>& I, const MonomialIdeal& J) {
  return marked_basis_from_ideal(I, J);
}

}  // namespace mb
