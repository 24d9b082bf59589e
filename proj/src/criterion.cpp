#include "markedbases/criterion.hpp"

#include <map>
#include <unordered_map>

namespace mb {

std::vector<GeneratorPair> minimal_pairs(const MonomialIdeal& J) {
  require_strongly_stable(J);
  std::vector<GeneratorPair> out;
  for (auto& p : generator_pairs(J)) {
    auto d = J.decompose(p.lcm);
    if (d.generator == p.first || d.generator == p.second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<GeneratorPair> select_pairs(const MonomialIdeal& J, PairSelection selection) {
  return selection == PairSelection::All ? generator_pairs(J) : minimal_pairs(J);
}

namespace {

RowEchelon eliminate_w(const MarkedSet<Rational>& G, const SplitColumns& cols, int m) {
  RowEchelon e;
  for (const auto& [w, p] : w_elements(G, m)) e.insert(to_row(p, cols.index));
  return e;
}

}  // namespace

std::size_t degree_rank(const MarkedSet<Rational>& G, int m) {
  SplitColumns cols(G.ideal(), m);
  return eliminate_w(G, cols, m).rank();
}

RankCheck basis_check_by_rank(const MarkedSet<Rational>& G) {
  const auto& J = G.ideal();
  require_strongly_stable(J);
  RankCheck out{true, {}};
  for (int m = J.initial_degree(); m <= syzygy_degree_bound(J); ++m) {
    DegreeRank r{m, degree_rank(G, m), J.dim(m)};
    out.is_basis = out.is_basis && r.rank == r.dim_J;
    out.degrees.push_back(r);
  }
  return out;
}

std::vector<RationalPolynomial> sous_escalier_relations(const MarkedSet<Rational>& G, int m) {
  SplitColumns cols(G.ideal(), m);
  std::vector<RationalPolynomial> out;
  for (const auto& row : eliminate_w(G, cols, m).reduced_rows())
    if (row.front().first >= cols.in_ideal) out.push_back(cols.to_poly(row));
  return out;
}

RationalPolynomial normal_form_by_elimination(const MarkedSet<Rational>& G, const RationalPolynomial& h) {
  RationalPolynomial out;
  for (const auto& [m, part] : homogeneous_parts(h)) {
    SplitColumns cols(G.ideal(), m);
    out += cols.to_poly(eliminate_w(G, cols, m).reduce(to_row(part, cols.index)));
  }
  return out;
}

Syzygy<Rational> monomial_syzygy(const MonomialIdeal& J, const GeneratorPair& pair) {
  Syzygy<Rational> M{pair.degree(), std::vector<RationalPolynomial>(J.basis().size())};
  M.components[pair.first] = RationalPolynomial::monomial(quotient(pair.lcm, J.basis()[pair.first]), 1);
  M.components[pair.second] = RationalPolynomial::monomial(quotient(pair.lcm, J.basis()[pair.second]), -1);
  return M;
}

VerifiedBasis::VerifiedBasis(MarkedSet<Rational> G) : tower_(std::move(G)) {
  if (!buchberger_check(tower_, PairSelection::Minimal).is_basis)
    throw NotABasis("the marked set is not a marked basis");
}

RationalPolynomial VerifiedBasis::normal_form(const RationalPolynomial& h) {
  RationalPolynomial out;
  for (const auto& [m, part] : homogeneous_parts(h)) {
    tower_.extend_to(m);
    out += mb::normal_form(part, tower_).residual;
  }
  return out;
}

bool ideal_membership(const MarkedSet<Rational>& G, const RationalPolynomial& h) {
  VerifiedBasis basis(G);
  return basis.contains(h);
}

}  // namespace mb
