#include "markedbases/groebner.hpp"

#include <set>

namespace mb {

namespace {

using Mono = std::pair<Term, Rational>;
using OPoly = std::vector<Mono>;

// Polynomials stored descending by the engine's term order.
class Engine {
 public:
  explicit Engine(TermOrder order) : order_(order) {}

  bool greater(const Term& a, const Term& b) const { return compare(order_, a, b) > 0; }

  OPoly from(const RationalPolynomial& p) const {
    OPoly v(p.begin(), p.end());
    std::sort(v.begin(), v.end(), [&](const Mono& a, const Mono& b) { return greater(a.first, b.first); });
    return v;
  }

  // a[from..] - c * t * b
  OPoly sub_scaled(const OPoly& a, std::size_t from, const Rational& c, const Term& t, const OPoly& b) const {
    OPoly out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Term bt = b[j].first * t;
      if (i == a.size() || greater(bt, a[i].first)) {
        out.emplace_back(std::move(bt), -c * b[j].second);
        ++j;
      } else if (greater(a[i].first, bt)) {
        out.push_back(a[i++]);
      } else {
        Rational v = a[i].second - c * b[j].second;
        if (v != 0) out.emplace_back(std::move(bt), std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  static void make_monic(OPoly& p) {
    if (p.empty() || p.front().second == 1) return;
    Rational inv = 1 / p.front().second;
    for (auto& m : p) m.second *= inv;
  }

  // Full reduction of p by the polynomials of G flagged live.
  OPoly reduce(OPoly p, const std::vector<OPoly>& G, const std::vector<bool>* live = nullptr,
               std::size_t skip = SIZE_MAX) const {
    OPoly rest;
    std::size_t i = 0;
    while (i < p.size()) {
      const Term& lt = p[i].first;
      const OPoly* div = nullptr;
      for (std::size_t k = 0; k < G.size() && !div; ++k) {
        if (k == skip || (live && !(*live)[k])) continue;
        if (divides(G[k].front().first, lt)) div = &G[k];
      }
      if (!div) {
        rest.push_back(p[i++]);
        continue;
      }
      Rational c = p[i].second / div->front().second;
      p = sub_scaled(p, i, c, quotient(lt, div->front().first), *div);
      i = 0;
    }
    return rest;
  }

  OPoly s_poly(const OPoly& f, const OPoly& g) const {
    Term l = lcm(f.front().first, g.front().first);
    OPoly a = sub_scaled({}, 0, Rational(-1), quotient(l, f.front().first), f);
    return sub_scaled(a, 0, Rational(1), quotient(l, g.front().first), g);
  }

 private:
  TermOrder order_;
};

RationalPolynomial to_poly(const OPoly& p) { return RationalPolynomial::from_terms({p.begin(), p.end()}); }

}  // namespace

GroebnerBasis::GroebnerBasis(const std::vector<RationalPolynomial>& generators, std::size_t nvars, TermOrder order)
    : nvars_(nvars), order_(order) {
  Engine e(order);
  std::vector<OPoly> G;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.terms().front().first.size() != nvars) throw RingMismatch("generator has the wrong number of variables");
    OPoly p = e.from(g);
    Engine::make_monic(p);
    G.push_back(std::move(p));
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& p) {
    return lcm(G[p.first].front().first, G[p.second].front().first);
  };
  auto in_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    auto best = pending.begin();
    Term best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Term l = pair_lcm(*it);
      if (e.greater(best_lcm, l)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    const Term& li = G[i].front().first;
    const Term& lj = G[j].front().first;
    if (gcd(li, lj).is_one()) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = divides(G[k].front().first, best_lcm) && !in_pending(i, k) && !in_pending(j, k);
    }
    if (chain) continue;
    OPoly h = e.reduce(e.s_poly(G[i], G[j]), G);
    if (h.empty()) continue;
    Engine::make_monic(h);
    G.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pending.insert({k, G.size() - 1});
  }

  // Minimalize, then reduce tails.
  std::vector<bool> live(G.size(), true);
  for (std::size_t a = 0; a < G.size(); ++a) {
    for (std::size_t b = 0; b < G.size() && live[a]; ++b) {
      if (a == b || !live[b]) continue;
      if (divides(G[b].front().first, G[a].front().first)) live[a] = false;
    }
  }
  std::vector<OPoly> reduced;
  for (std::size_t a = 0; a < G.size(); ++a) {
    if (!live[a]) continue;
    OPoly tail(G[a].begin() + 1, G[a].end());
    OPoly r = e.reduce(std::move(tail), G, &live, a);
    r.insert(r.begin(), G[a].front());
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OPoly& a, const OPoly& b) { return e.greater(a.front().first, b.front().first); });
  for (const auto& p : reduced) {
    leading_.push_back(p.front().first);
    gens_.push_back(to_poly(p));
  }
}

RationalPolynomial GroebnerBasis::normal_form(const RationalPolynomial& h) const {
  Engine e(order_);
  std::vector<OPoly> G;
  for (const auto& g : gens_) G.push_back(e.from(g));
  return to_poly(e.reduce(e.from(h), G));
}

std::size_t GroebnerBasis::hilbert_function(int m) const {
  std::size_t count = 0;
  for (const auto& t : terms_of_degree(nvars_, m)) {
    bool in = std::any_of(leading_.begin(), leading_.end(), [&](const Term& l) { return divides(l, t); });
    if (!in) ++count;
  }
  return count;
}

bool ideal_equal(const std::vector<RationalPolynomial>& a, const std::vector<RationalPolynomial>& b,
                 std::size_t nvars) {
  GroebnerBasis ga(a, nvars), gb(b, nvars);
  return std::all_of(b.begin(), b.end(), [&](const auto& p) { return ga.contains(p); }) &&
         std::all_of(a.begin(), a.end(), [&](const auto& p) { return gb.contains(p); });
}

std::string to_string(Extraction::Status s) {
  switch (s) {
    case Extraction::Status::Basis:
      return "basis";
    case Extraction::Status::NotStronglyStable:
      return "not-strongly-stable";
    case Extraction::Status::NotHomogeneous:
      return "not-homogeneous";
    case Extraction::Status::NoExpression:
      return "no-expression";
    case Extraction::Status::NotABasis:
      return "not-a-basis";
    case Extraction::Status::DoesNotGenerate:
      return "does-not-generate";
  }
  return "unknown";
}

Extraction marked_basis_from_ideal(const std::vector<RationalPolynomial>& I, const MonomialIdeal& J, bool relaxed) {
  using Status = Extraction::Status;
  Extraction out;
  const Ring& ring = J.ring();
  const std::size_t n = J.nvars();

  std::vector<RationalPolynomial> gens;
  for (const auto& g : I) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      out.status = Status::NotHomogeneous;
      out.message = "generator " + format(g, ring) + " is not homogeneous";
      return out;
    }
    gens.push_back(g);
  }
  const bool stable = J.is_strongly_stable();
  if (!stable && !relaxed) {
    out.status = Status::NotStronglyStable;
    out.message = NotStronglyStable(J).what();
    return out;
  }

  // For each head x^alpha of degree m, the row of the reduced echelon form
  // of I_m whose pivot is x^alpha, when it has no other term in J.
  std::vector<MarkedPolynomial<Rational>> elements;
  std::map<int, std::vector<SparseRow>> echelon;
  for (const auto& head : J.basis()) {
    const int m = head.degree();
    SplitColumns cols(J, m);
    if (!echelon.count(m)) {
      RowEchelon e;
      for (const auto& g : gens) {
        int d = m - g.degree();
        if (d < 0) continue;
        for (const auto& t : terms_of_degree(n, d)) e.insert(to_row(g.times(t), cols.index));
      }
      echelon.emplace(m, e.reduced_rows());
    }
    const std::size_t col = cols.index.at(head);
    const SparseRow* found = nullptr;
    for (const auto& row : echelon.at(m)) {
      if (row.front().first != col) continue;
      bool clean = std::all_of(row.begin() + 1, row.end(), [&](const auto& v) { return v.first >= cols.in_ideal; });
      if (clean) found = &row;
      break;
    }
    if (!found) {
      out.status = Status::NoExpression;
      out.missing_head = head;
      out.message = "no element of I has head " + format_term(head, ring) + " and tail in N(J)";
      return out;
    }
    elements.push_back({head, cols.to_poly(*found)});
  }
  out.marked_set.emplace(J, std::move(elements));
  const auto& G = *out.marked_set;

  if (stable) {
    auto check = buchberger_check(G, PairSelection::Minimal);
    for (auto& r : check.pairs)
      if (!r.residual().is_zero()) out.residuals.push_back(std::move(r));
  }
  out.generates = ideal_equal(G.polys(), gens, n);
  if (relaxed) {
    GroebnerBasis gb(G.polys(), n);
    bool agree = true;
    for (int m = 0; m <= syzygy_degree_bound(J) + 1; ++m) agree = agree && gb.hilbert_function(m) == J.hilbert_function(m);
    out.hilbert_agrees = agree;
  }

  if (!out.residuals.empty()) {
    out.status = Status::NotABasis;
    out.message = "the extracted marked set is not a J-marked basis";
  } else if (!*out.generates) {
    out.status = Status::DoesNotGenerate;
    out.message = "the extracted marked set does not generate I";
  } else if (out.hilbert_agrees && !*out.hilbert_agrees) {
    out.status = Status::NotABasis;
    out.message = "the extracted marked set generates I but its Hilbert function differs from that of J";
  } else {
    out.status = Status::Basis;
    out.message = "I has a J-marked basis";
  }
  return out;
}

}  // namespace mb
