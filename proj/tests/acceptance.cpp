// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "markedbases/marked_scheme.hpp"
#include "support.hpp"

using namespace mbtest;

namespace {

constexpr double kAppendixCheckSeconds = 5.0;
constexpr double kAppendixSchemeSeconds = 600.0;
constexpr double kSmallIdentitiesSeconds = 60.0;
constexpr std::size_t kCorpusSize = 100;
constexpr std::size_t kMembershipSamples = 50;
constexpr std::size_t kPropertyCases = 500;

std::string data(const std::string& name) { return std::string(MB_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = mb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

/// Collects failed checks of one criterion.
struct Report {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::size_t> point_indices(const GenericMarkedSet& g, const MonomialIdeal& J, const Ring& r) {
  std::size_t f = *J.generator_index(T(r, "x*y^2*z"));
  return {*g.params.find(f, T(r, "x^2*z^2")), *g.params.find(f, T(r, "y^4"))};
}

// ---- criteria ----

void criterion1(Report& rep) {
  auto t0 = std::chrono::steady_clock::now();
  auto G = appendix_set();
  auto check = buchberger_check(G);
  rep.check(check.is_basis, "library basis check");
  rep.check(check.pairs.size() == minimal_pairs(G.ideal()).size(), "minimal pairs reduced");
  for (const auto& p : check.pairs) rep.check(p.residual().is_zero(), "nonzero residual");

  auto cli = run_cli({"basis-check", data("appendix_basis.txt")});
  rep.check(cli.code == 0 && has(cli.out, "J-marked basis: yes"), "CLI basis-check");

  ReductionTower<Rational> tower(G);
  tower.extend_to(7);
  const auto* e = tower.at(7).find(T(G.ring(), "x^2*y^2*z^3"));
  rep.check(e && e->multiplier == T(G.ring(), "z^3") && G.head(e->generator) == T(G.ring(), "x^2*y^2"),
            "V_7 provenance z^3 f[x^2*y^2]");
  auto cert = normal_form(P(G.ring(), "x^2*y^2*z^3"), tower);
  rep.check(cert.residual.is_zero(), "nf(x^2*y^2*z^3) = 0");
  auto nf = run_cli({"nf", data("appendix_basis.txt")});
  rep.check(nf.code == 0 && has(nf.out, "1 * z^3 * f[x^2*y^2]") && has(nf.out, "nf = 0"), "CLI nf certificate");

  double s = seconds_since(t0);
  rep.check(s < kAppendixCheckSeconds, "runtime limit");
  rep.note(std::to_string(check.pairs.size()) + " pairs, " + std::to_string(s) + " s");
}

void criterion2(Report& rep) {
  for (const char* cmd : {"vm", "nf", "spoly", "basis-check", "lift-syzygy", "member", "scheme", "tangent", "minors",
                          "stratum", "family-member"}) {
    auto r = run_cli({cmd, data("not_stable.txt")});
    rep.check(r.code == 2 && has(r.err, "not Noetherian") && has(r.err, "x*y -> x^2") && r.out.empty(),
              std::string("CLI ") + cmd);
  }
  auto G = marked(ideal(xyz(), {"x*y", "z^2"}), {"x*y + y*z", "z^2 + x*z"});
  auto refused = [&](const std::function<void()>& f) {
    try {
      f();
    } catch (const NotStronglyStable&) {
      return true;
    }
    return false;
  };
  rep.check(refused([&] { ReductionTower<Rational> t(G); }), "ReductionTower");
  rep.check(refused([&] { buchberger_check(G); }), "buchberger_check");
  rep.check(refused([&] { basis_check_by_rank(G); }), "basis_check_by_rank");
  rep.check(refused([&] { VerifiedBasis b(G); }), "VerifiedBasis");
  rep.check(refused([&] { ideal_membership(G, P(G.ring(), "x*y*z")); }), "ideal_membership");
  rep.check(refused([&] { minimal_pairs(G.ideal()); }), "minimal_pairs");
  rep.check(refused([&] { build_generic_set(G.ideal()); }), "build_generic_set");
  rep.note("11 CLI commands and 7 library entry points refused");
}

void criterion3(Report& rep) {
  Ring r = xyz();
  auto J = ideal(r, {"x^2", "x*y", "x*z", "y^2"});
  std::vector<std::pair<std::string, std::string>> got, want{
                                                          {"x*y", "x*z"}, {"x*y", "y^2"}, {"x^2", "x*y"},
                                                          {"x^2", "x*z"}, {"x^2", "y^2"}};
  for (const auto& p : minimal_pairs(J)) got.push_back({format_term(J.basis()[p.first], r), format_term(J.basis()[p.second], r)});
  for (auto& [a, b] : got)
    if (a > b) std::swap(a, b);
  for (auto& [a, b] : want)
    if (a > b) std::swap(a, b);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  rep.check(got == want, "five pairs for (x^2, xy, xz, y^2)");

  std::size_t bases = 0;
  for (const auto& c : random_corpus(2024, kCorpusSize)) {
    bool all = buchberger_check(c.set, PairSelection::All).is_basis;
    bool minimal = buchberger_check(c.set, PairSelection::Minimal).is_basis;
    rep.check(all == minimal, "all vs minimal on " + c.set.ideal().to_string());
    bases += minimal;
  }
  rep.note(std::to_string(kCorpusSize) + " marked sets, " + std::to_string(bases) + " bases");
}

void criterion4(Report& rep) {
  Rng rng(4242);
  std::size_t verified = 0, queries = 0, members = 0;
  for (const auto& c : random_corpus(2024, kCorpusSize)) {
    bool b = buchberger_check(c.set).is_basis;
    rep.check(b == basis_check_by_rank(c.set).is_basis, "rank oracle on " + c.set.ideal().to_string());
    if (!b) continue;
    ++verified;
    const auto& J = c.set.ideal();
    VerifiedBasis B(c.set);
    GroebnerBasis gb(c.set.polys(), J.nvars());
    int top = syzygy_degree_bound(J) + 2;
    for (std::size_t k = 0; k < kMembershipSamples; ++k) {
      int m = std::uniform_int_distribution<int>(0, top)(rng);
      // Alternate arbitrary polynomials with elements of (G) plus noise.
      RationalPolynomial h = random_homogeneous(rng, J.nvars(), m);
      if (k % 2 == 0) h = random_member(rng, c.set, m) + (k % 4 == 0 ? RationalPolynomial() : h);
      bool mine = B.contains(h);
      rep.check(mine == gb.contains(h), "membership of " + format(h, c.set.ring()));
      ++queries;
      members += mine;
    }
  }
  rep.note(std::to_string(verified) + " verified bases, " + std::to_string(queries) + " queries, " +
           std::to_string(members) + " members");
}

void criterion5(Report& rep) {
  auto t0 = std::chrono::steady_clock::now();
  auto J = appendix_ideal();
  auto g = build_generic_set(J, ParameterRing::parse_naming(slurp(data("appendix_naming.txt")), J));
  const std::size_t N = g.params.size();
  rep.check(N == 64, "64 parameters");
  auto R = scheme_ideal(g);
  rep.check(homogeneity_check(g.params, R), "(a) lambda-homogeneous");
  auto tan = tangent_space(N, R.polys());
  rep.check(tan.rank == 48 && tan.dimension() == 16, "(b) tangent dimension 16, rank 48");
  auto c = [&](std::size_t i) { return ParamPoly::monomial(Term::variable(N, i - 1), 1); };
  rep.check(tan.contains(c(28) - c(54)), "(c) c28 - c54 in span");
  rep.check(tan.contains(c(26) - c(52)), "(c) c26 - c52 in span");
  rep.check(!tan.contains(c(28)), "(c) c28 not in span");
  rep.check(!tan.contains(c(26)), "(c) c26 not in span");
  auto idx = point_indices(g, J, J.ring());
  rep.check(idx == std::vector<std::size_t>{48, 49}, "naming map puts the point at c49, c50");
  std::vector<Rational> pt(N, 0);
  pt[48] = -1;
  pt[49] = -1;
  bool zeros = true;
  for (const auto& p : R.polys()) zeros = zeros && evaluate(p, pt) == 0;
  rep.check(zeros, "(d) generators vanish at c49 = c50 = -1");
  rep.check(specialize(g, pt).polys() == appendix_set().polys(), "(d) point specializes to the appendix set");
  double s = seconds_since(t0);
  rep.check(s < kAppendixSchemeSeconds, "runtime limit");
  rep.note(std::to_string(R.generators.size()) + " generators, " + std::to_string(s) + " s");
}

void criterion6(Report& rep) {
  auto t0 = std::chrono::steady_clock::now();
  auto J = ideal(xyz(), {"x^2", "x*y", "y^2"});
  auto g = build_generic_set(J);
  const std::size_t N = g.params.size();
  auto minimal = scheme_ideal(g, PairSelection::Minimal).polys();
  auto all = scheme_ideal(g, PairSelection::All).polys();
  std::vector<ParamPoly> minors;
  for (const auto& m : minors_ideal(g)) minors.push_back(m.poly);
  rep.check(ideal_equal(minimal, all, N), "minimal-pair ideal = all-pair ideal");
  rep.check(ideal_equal(minimal, minors, N), "minimal-pair ideal = minors ideal");
  double s = seconds_since(t0);
  rep.check(s < kSmallIdentitiesSeconds, "runtime limit");
  rep.note(std::to_string(minimal.size()) + " / " + std::to_string(all.size()) + " / " + std::to_string(minors.size()) +
           " generators, " + std::to_string(s) + " s");
}

void criterion7(Report& rep) {
  Rng rng(777);
  // Normal forms: residual support and certificate identity.
  std::size_t reductions = 0;
  auto corpus = random_corpus(7070, kPropertyCases);
  for (const auto& c : corpus) {
    const auto& J = c.set.ideal();
    ReductionTower<Rational> tower(c.set);
    int m = std::uniform_int_distribution<int>(J.initial_degree(), J.max_generator_degree() + 2)(rng);
    tower.extend_to(m);
    auto h = random_homogeneous(rng, J.nvars(), m);
    auto cert = normal_form(h, tower);
    bool support = std::none_of(cert.residual.begin(), cert.residual.end(),
                                [&](const auto& v) { return J.contains(v.first); });
    rep.check(support, "residual support");
    rep.check(recombine(c.set, cert) == h, "certificate identity");
    ++reductions;
  }

  // Term order laws.
  for (std::size_t k = 0; k < kPropertyCases; ++k) {
    auto d = std::uniform_int_distribution<int>(0, 5);
    Term a = random_term(rng, 3, d(rng)), b = random_term(rng, 3, d(rng)), c = random_term(rng, 3, d(rng));
    bool ok = (cmp_drl(a, b) == 0) == (a == b) && (cmp_drl(a, b) > 0) == (cmp_drl(b, a) < 0);
    if (cmp_drl(a, b) > 0 && cmp_drl(b, c) > 0) ok = ok && cmp_drl(a, c) > 0;
    if (cmp_drl(a, b) > 0) ok = ok && cmp_drl(a * c, b * c) > 0;
    rep.check(ok, "drl laws");
  }

  // V_m entries against their head class in W_m, m <= alpha_J + 3.
  std::size_t heads = 0, not_minimum = 0, cases_with_violation = 0;
  std::string example;
  for (std::size_t k = 0; k < kPropertyCases; ++k) {
    auto J = random_strongly_stable(rng, std::uniform_int_distribution<std::size_t>(2, 3)(rng), 4);
    auto G = monomial_marked_set(J);
    ReductionTower<Rational> tower(G);
    int top = J.initial_degree() + 3;
    tower.extend_to(top);
    bool violated = false;
    for (int m = J.initial_degree(); m <= top; ++m) {
      for (const auto& e : tower.at(m).entries()) {
        ++heads;
        for (std::size_t g = 0; g < G.size(); ++g) {
          if (g == e.generator || !divides(G.head(g), e.head)) continue;
          WElement other{quotient(e.head, G.head(g)), g};
          if (cmp_Wm(G, e.w_element(), other) > 0) {
            ++not_minimum;
            violated = true;
            if (example.empty())
              example = J.to_string() + ", head " + format_term(e.head, J.ring()) + ": " +
                        format_term(e.multiplier, J.ring()) + " f[" + format_term(G.head(e.generator), J.ring()) +
                        "] exceeds " + format_term(other.multiplier, J.ring()) + " f[" +
                        format_term(G.head(g), J.ring()) + "]";
          }
        }
      }
    }
    cases_with_violation += violated;
  }
  rep.check(not_minimum == 0, "V_m entry is the W_m minimum of its head class (" + std::to_string(not_minimum) +
                                  " exceptions in " + std::to_string(cases_with_violation) + " ideals; e.g. " +
                                  example + ")");

  // Syzygy lifting.
  std::size_t lifts = 0;
  for (std::size_t k = 0; k < kPropertyCases; ++k) {
    auto J = random_strongly_stable(rng, std::uniform_int_distribution<std::size_t>(2, 3)(rng), 4);
    auto G = random_true_basis(rng, J);
    ReductionTower<Rational> tower(G);
    for (const auto& p : minimal_pairs(J)) {
      auto H = lift_syzygy(tower, p);
      rep.check(evaluate_syzygy(G, H).is_zero(), "lifted syzygy sums to zero");
      rep.check(syzygy_head(G, H).plus.components == monomial_syzygy(J, p).components, "H+ equals the input");
      ++lifts;
    }
  }

  // Sous-escalier partition.
  for (std::size_t k = 0; k < kPropertyCases; ++k) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
    auto J = random_strongly_stable(rng, n, 4);
    for (int m = 0; m <= J.max_generator_degree() + 2; ++m)
      rep.check(J.dim(m) + J.hilbert_function(m) == binomial(static_cast<std::size_t>(m) + n - 1, n - 1),
                "partition count");
  }
  rep.note(std::to_string(reductions) + " reductions, " + std::to_string(heads) + " V_m entries, " +
           std::to_string(lifts) + " lifted syzygies, " + std::to_string(kPropertyCases) + " cases per property");
}

void criterion8(Report& rep) {
  auto J = ideal(xyz(), {"x*y", "z^2"});
  std::vector<std::size_t> h;
  for (int m = 0; m <= 4; ++m) h.push_back(J.hilbert_function(m));
  rep.check(h == std::vector<std::size_t>{1, 3, 4, 4, 4}, "H(xy, z^2) = 1,3,4,4,4");
  std::size_t verified = 0;
  std::vector<MarkedSet<Rational>> sets{appendix_set()};
  for (const auto& c : random_corpus(2024, kCorpusSize)) sets.push_back(c.set);
  for (const auto& G : sets) {
    if (!buchberger_check(G).is_basis) continue;
    ++verified;
    GroebnerBasis gb(G.polys(), G.ideal().nvars());
    for (int m = 0; m <= syzygy_degree_bound(G.ideal()); ++m)
      rep.check(gb.hilbert_function(m) == G.ideal().hilbert_function(m), "Hilbert function of (G)");
  }
  rep.note(std::to_string(verified) + " verified bases");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    void (*fn)(Report&);
  };
  const Criterion criteria[] = {
      {1, "appendix marked basis and V_7 normal form", criterion1},
      {2, "strong-stability gate", criterion2},
      {3, "minimal pair pruning", criterion3},
      {4, "oracle equivalence", criterion4},
      {5, "appendix marked scheme", criterion5},
      {6, "small-scale ideal identities", criterion6},
      {7, "property suite", criterion7},
      {8, "Hilbert data", criterion8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Report rep;
    try {
      c.fn(rep);
    } catch (const std::exception& e) {
      rep.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = rep.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title;
    for (const auto& n : rep.notes) std::cout << " (" << n << ")";
    std::cout << "\n";
    // Distinct failure messages, in first-seen order.
    std::vector<std::string> seen;
    for (const auto& f : rep.failures) {
      if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
      seen.push_back(f);
      if (seen.size() <= 5) std::cout << "       failed: " << f << "\n";
    }
    if (seen.size() > 5) std::cout << "       ... " << seen.size() - 5 << " more\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
