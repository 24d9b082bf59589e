#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <thread>

#include "markedbases/input.hpp"
#include "markedbases/marked_scheme.hpp"

namespace mb::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::optional<int> max_degree;
  std::string order = "drl";
  bool json = false;
  std::string pairs = "minimal";
  std::string naming;
  unsigned threads = 0;
  std::size_t minor_limit = 16;
  bool all_minors = false;
  bool relaxed = false;

  TermOrder term_order() const { return *parse_term_order(order); }
  PairSelection selection() const { return pairs == "all" ? PairSelection::All : PairSelection::Minimal; }
  unsigned thread_count() const { return threads ? threads : std::max(1u, std::thread::hardware_concurrency()); }
};

enum Flag : unsigned {
  MaxDegree = 1,
  Order = 2,
  Pairs = 4,
  Naming = 8,
  Threads = 16,
  MinorLimit = 32,
  Relaxed = 64,
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string label(const MonomialIdeal& J, std::size_t g) { return "f[" + format_term(J.basis()[g], J.ring()) + "]"; }

std::string product(const Term& multiplier, const std::string& what, const Ring& ring) {
  return multiplier.is_one() ? what : format_term(multiplier, ring) + " * " + what;
}

std::string pair_label(const MonomialIdeal& J, const GeneratorPair& p) {
  return "S(" + label(J, p.first) + ", " + label(J, p.second) + ")";
}

json pair_json(const MonomialIdeal& J, const GeneratorPair& p) {
  return json::array({format_term(J.basis()[p.first], J.ring()), format_term(J.basis()[p.second], J.ring())});
}

std::string rational_string(const Rational& r) { return r.get_str(); }

json param_poly_json(const ParamPoly& p, const Ring& names) {
  json monomials = json::array();
  for (const auto& [t, c] : p) {
    json exps = json::object();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i]) exps[names.name(i)] = t[i];
    monomials.push_back({{"coefficient", rational_string(c)}, {"exponents", exps}});
  }
  return monomials;
}

struct Loaded {
  InputFile input;
  const MonomialIdeal& ideal() const {
    if (!input.ideal) throw std::invalid_argument("the input has no `J:` section");
    return *input.ideal;
  }
};

Loaded load(const Options& o) { return {parse_input(read_file(o.file))}; }

MarkedSet<Rational> marked_or_monomial(const Loaded& in) {
  return in.input.has_marked ? in.input.marked_set() : monomial_marked_set(in.ideal());
}

GenericMarkedSet generic_set(const Options& o, const MonomialIdeal& J) {
  std::optional<ParameterRing> naming;
  if (!o.naming.empty()) naming = ParameterRing::parse_naming(read_file(o.naming), J);
  return build_generic_set(J, std::move(naming));
}

std::string naming_line(const ParameterRing& params, std::size_t i, const Ring& ring) {
  const auto& p = params[i];
  return params.names().name(i) + (p.sign > 0 ? " + " : " - ") + format_term(p.head, ring) + " " +
         format_term(p.tail, ring);
}

// ---- commands ----

int stable_check(const Options& o, std::ostream& out) {
  auto in = load(o);
  const auto& J = in.ideal();
  auto mv = J.stability_violation();
  const Ring& r = J.ring();
  if (o.json) {
    json j{{"ideal", J.to_string()}, {"strongly_stable", !mv}};
    if (mv)
      j["violation"] = {{"term", format_term(mv->source, r)},
                        {"from", r.name(mv->from)},
                        {"to", r.name(mv->to)},
                        {"target", format_term(mv->target, r)}};
    out << j.dump(2) << "\n";
  } else {
    out << "J = " << J.to_string() << "\n";
    out << "strongly stable: " << (mv ? "no" : "yes") << "\n";
    if (mv)
      out << "violation: " << format_term(mv->source, r) << " -> " << format_term(mv->target, r) << " (" << r.name(mv->from)
          << " replaced by " << r.name(mv->to) << ") is not in J\n";
  }
  return mv ? 1 : 0;
}

int hilbert(const Options& o, std::ostream& out) {
  auto in = load(o);
  const auto& J = in.ideal();
  const int top = o.max_degree.value_or(syzygy_degree_bound(J));
  std::optional<GroebnerBasis> gb;
  if (in.input.has_marked) gb.emplace(in.input.marked_set().polys(), J.nvars());
  json rows = json::array();
  if (!o.json) out << "J = " << J.to_string() << "\n";
  for (int m = 0; m <= top; ++m) {
    std::size_t h = J.hilbert_function(m);
    if (o.json) {
      json row{{"degree", m}, {"J", h}};
      if (gb) row["G"] = gb->hilbert_function(m);
      rows.push_back(row);
    } else {
      out << "H(" << m << ") = " << h;
      if (gb) out << ", (G): " << gb->hilbert_function(m);
      out << "\n";
    }
  }
  if (o.json) out << json{{"ideal", J.to_string()}, {"hilbert", rows}}.dump(2) << "\n";
  return 0;
}

int vm(const Options& o, std::ostream& out) {
  auto in = load(o);
  const auto& J = in.ideal();
  ReductionTower<Rational> tower(marked_or_monomial(in), o.term_order());
  const int top = o.max_degree.value_or(syzygy_degree_bound(J));
  tower.extend_to(top);
  const Ring& r = J.ring();
  json lists = json::array();
  for (int m = J.initial_degree(); m <= top; ++m) {
    const auto& V = tower.at(m);
    json entries = json::array();
    if (!o.json) out << "V_" << m << ":\n";
    for (const auto& e : V.entries()) {
      if (o.json) {
        entries.push_back({{"head", format_term(e.head, r)},
                           {"multiplier", format_term(e.multiplier, r)},
                           {"generator", format_term(J.basis()[e.generator], r)}});
      } else {
        out << "  " << e.position + 1 << "  " << format_term(e.head, r) << " = "
            << product(e.multiplier, label(J, e.generator), r) << "\n";
      }
    }
    if (o.json) lists.push_back({{"degree", m}, {"entries", entries}});
  }
  if (o.json) out << json{{"ideal", J.to_string()}, {"V", lists}}.dump(2) << "\n";
  return 0;
}

int nf(const Options& o, std::ostream& out) {
  auto in = load(o);
  auto G = in.input.marked_set();
  const auto& J = G.ideal();
  const Ring& r = J.ring();
  ReductionTower<Rational> tower(G, o.term_order());
  if (in.input.queries.empty()) throw std::invalid_argument("the input has no `query:` line");
  json results = json::array();
  for (const auto& q : in.input.queries) {
    RationalPolynomial total;
    json parts = json::array();
    if (!o.json) out << "query: " << format(q, r) << "\n";
    for (const auto& [m, part] : homogeneous_parts(q)) {
      tower.extend_to(m);
      auto cert = normal_form(part, tower);
      total += cert.residual;
      json comb = json::array();
      if (!o.json && !cert.combination.empty()) out << "certificate (V_" << m << "):\n";
      for (const auto& c : cert.combination) {
        if (o.json) {
          comb.push_back({{"coefficient", rational_string(c.coefficient)},
                          {"multiplier", format_term(c.multiplier, r)},
                          {"generator", format_term(J.basis()[c.generator], r)}});
        } else {
          out << "  " << rational_string(c.coefficient) << " * " << product(c.multiplier, label(J, c.generator), r)
              << "\n";
        }
      }
      if (o.json) parts.push_back({{"degree", m}, {"residual", format(cert.residual, r)}, {"combination", comb}});
    }
    if (o.json) {
      results.push_back({{"query", format(q, r)}, {"normal_form", format(total, r)}, {"parts", parts}});
    } else {
      out << "nf = " << format(total, r) << "\n";
    }
  }
  if (o.json) out << json{{"results", results}}.dump(2) << "\n";
  return 0;
}

int spoly(const Options& o, std::ostream& out) {
  auto in = load(o);
  auto G = in.input.marked_set();
  const auto& J = G.ideal();
  const Ring& r = J.ring();
  ReductionTower<Rational> tower(G, o.term_order());
  auto check = buchberger_check(tower, o.selection(), o.thread_count());
  json pairs = json::array();
  for (const auto& p : check.pairs) {
    const auto& s = p.s_poly;
    if (o.json) {
      pairs.push_back({{"pair", pair_json(J, p.pair())},
                       {"degree", p.pair().degree()},
                       {"s_polynomial", format(s.poly, r)},
                       {"residual", format(p.residual(), r)}});
    } else {
      out << pair_label(J, p.pair()) << " = " << product(s.first_multiplier, label(J, p.pair().first), r) << " - "
          << product(s.second_multiplier, label(J, p.pair().second), r) << " = " << format(s.poly, r) << "\n";
      out << "  residual: " << format(p.residual(), r) << "\n";
    }
  }
  if (o.json) out << json{{"pairs", pairs}}.dump(2) << "\n";
  return 0;
}

int basis_check(const Options& o, std::ostream& out) {
  auto in = load(o);
  auto G = in.input.marked_set();
  const auto& J = G.ideal();
  const Ring& r = J.ring();
  ReductionTower<Rational> tower(G, o.term_order());
  auto check = buchberger_check(tower, o.selection(), o.thread_count());
  if (o.json) {
    json bad = json::array();
    for (const auto& p : check.pairs)
      if (!p.residual().is_zero()) bad.push_back({{"pair", pair_json(J, p.pair())}, {"residual", format(p.residual(), r)}});
    out << json{{"basis", check.is_basis}, {"pairs", o.pairs}, {"checked", check.pairs.size()}, {"nonzero", bad}}.dump(2)
        << "\n";
  } else {
    out << "J-marked basis: " << (check.is_basis ? "yes" : "no") << "\n";
    out << "pairs checked: " << check.pairs.size() << " (" << o.pairs << ")\n";
    for (const auto& p : check.pairs)
      if (!p.residual().is_zero()) out << "  " << pair_label(J, p.pair()) << " -> " << format(p.residual(), r) << "\n";
  }
  return check.is_basis ? 0 : 1;
}

int lift_syzygy_cmd(const Options& o, std::ostream& out) {
  auto in = load(o);
  auto G = in.input.marked_set();
  const auto& J = G.ideal();
  const Ring& r = J.ring();
  ReductionTower<Rational> tower(G, o.term_order());
  json syz = json::array();
  for (const auto& p : minimal_pairs(J)) {
    Syzygy<Rational> H;
    try {
      H = lift_syzygy(tower, p);
    } catch (const NotABasis& e) {
      throw Failure(pair_label(J, p) + ": " + e.what());
    }
    json comps = json::object();
    if (!o.json) out << "syzygy of (" << format_term(J.basis()[p.first], r) << ", " << format_term(J.basis()[p.second], r)
                     << "), degree " << H.degree << ":\n";
    for (std::size_t i = 0; i < H.components.size(); ++i) {
      if (H.components[i].is_zero()) continue;
      if (o.json) comps[format_term(J.basis()[i], r)] = format(H.components[i], r);
      else out << "  " << label(J, i) << ": " << format(H.components[i], r) << "\n";
    }
    if (o.json) syz.push_back({{"pair", pair_json(J, p)}, {"degree", H.degree}, {"components", comps}});
  }
  if (o.json) out << json{{"syzygies", syz}}.dump(2) << "\n";
  return 0;
}

int member(const Options& o, std::ostream& out) {
  auto in = load(o);
  const Ring& r = in.input.ring;
  if (in.input.queries.empty()) throw std::invalid_argument("the input has no `query:` line");
  std::optional<VerifiedBasis> basis;
  try {
    basis.emplace(in.input.marked_set());
  } catch (const NotABasis& e) {
    throw Failure(e.what());
  }
  bool all = true;
  json results = json::array();
  for (const auto& q : in.input.queries) {
    bool yes = basis->contains(q);
    all = all && yes;
    if (o.json) results.push_back({{"query", format(q, r)}, {"member", yes}});
    else out << format(q, r) << ": " << (yes ? "member" : "not a member") << "\n";
  }
  if (o.json) out << json{{"results", results}}.dump(2) << "\n";
  return all ? 0 : 1;
}

json scheme_json(const GenericMarkedSet& generic, const SchemeIdeal& ideal, const Ring& ring) {
  const auto& J = generic.set.ideal();
  json gens = json::array();
  for (const auto& g : ideal.generators) {
    gens.push_back({{"monomials", param_poly_json(g.poly, generic.params.names())},
                    {"lambda", g.lambda},
                    {"provenance", {{"pair", pair_json(J, g.pair)}, {"monomial", format_term(g.monomial, ring)}}}});
  }
  return gens;
}

int scheme(const Options& o, std::ostream& out) {
  auto in = load(o);
  const auto& J = in.ideal();
  const Ring& r = J.ring();
  auto generic = generic_set(o, J);
  auto ideal = scheme_ideal(generic, o.selection(), o.thread_count());
  bool homogeneous = homogeneity_check(generic.params, ideal);
  if (o.json) {
    json params = json::array();
    for (std::size_t i = 0; i < generic.params.size(); ++i) params.push_back(naming_line(generic.params, i, r));
    out << json{{"parameters", params},
                {"pairs", o.pairs},
                {"lambda_homogeneous", homogeneous},
                {"generators", scheme_json(generic, ideal, r)}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "parameters: " << generic.params.size() << "\n";
  for (std::size_t i = 0; i < generic.params.size(); ++i) out << "  " << naming_line(generic.params, i, r) << "\n";
  out << "generators: " << ideal.generators.size() << " (" << o.pairs << " pairs)\n";
  out << "lambda-homogeneous: " << (homogeneous ? "yes" : "no") << "\n";
  for (const auto& g : ideal.generators) {
    out << "  " << pair_label(J, g.pair) << " at " << format_term(g.monomial, r) << ", lambda (";
    for (std::size_t k = 0; k < g.lambda.size(); ++k) out << (k ? "," : "") << g.lambda[k];
    out << "): " << format(g.poly, generic.params.names()) << "\n";
  }
  return 0;
}

int tangent(const Options& o, std::ostream& out) {
  auto in = load(o);
  const auto& J = in.ideal();
  auto generic = generic_set(o, J);
  auto ideal = scheme_ideal(generic, o.selection(), o.thread_count());
  auto T = tangent_space(generic.params.size(), ideal.polys());
  const Ring& names = generic.params.names();
  if (o.json) {
    json forms = json::array();
    for (const auto& f : T.forms) forms.push_back(format(f, names));
    out << json{{"parameters", T.nparams}, {"rank", T.rank}, {"dimension", T.dimension()}, {"forms", forms}}.dump(2)
        << "\n";
    return 0;
  }
  out << "parameters: " << T.nparams << "\n";
  out << "rank: " << T.rank << "\n";
  out << "dimension " << T.dimension() << "\n";
  out << "linear forms:\n";
  for (const auto& f : T.forms) out << "  " << format(f, names) << "\n";
  return 0;
}

int minors(const Options& o, std::ostream& out) {
  auto in = load(o);
  const auto& J = in.ideal();
  auto generic = generic_set(o, J);
  auto gens = minors_ideal(generic, o.all_minors ? MinorMode::All : MinorMode::Bordered, o.minor_limit);
  const Ring& names = generic.params.names();
  if (o.json) {
    json list = json::array();
    for (const auto& g : gens) list.push_back({{"degree", g.degree}, {"monomials", param_poly_json(g.poly, names)}});
    out << json{{"mode", o.all_minors ? "all" : "bordered"}, {"minors", list}}.dump(2) << "\n";
    return 0;
  }
  out << "minors: " << gens.size() << " (" << (o.all_minors ? "all" : "bordered") << ")\n";
  for (const auto& g : gens) out << "  [m=" << g.degree << "] " << format(g.poly, names) << "\n";
  return 0;
}

int stratum(const Options& o, std::ostream& out) {
  auto in = load(o);
  const auto& J = in.ideal();
  const Ring& r = J.ring();
  auto generic = generic_set(o, J);
  auto ideal = scheme_ideal(generic, o.selection(), o.thread_count());
  auto section = stratum_section(generic.params, ideal.polys(), o.term_order());
  const Ring& names = generic.params.names();
  json segments = json::array();
  std::vector<std::string> seg_lines;
  for (int m = J.initial_degree(); m <= J.max_generator_degree(); ++m) {
    bool seg = is_segment(J, m, o.term_order());
    auto obs = segment_obstruction(J, m);
    json s{{"degree", m}, {"segment", seg}};
    std::string line = "  m=" + std::to_string(m) + ": " + (seg ? "segment" : "not a segment");
    if (obs) {
      s["obstruction"] = {format_term(obs->u, r), format_term(obs->v, r), format_term(obs->w, r)};
      line += " for any order, (" + format_term(obs->u, r) + ")^2 = " + format_term(obs->v, r) + " * " +
              format_term(obs->w, r);
    }
    segments.push_back(s);
    seg_lines.push_back(line);
  }
  if (o.json) {
    json killed = json::array();
    for (auto i : section.killed) killed.push_back(names.name(i));
    json gens = json::array();
    for (const auto& g : section.generators) gens.push_back(param_poly_json(g, names));
    out << json{{"order", o.order}, {"killed", killed}, {"segments", segments}, {"generators", gens}}.dump(2) << "\n";
    return 0;
  }
  out << "order: " << to_string(o.term_order()) << "\n";
  out << "killed parameters: " << section.killed.size() << "\n";
  for (auto i : section.killed) out << "  " << naming_line(generic.params, i, r) << "\n";
  out << "segments:\n";
  for (const auto& l : seg_lines) out << l << "\n";
  out << "generators: " << section.generators.size() << "\n";
  for (const auto& g : section.generators) out << "  " << format(g, names) << "\n";
  return 0;
}

int family_member(const Options& o, std::ostream& out) {
  auto in = load(o);
  const auto& J = in.ideal();
  const Ring& r = J.ring();
  if (!in.input.generators) throw std::invalid_argument("the input has no `I:` section");
  auto ex = marked_basis_from_ideal(*in.input.generators, J, o.relaxed);
  if (ex.status == Extraction::Status::NotStronglyStable) throw NotStronglyStable(J);
  if (o.json) {
    json j{{"member", ex.ok()}, {"status", to_string(ex.status)}, {"message", ex.message}};
    if (ex.marked_set) {
      json w = json::array();
      for (std::size_t g = 0; g < ex.marked_set->size(); ++g)
        w.push_back({{"head", format_term(ex.marked_set->head(g), r)}, {"poly", format(ex.marked_set->poly(g), r)}});
      j["marked_set"] = w;
    }
    if (ex.generates) j["generates"] = *ex.generates;
    if (ex.hilbert_agrees) j["hilbert_agrees"] = *ex.hilbert_agrees;
    json res = json::array();
    for (const auto& p : ex.residuals) res.push_back({{"pair", pair_json(J, p.pair())}, {"residual", format(p.residual(), r)}});
    j["residuals"] = res;
    out << j.dump(2) << "\n";
    return ex.ok() ? 0 : 1;
  }
  out << "I in Mf(J): " << (ex.ok() ? "yes" : "no") << "\n";
  out << ex.message << "\n";
  if (ex.marked_set) {
    out << (ex.ok() ? "marked basis:" : "extracted marked set:") << "\n";
    for (std::size_t g = 0; g < ex.marked_set->size(); ++g)
      out << "  " << format_term(ex.marked_set->head(g), r) << " : " << format(ex.marked_set->poly(g), r) << "\n";
  }
  for (const auto& p : ex.residuals) out << "  " << pair_label(J, p.pair()) << " -> " << format(p.residual(), r) << "\n";
  if (ex.generates) out << "generates I: " << (*ex.generates ? "yes" : "no") << "\n";
  if (ex.hilbert_agrees) out << "Hilbert function of (G) equals that of J: " << (*ex.hilbert_agrees ? "yes" : "no") << "\n";
  return ex.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Marked bases over strongly stable monomial ideals"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    unsigned flags;
    int (*fn)(const Options&, std::ostream&);
  };
  const Command commands[] = {
      {"stable-check", "test strong stability of J", 0, stable_check},
      {"hilbert", "Hilbert function of J, and of (G) when G is given", MaxDegree, hilbert},
      {"vm", "list the reduction lists V_m", MaxDegree | Order, vm},
      {"nf", "normal forms of the queries with certificates", Order, nf},
      {"spoly", "S-polynomials and their residuals", Order | Pairs | Threads, spoly},
      {"basis-check", "decide whether G is a J-marked basis", Order | Pairs | Threads, basis_check},
      {"lift-syzygy", "lift the pair syzygies of J to syzygies of G", Order, lift_syzygy_cmd},
      {"member", "ideal membership of the queries in (G)", 0, member},
      {"scheme", "equations of the marked scheme", Naming | Pairs | Threads, scheme},
      {"tangent", "tangent space of the marked scheme at the origin", Naming | Pairs | Threads, tangent},
      {"minors", "minors of the coefficient matrices A_m", Naming | MinorLimit, minors},
      {"stratum", "section of the marked scheme by a term order", Naming | Order | Pairs | Threads, stratum},
      {"family-member", "decide whether I lies in the marked family of J", Relaxed, family_member},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", o.file, "input file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", o.json, "JSON output");
    if (c.flags & MaxDegree) sub->add_option("--max-degree", o.max_degree, "largest degree")->check(CLI::NonNegativeNumber);
    if (c.flags & Order) sub->add_option("--order", o.order, "term order")->check(CLI::IsMember({"drl", "degrevlex", "lex"}));
    if (c.flags & Pairs) sub->add_option("--pairs", o.pairs, "S-pairs to reduce")->check(CLI::IsMember({"all", "minimal"}));
    if (c.flags & Naming) sub->add_option("--naming", o.naming, "parameter naming map")->check(CLI::ExistingFile);
    if (c.flags & Threads) sub->add_option("--threads", o.threads, "worker threads (0: all cores)");
    if (c.flags & MinorLimit) {
      sub->add_option("--minor-limit", o.minor_limit, "largest minor order")->check(CLI::PositiveNumber);
      sub->add_flag("--all-minors", o.all_minors, "every minor instead of the bordered ones");
    }
    if (c.flags & Relaxed) sub->add_flag("--relaxed", o.relaxed, "accept J that is not strongly stable");
    subs.emplace_back(sub, &c);
  }

  std::vector<std::string> argv_store{"markedbases"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    try {
      return cmd->fn(o, out);
    } catch (const Failure& e) {
      out << e.what() << "\n";
      return 1;
    } catch (const NotStronglyStable& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << o.file << ": " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}

}  // namespace mb::cli
