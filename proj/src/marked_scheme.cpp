#include "markedbases/marked_scheme.hpp"

#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

namespace mb {

ParameterRing::ParameterRing(std::vector<Parameter> params)
    : params_(std::move(params)), names_(Ring::numbered("c", params_.size())) {}

ParameterRing ParameterRing::standard(const MonomialIdeal& J) {
  std::vector<Parameter> params;
  for (std::size_t g = 0; g < J.basis().size(); ++g) {
    const Term& head = J.basis()[g];
    for (auto& tail : J.sous_escalier(head.degree())) params.push_back({g, head, std::move(tail), -1});
  }
  return ParameterRing(std::move(params));
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split_words(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

ParameterRing ParameterRing::parse_naming(std::string_view text, const MonomialIdeal& J) {
  const ParameterRing standard_ring = standard(J);
  const std::size_t N = standard_ring.size();
  std::vector<std::optional<Parameter>> slots(N);
  std::set<std::pair<std::size_t, std::vector<Exponent>>> used;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto words = split_words(line);
    if (words.empty() || words.front().text.front() == '#') continue;
    if (words.size() != 4) throw ParseError("expected `c<index> <sign> <head> <tail>`", line_no, words.front().column);

    const auto& name = words[0];
    std::size_t index = 0;
    bool digits = name.text.size() > 1 && name.text[0] == 'c';
    for (std::size_t k = 1; digits && k < name.text.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(name.text[k]))) digits = false;
      else index = index * 10 + static_cast<std::size_t>(name.text[k] - '0');
    }
    if (!digits || index == 0 || index > N)
      throw ParseError("parameter name must be c1 .. c" + std::to_string(N), line_no, name.column);
    if (slots[index - 1]) throw ParseError("parameter " + std::string(name.text) + " named twice", line_no, name.column);

    int sign = 0;
    if (words[1].text == "+") sign = 1;
    if (words[1].text == "-") sign = -1;
    if (!sign) throw ParseError("sign must be + or -", line_no, words[1].column);

    Term head = parse_term(words[2].text, J.ring(), line_no, words[2].column - 1);
    auto g = J.generator_index(head);
    if (!g) throw ParseError("head is not a minimal generator of J", line_no, words[2].column);
    Term tail = parse_term(words[3].text, J.ring(), line_no, words[3].column - 1);
    if (tail.degree() != head.degree() || J.contains(tail))
      throw ParseError("tail must be a term of N(J) of the head's degree", line_no, words[3].column);
    if (!used.insert({*g, {tail.exponents().begin(), tail.exponents().end()}}).second)
      throw ParseError("head/tail pair named twice", line_no, words[3].column);
    slots[index - 1] = Parameter{*g, std::move(head), std::move(tail), sign};
  }
  std::vector<Parameter> params;
  for (std::size_t i = 0; i < N; ++i) {
    if (!slots[i]) throw ParseError("parameter c" + std::to_string(i + 1) + " is not named", line_no, 1);
    params.push_back(std::move(*slots[i]));
  }
  return ParameterRing(std::move(params));
}

std::optional<std::size_t> ParameterRing::find(std::size_t generator, const Term& tail) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i].generator == generator && params_[i].tail == tail) return i;
  return std::nullopt;
}

GenericMarkedSet build_generic_set(const MonomialIdeal& J, std::optional<ParameterRing> naming) {
  require_strongly_stable(J);
  ParameterRing params = naming ? std::move(*naming) : ParameterRing::standard(J);
  if (params.size() != ParameterRing::standard(J).size())
    throw std::invalid_argument("the naming map does not match J");
  const std::size_t N = params.size();
  std::vector<std::vector<ParametricPolynomial::value_type>> terms(J.basis().size());
  for (std::size_t g = 0; g < J.basis().size(); ++g) terms[g].emplace_back(J.basis()[g], constant(N, 1));
  for (std::size_t i = 0; i < N; ++i) {
    const auto& p = params[i];
    terms[p.generator].emplace_back(p.tail, ParamPoly::monomial(Term::variable(N, i), p.sign));
  }
  std::vector<MarkedPolynomial<ParamPoly>> elements;
  for (std::size_t g = 0; g < terms.size(); ++g)
    elements.push_back({J.basis()[g], ParametricPolynomial::from_terms(std::move(terms[g]))});
  return {std::move(params), MarkedSet<ParamPoly>(J, std::move(elements))};
}

MarkedSet<Rational> specialize(const GenericMarkedSet& generic, std::span<const Rational> point) {
  if (point.size() != generic.params.size()) throw RingMismatch("parameter point has wrong dimension");
  std::vector<MarkedPolynomial<Rational>> elements;
  for (std::size_t g = 0; g < generic.set.size(); ++g)
    elements.push_back({generic.set.head(g), specialize(generic.set.poly(g), point)});
  return MarkedSet<Rational>(generic.set.ideal(), std::move(elements));
}

LambdaDegree lambda_degree(const ParameterRing& params, const Term& monomial) {
  const std::size_t n = params.size() ? params[0].head.size() : 0;
  LambdaDegree out(n, 0);
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    if (!monomial[i]) continue;
    const auto& p = params[i];
    for (std::size_t k = 0; k < n; ++k) out[k] += monomial[i] * (p.head[k] - p.tail[k]);
  }
  return out;
}

std::vector<ParamPoly> SchemeIdeal::polys() const {
  std::vector<ParamPoly> out;
  for (const auto& g : generators) out.push_back(g.poly);
  return out;
}

SchemeIdeal scheme_ideal(const GenericMarkedSet& generic, PairSelection selection, unsigned threads) {
  ReductionTower<ParamPoly> tower(generic.set);
  auto check = buchberger_check(tower, selection, threads);
  SchemeIdeal out;
  out.nparams = generic.params.size();
  for (const auto& r : check.pairs) {
    for (const auto& [t, c] : r.residual()) {
      LambdaDegree lambda = lambda_degree(generic.params, c.terms().front().first);
      out.generators.push_back({c, std::move(lambda), r.pair(), t});
    }
  }
  return out;
}

bool is_lambda_homogeneous(const ParameterRing& params, const ParamPoly& p) {
  if (p.is_zero()) return true;
  LambdaDegree first = lambda_degree(params, p.terms().front().first);
  return std::all_of(p.begin(), p.end(), [&](const auto& v) { return lambda_degree(params, v.first) == first; });
}

bool homogeneity_check(const ParameterRing& params, const SchemeIdeal& ideal) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [&](const SchemeGenerator& g) { return is_lambda_homogeneous(params, g.poly); });
}

namespace {

SparseRow linear_row(const ParamPoly& p, bool strict) {
  SparseRow row;
  for (const auto& [t, c] : p) {
    if (t.degree() != 1) {
      if (strict) throw std::invalid_argument("not a linear form");
      continue;
    }
    row.emplace_back(max_var(t), c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

}  // namespace

bool TangentSpace::contains(const ParamPoly& linear) const { return echelon.in_span(linear_row(linear, true)); }

TangentSpace tangent_space(std::size_t nparams, const std::vector<ParamPoly>& polys) {
  TangentSpace out;
  out.nparams = nparams;
  for (const auto& p : polys) out.echelon.insert(linear_row(p, false));
  out.rank = out.echelon.rank();
  for (const auto& row : out.echelon.reduced_rows()) {
    std::vector<ParamPoly::value_type> terms;
    for (const auto& [c, v] : row) terms.emplace_back(Term::variable(nparams, c), v);
    out.forms.push_back(ParamPoly::from_terms(std::move(terms)));
  }
  return out;
}

CoefficientMatrix matrix_A(const MarkedSet<ParamPoly>& G, int m) {
  CoefficientMatrix A;
  A.degree = m;
  A.columns = terms_of_degree(G.ideal().nvars(), m);
  std::unordered_map<Term, std::size_t, TermHash> index;
  for (std::size_t i = 0; i < A.columns.size(); ++i) index.emplace(A.columns[i], i);
  for (auto& [w, p] : w_elements(G, m)) {
    std::vector<ParamPoly> row(A.columns.size());
    for (const auto& [t, c] : p) row[index.at(t)] = c;
    A.rows.push_back(std::move(w));
    A.entries.push_back(std::move(row));
  }
  return A;
}

ParamPoly determinant(const std::vector<std::vector<ParamPoly>>& matrix, std::size_t nparams) {
  const std::size_t k = matrix.size();
  if (k > 63) throw SizeLimitExceeded("determinant order exceeds 63");
  std::unordered_map<std::uint64_t, ParamPoly> memo;
  auto rec = [&](auto&& self, std::uint64_t used) -> ParamPoly {
    const std::size_t r = static_cast<std::size_t>(std::popcount(used));
    if (r == k) return constant(nparams, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    ParamPoly sum;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (used >> c & 1) continue;
      if (!matrix[r][c].is_zero()) {
        ParamPoly sub = self(self, used | (std::uint64_t{1} << c));
        if (!sub.is_zero()) {
          auto term = matrix[r][c] * sub;
          if (sign > 0) sum += term;
          else sum -= term;
        }
      }
      sign = -sign;
    }
    memo.emplace(used, sum);
    return sum;
  };
  return rec(rec, 0);
}

std::vector<MinorGenerator> minors_ideal(const GenericMarkedSet& generic, MinorMode mode, std::size_t max_order,
                                         std::size_t max_count) {
  const auto& G = generic.set;
  const auto& J = G.ideal();
  const std::size_t N = generic.params.size();
  ReductionTower<ParamPoly> tower(G);
  std::vector<MinorGenerator> out;
  for (int m = J.initial_degree(); m <= syzygy_degree_bound(J); ++m) {
    const std::size_t a = J.dim(m);
    if (a + 1 > max_order)
      throw SizeLimitExceeded("minors of order " + std::to_string(a + 1) + " exceed the limit " +
                              std::to_string(max_order));
    CoefficientMatrix A = matrix_A(G, m);
    if (A.rows.size() < a + 1) continue;
    std::unordered_map<Term, std::size_t, TermHash> col;
    for (std::size_t i = 0; i < A.columns.size(); ++i) col.emplace(A.columns[i], i);

    auto emit = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
      std::vector<std::vector<ParamPoly>> sub(rows.size(), std::vector<ParamPoly>(cols.size()));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = A.entries[rows[i]][cols[j]];
      ParamPoly d = determinant(sub, N);
      if (!d.is_zero()) out.push_back({std::move(d), m, rows, cols});
    };

    if (mode == MinorMode::Bordered) {
      tower.extend_to(m);
      std::vector<std::size_t> v_rows;
      std::vector<bool> in_v(A.rows.size(), false);
      for (const auto& e : tower.at(m).entries()) {
        for (std::size_t i = 0; i < A.rows.size(); ++i) {
          if (A.rows[i].generator == e.generator && A.rows[i].multiplier == e.multiplier) {
            v_rows.push_back(i);
            in_v[i] = true;
            break;
          }
        }
      }
      std::vector<std::size_t> j_cols;
      for (const auto& t : J.terms_of_degree(m)) j_cols.push_back(col.at(t));
      for (std::size_t extra = 0; extra < A.rows.size(); ++extra) {
        if (in_v[extra]) continue;
        for (const auto& t : J.sous_escalier(m)) {
          auto rows = v_rows;
          rows.push_back(extra);
          auto cols = j_cols;
          cols.push_back(col.at(t));
          emit(rows, cols);
        }
      }
    } else {
      const std::size_t k = a + 1;
      if (A.columns.size() < k) continue;
      if (binomial(A.rows.size(), k) * binomial(A.columns.size(), k) > max_count)
        throw SizeLimitExceeded("too many minors in degree " + std::to_string(m));
      auto subsets = [](std::size_t n, std::size_t r) {
        std::vector<std::vector<std::size_t>> all;
        std::vector<std::size_t> cur(r);
        for (std::size_t i = 0; i < r; ++i) cur[i] = i;
        while (true) {
          all.push_back(cur);
          std::size_t i = r;
          while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
          if (i == 0) break;
          ++cur[i - 1];
          for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
        }
        return all;
      };
      for (const auto& rows : subsets(A.rows.size(), k))
        for (const auto& cols : subsets(A.columns.size(), k)) emit(rows, cols);
    }
  }
  return out;
}

StratumSection stratum_section(const ParameterRing& params, const std::vector<ParamPoly>& ideal, TermOrder order) {
  StratumSection out;
  for (std::size_t i = 0; i < params.size(); ++i)
    if (compare(order, params[i].head, params[i].tail) < 0) out.killed.push_back(i);
  for (const auto& p : ideal) {
    auto q = kill_variables(p, out.killed);
    if (!q.is_zero()) out.generators.push_back(std::move(q));
  }
  return out;
}

bool is_segment(const MonomialIdeal& J, int m, TermOrder order) {
  auto in = J.terms_of_degree(m);
  auto out = J.sous_escalier(m);
  for (const auto& u : in)
    for (const auto& v : out)
      if (compare(order, u, v) < 0) return false;
  return true;
}

std::optional<SegmentObstruction> segment_obstruction(const MonomialIdeal& J, int m) {
  auto out = J.sous_escalier(m);
  for (const auto& u : J.terms_of_degree(m)) {
    Term sq = u * u;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i; j < out.size(); ++j)
        if (out[i] * out[j] == sq) return SegmentObstruction{u, out[i], out[j]};
  }
  return std::nullopt;
}

}  // namespace mb
