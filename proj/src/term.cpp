#include "markedbases/term.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace mb {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Ring Ring::numbered(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Ring(std::move(names));
}

Term::Term(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Term Term::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> e(nvars, 0);
  e[index] = 1;
  return Term(std::move(e));
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Exponent e : t.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

namespace {

void require_same_ring(const Term& a, const Term& b) {
  if (a.size() != b.size())
    throw RingMismatch("terms over " + std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                       " variables");
}

template <class Op>
Term combine(const Term& a, const Term& b, Op op) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = op(a[i], b[i]);
  return Term(std::move(e));
}

}  // namespace

Term operator*(const Term& a, const Term& b) { return combine(a, b, std::plus<>{}); }

bool divides(const Term& a, const Term& b) {
  require_same_ring(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Term quotient(const Term& b, const Term& a) {
  if (!divides(a, b)) throw std::domain_error("quotient of non-divisible terms");
  return combine(b, a, std::minus<>{});
}

Term lcm(const Term& a, const Term& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

Term gcd(const Term& a, const Term& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

std::size_t min_var(const Term& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] > 0) return i;
  throw std::domain_error("min_var of the term 1");
}

std::size_t max_var(const Term& t) {
  for (std::size_t i = t.size(); i-- > 0;)
    if (t[i] > 0) return i;
  throw std::domain_error("max_var of the term 1");
}

std::strong_ordering cmp_drl(const Term& a, const Term& b) {
  require_same_ring(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_lex(const Term& a, const Term& b) {
  require_same_ring(a, b);
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(TermOrder order, const Term& a, const Term& b) {
  return order == TermOrder::Lex ? cmp_lex(a, b) : cmp_drl(a, b);
}

std::string_view to_string(TermOrder order) { return order == TermOrder::Lex ? "lex" : "drl"; }

std::optional<TermOrder> parse_term_order(std::string_view name) {
  if (name == "drl" || name == "degrevlex") return TermOrder::DegRevLex;
  if (name == "lex") return TermOrder::Lex;
  return std::nullopt;
}

std::vector<Term> terms_of_degree(std::size_t nvars, int degree) {
  std::vector<Term> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> e(nvars, 0);
  // Enumerate compositions of `degree` into nvars parts.
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), DrlGreater{});
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace mb
