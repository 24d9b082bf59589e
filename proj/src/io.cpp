#include "markedbases/io.hpp"

#include <cctype>
#include <sstream>

namespace mb {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string format_term(const Term& t, const Ring& ring) {
  if (t.size() != ring.size()) throw RingMismatch("term does not belong to ring");
  if (t.is_one()) return "1";
  std::string out;
  // Largest variable first, so x^2*y*z rather than z*y*x^2.
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (t[i] > 1) out += '^' + std::to_string(t[i]);
  }
  return out;
}

namespace {

template <class Coeff, class FormatCoeff>
std::string format_impl(const Polynomial<Coeff>& p, const Ring& ring, FormatCoeff&& coeff_text) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : p) {
    auto [negative, body] = coeff_text(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.is_one()) {
      out += body.empty() ? "1" : body;
    } else {
      if (!body.empty()) out += body + '*';
      out += format_term(t, ring);
    }
  }
  return out;
}

}  // namespace

std::string format(const RationalPolynomial& p, const Ring& ring) {
  return format_impl(p, ring, [](const Rational& c) {
    Rational a = abs(c);
    return std::pair<bool, std::string>(sgn(c) < 0, a == 1 ? std::string() : a.get_str());
  });
}

std::string format(const ParametricPolynomial& p, const Ring& ring, const Ring& params) {
  return format_impl(p, ring, [&](const ParamPoly& c) {
    if (c.size() == 1) {
      const auto& [t, r] = c.terms().front();
      Rational a = abs(r);
      std::string body;
      if (t.is_one()) {
        body = a == 1 ? std::string() : a.get_str();
      } else {
        body = (a == 1 ? std::string() : a.get_str() + "*") + format_term(t, params);
      }
      return std::pair<bool, std::string>(sgn(r) < 0, body);
    }
    return std::pair<bool, std::string>(false, "(" + format(c, params) + ")");
  });
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {}

  RationalPolynomial polynomial() {
    std::vector<RationalPolynomial::value_type> terms;
    skip_ws();
    if (at_end()) fail("expected a polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [t, c] = monomial();
      if (sign < 0) c = -c;
      terms.emplace_back(std::move(t), std::move(c));
      skip_ws();
    }
    return RationalPolynomial::from_terms(std::move(terms));
  }

  Term single_term() {
    skip_ws();
    auto [t, c] = monomial();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    if (c != 1) fail("expected a monomial with coefficient 1");
    return t;
  }

 private:
  std::pair<Term, Rational> monomial() {
    std::vector<Exponent> e(ring_.size(), 0);
    Rational coeff = 1;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char ch = peek();
      if (ch == '*') {
        if (!any) fail("unexpected '*'");
        ++pos_;
        skip_ws();
        if (at_end()) fail("expected a factor after '*'");
        ch = peek();
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t v = variable();
        Exponent k = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          k = static_cast<Exponent>(integer());
        }
        e[v] += k;
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("expected a coefficient or variable");
    return {Term(std::move(e)), coeff};
  }

  Rational number() {
    mpz_class num(digits());
    mpz_class den = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      den = mpz_class(digits());
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  long integer() {
    std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    return std::stol(d);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t variable() {
    std::size_t best_len = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      const std::string& n = ring_.name(i);
      if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
        best_len = n.size();
        best = i;
      }
    }
    if (best_len == 0) fail("unknown variable");
    pos_ += best_len;
    return best;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, offset_ + pos_ + 1); }

  std::string_view text_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line,
                                    std::size_t column_offset) {
  return Parser(text, ring, line, column_offset).polynomial();
}

Term parse_term(std::string_view text, const Ring& ring, std::size_t line, std::size_t column_offset) {
  return Parser(text, ring, line, column_offset).single_term();
}

}  // namespace mb
