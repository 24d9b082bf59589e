#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mb {

/// Thrown when two objects from different rings (or of different
/// arity) are combined.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of variable names, smallest variable first.
///
/// Position 0 is x_0, the smallest variable; position n is the largest.
/// For K[x,y,z] with x > y > z the ring is declared as `z < y < x`.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Ring with names prefix1..prefixN.
  static Ring numbered(std::string_view prefix, std::size_t count);

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

using Exponent = std::int32_t;

/// A monomial x^alpha stored as its exponent vector, ascending by variable.
class Term {
 public:
  Term() = default;
  /// The term 1 in `nvars` variables.
  explicit Term(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Term(std::vector<Exponent> exps);
  Term(std::initializer_list<Exponent> exps) : Term(std::vector<Exponent>(exps)) {}

  static Term variable(std::size_t nvars, std::size_t index);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  friend bool operator==(const Term& a, const Term& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  int degree_ = 0;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

Term operator*(const Term& a, const Term& b);
bool divides(const Term& a, const Term& b);
/// b / a; throws std::domain_error unless a | b.
Term quotient(const Term& b, const Term& a);
Term lcm(const Term& a, const Term& b);
Term gcd(const Term& a, const Term& b);

/// Index of the smallest / largest variable dividing t; throws for t == 1.
std::size_t min_var(const Term& t);
std::size_t max_var(const Term& t);

/// Degree reverse lexicographic: higher degree wins, ties broken by the
/// first nonzero entry of a - b scanning from x_0, negative meaning a > b.
std::strong_ordering cmp_drl(const Term& a, const Term& b);
/// Lexicographic with x_n > ... > x_0.
std::strong_ordering cmp_lex(const Term& a, const Term& b);

enum class TermOrder { DegRevLex, Lex };

std::strong_ordering compare(TermOrder order, const Term& a, const Term& b);
std::string_view to_string(TermOrder order);
std::optional<TermOrder> parse_term_order(std::string_view name);

/// Strict "a > b" functor, for sorting in descending order.
struct DrlGreater {
  bool operator()(const Term& a, const Term& b) const { return cmp_drl(a, b) > 0; }
};

/// All terms of the given degree in `nvars` variables, descending by drl.
std::vector<Term> terms_of_degree(std::size_t nvars, int degree);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace mb
