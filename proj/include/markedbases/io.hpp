#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "markedbases/polynomial.hpp"
#include "markedbases/term.hpp"

namespace mb {

/// Syntax error with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

std::string format_term(const Term& t, const Ring& ring);
std::string format(const RationalPolynomial& p, const Ring& ring);
/// Coefficients are printed over `params`, the monomials over `ring`.
std::string format(const ParametricPolynomial& p, const Ring& ring, const Ring& params);

/// Parses `2/3*x^2*y - y z + 5`. Variables are matched greedily against
/// the ring's names, `*` between factors is optional. `line` is used for
/// error positions only.
RationalPolynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line = 1,
                                    std::size_t column_offset = 0);
/// A single monomial with coefficient 1.
Term parse_term(std::string_view text, const Ring& ring, std::size_t line = 1, std::size_t column_offset = 0);

}  // namespace mb
