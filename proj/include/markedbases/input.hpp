#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "markedbases/marked_set.hpp"

namespace mb {

/// A problem file:
///
///   ring z < y < x
///   J: x^2, x*y, y^2
///   G:
///   x^2 : x^2 - y*z
///   x*y : x*y
///   y^2 : y^2
///   query: x^3
///   I: x^2 - y*z, x*y, y^2
///
/// `#` starts a comment line. `query:` may repeat.
struct InputFile {
  Ring ring;
  std::optional<MonomialIdeal> ideal;
  std::vector<MarkedPolynomial<Rational>> marked;
  bool has_marked = false;
  std::vector<RationalPolynomial> queries;
  std::optional<std::vector<RationalPolynomial>> generators;

  /// The J-marked set of the `G:` section; throws InvalidMarkedSet.
  MarkedSet<Rational> marked_set() const;
};

/// Throws ParseError with the line and column of the first problem.
InputFile parse_input(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace mb
