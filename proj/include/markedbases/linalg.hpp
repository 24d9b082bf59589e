#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "markedbases/polynomial.hpp"

namespace mb {

/// Sparse row: (column, value) pairs, ascending by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental exact Gaussian elimination over the rationals.
///
/// The pivot of a row is its smallest column, so callers control the
/// elimination order through their column numbering.
class RowEchelon {
 public:
  RowEchelon() = default;

  /// Reduces `row` against the stored rows; keeps it if nonzero.
  /// Returns whether the rank grew.
  bool insert(SparseRow row);
  SparseRow reduce(SparseRow row) const;
  bool in_span(const SparseRow& row) const { return reduce(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  std::vector<std::size_t> pivots() const;
  /// Rows of the reduced row echelon form (pivot 1, pivot columns cleared),
  /// ascending by pivot column.
  std::vector<SparseRow> reduced_rows() const;

 private:
  std::map<std::size_t, SparseRow> rows_;  // pivot -> row with leading 1
};

/// Rank of a set of rows.
std::size_t rank(const std::vector<SparseRow>& rows);

/// Coefficient row of a polynomial against an index of its monomials.
template <class TermIndex>
SparseRow to_row(const RationalPolynomial& p, const TermIndex& index) {
  SparseRow row;
  row.reserve(p.size());
  for (const auto& [t, c] : p) row.emplace_back(index.at(t), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

}  // namespace mb
