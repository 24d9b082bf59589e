#include "markedbases/linalg.hpp"

namespace mb {

namespace {

// row -= factor * pivot_row, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot_row) {
  SparseRow out;
  out.reserve(row.size() + pivot_row.size());
  auto a = row.begin();
  auto b = pivot_row.begin();
  while (a != row.end() || b != pivot_row.end()) {
    if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, Rational(-factor * b->second));
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

SparseRow RowEchelon::reduce(SparseRow row) const {
  std::size_t i = 0;
  while (i < row.size()) {
    auto it = rows_.find(row[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    Rational factor = row[i].second;
    row = axpy(row, factor, it->second);
    // Entries before position i are untouched (pivot rows start at their pivot).
  }
  return row;
}

bool RowEchelon::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Rational lead = row.front().second;
  for (auto& [c, v] : row) v /= lead;
  std::size_t pivot = row.front().first;
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseRow> RowEchelon::reduced_rows() const {
  // Back substitution from the last pivot upwards.
  std::map<std::size_t, SparseRow> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseRow row = it->second;
    std::size_t i = 1;
    while (i < row.size()) {
      auto d = done.find(row[i].first);
      if (d == done.end()) {
        ++i;
        continue;
      }
      Rational factor = row[i].second;
      row = axpy(row, factor, d->second);
    }
    done.emplace(it->first, std::move(row));
  }
  std::vector<SparseRow> out;
  out.reserve(done.size());
  for (auto& [p, r] : done) out.push_back(std::move(r));
  return out;
}

std::size_t rank(const std::vector<SparseRow>& rows) {
  RowEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace mb
