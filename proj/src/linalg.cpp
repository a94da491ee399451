#include "svir/linalg.hpp"

namespace svir::linalg {
namespace {

// row -= factor * pivot, dropping cancelled entries.
void subtract_scaled(SparseRow& row, const SparseRow& pivot, const Rational& factor) {
  for (const auto& [c, x] : pivot) {
    auto [it, inserted] = row.try_emplace(c, -(factor * x));
    if (!inserted) {
      it->second -= factor * x;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

Echelon reduce(std::vector<SparseRow> rows, std::size_t column_count) {
  std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });
  for (const auto& r : rows)
    if (!r.empty() && r.rbegin()->first >= column_count)
      throw std::out_of_range("entry outside column range");

  Echelon out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < column_count && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].contains(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);

    const Rational lead = rows[next].at(col);
    if (lead != Rational(1))
      for (auto& [c, x] : rows[next]) x /= lead;

    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      const Rational factor = it->second;
      subtract_scaled(rows[i], rows[next], factor);
    }
    out.pivot_columns.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t column_count) {
  return reduce(rows, column_count).pivot_columns.size();
}

std::vector<DenseVector> kernel_basis(const std::vector<SparseRow>& rows, std::size_t column_count) {
  const Echelon ech = reduce(rows, column_count);

  std::vector<bool> is_pivot(column_count, false);
  for (std::size_t p : ech.pivot_columns) is_pivot[p] = true;

  std::vector<SparseRow> raw;
  for (std::size_t f = 0; f < column_count; ++f) {
    if (is_pivot[f]) continue;
    SparseRow v;
    v.emplace(f, Rational(1));
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
      auto it = ech.rows[i].find(f);
      if (it != ech.rows[i].end()) v.emplace(ech.pivot_columns[i], -it->second);
    }
    raw.push_back(std::move(v));
  }

  // Re-reduce so the basis is the unique echelon form of the subspace.
  const Echelon canon = reduce(std::move(raw), column_count);
  std::vector<DenseVector> out;
  out.reserve(canon.rows.size());
  for (const auto& r : canon.rows) {
    DenseVector v(column_count);
    for (const auto& [c, x] : r) v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace svir::linalg
