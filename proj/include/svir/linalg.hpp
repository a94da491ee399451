#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "svir/rational.hpp"

namespace svir::linalg {

/// Sparse row keyed by column position; never stores zeros.
using SparseRow = std::map<std::size_t, Rational>;
using DenseVector = std::vector<Rational>;

/// Result of Gauss-Jordan elimination: the nonzero rows of the reduced row
/// echelon form, with pivot_columns[i] the leading column of rows[i].
struct Echelon {
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form over the given column count. Pivots are chosen
/// as the first remaining row (in input order) with a nonzero entry.
Echelon reduce(std::vector<SparseRow> rows, std::size_t column_count);

/// Canonical nullspace basis of the positional matrix: the reduced row
/// echelon form of {v : rows * v = 0}, one dense vector per basis element.
std::vector<DenseVector> kernel_basis(const std::vector<SparseRow>& rows, std::size_t column_count);

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t column_count);

/// Sparse matrix whose rows and columns are identified by labels rather than
/// positions. Rows are appended on first use, so a caller can discover them
/// while expanding data; columns are fixed at construction.
template <class RowLabel, class ColLabel>
class LabeledMatrix {
 public:
  LabeledMatrix() = default;

  explicit LabeledMatrix(std::vector<ColLabel> col_labels) : col_labels_(std::move(col_labels)) {
    for (std::size_t i = 0; i < col_labels_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (col_labels_[i] == col_labels_[j]) throw std::invalid_argument("duplicate column label");
  }

  std::size_t row_count() const { return row_labels_.size(); }
  std::size_t col_count() const { return col_labels_.size(); }
  const std::vector<RowLabel>& row_labels() const { return row_labels_; }
  const std::vector<ColLabel>& col_labels() const { return col_labels_; }

  /// Position of `label`, appending an empty row if it is new.
  std::size_t row_index(const RowLabel& label) {
    auto it = row_lookup_.find(label);
    if (it != row_lookup_.end()) return it->second;
    row_lookup_.emplace(label, row_labels_.size());
    row_labels_.push_back(label);
    rows_.emplace_back();
    return row_labels_.size() - 1;
  }

  std::size_t col_index(const ColLabel& label) const {
    auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
    if (it == col_labels_.end()) throw std::out_of_range("unknown column label");
    return static_cast<std::size_t>(it - col_labels_.begin());
  }

  /// Adds `value` to the entry at (row, col); an entry that cancels to zero
  /// is erased.
  void accumulate(const RowLabel& row, std::size_t col, const Rational& value) {
    if (col >= col_labels_.size()) throw std::out_of_range("column position");
    if (value.is_zero()) return;
    SparseRow& r = rows_[row_index(row)];
    auto [it, inserted] = r.try_emplace(col, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) r.erase(it);
    }
  }

  Rational at(const RowLabel& row, std::size_t col) const {
    auto it = row_lookup_.find(row);
    if (it == row_lookup_.end()) return Rational(0);
    const SparseRow& r = rows_[it->second];
    auto e = r.find(col);
    return e == r.end() ? Rational(0) : e->second;
  }

  /// Number of stored (nonzero) entries.
  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  const std::vector<SparseRow>& rows() const { return rows_; }

  /// m * v, returned per row position.
  std::vector<Rational> apply(const DenseVector& v) const {
    if (v.size() != col_count()) throw std::invalid_argument("vector length mismatch");
    std::vector<Rational> out(row_count());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [c, x] : rows_[i]) out[i] += x * v[c];
    return out;
  }

 private:
  std::vector<RowLabel> row_labels_;
  std::vector<ColLabel> col_labels_;
  std::map<RowLabel, std::size_t> row_lookup_;
  std::vector<SparseRow> rows_;
};

template <class R, class C>
std::vector<DenseVector> kernel_basis(const LabeledMatrix<R, C>& m) {
  return kernel_basis(m.rows(), m.col_count());
}

template <class R, class C>
std::size_t rank(const LabeledMatrix<R, C>& m) {
  return rank(m.rows(), m.col_count());
}

}  // namespace svir::linalg
