#include "svir/linalg.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "support/dense_oracle.hpp"

namespace svir::linalg {
namespace {

using Matrix = LabeledMatrix<std::string, int>;

Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<int> labels;
  for (std::size_t j = 0; j < cols; ++j) labels.push_back(static_cast<int>(j));
  Matrix m(labels);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.row_index("r" + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j) m.accumulate("r" + std::to_string(i), j, Rational(rows[i][j]));
  }
  return m;
}

void expect_in_kernel(const Matrix& m, const DenseVector& v) {
  for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
}

TEST(KernelBasis, IdentityIsInjective) {
  const Matrix m = from_rows({{1, 0}, {0, 1}});
  EXPECT_TRUE(kernel_basis(m).empty());
  EXPECT_EQ(rank(m), 2u);
}

TEST(KernelBasis, RankOneMatrixHasEchelonKernelVector) {
  const Matrix m = from_rows({{1, 2}, {2, 4}});
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  // Nullspace direction (-2, 1), scaled so the leading entry is 1.
  EXPECT_EQ(k[0], (DenseVector{Rational(1), Rational(-1, 2)}));
  expect_in_kernel(m, k[0]);
  EXPECT_EQ(rank(m), 1u);
}

TEST(KernelBasis, ZeroMatrixKernelIsEverything) {
  Matrix m({0, 1, 2});
  m.row_index("a");
  m.row_index("b");
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k[i][j], Rational(i == j ? 1 : 0));
}

TEST(KernelBasis, EmptyMatrix) {
  const Matrix m;
  EXPECT_TRUE(kernel_basis(m).empty());
  EXPECT_EQ(rank(m), 0u);
}

TEST(KernelBasis, EchelonShapeAcrossPivots) {
  // Kernel spanned by (1,1,0,0) and (0,0,1,-1) in some order; canonical form
  // puts leading ones first with zeros above and below.
  const Matrix m = from_rows({{1, -1, 0, 0}, {0, 0, 1, 1}, {2, -2, 3, 3}});
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], (DenseVector{Rational(1), Rational(1), Rational(0), Rational(0)}));
  EXPECT_EQ(k[1], (DenseVector{Rational(0), Rational(0), Rational(1), Rational(-1)}));
}

TEST(LabeledMatrix, AccumulateCancelsToNothing) {
  Matrix m({0, 1});
  m.accumulate("x", 0, Rational(3, 2));
  m.accumulate("x", 0, Rational(-3, 2));
  EXPECT_EQ(m.nonzero_count(), 0u);
  EXPECT_EQ(m.row_count(), 1u);
  EXPECT_THROW(Matrix({1, 1}), std::invalid_argument);
  EXPECT_THROW(m.accumulate("x", 2, Rational(1)), std::out_of_range);
}

// rank + nullity = columns, m v = 0 exactly, agreement with a dense
// reference rank, and determinism, over seeded random sparse matrices.
TEST(KernelBasis, RandomSparseProperties) {
  std::mt19937_64 rng(20240613);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40;
    std::vector<int> labels;
    for (std::size_t j = 0; j < cols; ++j) labels.push_back(static_cast<int>(j));
    Matrix m(labels);
    std::vector<std::vector<testing::Q>> dense(rows, std::vector<testing::Q>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      m.row_index("r" + std::to_string(i));
      for (std::size_t j = 0; j < cols; ++j) {
        if (rng() % 5 != 0) continue;
        const std::int64_t num = static_cast<std::int64_t>(rng() % 7) - 3;
        const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 3);
        m.accumulate("r" + std::to_string(i), j, Rational(num, den));
        dense[i][j] = testing::Q(num) / den;
      }
    }
    // Make some rows dependent so the rank is not always full.
    if (rows > 2) {
      const auto r0 = m.rows()[0];
      for (const auto& [c, x] : r0) {
        m.accumulate("r1", c, x * Rational(2));
        dense[1][c] += testing::Q(x.numerator().get_str() + "/" + x.denominator().get_str()) * 2;
      }
    }
    const auto k = kernel_basis(m);
    const std::size_t r = rank(m);
    EXPECT_EQ(r + k.size(), cols);
    EXPECT_EQ(r, testing::dense_rank(dense));
    for (const auto& v : k) expect_in_kernel(m, v);
    EXPECT_EQ(kernel_basis(m), k);
  }
}

}  // namespace
}  // namespace svir::linalg
