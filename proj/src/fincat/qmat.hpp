#pragma once

#include <optional>
#include <vector>

#include "fincat/rational.hpp"

namespace fincat {

using QVec = std::vector<Rat>;

// Dense exact-rational matrix, row major. Sized for hom-spaces of a handful
// of dimensions; clarity over speed throughout.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMat identity(int n);
  static QMat zero(int rows, int cols) { return QMat(rows, cols); }
  static QMat from_columns(int rows, const std::vector<QVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  QVec column(int c) const;
  QVec apply(const QVec& v) const;  // matrix * column vector
  QMat operator*(const QMat& rhs) const;
  QMat operator+(const QMat& rhs) const;
  QMat operator-(const QMat& rhs) const;
  bool operator==(const QMat& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }

  QMat transposed() const;
  QMat pow(int k) const;  // k >= 0, square only

  int rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  std::optional<QMat> inverse() const;

  // One solution x of A x = b, or nullopt if inconsistent.
  std::optional<QVec> solve(const QVec& b) const;
  // Solves A X = B column by column.
  std::optional<QMat> solve_matrix(const QMat& b) const;
  // Basis of the null space, as columns.
  QMat kernel_basis() const;
  // Basis of the column space: the pivot columns of the original matrix.
  QMat image_basis() const;

  size_t hash() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;

  // Row reduction in place; returns pivot column per reduced row.
  static std::vector<int> rref(QMat& m);
};

}  // namespace fincat
