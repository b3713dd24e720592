#include "fincat/qmat.hpp"

#include <stdexcept>

namespace fincat {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

QMat QMat::from_columns(int rows, const std::vector<QVec>& cols) {
  QMat m(rows, int(cols.size()));
  for (int c = 0; c < int(cols.size()); ++c) {
    if (int(cols[c].size()) != rows) throw ArithmeticError("column size mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

QVec QMat::column(int c) const {
  QVec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

QVec QMat::apply(const QVec& v) const {
  if (int(v.size()) != cols_) throw ArithmeticError("matrix/vector size mismatch");
  QVec out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rat acc;
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

QMat QMat::operator*(const QMat& rhs) const {
  if (cols_ != rhs.rows_) throw ArithmeticError("matrix product size mismatch");
  QMat out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (int c = 0; c < rhs.cols_; ++c)
        if (!rhs.at(k, c).is_zero()) out.at(r, c) += at(r, k) * rhs.at(k, c);
    }
  return out;
}

QMat QMat::operator+(const QMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ArithmeticError("matrix sum size mismatch");
  QMat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

QMat QMat::operator-(const QMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ArithmeticError("matrix diff size mismatch");
  QMat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

QMat QMat::transposed() const {
  QMat out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

QMat QMat::pow(int k) const {
  if (rows_ != cols_) throw ArithmeticError("pow of non-square matrix");
  QMat acc = identity(rows_);
  QMat base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::vector<int> QMat::rref(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols_ && row < m.rows_; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows_; ++r)
      if (!m.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols_; ++c) std::swap(m.at(pr, c), m.at(row, c));
    Rat inv = m.at(row, col).inv();
    for (int c = col; c < m.cols_; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows_; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Rat f = m.at(r, col);
      for (int c = col; c < m.cols_; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int QMat::rank() const {
  QMat m = *this;
  return int(rref(m).size());
}

std::optional<QMat> QMat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  QMat aug(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = Rat(1);
  }
  auto pivots = rref(aug);
  if (int(pivots.size()) != rows_ || pivots.back() >= cols_) {
    // Rank-deficient in the left block.
    for (int i = 0; i < int(pivots.size()); ++i)
      if (pivots[i] >= cols_) return std::nullopt;
    if (int(pivots.size()) != rows_) return std::nullopt;
  }
  QMat out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = aug.at(r, cols_ + c);
  return out;
}

std::optional<QVec> QMat::solve(const QVec& b) const {
  if (int(b.size()) != rows_) throw ArithmeticError("solve: rhs size mismatch");
  QMat aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  auto pivots = rref(aug);
  for (int p : pivots)
    if (p == cols_) return std::nullopt;  // 0 = 1 row: inconsistent
  QVec x(cols_);
  for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

std::optional<QMat> QMat::solve_matrix(const QMat& b) const {
  if (b.rows() != rows_) throw ArithmeticError("solve_matrix: rhs size mismatch");
  QMat out(cols_, b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    auto x = solve(b.column(c));
    if (!x) return std::nullopt;
    for (int r = 0; r < cols_; ++r) out.at(r, c) = (*x)[r];
  }
  return out;
}

QMat QMat::kernel_basis() const {
  QMat m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVec> cols;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols_);
    v[free] = Rat(1);
    for (int i = 0; i < int(pivots.size()); ++i) v[pivots[i]] = -m.at(i, free);
    cols.push_back(v);
  }
  return from_columns(cols_, cols);
}

QMat QMat::image_basis() const {
  QMat m = *this;
  auto pivots = rref(m);
  std::vector<QVec> cols;
  for (int p : pivots) cols.push_back(column(p));
  return from_columns(rows_, cols);
}

size_t QMat::hash() const {
  size_t h = std::hash<int>()(rows_) * 31 + std::hash<int>()(cols_);
  for (const auto& x : a_) h = h * 1000003u ^ x.hash();
  return h;
}

}  // namespace fincat
