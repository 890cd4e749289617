#include "arcmod/matrix.hpp"

#include <stdexcept>

namespace arcmod {

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::logic_error("QMat: shape mismatch in product");
  QMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("QMat: shape mismatch in sum");
  QMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator-() const {
  QMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

QMat QMat::transpose() const {
  QMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool QMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<std::size_t> QMat::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && at(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
    Rat inv = Rat(1) / at(row, col);
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      Rat f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t QMat::rank() const {
  QMat tmp = *this;
  return tmp.rref().size();
}

QMat QMat::kernel() const {
  QMat tmp = *this;
  std::vector<std::size_t> pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat k(cols_, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    std::size_t fc = free_cols[f];
    k.at(fc, f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], f) = -tmp.at(r, fc);
  }
  return k;
}

QMat QMat::column_space() const {
  QMat tmp = *this;
  std::vector<std::size_t> pivots = tmp.rref();
  QMat b(rows_, pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) b.at(i, j) = at(i, pivots[j]);
  return b;
}

Rat QMat::det() const {
  if (rows_ != cols_) throw std::logic_error("QMat: det of non-square matrix");
  QMat tmp = *this;
  Rat d = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && tmp.at(p, col) == 0) ++p;
    if (p == rows_) return Rat(0);
    if (p != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(tmp.at(p, j), tmp.at(col, j));
      d = -d;
    }
    d *= tmp.at(col, col);
    Rat inv = Rat(1) / tmp.at(col, col);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (tmp.at(i, col) == 0) continue;
      Rat f = tmp.at(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) tmp.at(i, j) -= f * tmp.at(col, j);
    }
  }
  return d;
}

QMat QMat::inverse() const {
  if (rows_ != cols_) throw std::logic_error("QMat: inverse of non-square matrix");
  QMat aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  if (aug.rref().size() != rows_) throw std::logic_error("QMat: singular matrix");
  QMat inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

QMat QMat::solve_exact(const QMat& b) const {
  if (rows_ != b.rows_) throw std::logic_error("QMat: solve shape mismatch");
  QMat aug(rows_, cols_ + b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) aug.at(i, cols_ + j) = b.at(i, j);
  }
  std::vector<std::size_t> pivots = aug.rref();
  QMat x(cols_, b.cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= cols_) throw std::logic_error("QMat: inconsistent linear system");
    for (std::size_t j = 0; j < b.cols_; ++j) x.at(pivots[r], j) = aug.at(r, cols_ + j);
  }
  return x;
}

QMat QMat::hcat(const std::vector<QMat>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const QMat& b : blocks) {
    rows = std::max(rows, b.rows());
    cols += b.cols();
  }
  QMat r(rows, cols);
  std::size_t off = 0;
  for (const QMat& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, off + j) = b.at(i, j);
    off += b.cols();
  }
  return r;
}

QMat QMat::vcat(const std::vector<QMat>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const QMat& b : blocks) {
    cols = std::max(cols, b.cols());
    rows += b.rows();
  }
  QMat r(rows, cols);
  std::size_t off = 0;
  for (const QMat& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(off + i, j) = b.at(i, j);
    off += b.rows();
  }
  return r;
}

std::vector<Rat> mat_vec(const QMat& m, const std::vector<Rat>& v) {
  if (m.cols() != v.size()) throw std::logic_error("mat_vec: shape mismatch");
  std::vector<Rat> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

}  // namespace arcmod
