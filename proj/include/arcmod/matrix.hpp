#pragma once

#include "arcmod/rational.hpp"

#include <cstddef>
#include <vector>

namespace arcmod {

// Dense matrix over exact rationals. Sizes in this project stay tiny
// (a few hundred rows at most inside hom-space solves), so everything
// is plain Gaussian elimination with full pivoting on exact values.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMat identity(std::size_t n);
  static QMat zero(std::size_t rows, std::size_t cols) { return QMat(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-() const;
  QMat transpose() const;

  bool is_zero() const;

  // Reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  // Columns form a basis of the right null space.
  QMat kernel() const;
  // Columns form a basis of the column space.
  QMat column_space() const;
  Rat det() const;
  QMat inverse() const;

  // Solves A * X = B exactly; requires the system to be consistent and A to
  // have full column rank (the use sites restrict maps to chosen bases).
  QMat solve_exact(const QMat& b) const;

  // Horizontal / vertical concatenation.
  static QMat hcat(const std::vector<QMat>& blocks);
  static QMat vcat(const std::vector<QMat>& blocks);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

std::vector<Rat> mat_vec(const QMat& m, const std::vector<Rat>& v);

}  // namespace arcmod
