#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace mcg {

using Integer = mpz_class;
using Vector = std::vector<Integer>;

// Dense row-major integer matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& o) const = default;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

// Fraction-free Gaussian elimination.
Integer determinant(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace mcg
