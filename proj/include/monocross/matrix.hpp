#pragma once

#include <vector>

#include "monocross/rational.hpp"

namespace monocross {

// Dense exact matrix over Q, row-major. A matrix with zero rows is allowed and
// stands for an empty list of vectors (e.g. the basis of the zero subspace).
class Matrix {
 public:
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, std::vector<Rational> entries);

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vector row(int r) const;
  std::vector<Vector> row_list() const;

  Matrix transpose() const;

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

struct MatrixLess {
  bool operator()(const Matrix& a, const Matrix& b) const;
};

Matrix operator*(const Matrix& a, const Matrix& b);

// Full Gauss-Jordan reduction of a list of row vectors (all the same length).
// Returns the rank; rows beyond it are zero.
int rref_rows(std::vector<Vector>& rows);

// Inverse of a square matrix; throws input_error when singular.
Matrix inverse(const Matrix& m);

}  // namespace monocross
