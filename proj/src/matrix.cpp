#include "monocross/matrix.hpp"

#include <utility>

#include "monocross/errors.hpp"

namespace monocross {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 1) throw input_error("bad matrix dimensions");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 1 || data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw input_error("matrix entries inconsistent with dimensions");
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw input_error("row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(int r) const {
  Vector v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> rows;
  rows.reserve(rows_);
  for (int r = 0; r < rows_; ++r) rows.push_back(row(r));
  return rows;
}

Matrix Matrix::transpose() const {
  if (rows_ == 0) throw input_error("cannot transpose an empty matrix");
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool MatrixLess::operator()(const Matrix& a, const Matrix& b) const {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (a.at(r, c) != b.at(r, c)) return a.at(r, c) < b.at(r, c);
    }
  }
  return false;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw input_error("matrix shape mismatch in product");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

int rref_rows(std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  const int nrows = static_cast<int>(rows.size());
  int rank = 0;
  for (int c = 0; c < cols && rank < nrows; ++c) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = Rational(1) / rows[rank][c];
    for (int j = c; j < cols; ++j) rows[rank][j] *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c];
      for (int j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw input_error("inverse requires a square matrix");
  const int n = m.rows();
  std::vector<Vector> rows(n, Vector(2 * n, Rational(0)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) rows[r][c] = m.at(r, c);
    rows[r][n + r] = 1;
  }
  rref_rows(rows);
  // Invertible exactly when the left block reduced to the identity.
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (rows[r][c] != Rational(r == c ? 1 : 0)) throw input_error("matrix is singular");
    }
  }
  Matrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = rows[r][n + c];
  return out;
}

}  // namespace monocross
