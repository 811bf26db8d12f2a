#pragma once

#include <vector>

#include "monocross/matrix.hpp"

namespace monocross {

// Incremental reduced-row-echelon accumulator. Rows are kept normalized
// (pivot 1, pivot column eliminated everywhere) and sorted by pivot column,
// so rows() is always a canonical RREF basis of the span so far.
class RrefAccumulator {
 public:
  explicit RrefAccumulator(int cols);

  // Residual of v after reduction by the current rows.
  Vector reduce(Vector v) const;

  // Inserts v if it is independent of the current span; returns true when the
  // rank grew.
  bool insert(Vector v);

  bool spans(const Vector& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<Vector>& rows() const { return rows_; }

 private:
  int cols_;
  std::vector<Vector> rows_;
  std::vector<int> pivots_;
};

// A linear subspace of Q^m, identified by its canonical RREF basis: two values
// are equal exactly when they are the same subspace.
class Subspace {
 public:
  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_row(int i) const { return basis_.row(i); }
  std::vector<Vector> basis_rows() const { return basis_.row_list(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  friend Subspace canonicalize(const std::vector<Vector>& vectors, int ambient);
  Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int ambient_;
  Matrix basis_;
};

// Canonical span of the given vectors: RREF rows, dependent generators collapse.
// Throws input_error when a vector has the wrong length.
Subspace canonicalize(const std::vector<Vector>& vectors, int ambient);

Subspace sum(const Subspace& a, const Subspace& b);

// Intersection via the Zassenhaus construction on the stacked bases.
Subspace intersect(const Subspace& a, const Subspace& b);

// Completes an independent list to an ordered basis of Q^m by scanning the
// standard unit vectors e_1..e_m in index order and appending each one that is
// independent of the vectors held so far. Input vectors come first, unchanged.
// Throws input_error when the input is dependent.
std::vector<Vector> extend_to_basis(const std::vector<Vector>& independent, int ambient);

}  // namespace monocross
