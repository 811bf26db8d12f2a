#include "monocross/subspace.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "monocross/errors.hpp"

namespace monocross {

RrefAccumulator::RrefAccumulator(int cols) : cols_(cols) {
  if (cols < 1) throw input_error("accumulator needs at least one column");
}

Vector RrefAccumulator::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivots_[i];
    if (v[p] == 0) continue;
    const Rational factor = v[p];
    const Vector& row = rows_[i];
    for (int c = p; c < cols_; ++c) v[c] -= factor * row[c];
  }
  return v;
}

bool RrefAccumulator::insert(Vector v) {
  if (static_cast<int>(v.size()) != cols_) throw input_error("vector length mismatch");
  v = reduce(std::move(v));
  int pivot = -1;
  for (int c = 0; c < cols_; ++c) {
    if (v[c] != 0) {
      pivot = c;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rational inv = Rational(1) / v[pivot];
  for (int c = pivot; c < cols_; ++c) v[c] *= inv;
  // Eliminate the new pivot column from the existing rows, keep pivot order.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][pivot] == 0) continue;
    const Rational factor = rows_[i][pivot];
    for (int c = pivot; c < cols_; ++c) rows_[i][c] -= factor * v[c];
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

bool RrefAccumulator::spans(const Vector& v) const {
  const Vector residual = reduce(v);
  return std::all_of(residual.begin(), residual.end(), [](const Rational& x) { return x == 0; });
}

Subspace Subspace::zero(int ambient) { return canonicalize({}, ambient); }

Subspace Subspace::full(int ambient) {
  return Subspace(ambient, Matrix::identity(ambient));
}

bool Subspace::contains(const Vector& v) const {
  RrefAccumulator acc(ambient_);
  for (int r = 0; r < basis_.rows(); ++r) acc.insert(basis_.row(r));
  return acc.spans(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw input_error("ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  RrefAccumulator acc(ambient_);
  for (int r = 0; r < basis_.rows(); ++r) acc.insert(basis_.row(r));
  for (int r = 0; r < other.basis_.rows(); ++r) {
    if (!acc.spans(other.basis_.row(r))) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace canonicalize(const std::vector<Vector>& vectors, int ambient) {
  if (ambient < 1) throw input_error("ambient dimension must be positive");
  RrefAccumulator acc(ambient);
  for (const Vector& v : vectors) {
    if (static_cast<int>(v.size()) != ambient) {
      throw input_error("vector length " + std::to_string(v.size()) + " does not match ambient " +
                        std::to_string(ambient));
    }
    acc.insert(v);
  }
  return Subspace(ambient, Matrix::from_rows(acc.rows(), ambient));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw input_error("ambient dimension mismatch");
  std::vector<Vector> rows = a.basis_rows();
  for (auto& row : b.basis_rows()) rows.push_back(std::move(row));
  return canonicalize(rows, a.ambient());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const int m = a.ambient();
  if (m != b.ambient()) throw input_error("ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(m);
  // Zassenhaus: reduce rows [a|a] and [b|0]; rows whose left half vanishes
  // carry a basis of the intersection in the right half.
  RrefAccumulator acc(2 * m);
  for (const Vector& row : a.basis_rows()) {
    Vector wide(2 * m, Rational(0));
    for (int c = 0; c < m; ++c) {
      wide[c] = row[c];
      wide[m + c] = row[c];
    }
    acc.insert(std::move(wide));
  }
  for (const Vector& row : b.basis_rows()) {
    Vector wide(2 * m, Rational(0));
    for (int c = 0; c < m; ++c) wide[c] = row[c];
    acc.insert(std::move(wide));
  }
  std::vector<Vector> inter_rows;
  for (const Vector& row : acc.rows()) {
    bool left_zero = true;
    for (int c = 0; c < m && left_zero; ++c) left_zero = row[c] == 0;
    if (!left_zero) continue;
    inter_rows.emplace_back(row.begin() + m, row.end());
  }
  return canonicalize(inter_rows, m);
}

std::vector<Vector> extend_to_basis(const std::vector<Vector>& independent, int ambient) {
  if (ambient < 1) throw input_error("ambient dimension must be positive");
  RrefAccumulator acc(ambient);
  std::vector<Vector> basis;
  for (const Vector& v : independent) {
    if (static_cast<int>(v.size()) != ambient) throw input_error("vector length mismatch");
    if (!acc.insert(v)) throw input_error("input vectors are linearly dependent");
    basis.push_back(v);
  }
  for (int k = 0; k < ambient && acc.rank() < ambient; ++k) {
    Vector unit(ambient, Rational(0));
    unit[k] = 1;
    if (acc.insert(unit)) basis.push_back(std::move(unit));
  }
  return basis;
}

}  // namespace monocross
