#pragma once

#include <vector>

#include "monocross/mask.hpp"
#include "monocross/poly.hpp"

namespace monocross {

bool is_antichain(const std::vector<Mask>& sets);

// Deduplicates and drops strict supersets; result in canonical order.
std::vector<Mask> minimalize_antichain(std::vector<Mask> sets);

// The combinatorial type of a union of coordinate linear varieties in Q^m:
// component i is {x_j = 0 : j in lambda_i}, of dimension m - #lambda_i.
// Components are nonempty and form an antichain (no immersed components).
class TypeLambda {
 public:
  TypeLambda(int ambient, std::vector<Mask> components);

  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(components_.size()); }
  const std::vector<Mask>& components() const { return components_; }
  Mask component(int i) const { return components_[i]; }

  bool operator==(const TypeLambda& other) const {
    return ambient_ == other.ambient_ && components_ == other.components_;
  }
  bool operator!=(const TypeLambda& other) const { return !(*this == other); }

 private:
  int ambient_;
  std::vector<Mask> components_;
};

// Square-free monomial ideal in Q[x_1..x_m], given by its minimal generators:
// an antichain of nonempty variable sets, kept in canonical order.
class SquareFreeIdeal {
 public:
  // Validates that the generators already form a nonempty antichain.
  SquareFreeIdeal(int ambient, std::vector<Mask> generators);

  // Minimalizes an arbitrary nonempty generating set first.
  static SquareFreeIdeal from_monomials(int ambient, std::vector<Mask> monomials);

  int ambient() const { return ambient_; }
  const std::vector<Mask>& generators() const { return generators_; }

  bool operator==(const SquareFreeIdeal& other) const {
    return ambient_ == other.ambient_ && generators_ == other.generators_;
  }
  bool operator!=(const SquareFreeIdeal& other) const { return !(*this == other); }

 private:
  int ambient_;
  std::vector<Mask> generators_;
};

struct AssociatedMonomials {
  SquareFreeIdeal ideal;
  // Distinct one-variable-per-component products before minimalization.
  unsigned long long raw_product_count;
};

// Vanishing ideal of the union of coordinate varieties: one variable is chosen
// from each component, the distinct products are collected, and the result is
// minimalized. Generators come out as the minimal transversals of the type.
AssociatedMonomials associated_monomials_detailed(const TypeLambda& type);
SquareFreeIdeal associated_monomials(const TypeLambda& type);

// All inclusion-minimal subsets of {1..nvars} meeting every member of family,
// by exhaustive subset enumeration. Brute-force oracle; nvars is guarded.
std::vector<Mask> minimal_transversals(const std::vector<Mask>& family, int nvars);

// Minimal primes of the ideal, each given by its variable set, computed by the
// recursive three-case decomposition (single variables / common variable /
// split on a variable). Agrees with minimal_transversals(generators).
std::vector<Mask> prime_decomposition(const SquareFreeIdeal& ideal);

// Zero set of the ideal as a union of coordinate varieties; the components are
// the minimal primes read as vanishing-variable sets.
TypeLambda zero_set(const SquareFreeIdeal& ideal);

// True exactly when every term's support contains some generator; equivalently
// f vanishes on the union of coordinate varieties cut out by the ideal.
bool ideal_membership(const SparsePoly& f, const SquareFreeIdeal& ideal);

}  // namespace monocross
