#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "monocross/monomial_ideal.hpp"
#include "monocross/poly.hpp"

namespace monocross {

// Polynomial data on a union of coordinate varieties: piece h_i represents the
// function x -> h_i(pi_i(x)) on component i, i.e. substitute_zero(h_i, lambda_i).
// Pieces must agree on pairwise intersections (checked on construction).
class PiecewisePoly {
 public:
  PiecewisePoly(TypeLambda type, std::vector<SparsePoly> pieces);

  const TypeLambda& type() const { return type_; }
  const std::vector<SparsePoly>& pieces() const { return pieces_; }

 private:
  TypeLambda type_;
  std::vector<SparsePoly> pieces_;
};

// True iff substitute_zero(h_i, lambda_i | lambda_j) equals
// substitute_zero(h_j, lambda_i | lambda_j) for every pair i < j.
// Throws input_error on count or variable-count mismatches.
bool check_compatible(const TypeLambda& type, const std::vector<SparsePoly>& pieces);

// Inclusion-exclusion extension: H = sum over nonempty I of
// (-1)^(#I+1) * substitute_zero(h_rep(I), union of lambda_i over I).
// The representative defaults to min I; compatibility makes the choice moot.
SparsePoly extend_inclusion_exclusion(const PiecewisePoly& data);
SparsePoly extend_inclusion_exclusion_with(const PiecewisePoly& data,
                                           const std::function<int(Mask)>& representative);

// Splits f = f1 * x_var + g with g = substitute_zero(f, {var}); exact.
std::pair<SparsePoly, SparsePoly> lemma_easy_split(const SparsePoly& f, int var);

// f = sum over sigma of f_sigma * x^sigma, each sigma a transversal of the
// type and deg(f_sigma) + #sigma <= deg(f).
struct Decomposition {
  int degree = -1;  // degree of the divided polynomial; -1 for the zero input
  std::map<Mask, SparsePoly, CanonicalMaskLess> entries;
};

// Constructive division of a polynomial vanishing on the union of coordinate
// varieties: recursion on component count with dimension descent, splitting on
// the smallest variable of the first component at each step. With
// fold_to_minimal, entries at non-minimal transversals are folded onto a
// dividing minimal generator. precondition_error when f is not in the ideal.
Decomposition divide_on_crossings(const TypeLambda& type, const SparsePoly& f,
                                  bool fold_to_minimal = false);

// Differentiability classes lost by approximation between unions of coordinate
// varieties: m * (C(n, floor(n/2)) - 1), improving to m * (n - 1) when the
// target is a normal crossing divisor.
unsigned long long loss_constant(int domain_dim, int codomain_dim, bool divisor);

}  // namespace monocross
