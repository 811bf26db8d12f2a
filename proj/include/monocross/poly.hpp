#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monocross/mask.hpp"
#include "monocross/rational.hpp"

namespace monocross {

// Exponent vector, one entry per variable.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Variables with positive exponent as a 1-based mask. Requires at most 32 variables.
Mask support_mask(const Monomial& m);

bool is_squarefree(const Monomial& m);

// Graded lexicographic order, greatest term first: higher total degree wins,
// ties broken lexicographically on the exponent vector.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact sparse polynomial over Q. Zero coefficients are never stored; the term
// map iterates in graded-lex order with the leading term first.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit SparsePoly(int nvars);

  static SparsePoly constant(int nvars, const Rational& c);
  static SparsePoly variable(int nvars, int index);  // 1-based
  static SparsePoly monomial(int nvars, Monomial exponents, const Rational& coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  // Total degree; -1 stands in for the zero polynomial.
  int degree() const;

  const TermMap& terms() const { return terms_; }

  // Merges a term in, dropping the monomial when the coefficient cancels.
  void add_term(Monomial exponents, const Rational& coeff);

  SparsePoly operator+(const SparsePoly& other) const;
  SparsePoly operator-(const SparsePoly& other) const;
  SparsePoly operator*(const SparsePoly& other) const;
  SparsePoly operator-() const;
  SparsePoly scaled(const Rational& factor) const;

  bool operator==(const SparsePoly& other) const;
  bool operator!=(const SparsePoly& other) const { return !(*this == other); }

  Rational eval(const Vector& point) const;

  std::string to_string() const;

 private:
  int nvars_;
  TermMap terms_;
};

// Deletes every term whose monomial uses a variable from vars; the projection
// onto {x_v = 0 : v in vars}. Throws input_error when vars is out of range.
SparsePoly substitute_zero(const SparsePoly& p, Mask vars);

// Exact division by x_var: decrements the exponent of var in every term.
// Throws precondition_error when some term lacks the variable.
SparsePoly variable_quotient(const SparsePoly& p, int var);

}  // namespace monocross
