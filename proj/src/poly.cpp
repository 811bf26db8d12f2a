#include "monocross/poly.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "monocross/errors.hpp"

namespace monocross {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Mask support_mask(const Monomial& m) {
  if (m.size() > 32) throw resource_error("monomial support masks need at most 32 variables");
  Mask result = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) result |= Mask{1} << i;
  }
  return result;
}

bool is_squarefree(const Monomial& m) {
  for (int e : m) {
    if (e < 0 || e > 1) return false;
  }
  return true;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic on exponent vectors
}

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw input_error("polynomials need at least one variable");
}

SparsePoly SparsePoly::constant(int nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
  if (index < 1 || index > nvars) throw input_error("variable index out of range");
  Monomial m(nvars, 0);
  m[index - 1] = 1;
  return monomial(nvars, std::move(m), Rational(1));
}

SparsePoly SparsePoly::monomial(int nvars, Monomial exponents, const Rational& coeff) {
  SparsePoly p(nvars);
  p.add_term(std::move(exponents), coeff);
  return p;
}

int SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);  // leading term has maximal degree
}

void SparsePoly::add_term(Monomial exponents, const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != nvars_) throw input_error("exponent vector length mismatch");
  for (int e : exponents) {
    if (e < 0) throw input_error("negative exponent");
  }
  if (coeff == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exponents), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
  if (nvars_ != other.nvars_) throw input_error("variable count mismatch");
  SparsePoly out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
  if (nvars_ != other.nvars_) throw input_error("variable count mismatch");
  SparsePoly out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, -coeff);
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
  if (nvars_ != other.nvars_) throw input_error("variable count mismatch");
  SparsePoly out(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial prod(nvars_);
      for (int i = 0; i < nvars_; ++i) prod[i] = ma[i] + mb[i];
      out.add_term(std::move(prod), ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const { return scaled(Rational(-1)); }

SparsePoly SparsePoly::scaled(const Rational& factor) const {
  SparsePoly out(nvars_);
  if (factor == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * factor);
  return out;
}

bool SparsePoly::operator==(const SparsePoly& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Rational SparsePoly::eval(const Vector& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw input_error("evaluation point length mismatch");
  Rational result(0);
  for (const auto& [mono, coeff] : terms_) {
    Rational term = coeff;
    for (int i = 0; i < nvars_; ++i) {
      if (mono[i] != 0) term *= rational_pow(point[i], mono[i]);
    }
    result += term;
  }
  return result;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool printed = false;
    if (coeff != 1 || total_degree(mono) == 0) {
      out << format_rational(coeff);
      printed = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (mono[i] == 0) continue;
      if (printed) out << "*";
      out << "x" << (i + 1);
      if (mono[i] > 1) out << "^" << mono[i];
      printed = true;
    }
  }
  return out.str();
}

SparsePoly substitute_zero(const SparsePoly& p, Mask vars) {
  if (p.nvars() < 32 && (vars >> p.nvars()) != 0) throw input_error("variable index out of range");
  SparsePoly out(p.nvars());
  for (const auto& [mono, coeff] : p.terms()) {
    if ((support_mask(mono) & vars) == 0) out.add_term(mono, coeff);
  }
  return out;
}

SparsePoly variable_quotient(const SparsePoly& p, int var) {
  if (var < 1 || var > p.nvars()) throw input_error("variable index out of range");
  SparsePoly out(p.nvars());
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono[var - 1] < 1) {
      throw precondition_error("a term lacks variable x" + std::to_string(var));
    }
    Monomial reduced = mono;
    --reduced[var - 1];
    out.add_term(std::move(reduced), coeff);
  }
  return out;
}

}  // namespace monocross
