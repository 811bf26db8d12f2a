#include "monocross/rational.hpp"

#include "monocross/errors.hpp"

namespace monocross {

namespace {

bool is_integer_literal(const std::string& text) {
  if (text.empty()) return false;
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) throw input_error("bad rational literal '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw input_error("bad rational literal '" + text + "'");
  }
  Integer d(den);
  if (d == 0) throw input_error("zero denominator in '" + text + "'");
  return Rational(Integer(num), d);
}

std::string format_rational(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) throw input_error("negative exponent");
  Rational result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace monocross
