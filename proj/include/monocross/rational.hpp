#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace monocross {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

using Vector = std::vector<Rational>;

// Parses "p/q" or "p" (optional leading '-', digits only, q > 0).
// Throws input_error on anything else, including "p/0".
Rational parse_rational(const std::string& text);

// Formats as "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

Rational rational_pow(const Rational& base, int exponent);

}  // namespace monocross
