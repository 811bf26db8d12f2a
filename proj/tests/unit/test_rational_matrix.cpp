#include <doctest.h>

#include "monocross/errors.hpp"
#include "monocross/matrix.hpp"
#include "monocross/rational.hpp"
#include "test_helpers.hpp"

using namespace monocross;
using monocross::testing::vec;

TEST_CASE("rational parsing normalizes to lowest terms") {
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(parse_rational("-6/3")) == "-2");
  CHECK(format_rational(parse_rational("0/7")) == "0");
  CHECK(format_rational(parse_rational("5")) == "5");
  CHECK(format_rational(parse_rational("-12/8")) == "-3/2");
}

TEST_CASE("rational parsing rejects malformed literals") {
  CHECK_THROWS_AS(parse_rational(""), input_error);
  CHECK_THROWS_AS(parse_rational("abc"), input_error);
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), input_error);
  CHECK_THROWS_AS(parse_rational("1.5"), input_error);
  CHECK_THROWS_AS(parse_rational(" 1"), input_error);
  CHECK_THROWS_AS(parse_rational("1/"), input_error);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a = parse_rational("1/3");
  const Rational b = parse_rational("1/6");
  CHECK(format_rational(a + b) == "1/2");
  CHECK(format_rational(a * b) == "1/18");
  CHECK(rational_pow(parse_rational("2/3"), 3) == parse_rational("8/27"));
}

TEST_CASE("matrix inverse and product") {
  Matrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  const Matrix inv = inverse(m);
  CHECK(m * inv == Matrix::identity(2));
  CHECK(inv * m == Matrix::identity(2));
}

TEST_CASE("singular matrix has no inverse") {
  Matrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK_THROWS_AS(inverse(m), input_error);
}

TEST_CASE("rref_rows reduces to canonical form") {
  std::vector<Vector> rows = {vec({2, 4}), vec({1, 2}), vec({0, 1})};
  const int rank = rref_rows(rows);
  CHECK(rank == 2);
  CHECK(rows[0] == vec({1, 0}));
  CHECK(rows[1] == vec({0, 1}));
}
