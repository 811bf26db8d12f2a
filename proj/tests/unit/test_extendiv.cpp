#include <doctest.h>

#include <algorithm>
#include <random>

#include "monocross/errors.hpp"
#include "monocross/extend_divide.hpp"
#include "test_helpers.hpp"

using namespace monocross;
using namespace monocross::testing;

namespace {

SparsePoly x(int nvars, int i) { return SparsePoly::variable(nvars, i); }

SparsePoly monomial_of(int nvars, Mask support) {
  Monomial exps(nvars, 0);
  for (int v : indices_from_mask(support)) exps[v - 1] = 1;
  return SparsePoly::monomial(nvars, exps, 1);
}

// Random compatible pieces: a global polynomial plus, per piece, terms that
// die on the piece's own component.
std::vector<SparsePoly> random_compatible_pieces(std::mt19937& rng, const TypeLambda& type) {
  const int m = type.ambient();
  const SparsePoly global = random_poly(rng, m, 3, 3);
  std::vector<SparsePoly> pieces;
  for (Mask lambda : type.components()) {
    SparsePoly piece = global;
    for (int v : indices_from_mask(lambda)) {
      piece = piece + x(m, v) * random_poly(rng, m, 2, 2);
    }
    pieces.push_back(piece);
  }
  return pieces;
}

// Random element of the vanishing ideal with degree at most max_degree.
SparsePoly random_ideal_member(std::mt19937& rng, const TypeLambda& type, int max_degree) {
  const SquareFreeIdeal ideal = associated_monomials(type);
  SparsePoly f(type.ambient());
  for (Mask generator : ideal.generators()) {
    const int headroom = max_degree - popcount(generator);
    if (headroom < 0) continue;
    f = f + monomial_of(type.ambient(), generator) *
                random_poly(rng, type.ambient(), 3, headroom);
  }
  return f;
}

void check_decomposition(const TypeLambda& type, const SparsePoly& f, const Decomposition& dec) {
  SparsePoly rebuilt(type.ambient());
  for (const auto& [sigma, coeff] : dec.entries) {
    CHECK_FALSE(coeff.is_zero());
    // sigma is a transversal of the components.
    for (Mask lambda : type.components()) CHECK((sigma & lambda) != 0);
    CHECK(coeff.degree() + popcount(sigma) <= f.degree());
    rebuilt = rebuilt + coeff * monomial_of(type.ambient(), sigma);
  }
  CHECK(rebuilt == f);
}

}  // namespace

TEST_CASE("compatibility examples") {
  const TypeLambda crossing(2, {0b01, 0b10});
  CHECK(check_compatible(crossing, {x(2, 2), x(2, 1)}));
  CHECK_FALSE(check_compatible(crossing, {SparsePoly::constant(2, 1), SparsePoly(2)}));
  std::mt19937 rng(1u);
  CHECK(check_compatible(TypeLambda(2, {0b01}), {random_poly(rng, 2, 3, 3)}));
  CHECK_THROWS_AS(check_compatible(crossing, {x(2, 1)}), input_error);
  CHECK_THROWS_AS(check_compatible(crossing, {x(3, 1), x(3, 2)}), input_error);
}

TEST_CASE("extension examples") {
  // Single component: the extension is the piece composed with the projection.
  const TypeLambda single(2, {0b01});
  const SparsePoly h = x(2, 1) + x(2, 2) * x(2, 2);
  CHECK(extend_inclusion_exclusion(PiecewisePoly(single, {h})) == substitute_zero(h, 0b01));

  const TypeLambda crossing(2, {0b01, 0b10});
  CHECK(extend_inclusion_exclusion(PiecewisePoly(crossing, {x(2, 2), x(2, 1)})) ==
        x(2, 1) + x(2, 2));

  const TypeLambda mixed(3, {0b001, 0b110});
  CHECK(extend_inclusion_exclusion(PiecewisePoly(mixed, {x(3, 2) + x(3, 3), x(3, 1)})) ==
        x(3, 1) + x(3, 2) + x(3, 3));

  CHECK_THROWS_AS(PiecewisePoly(crossing, {SparsePoly::constant(2, 1), SparsePoly(2)}),
                  precondition_error);
}

TEST_CASE("extension restricts to the pieces, is linear, and ignores representatives") {
  std::mt19937 rng(808u);
  for (int iter = 0; iter < 40; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const TypeLambda type = random_type(rng, m, 3);
    const auto pieces = random_compatible_pieces(rng, type);
    REQUIRE(check_compatible(type, pieces));
    const PiecewisePoly data(type, pieces);
    const SparsePoly extension = extend_inclusion_exclusion(data);

    for (int i = 0; i < type.size(); ++i) {
      CHECK(substitute_zero(extension, type.component(i)) ==
            substitute_zero(pieces[i], type.component(i)));
    }

    // Linearity against a second compatible family on the same type.
    const auto other = random_compatible_pieces(rng, type);
    std::vector<SparsePoly> combined;
    for (int i = 0; i < type.size(); ++i) {
      combined.push_back(pieces[i].scaled(Rational(2)) + other[i].scaled(Rational(-3)));
    }
    const SparsePoly lhs = extend_inclusion_exclusion(PiecewisePoly(type, combined));
    const SparsePoly rhs = extension.scaled(Rational(2)) +
                           extend_inclusion_exclusion(PiecewisePoly(type, other)).scaled(Rational(-3));
    CHECK(lhs == rhs);

    // Any representative choice gives the same extension.
    std::uniform_int_distribution<int> coin(0, 1);
    const auto random_rep = [&](Mask subset) {
      auto members = indices_from_mask(subset);
      return members[coin(rng) ? 0 : members.size() - 1];
    };
    CHECK(extend_inclusion_exclusion_with(data, random_rep) == extension);
  }
}

TEST_CASE("split examples") {
  const SparsePoly f = x(2, 1) * x(2, 1) + x(2, 2);
  const auto [f1, g] = lemma_easy_split(f, 1);
  CHECK(f1 == x(2, 1));
  CHECK(g == x(2, 2));
  CHECK(f1 * x(2, 1) + g == f);

  const auto [f1b, gb] = lemma_easy_split(x(2, 2), 1);
  CHECK(f1b.is_zero());
  CHECK(gb == x(2, 2));

  const auto [f1c, gc] = lemma_easy_split(x(2, 1) * x(2, 2), 1);
  CHECK(f1c == x(2, 2));
  CHECK(gc.is_zero());

  CHECK_THROWS_AS(lemma_easy_split(f, 3), input_error);
}

TEST_CASE("division examples") {
  const TypeLambda mixed(3, {0b001, 0b110});
  const SparsePoly f = x(3, 1) * x(3, 2) + x(3, 1) * x(3, 3);
  const Decomposition dec = divide_on_crossings(mixed, f);
  CHECK(dec.degree == 2);
  REQUIRE(dec.entries.size() == 2);
  CHECK(dec.entries.at(0b011) == SparsePoly::constant(3, 1));
  CHECK(dec.entries.at(0b101) == SparsePoly::constant(3, 1));

  const TypeLambda crossing2(2, {0b01, 0b10});
  const Decomposition dec2 = divide_on_crossings(crossing2, x(2, 1) * x(2, 1) * x(2, 2));
  REQUIRE(dec2.entries.size() == 1);
  CHECK(dec2.entries.at(0b11) == x(2, 1));

  const TypeLambda crossing3(3, {0b001, 0b010});
  const Decomposition dec3 = divide_on_crossings(crossing3, x(3, 1) * x(3, 2) * x(3, 3));
  REQUIRE(dec3.entries.size() == 1);
  CHECK(dec3.entries.at(0b011) == x(3, 3));

  CHECK_THROWS_AS(divide_on_crossings(crossing2, x(2, 2)), precondition_error);
}

TEST_CASE("dividing the zero polynomial yields an empty decomposition") {
  const Decomposition dec = divide_on_crossings(TypeLambda(2, {0b01, 0b10}), SparsePoly(2));
  CHECK(dec.degree == -1);
  CHECK(dec.entries.empty());
}

TEST_CASE("division identity and degree bound on random ideal members") {
  std::mt19937 rng(909u);
  for (int iter = 0; iter < 100; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const TypeLambda type = random_type(rng, m, 4);
    const SparsePoly f = random_ideal_member(rng, type, 6);
    REQUIRE(ideal_membership(f, associated_monomials(type)));
    check_decomposition(type, f, divide_on_crossings(type, f));
  }
}

TEST_CASE("folding keeps the identity and lands on minimal generators") {
  std::mt19937 rng(910u);
  for (int iter = 0; iter < 60; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const TypeLambda type = random_type(rng, m, 4);
    const SparsePoly f = random_ideal_member(rng, type, 6);
    const Decomposition folded = divide_on_crossings(type, f, true);
    check_decomposition(type, f, folded);
    const std::vector<Mask> generators = associated_monomials(type).generators();
    for (const auto& [sigma, coeff] : folded.entries) {
      CHECK(std::find(generators.begin(), generators.end(), sigma) != generators.end());
    }
  }
}

TEST_CASE("division is robust under component and variable permutations") {
  std::mt19937 rng(911u);
  for (int iter = 0; iter < 40; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const TypeLambda type = random_type(rng, m, 3);
    const SparsePoly f = random_ideal_member(rng, type, 5);

    // Shuffle the component order.
    std::vector<Mask> shuffled = type.components();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const TypeLambda reordered(m, shuffled);
    check_decomposition(reordered, f, divide_on_crossings(reordered, f));

    // Relabel the variables by a permutation.
    std::vector<int> relabel(m);
    for (int i = 0; i < m; ++i) relabel[i] = i;
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<Mask> renamed;
    for (Mask lambda : type.components()) {
      Mask image = 0;
      for (int v : indices_from_mask(lambda)) image |= single_bit(relabel[v - 1] + 1);
      renamed.push_back(image);
    }
    SparsePoly g(m);
    for (const auto& [mono, coeff] : f.terms()) {
      Monomial image(m, 0);
      for (int i = 0; i < m; ++i) image[relabel[i]] = mono[i];
      g.add_term(image, coeff);
    }
    const TypeLambda renamed_type(m, renamed);
    check_decomposition(renamed_type, g, divide_on_crossings(renamed_type, g));
  }
}

TEST_CASE("loss constants") {
  CHECK(loss_constant(2, 3, false) == 4);
  CHECK(loss_constant(2, 4, false) == 10);
  CHECK(loss_constant(2, 4, true) == 6);
  CHECK(loss_constant(1, 1, false) == 0);
  CHECK(loss_constant(1, 1, true) == 0);
  CHECK_THROWS_AS(loss_constant(0, 1, false), input_error);
  for (int m = 1; m <= 10; ++m) {
    for (int n = 1; n <= 10; ++n) {
      CHECK(loss_constant(m, n, true) <= loss_constant(m, n, false));
    }
  }
}
