#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "monocross/errors.hpp"
#include "monocross/family.hpp"
#include "test_helpers.hpp"

using namespace monocross;
using namespace monocross::testing;

namespace {

LinearFamily f3gen() {
  return LinearFamily(3, {span_of({{1, 0, 0}}, 3), span_of({{0, 1, 0}}, 3), span_of({{1, 1, 1}}, 3)});
}

LinearFamily f3cop() {
  return LinearFamily(3, {span_of({{1, 0, 0}}, 3), span_of({{0, 1, 0}}, 3), span_of({{1, 1, 0}}, 3)});
}

LinearFamily axes(int m) {
  std::vector<Subspace> members;
  for (int i = 0; i < m; ++i) {
    std::vector<std::vector<int>> row(1, std::vector<int>(m, 0));
    row[0][i] = 1;
    members.push_back(span_of(row, m));
  }
  return LinearFamily(m, members);
}

LinearFamily line_plane() {
  return LinearFamily(3, {span_of({{1, 0, 0}}, 3), span_of({{0, 1, 0}, {0, 0, 1}}, 3)});
}

// Literal residual sum from the definition, for cross-checking the collapsed
// formula inside LevelData.
Subspace literal_residual_sum(const LinearFamily& family, Mask members) {
  const int s = family.size();
  const int p = popcount(members);
  Subspace acc = Subspace::zero(family.ambient());
  for (Mask other = 1; other < (Mask{1} << s); ++other) {
    if (popcount(other) != p || other == members) continue;
    acc = sum(acc, intersect(component_intersection(family, other),
                             component_intersection(family, members)));
  }
  return acc;
}

}  // namespace

TEST_CASE("family construction validates the antichain rule") {
  CHECK_THROWS_AS(LinearFamily(2, {}), input_error);
  CHECK_THROWS_AS(LinearFamily(2, {span_of({{1, 0}}, 2), Subspace::full(2)}), input_error);
  CHECK_THROWS_AS(LinearFamily(2, {span_of({{1, 0}}, 2), span_of({{2, 0}}, 2)}), input_error);
  const LinearFamily cleaned = LinearFamily::minimalized(
      2, {span_of({{1, 0}}, 2), Subspace::full(2), span_of({{2, 0}}, 2)});
  CHECK(cleaned.size() == 1);
  CHECK(cleaned.member(0) == Subspace::full(2));
}

TEST_CASE("single-member families are accepted and trivially extremal") {
  const LinearFamily single(2, {span_of({{1, 1}}, 2)});
  CHECK(extremality(single).extremal);
  CHECK(adapted_basis(single).has_value());
}

TEST_CASE("level tables refuse families beyond the enumeration guard") {
  const int m = 21;
  std::vector<Subspace> members;
  for (int i = 0; i < m; ++i) {
    Vector unit(m, Rational(0));
    unit[i] = 1;
    members.push_back(canonicalize({unit}, m));
  }
  const LinearFamily family(m, members);
  CHECK_THROWS_AS(extremality(family), resource_error);
}

TEST_CASE("component intersection examples") {
  CHECK(component_intersection(axes(2), 0b11) == Subspace::zero(2));
  CHECK(component_intersection(f3gen(), 0b001) == span_of({{1, 0, 0}}, 3));
  CHECK(component_intersection(f3gen(), 0b101) == Subspace::zero(3));
  CHECK_THROWS_AS(component_intersection(f3gen(), 0), input_error);
  CHECK_THROWS_AS(component_intersection(f3gen(), 0b1000), input_error);
}

TEST_CASE("level space examples") {
  CHECK(level_space(f3gen(), 1) == Subspace::full(3));
  CHECK(level_space(f3gen(), 4) == Subspace::zero(3));
  CHECK(level_space(f3cop(), 1) == span_of({{1, 0, 0}, {0, 1, 0}}, 3));
  CHECK_THROWS_AS(level_space(f3gen(), 0), input_error);
  CHECK_THROWS_AS(level_space(f3gen(), 5), input_error);
}

TEST_CASE("three generating lines are extremal, three coplanar lines are not") {
  const ExtremalityReport good = extremality(f3gen());
  CHECK(good.extremal);

  const ExtremalityReport bad = extremality(f3cop());
  CHECK_FALSE(bad.extremal);
  const LevelCheck failure = bad.first_failure();
  CHECK(failure.level == 1);
  CHECK(failure.lhs == 2);
  CHECK(failure.rhs == 3);

  CHECK(extremality(axes(2)).extremal);
}

TEST_CASE("supplement examples") {
  CHECK(supplement(axes(2), 0b01) == span_of({{1, 0}}, 2));
  CHECK(supplement(axes(2), 0b11) == Subspace::zero(2));
  CHECK(supplement(f3gen(), 0b100) == span_of({{1, 1, 1}}, 3));
}

TEST_CASE("adapted basis examples") {
  const auto basis2 = adapted_basis(axes(2));
  REQUIRE(basis2.has_value());
  CHECK(basis2->vectors == std::vector<Vector>{vec({1, 0}), vec({0, 1})});

  const auto basis3 = adapted_basis(f3gen());
  REQUIRE(basis3.has_value());
  CHECK(basis3->vectors == std::vector<Vector>{vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 1})});
  REQUIRE(basis3->blocks.size() == 3);
  CHECK(basis3->blocks[0].members == 0b001);
  CHECK(basis3->blocks[2].members == 0b100);
  CHECK(basis3->blocks[2].positions == std::vector<int>{2});

  CHECK_FALSE(adapted_basis(f3cop()).has_value());
}

TEST_CASE("adapted verifier accepts the construction and rejects junk") {
  const auto basis = adapted_basis(f3gen());
  CHECK(is_adapted(basis->vectors, f3gen()));
  CHECK_FALSE(is_adapted({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}, f3gen()));
  CHECK_FALSE(is_adapted({vec({1, 0, 0}), vec({0, 1, 0})}, f3gen()));
}

TEST_CASE("load of collection examples") {
  CHECK(load_of_collection(axes(2), {0b01, 0b10}) == 2);
  CHECK(load_of_collection(f3gen(), {0b111}) == 0);
  CHECK(load_of_collection(f3cop(), {0b001, 0b010, 0b100}) == 2);
  CHECK_THROWS_AS(load_of_collection(f3gen(), {0b001, 0b001}), input_error);
  CHECK_THROWS_AS(load_of_collection(f3gen(), {}), input_error);
}

TEST_CASE("load signature examples") {
  const LoadSignature sig2 = load_signature(axes(2));
  CHECK(sig2.at(0b01) == 1);
  CHECK(sig2.at(0b10) == 1);
  CHECK(sig2.at(0b11) == 0);

  const LoadSignature sig3 = load_signature(f3gen());
  for (Mask mask = 1; mask < 8; ++mask) {
    CHECK(sig3.at(mask) == (popcount(mask) == 1 ? 1 : 0));
  }

  const LoadSignature sig_lp = load_signature(line_plane());
  CHECK(sig_lp.at(0b01) == 1);
  CHECK(sig_lp.at(0b10) == 2);
  CHECK(sig_lp.at(0b11) == 0);

  CHECK_THROWS_AS(load_signature(f3cop()), precondition_error);
}

TEST_CASE("fixed-order equivalence and reordering") {
  const LinearFamily f = line_plane();
  const LinearFamily g(3, {span_of({{0, 1, 0}, {0, 0, 1}}, 3), span_of({{1, 0, 0}}, 3)});
  CHECK_FALSE(families_equivalent(f, g, false).has_value());
  const auto swapped = families_equivalent(f, g, true);
  REQUIRE(swapped.has_value());
  CHECK(*swapped == std::vector<int>{2, 1});

  const auto self = families_equivalent(f, f, false);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{1, 2});

  const auto gen_axes = families_equivalent(f3gen(), axes(3), false);
  REQUIRE(gen_axes.has_value());
  CHECK(*gen_axes == std::vector<int>{1, 2, 3});

  CHECK_THROWS_AS(families_equivalent(f3cop(), axes(3), false), precondition_error);
  CHECK_FALSE(families_equivalent(axes(2), axes(3), false).has_value());
}

TEST_CASE("build_isomorphism examples") {
  const Matrix identity = build_isomorphism(axes(2), axes(2));
  CHECK(identity == Matrix::identity(2));

  const LinearFamily oblique(2, {span_of({{1, 0}}, 2), span_of({{1, 1}}, 2)});
  const Matrix map = build_isomorphism(oblique, axes(2));
  // Columns are determined by the matched bases: (1,0) -> (1,0), (1,1) -> (0,1).
  CHECK(apply_linear_map(map, oblique.member(0)) == axes(2).member(0));
  CHECK(apply_linear_map(map, oblique.member(1)) == axes(2).member(1));
  CHECK(map.at(0, 0) == 1);
  CHECK(map.at(0, 1) == -1);
  CHECK(map.at(1, 0) == 0);
  CHECK(map.at(1, 1) == 1);

  CHECK_THROWS_AS(build_isomorphism(line_plane(), axes(3)), precondition_error);
}

TEST_CASE("coordinate model examples") {
  const TypeLambda model2 = coordinate_model(axes(2));
  CHECK(model2 == TypeLambda(2, {0b10, 0b01}));

  const TypeLambda model3 = coordinate_model(f3gen());
  CHECK(model3 == TypeLambda(3, {0b110, 0b101, 0b011}));

  const TypeLambda model_lp = coordinate_model(line_plane());
  CHECK(model_lp == TypeLambda(3, {0b110, 0b001}));

  CHECK_THROWS_AS(coordinate_model(f3cop()), precondition_error);
}

TEST_CASE("sperner bound values") {
  CHECK(sperner_bound(1) == 1);
  CHECK(sperner_bound(4) == 6);
  CHECK(sperner_bound(5) == 10);
  CHECK_THROWS_AS(sperner_bound(0), input_error);
}

TEST_CASE("level relation holds as subspaces on random families") {
  std::mt19937 rng(5150u);
  for (int iter = 0; iter < 40; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const LinearFamily family = random_family(rng, m, 4);
    LevelData data(family);
    const int s = family.size();
    for (int p = 1; p <= s; ++p) {
      Subspace rhs = data.level(p + 1);
      for (Mask mask = 1; mask < (Mask{1} << s); ++mask) {
        if (popcount(mask) == p) rhs = sum(rhs, data.w_space(mask));
      }
      CHECK(data.level(p) == rhs);
    }
  }
}

TEST_CASE("residual sums match the literal definition and bound the W dimension") {
  std::mt19937 rng(6001u);
  for (int iter = 0; iter < 30; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const LinearFamily family = random_family(rng, m, 4);
    LevelData data(family);
    const int s = family.size();
    for (Mask mask = 1; mask < (Mask{1} << s); ++mask) {
      const Subspace literal = literal_residual_sum(family, mask);
      CHECK(data.dim_residual_sum(mask) == literal.dim());
      // Relations: the residual sum sits inside V_I, and W_I tops out at the gap.
      CHECK(data.v_space(mask).contains(literal));
      CHECK(data.w_dim(mask) <= data.dim_intersection(mask) - literal.dim());
      // W is a genuine supplement of V inside L.
      CHECK(sum(data.v_space(mask), data.w_space(mask)) == data.intersection(mask));
      CHECK(intersect(data.v_space(mask), data.w_space(mask)).dim() == 0);
      // Every W_J with J containing I stays inside L_I.
      for (Mask larger = mask; larger < (Mask{1} << s); ++larger) {
        if (is_subset(mask, larger)) CHECK(data.intersection(mask).contains(data.w_space(larger)));
      }
    }
  }
}

TEST_CASE("extremality, adapted bases, and the verifier agree three ways") {
  std::mt19937 rng(31337u);
  int extremal_seen = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const LinearFamily family = random_family(rng, m, 4);
    const bool extremal = extremality(family).extremal;
    const auto basis = adapted_basis(family);
    CHECK(extremal == basis.has_value());
    if (basis.has_value()) {
      ++extremal_seen;
      CHECK(is_adapted(basis->vectors, family));
      CHECK(family.size() <= static_cast<int>(sperner_bound(m)));
    }
  }
  CHECK(extremal_seen > 0);
}

TEST_CASE("images of coordinate families stay extremal with matching data") {
  std::mt19937 rng(90210u);
  for (int iter = 0; iter < 25; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const TypeLambda type = random_type(rng, m, 4);
    const LinearFamily source = coordinate_family(type);
    const Matrix map = random_invertible(rng, m);
    const LinearFamily image = apply_linear_map(map, source);

    CHECK(extremality(image).extremal);
    CHECK(load_signature(image) == load_signature(source));

    const TypeLambda model = coordinate_model(image);
    CHECK(load_signature(coordinate_family(model)) == load_signature(source));
    for (int i = 0; i < image.size(); ++i) {
      CHECK(popcount(model.component(i)) == m - image.member(i).dim());
    }

    const Matrix iso = build_isomorphism(image, source);
    for (int i = 0; i < image.size(); ++i) {
      CHECK(apply_linear_map(iso, image.member(i)) == source.member(i));
    }
  }
}

TEST_CASE("composed isomorphisms fix every member") {
  std::mt19937 rng(112233u);
  for (int iter = 0; iter < 10; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const TypeLambda type = random_type(rng, m, 3);
    const LinearFamily f = apply_linear_map(random_invertible(rng, m), coordinate_family(type));
    const LinearFamily g = apply_linear_map(random_invertible(rng, m), coordinate_family(type));
    const Matrix forward = build_isomorphism(f, g);
    const Matrix backward = build_isomorphism(g, f);
    const Matrix round = backward * forward;
    for (int i = 0; i < f.size(); ++i) {
      CHECK(apply_linear_map(round, f.member(i)) == f.member(i));
    }
  }
}

TEST_CASE("compact signature reproduces literal loads on extremal families") {
  std::mt19937 rng(445566u);
  for (int iter = 0; iter < 20; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const TypeLambda type = random_type(rng, m, 3);
    const LinearFamily family = apply_linear_map(random_invertible(rng, m), coordinate_family(type));
    LevelData data(family);
    const LoadSignature sig = load_signature(data);
    const int s = family.size();

    // Every collection of distinct nonempty index sets, exhaustively for s <= 3.
    const int subsets = (1 << s) - 1;
    for (int pick = 1; pick < (1 << subsets); ++pick) {
      std::vector<Mask> collection;
      for (int i = 0; i < subsets; ++i) {
        if (pick & (1 << i)) collection.push_back(static_cast<Mask>(i + 1));
      }
      // Up-set union: J counts when it contains some member of the collection.
      int expected = 0;
      for (Mask j = 1; j <= static_cast<Mask>(subsets); ++j) {
        for (Mask entry : collection) {
          if (is_subset(entry, j)) {
            expected += sig.at(j);
            break;
          }
        }
      }
      CHECK(load_of_collection(data, collection) == expected);
    }
  }
}

TEST_CASE("adapted bases turn sums against intersections distributive") {
  std::mt19937 rng(778899u);
  for (int iter = 0; iter < 20; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const TypeLambda type = random_type(rng, m, 3);
    const LinearFamily family = apply_linear_map(random_invertible(rng, m), coordinate_family(type));
    LevelData data(family);
    const int s = family.size();
    const Mask full = (Mask{1} << s) - 1;
    for (int trial = 0; trial < 10; ++trial) {
      const Mask target = 1 + static_cast<Mask>(rng() % full);
      const Mask j1 = 1 + static_cast<Mask>(rng() % full);
      const Mask j2 = 1 + static_cast<Mask>(rng() % full);
      const Subspace lhs = intersect(sum(data.intersection(j1), data.intersection(j2)),
                                     data.intersection(target));
      const Subspace rhs = sum(intersect(data.intersection(j1), data.intersection(target)),
                               intersect(data.intersection(j2), data.intersection(target)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("three distinct lines in Q^3 are extremal iff they generate") {
  std::mt19937 rng(10101u);
  std::uniform_int_distribution<int> coord(-2, 2);
  int generated = 0;
  int coplanar = 0;
  for (int iter = 0; iter < 80; ++iter) {
    std::vector<Subspace> lines;
    // Half the samples are forced into a random plane to hit both sides.
    const bool force_plane = iter % 2 == 1;
    while (lines.size() < 3) {
      Vector direction(3);
      for (auto& x : direction) x = coord(rng);
      if (force_plane) direction[2] = 0;
      const Subspace line = canonicalize({direction}, 3);
      if (line.dim() != 1) continue;
      if (std::any_of(lines.begin(), lines.end(), [&](const Subspace& l) { return l == line; })) {
        continue;
      }
      lines.push_back(line);
    }
    const LinearFamily family(3, lines);
    const bool spans_all = level_space(family, 1) == Subspace::full(3);
    CHECK(extremality(family).extremal == spans_all);
    (spans_all ? generated : coplanar) += 1;
  }
  CHECK(generated > 0);
  CHECK(coplanar > 0);
}
