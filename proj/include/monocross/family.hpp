#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monocross/mask.hpp"
#include "monocross/monomial_ideal.hpp"
#include "monocross/subspace.hpp"

namespace monocross {

inline constexpr std::uint64_t kDefaultPermutationBudget = 1'000'000;

// A finite family L_1..L_s of linear subspaces of Q^m with no member contained
// in another (no immersed components). Order matters for loads and signatures.
class LinearFamily {
 public:
  LinearFamily(int ambient, std::vector<Subspace> members);

  // Drops members contained in another member (first occurrence wins on ties).
  static LinearFamily minimalized(int ambient, std::vector<Subspace> members);

  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(members_.size()); }
  const Subspace& member(int i) const { return members_[i]; }
  const std::vector<Subspace>& members() const { return members_; }

 private:
  int ambient_;
  std::vector<Subspace> members_;
};

struct LevelCheck {
  int level;  // p
  int lhs;    // dim L^(p)
  int rhs;    // dim L^(p+1) + sum over #I=p of (dim L_I - dim of the residual sum)
};

struct ExtremalityReport {
  bool extremal = false;
  std::vector<LevelCheck> levels;
  // First level with lhs != rhs; meaningful only when !extremal.
  LevelCheck first_failure() const;
};

// The level tables of a family: intersections L_I, level spaces L^(p), the
// subspaces V_I = L^(p+1) /\ L_I and their deterministic supplements W_I.
// Distinct subspaces are interned and binary operations memoized, so the
// 2^s tables stay cheap when many intersections coincide.
class LevelData {
 public:
  explicit LevelData(LinearFamily family);

  const LinearFamily& family() const { return family_; }
  int size() const { return s_; }
  int ambient() const { return m_; }

  const Subspace& intersection(Mask members) const;  // L_I, I nonempty
  int dim_intersection(Mask members) const;
  const Subspace& level(int p) const;  // 1 <= p <= s+1
  int dim_level(int p) const;

  const Subspace& v_space(Mask members);
  const Subspace& w_space(Mask members);
  int w_dim(Mask members);

  // dim of sum over {#J = #I, J != I} of L_J /\ L_I. The sum collapses to
  // sum over {j not in I} of L_(I + {j}): each L_(J u I) lies inside some
  // L_(I + {j}), and every L_(I + {j}) equals L_(J u I) for J = {j} u I - {min I}.
  int dim_residual_sum(Mask members);

  // dim(L_{I_1} + ... + L_{I_r}) through the memoized sum tables.
  int dim_collection_sum(const std::vector<Mask>& collection);

  ExtremalityReport extremality();

 private:
  int intern(const Subspace& s);
  std::optional<ExtremalityReport> extremality_cache_;
  int intersect_ids(int a, int b);
  int sum_ids(int a, int b);
  int fold_sum(std::vector<int> ids);
  int v_id(Mask members);
  int w_id(Mask members);

  LinearFamily family_;
  int s_;
  int m_;
  std::vector<Subspace> pool_;
  std::map<Matrix, int, MatrixLess> pool_index_;
  int zero_id_;
  std::vector<int> inter_id_;  // indexed by member mask, entry 0 unused
  std::vector<int> level_id_;  // indexed by p in 1..s+1
  std::map<std::pair<int, int>, int> inter_memo_;
  std::map<std::pair<int, int>, int> sum_memo_;
  std::map<std::pair<int, int>, int> suppl_memo_;
};

// L_I for a nonempty index set.
Subspace component_intersection(const LinearFamily& family, Mask members);

// L^(p) = sum of all L_I with #I = p; L^(s+1) is the zero subspace.
Subspace level_space(const LinearFamily& family, int p);

// Relation check at every level p = 1..s; extremal iff equality holds everywhere.
ExtremalityReport extremality(const LinearFamily& family);
bool is_extremal(const LinearFamily& family);

// Deterministic supplement W_I of V_I in L_I: greedy scan of L_I's canonical
// basis rows on top of a basis of V_I.
Subspace supplement(const LinearFamily& family, Mask members);

struct AdaptedBlock {
  Mask members;                // the index set I with dim W_I > 0
  std::vector<int> positions;  // 0-based positions of W_I's vectors in the basis
};

struct AdaptedBasis {
  std::vector<Vector> vectors;  // ordered basis of Q^m
  std::vector<AdaptedBlock> blocks;
};

// For an extremal family: concatenates the canonical bases of the W_I (blocks
// ordered by descending #I, then lexicographically) and completes with the
// standard-vector scan. Returns nothing when the family is not extremal.
std::optional<AdaptedBasis> adapted_basis(const LinearFamily& family);
std::optional<AdaptedBasis> adapted_basis(LevelData& data);

// Verifier for the defining property: the basis members lying inside L_i span
// L_i, for every i.
bool is_adapted(const std::vector<Vector>& basis, const LinearFamily& family);

// dim(L_{I_1} + ... + L_{I_r}) for distinct nonempty index sets.
int load_of_collection(const LinearFamily& family, const std::vector<Mask>& collection);
int load_of_collection(LevelData& data, const std::vector<Mask>& collection);

// The compact load of an extremal family: I -> dim W_I over all nonempty I.
struct LoadSignature {
  int members = 0;
  std::vector<int> w;  // indexed by member mask; w[0] unused (0)

  int at(Mask members_mask) const { return w[members_mask]; }
  bool operator==(const LoadSignature& other) const {
    return members == other.members && w == other.w;
  }
  bool operator!=(const LoadSignature& other) const { return !(*this == other); }
};

// Requires an extremal family (precondition_error otherwise).
LoadSignature load_signature(const LinearFamily& family);
LoadSignature load_signature(LevelData& data);

// Fixed ordering: identity permutation iff the signatures are equal.
// reorder=true: searches member permutations pi with w_F(I) = w_G(pi(I)),
// pruned by per-member invariants. Returns 1-based images pi(1..s), or nothing.
// Both families must be extremal (precondition_error otherwise).
std::optional<std::vector<int>> families_equivalent(
    const LinearFamily& f, const LinearFamily& g, bool reorder,
    std::uint64_t permutation_budget = kDefaultPermutationBudget);

// Invertible matrix (column-vector convention) mapping every member of f onto
// the corresponding member of g, built from matched adapted bases. Requires
// load_signature(f) == load_signature(g) (precondition_error otherwise).
Matrix build_isomorphism(const LinearFamily& f, const LinearFamily& g);
Matrix build_isomorphism(LevelData& f, LevelData& g);

// Image of a subspace / family under an invertible matrix (column convention).
Subspace apply_linear_map(const Matrix& map, const Subspace& space);
LinearFamily apply_linear_map(const Matrix& map, const LinearFamily& family);

// Reads the adapted basis as new coordinates: lambda_i lists the basis
// positions whose vectors lie outside L_i, so member i becomes the coordinate
// variety of lambda_i. Requires an extremal family.
TypeLambda coordinate_model(const LinearFamily& family);
TypeLambda coordinate_model(LevelData& data);

// The family of coordinate varieties of a type: member i spans the standard
// vectors away from lambda_i.
LinearFamily coordinate_family(const TypeLambda& type);

// Maximum size of an antichain on m elements: C(m, floor(m/2)).
unsigned long long sperner_bound(int m);

}  // namespace monocross
