#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monocross/family.hpp"

namespace monocross {

// Finite arithmetic shadow of a set germ with nonsingular irreducible
// components: the tangent spaces T_1..T_s plus the table of germ intersection
// dimensions I -> dim of the intersection of the components indexed by I.
// Dimensions not supplied default to the tangent intersection dimension.
class GermDescriptor {
 public:
  GermDescriptor(LinearFamily tangents, const std::vector<std::pair<Mask, int>>& germ_dims);

  const LinearFamily& tangents() const { return tangents_; }
  int ambient() const { return tangents_.ambient(); }
  int size() const { return tangents_.size(); }

  int germ_dim(Mask members) const { return germ_dims_[members]; }
  int tangent_dim(Mask members) const { return tangent_dims_[members]; }

 private:
  LinearFamily tangents_;
  std::vector<int> germ_dims_;    // indexed by member mask
  std::vector<int> tangent_dims_;
};

struct SingularityWitness {
  enum class Kind { not_extremal, dimension_mismatch };
  Kind kind;
  // kind == not_extremal: the first failing level check.
  LevelCheck level{};
  // kind == dimension_mismatch: the offending index set and both dimensions.
  Mask members = 0;
  int germ_dim = 0;
  int tangent_dim = 0;
};

struct SingularityReport {
  bool monomial = false;
  std::optional<SingularityWitness> witness;
};

// Arithmetic test: the germ is a monomial singularity iff the tangent family
// is extremal and every germ intersection dimension matches the tangent one.
// On failure reports the first violated condition.
SingularityReport is_monomial_singularity(const GermDescriptor& descriptor);

// Number of components of a pure-dimensional type (all lambda_i of equal
// cardinality); precondition_error on mixed cardinalities.
int multiplicity(const TypeLambda& type);

// Canonical arithmetic invariant of a type: the load signature of its
// coordinate family, minimized lexicographically over component relabelings.
// Two types get equal invariants exactly when their unions of coordinate
// varieties are linearly isomorphic.
struct TypeInvariant {
  int ambient = 0;
  int members = 0;
  std::vector<int> w;  // indexed by member mask under the minimizing relabeling

  bool operator==(const TypeInvariant& other) const {
    return ambient == other.ambient && members == other.members && w == other.w;
  }
  bool operator!=(const TypeInvariant& other) const { return !(*this == other); }
};

TypeInvariant type_invariant(const TypeLambda& type,
                             std::uint64_t permutation_budget = kDefaultPermutationBudget);

bool types_equivalent(const TypeLambda& a, const TypeLambda& b,
                      std::uint64_t permutation_budget = kDefaultPermutationBudget);

}  // namespace monocross
