#include "monocross/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "monocross/errors.hpp"

namespace monocross {

GermDescriptor::GermDescriptor(LinearFamily tangents,
                               const std::vector<std::pair<Mask, int>>& germ_dims)
    : tangents_(std::move(tangents)) {
  const int s = tangents_.size();
  LevelData data(tangents_);
  tangent_dims_.assign(std::size_t{1} << s, 0);
  for (Mask mask = 1; mask < tangent_dims_.size(); ++mask) {
    tangent_dims_[mask] = data.dim_intersection(mask);
  }
  germ_dims_ = tangent_dims_;
  std::vector<bool> listed(tangent_dims_.size(), false);
  for (const auto& [mask, dim] : germ_dims) {
    if (mask == 0 || (s < 32 && (mask >> s) != 0)) {
      throw input_error("germ dimension index set out of range");
    }
    if (listed[mask]) throw input_error("duplicate germ dimension entry");
    if (dim < 0) throw input_error("germ dimensions must be nonnegative");
    listed[mask] = true;
    germ_dims_[mask] = dim;
  }
  for (int i = 0; i < s; ++i) {
    const Mask bit = single_bit(i + 1);
    if (germ_dims_[bit] != tangent_dims_[bit]) {
      throw input_error("germ dimension of component " + std::to_string(i + 1) +
                        " must equal its tangent dimension");
    }
  }
  for (Mask mask = 1; mask < germ_dims_.size(); ++mask) {
    for (int j = 0; j < s; ++j) {
      const Mask bit = single_bit(j + 1);
      if ((mask & bit) != 0) continue;
      if (germ_dims_[mask | bit] > germ_dims_[mask]) {
        throw input_error("germ dimensions must be nonincreasing under larger index sets");
      }
    }
  }
}

SingularityReport is_monomial_singularity(const GermDescriptor& descriptor) {
  LevelData data(descriptor.tangents());
  const ExtremalityReport report = data.extremality();
  if (!report.extremal) {
    SingularityWitness witness;
    witness.kind = SingularityWitness::Kind::not_extremal;
    witness.level = report.first_failure();
    return SingularityReport{false, witness};
  }
  const int s = descriptor.size();
  std::vector<Mask> masks;
  for (Mask mask = 1; mask < (Mask{1} << s); ++mask) masks.push_back(mask);
  masks = sorted_canonical(std::move(masks));
  for (Mask mask : masks) {
    const int germ = descriptor.germ_dim(mask);
    const int tangent = descriptor.tangent_dim(mask);
    if (germ != tangent) {
      SingularityWitness witness;
      witness.kind = SingularityWitness::Kind::dimension_mismatch;
      witness.members = mask;
      witness.germ_dim = germ;
      witness.tangent_dim = tangent;
      return SingularityReport{false, witness};
    }
  }
  return SingularityReport{true, std::nullopt};
}

int multiplicity(const TypeLambda& type) {
  const int cardinality = popcount(type.component(0));
  for (Mask lambda : type.components()) {
    if (popcount(lambda) != cardinality) {
      throw precondition_error("multiplicity requires a pure-dimensional type");
    }
  }
  return type.size();
}

namespace {

// Branch-and-bound lexicographic minimization of the signature vector over
// member relabelings. The encoding lists w over masks in numeric order, so
// after placing members 1..k every entry below 2^k is decided and forms a
// contiguous comparable prefix.
struct InvariantSearch {
  int s;
  const LoadSignature& signature;
  std::uint64_t budget;
  std::uint64_t used = 0;
  std::vector<int> source;  // source[k] = 0-based old index placed at new position k+1
  std::vector<bool> taken;
  std::vector<int> current;  // encoding under the partial placement
  std::vector<int> best;

  void run() {
    source.resize(s);
    for (int i = 0; i < s; ++i) source[i] = i;
    current.assign(std::size_t{1} << s, 0);
    for (Mask mask = 1; mask < current.size(); ++mask) current[mask] = signature.at(mask);
    best = current;  // identity labeling seeds the incumbent
    taken.assign(s, false);
    source.assign(s, -1);
    descend(0, true);
  }

  void fill_block(int position) {
    const Mask lo = Mask{1} << position;
    const Mask hi = lo << 1;
    for (Mask mask = lo; mask < hi; ++mask) {
      Mask old_mask = 0;
      for (Mask rest = mask; rest != 0; rest &= rest - 1) {
        old_mask |= single_bit(source[lowest_index(rest) - 1] + 1);
      }
      current[mask] = signature.at(old_mask);
    }
  }

  // prefix_equal: entries below 2^position coincide with the incumbent's.
  // Otherwise they are strictly smaller (larger prefixes are pruned).
  // Returns true when the incumbent was replaced somewhere in this subtree.
  bool descend(int position, bool prefix_equal) {
    if (position == s) {
      if (!prefix_equal) {
        best = current;
        return true;
      }
      return false;
    }
    bool replaced = false;
    for (int candidate = 0; candidate < s; ++candidate) {
      if (taken[candidate]) continue;
      if (++used > budget) throw resource_error("permutation search exceeded its budget");
      source[position] = candidate;
      taken[candidate] = true;
      fill_block(position);
      int relation = -1;  // against the incumbent block; meaningful when prefix_equal
      if (prefix_equal) {
        relation = 0;
        const Mask lo = Mask{1} << position;
        const Mask hi = lo << 1;
        for (Mask mask = lo; mask < hi; ++mask) {
          if (current[mask] != best[mask]) {
            relation = current[mask] < best[mask] ? -1 : 1;
            break;
          }
        }
      }
      if (!(prefix_equal && relation > 0)) {
        if (descend(position + 1, prefix_equal && relation == 0)) {
          replaced = true;
          // The new incumbent came from this subtree, so it shares the
          // decided prefix; remaining siblings compare against it tightly.
          prefix_equal = true;
        }
      }
      taken[candidate] = false;
    }
    source[position] = -1;
    return replaced;
  }
};

}  // namespace

TypeInvariant type_invariant(const TypeLambda& type, std::uint64_t permutation_budget) {
  LinearFamily family = coordinate_family(type);
  LevelData data(family);
  const LoadSignature signature = load_signature(data);  // coordinate families are extremal
  InvariantSearch search{type.size(), signature, permutation_budget, 0, {}, {}, {}, {}};
  search.run();
  TypeInvariant invariant;
  invariant.ambient = type.ambient();
  invariant.members = type.size();
  invariant.w = std::move(search.best);
  return invariant;
}

bool types_equivalent(const TypeLambda& a, const TypeLambda& b, std::uint64_t permutation_budget) {
  if (a.ambient() != b.ambient()) return false;
  if (a.size() != b.size()) return false;
  return type_invariant(a, permutation_budget) == type_invariant(b, permutation_budget);
}

}  // namespace monocross
