#include "monocross/monomial_ideal.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "monocross/errors.hpp"

namespace monocross {

bool is_antichain(const std::vector<Mask>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && is_subset(sets[i], sets[j])) return false;
    }
  }
  return true;
}

std::vector<Mask> minimalize_antichain(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> minimal;
  for (Mask candidate : sets) {
    bool dominated = false;
    for (Mask other : sets) {
      if (other != candidate && is_subset(other, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(candidate);
  }
  return sorted_canonical(std::move(minimal));
}

namespace {

void validate_component_masks(int ambient, const std::vector<Mask>& sets, const char* what) {
  if (ambient < 1) throw input_error("ambient dimension must be positive");
  if (ambient > 32) throw resource_error("ambient dimension above the 32-variable mask limit");
  if (sets.empty()) throw input_error(std::string(what) + " list must be nonempty");
  for (Mask s : sets) {
    if (s == 0) throw input_error(std::string(what) + " must be a nonempty variable set");
    if (ambient < 32 && (s >> ambient) != 0) {
      throw input_error(std::string(what) + " uses a variable above the ambient dimension");
    }
  }
  if (!is_antichain(sets)) {
    throw input_error(std::string(what) + "s must be pairwise incomparable (antichain)");
  }
}

}  // namespace

TypeLambda::TypeLambda(int ambient, std::vector<Mask> components)
    : ambient_(ambient), components_(std::move(components)) {
  validate_component_masks(ambient_, components_, "component");
}

SquareFreeIdeal::SquareFreeIdeal(int ambient, std::vector<Mask> generators)
    : ambient_(ambient), generators_(std::move(generators)) {
  validate_component_masks(ambient_, generators_, "generator");
  generators_ = sorted_canonical(std::move(generators_));
}

SquareFreeIdeal SquareFreeIdeal::from_monomials(int ambient, std::vector<Mask> monomials) {
  return SquareFreeIdeal(ambient, minimalize_antichain(std::move(monomials)));
}

AssociatedMonomials associated_monomials_detailed(const TypeLambda& type) {
  if (type.ambient() > kMaxEnumerationBits) {
    throw resource_error("ambient dimension above the enumeration guard");
  }
  // One vanishing variable per component; repeated picks collapse in the mask.
  std::set<Mask> products = {0};
  for (Mask component : type.components()) {
    std::set<Mask> next;
    for (Mask partial : products) {
      for (int v : indices_from_mask(component)) next.insert(partial | single_bit(v));
    }
    products = std::move(next);
  }
  std::vector<Mask> raw(products.begin(), products.end());
  return AssociatedMonomials{
      SquareFreeIdeal(type.ambient(), minimalize_antichain(raw)),
      static_cast<unsigned long long>(raw.size()),
  };
}

SquareFreeIdeal associated_monomials(const TypeLambda& type) {
  return associated_monomials_detailed(type).ideal;
}

std::vector<Mask> minimal_transversals(const std::vector<Mask>& family, int nvars) {
  if (nvars < 1) throw input_error("variable count must be positive");
  if (nvars > kMaxEnumerationBits) throw resource_error("variable count above the enumeration guard");
  if (family.empty()) throw input_error("family must be nonempty");
  Mask universe = 0;
  for (Mask member : family) {
    if (member == 0) throw input_error("family members must be nonempty");
    if (nvars < 32 && (member >> nvars) != 0) throw input_error("family member out of range");
    universe |= member;
  }
  if (!is_antichain(family)) throw input_error("family must be an antichain");

  const auto hits_all = [&family](Mask candidate) {
    for (Mask member : family) {
      if ((candidate & member) == 0) return false;
    }
    return true;
  };

  std::vector<Mask> minimal;
  // Enumerate subsets of the union; minimal transversals use no other variables.
  Mask sub = universe;
  while (true) {
    if (sub != 0 && hits_all(sub)) {
      bool is_minimal = true;
      for (Mask rest = sub; rest != 0 && is_minimal; rest &= rest - 1) {
        const Mask without = sub & ~(rest & (~rest + 1));
        if (hits_all(without)) is_minimal = false;
      }
      if (is_minimal) minimal.push_back(sub);
    }
    if (sub == 0) break;
    sub = (sub - 1) & universe;
  }
  return sorted_canonical(std::move(minimal));
}

namespace {

// The three-case recursion on a nonempty antichain of nonempty variable sets.
std::vector<Mask> decompose_recursive(const std::vector<Mask>& generators) {
  bool all_single = true;
  Mask common = ~Mask{0};
  for (Mask g : generators) {
    if (popcount(g) != 1) all_single = false;
    common &= g;
  }
  // Every generator a single variable: the ideal is itself prime.
  if (all_single) {
    Mask all = 0;
    for (Mask g : generators) all |= g;
    return {all};
  }
  // A variable common to every generator splits off the principal prime.
  if (common != 0) {
    const Mask bit = single_bit(lowest_index(common));
    std::vector<Mask> reduced;
    reduced.reserve(generators.size());
    for (Mask g : generators) reduced.push_back(g & ~bit);  // nonempty: {v} alone is the all-single case
    std::vector<Mask> primes = decompose_recursive(minimalize_antichain(std::move(reduced)));
    primes.push_back(bit);
    return primes;
  }
  // Split on the smallest variable that sits in a generator with >= 2 variables.
  int split = 0;
  for (Mask g : generators) {
    if (popcount(g) < 2) continue;
    for (int v : indices_from_mask(g)) {
      if (split == 0 || v < split) split = v;
    }
  }
  const Mask bit = single_bit(split);
  std::vector<Mask> with_reduced;
  std::vector<Mask> without;
  for (Mask g : generators) {
    if (g & bit) {
      with_reduced.push_back(g & ~bit);
    } else {
      without.push_back(g);
    }
  }
  std::vector<Mask> branch_a = without;
  branch_a.push_back(bit);
  std::vector<Mask> branch_b = with_reduced;
  branch_b.insert(branch_b.end(), without.begin(), without.end());

  std::vector<Mask> primes = decompose_recursive(minimalize_antichain(std::move(branch_a)));
  std::vector<Mask> more = decompose_recursive(minimalize_antichain(std::move(branch_b)));
  primes.insert(primes.end(), more.begin(), more.end());
  return primes;
}

}  // namespace

std::vector<Mask> prime_decomposition(const SquareFreeIdeal& ideal) {
  return minimalize_antichain(decompose_recursive(ideal.generators()));
}

TypeLambda zero_set(const SquareFreeIdeal& ideal) {
  return TypeLambda(ideal.ambient(), prime_decomposition(ideal));
}

bool ideal_membership(const SparsePoly& f, const SquareFreeIdeal& ideal) {
  if (f.nvars() != ideal.ambient()) throw input_error("variable count mismatch");
  for (const auto& [mono, coeff] : f.terms()) {
    const Mask support = support_mask(mono);
    bool divisible = false;
    for (Mask g : ideal.generators()) {
      if (is_subset(g, support)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) return false;
  }
  return true;
}

}  // namespace monocross
