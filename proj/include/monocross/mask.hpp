#pragma once

#include <cstdint>
#include <vector>

namespace monocross {

// Subset of {1..n} as a bitmask; bit k-1 stands for index k. Used both for
// variable subsets (monomial supports, vanishing sets) and for family member
// index sets.
using Mask = std::uint32_t;

// Hard guard for routines that enumerate all 2^n subsets.
inline constexpr int kMaxEnumerationBits = 20;

int popcount(Mask m);
bool is_subset(Mask a, Mask b);

// 1-based index of the lowest set bit; m must be nonzero.
int lowest_index(Mask m);

Mask single_bit(int index);  // 1-based

// Builds a mask from 1-based indices; validates range [1, n] and rejects duplicates.
Mask mask_from_indices(const std::vector<int>& indices, int n);

// Ascending 1-based indices of the set bits.
std::vector<int> indices_from_mask(Mask m);

// Lexicographic order on the ascending index sequences: {1,4} before {2,3},
// and a proper prefix before its extensions.
bool lex_seq_less(Mask a, Mask b);

// Listing order used in reports: by cardinality, then lex_seq_less.
bool canonical_mask_less(Mask a, Mask b);

struct CanonicalMaskLess {
  bool operator()(Mask a, Mask b) const { return canonical_mask_less(a, b); }
};

std::vector<Mask> sorted_canonical(std::vector<Mask> masks);

}  // namespace monocross
