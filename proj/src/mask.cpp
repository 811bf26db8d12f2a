#include "monocross/mask.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "monocross/errors.hpp"

namespace monocross {

int popcount(Mask m) { return std::popcount(m); }

bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

int lowest_index(Mask m) { return std::countr_zero(m) + 1; }

Mask single_bit(int index) { return Mask{1} << (index - 1); }

Mask mask_from_indices(const std::vector<int>& indices, int n) {
  Mask result = 0;
  for (int index : indices) {
    if (index < 1 || index > n) {
      throw input_error("index " + std::to_string(index) + " out of range 1.." + std::to_string(n));
    }
    const Mask bit = single_bit(index);
    if (result & bit) throw input_error("duplicate index " + std::to_string(index));
    result |= bit;
  }
  return result;
}

std::vector<int> indices_from_mask(Mask m) {
  std::vector<int> result;
  while (m != 0) {
    result.push_back(lowest_index(m));
    m &= m - 1;
  }
  return result;
}

bool lex_seq_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int la = lowest_index(a);
    const int lb = lowest_index(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool canonical_mask_less(Mask a, Mask b) {
  const int pa = popcount(a);
  const int pb = popcount(b);
  if (pa != pb) return pa < pb;
  return lex_seq_less(a, b);
}

std::vector<Mask> sorted_canonical(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), canonical_mask_less);
  return masks;
}

}  // namespace monocross
