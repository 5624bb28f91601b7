#pragma once

#include <cstdint>
#include <vector>

namespace matcoh {

long long binomial(int n, int k);

// Strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);

// Elements of a bitmask in ascending order.
std::vector<int> mask_elements(uint32_t mask);

uint32_t mask_of(const std::vector<int>& elems);

int popcount(uint32_t mask);

// Sign convention for adding e to S: -1 when |{s in S : s < e}| is odd.
int eps_sign(uint32_t s_mask, int e);

// Sorts a wedge index list in place; returns the permutation sign, or 0 when
// an index repeats.
int sort_wedge(std::vector<int>& idx);

}  // namespace matcoh
