#include "matcoh/combinatorics.hpp"

#include <bit>

namespace matcoh {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<int> mask_elements(uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

uint32_t mask_of(const std::vector<int>& elems) {
    uint32_t m = 0;
    for (int e : elems) m |= (1u << e);
    return m;
}

int popcount(uint32_t mask) { return std::popcount(mask); }

int eps_sign(uint32_t s_mask, int e) {
    uint32_t below = s_mask & ((1u << e) - 1);
    return (std::popcount(below) & 1) ? -1 : 1;
}

int sort_wedge(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t k = i; k > 0 && idx[k - 1] >= idx[k]; --k) {
            if (idx[k - 1] == idx[k]) return 0;
            std::swap(idx[k - 1], idx[k]);
            sign = -sign;
        }
    return sign;
}

}  // namespace matcoh
