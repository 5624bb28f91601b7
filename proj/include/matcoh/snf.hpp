#pragma once

#include <vector>

#include "matcoh/intmatrix.hpp"

namespace matcoh {

// u * a * v = d with u, v unimodular and d diagonal, d1 | d2 | ..., di >= 0.
struct SmithDecomposition {
    IntMatrix u, d, v;
    std::vector<Int> diagonal() const;
};

SmithDecomposition snf(const IntMatrix& a);

// Diagonal only (same algorithm, transforms skipped).
std::vector<Int> snf_diagonal(const IntMatrix& a);

}  // namespace matcoh
