#pragma once

#include <optional>
#include <vector>

#include "matcoh/intmatrix.hpp"

namespace matcoh {

// Column-style Hermite normal form. Columns of h are a canonical basis of the
// column lattice of the input: pivot rows strictly increase, pivots are
// positive, entries of earlier columns in a pivot row are reduced into
// [0, pivot). Zero columns are dropped, so lattices are equal iff their hnf
// matrices are equal.
struct HnfResult {
    IntMatrix h;
    std::vector<int> pivot_rows;
};

// Variant keeping the unimodular column transform: a * u = [h | 0].
struct HnfTransform {
    IntMatrix h;  // same column count as input, trailing columns zero
    IntMatrix u;
    int rank = 0;
    std::vector<int> pivot_rows;
};

HnfResult hnf(const IntMatrix& a);
HnfTransform hnf_transform(const IntMatrix& a);

// Basis of {x : a*x = 0} over the integers; always a saturated lattice.
IntMatrix kernel(const IntMatrix& a);

// Integral solution of a*x = b, if one exists.
std::optional<std::vector<Int>> solve_integral(const IntMatrix& a, const std::vector<Int>& b);

// Solves a*X = B column by column; nullopt if any column has no solution.
std::optional<IntMatrix> solve_integral_cols(const IntMatrix& a, const IntMatrix& b);

bool lattice_contains(const IntMatrix& a, const std::vector<Int>& v);
bool lattice_subset(const IntMatrix& a, const IntMatrix& b);  // colLat(a) subset of colLat(b)
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);
IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

// Basis of {x : f*x lies in the column lattice of l}. Contains every integer
// solution; in particular preimage_lattice(f, empty) is the kernel of f.
IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& l);

// (Q-span of colLat(a)) intersected with Z^rows.
IntMatrix saturation(const IntMatrix& a);

}  // namespace matcoh
