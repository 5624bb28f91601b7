#pragma once

#include <map>
#include <string>

#include "matcoh/intmatrix.hpp"

namespace matcoh {

// Central hyperplane arrangement given by integer normal vectors, read as
// rational data: hyperplane p is the orthogonal complement of column p.
struct Arrangement {
    int dim = 0;
    IntMatrix normals;  // dim rows, one column per hyperplane

    int size() const { return normals.cols(); }
};

struct ArrTable {
    int n = 0, jmax = 0;
    std::map<std::pair<int, int>, int> dims;
    int dim(int i, int j) const {
        auto it = dims.find({i, j});
        return it == dims.end() ? 0 : it->second;
    }
};

struct ArrVerdict {
    bool pass = true;
    std::string detail;
};

// Cohomology dimension table of the exterior-intersection complex over Q.
// With essentialize set, every intersection is taken inside the span of the
// normals (the quotient by the center).
ArrTable arr_cohomology(const Arrangement& a, bool essentialize = false);

// d^2 = 0 for the assembled rational differentials.
ArrVerdict arr_d_squared(const Arrangement& a);

// Dimension tables agree with the matroid pipeline over Q in every bidegree.
ArrVerdict compare_with_matroid(const Arrangement& a);

// Rank consistency of the long exact sequence linking an arrangement with a
// one-dimensional center to its essentialization.
ArrVerdict essentialization_les(const Arrangement& a);

}  // namespace matcoh
