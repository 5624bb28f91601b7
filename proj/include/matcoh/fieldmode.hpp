#pragma once

#include "matcoh/intmatrix.hpp"
#include "matcoh/presented.hpp"

namespace matcoh {

// Coefficient field: p = 0 means the rationals, otherwise Z/p for prime p.
struct Field {
    long p = 0;
    static Field rationals() { return Field{0}; }
    static Field mod(long p) { return Field{p}; }
    bool is_rational() const { return p == 0; }
};

// Exact rank of an integer matrix over the chosen field. The mod-p path is a
// plain dense Gaussian elimination, independent of the Hermite/Smith code.
int rank_over_field(const IntMatrix& a, Field f);

// Dimension of coker(p.relations) tensored with the field.
int field_dim(const PresentedModule& p, Field f);

// Rank of the induced map on the quotients, over the field.
int field_induced_rank(const ModuleMap& m, Field f);

// dim ker(f_out) - rank(f_in) over the field, both maps induced on quotients.
int field_cohomology_dim(const ModuleMap& f_in, const ModuleMap& f_out, Field f);

// Whether dimensions t_1..t_m can sit in an exact sequence 0 -> T_1 -> ... ->
// T_m -> 0: all partial alternating sums are non-negative and the total is 0.
bool les_ranks_consistent(const std::vector<int>& dims);

}  // namespace matcoh
