#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matcoh/matroid.hpp"
#include "matcoh/presented.hpp"

namespace matcoh {

// Assignment of a submodule of the ambient module N to every subset of the
// ground set. Values are stored on flats only and looked up through the
// closure; a submodule is kept as the canonical (Hermite) basis of its
// preimage lattice in the ambient generator coordinates, which always
// contains the ambient relation lattice.
struct QuasiRep {
    Matroid m;
    PresentedModule ambient;
    std::map<uint32_t, IntMatrix> flat_lattice;
    std::string descriptor;

    const IntMatrix& lattice(uint32_t s) const { return flat_lattice.at(closure(m, s)); }
    // rank over the quotient field of the assigned submodule
    int submodule_rank(uint32_t s) const;
};

struct QValidation {
    bool ok = true;
    std::string message;
    std::vector<uint32_t> witnesses;
};

QuasiRep canonical_from_matrix(const Matroid& m, const IntMatrix& a);
// Canonical representing matrices for the regular uniform families
// (k in {0, 1, n-1, n}); nullopt otherwise.
std::optional<IntMatrix> uniform_regular_matrix(int k, int n);
QuasiRep free_default(const Matroid& m);
// Free-default lattices scaled per generator, full module at E; produces
// torsion in the quotients when scalars exceed 1.
QuasiRep scaled_free(const Matroid& m, const std::vector<Int>& scalars);
QuasiRep diagonal_u22(const Int& a, const Int& b);
QuasiRep graphic_quasirep(const Graph& g);
// Explicit assignment: generator matrices per subset, canonicalized to flats.
QuasiRep from_assignment(const Matroid& m, const PresentedModule& ambient,
                         const std::map<uint32_t, IntMatrix>& generators,
                         const std::string& descriptor);

QValidation validate(const QuasiRep& q);

QuasiRep delete_q(const QuasiRep& q, int e);
QuasiRep contract_q(const QuasiRep& q, int e);
QuasiRep direct_sum_q(const QuasiRep& a, const QuasiRep& b);
QuasiRep relax_q(const QuasiRep& q, uint32_t s0);

// Ground-set reordering by perm (new position -> old element).
QuasiRep permute_q(const QuasiRep& q, const std::vector<int>& perm);

// Equivalent quasi-representation on a minimal ambient presentation.
QuasiRep minimize_q(const QuasiRep& q);

// Hypothesis checks for the coloop exact sequence.
bool saturation_test(const QuasiRep& q, int e);  // rho(E\e) saturated in N
bool splitting_test(const QuasiRep& q, int e);   // rho(E) = rho(E\e) (+) rho(e), rho(e) free

}  // namespace matcoh
