#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "matcoh/intmatrix.hpp"

namespace matcoh {

// Raised when a stated precondition fails in a checkable way (ill-defined
// map, nonzero composite, invalid input); the message carries the witness.
class CheckError : public std::runtime_error {
public:
    explicit CheckError(const std::string& msg) : std::runtime_error(msg) {}
};

// Isomorphism class of a finitely generated abelian group: free rank plus
// torsion invariant factors d1 | d2 | ..., each di >= 2. Canonical, so
// equality of values is isomorphism of groups.
struct FgaClass {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const FgaClass&) const = default;
    std::string str() const;  // e.g. "Z^2 + Z/2 + Z/6", "Z", "0"
};

// Finitely generated abelian group presented as coker(relations); generator
// order is fixed and significant. relations has `gens` rows, one column per
// relation.
struct PresentedModule {
    int gens = 0;
    IntMatrix relations;  // gens x m

    static PresentedModule free_module(int n) { return PresentedModule{n, IntMatrix(n, 0)}; }
    static PresentedModule zero() { return PresentedModule{0, IntMatrix(0, 0)}; }
    bool operator==(const PresentedModule&) const = default;
};

// Homomorphism of presented modules given by a lift on generators.
struct ModuleMap {
    PresentedModule source, target;
    IntMatrix lift;  // target.gens x source.gens

    static ModuleMap zero_from(const PresentedModule& target) {
        return ModuleMap{PresentedModule::zero(), target, IntMatrix(target.gens, 0)};
    }
    static ModuleMap zero_to(const PresentedModule& source) {
        return ModuleMap{source, PresentedModule::zero(), IntMatrix(0, source.gens)};
    }
};

// Every column of lift * source.relations must lie in the relation lattice of
// the target.
bool is_well_defined(const ModuleMap& f);

FgaClass cokernel_class(const PresentedModule& p);

// j-th exterior power: generators are the lexicographic j-subsets of the
// input generators; each input relation r and (j-1)-subset J' contribute the
// expansion of r wedge g_{J'}.
PresentedModule exterior_power(const PresentedModule& p, int j);

// Lift entries are the j x j minors of the input lift.
ModuleMap exterior_map(const ModuleMap& f, int j);

// Isomorphism class of ker(f_out) / im(f_in) where f_in.target == f_out.source.
// Throws CheckError when the composite is nonzero at module level.
FgaClass cohomology_at(const ModuleMap& f_in, const ModuleMap& f_out);

// Minimal re-presentation: free generators first, then torsion generators
// with diagonal relations. to_min * from_min = identity on the new module.
struct MinimalPresentation {
    PresentedModule module;
    IntMatrix to_min;    // new gens x old gens
    IntMatrix from_min;  // old gens x new gens
};

MinimalPresentation minimize(const PresentedModule& p);

std::string fga_to_string(const FgaClass& c);

}  // namespace matcoh
