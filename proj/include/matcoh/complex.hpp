#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matcoh/fieldmode.hpp"
#include "matcoh/presented.hpp"
#include "matcoh/quasirep.hpp"

namespace matcoh {

// Position of a generator e_{S,J}: the subset S and the strictly increasing
// multi-index J into the ambient generators.
struct BasisIndex {
    uint32_t s = 0;
    std::vector<int> j;
};

// Chain groups C^{i,j} with lifted differentials. Within a fixed (i,j) the
// blocks are ordered by ascending subset bitmask, and inside a block the
// multi-indices are lexicographic; every differential block is the identity
// on multi-indices times the sign eps^{S,e}.
class BigradedComplex {
public:
    int n = 0;
    int jmax = 0;
    int ambient_gens = 0;

    const PresentedModule& group(int i, int j) const { return groups_[idx(i, j)]; }
    const ModuleMap& differential(int i, int j) const { return diffs_[idx(i, j)]; }  // d: (i,j) -> (i+1,j)

    ModuleMap incoming(int i, int j) const;  // d^{i-1,j}, zero map when i == 0
    ModuleMap outgoing(int i, int j) const;  // d^{i,j}, zero map when i == n

    BasisIndex basis_index(int i, int j, int pos) const;
    int generator_position(int i, int j, uint32_t s, const std::vector<int>& jidx) const;
    const std::vector<uint32_t>& subsets(int i) const { return subsets_[i]; }

    friend BigradedComplex build_complex(const QuasiRep& q, int jmax, bool raw);

private:
    int idx(int i, int j) const { return i * (jmax + 1) + j; }
    std::vector<PresentedModule> groups_;
    std::vector<ModuleMap> diffs_;
    std::vector<std::vector<uint32_t>> subsets_;        // per i
    std::vector<std::vector<std::vector<int>>> combs_;  // per j: lexicographic multi-indices
};

// jmax < 0 selects the default: the minimal generator count of the ambient
// module. raw skips quasi-representation validation.
BigradedComplex build_complex(const QuasiRep& q, int jmax = -1, bool raw = false);

struct CohomologyTable {
    int n = 0, jmax = 0;
    std::map<std::pair<int, int>, FgaClass> cells;
    std::vector<Int> euler;  // graded Euler characteristic, coefficients in q
    std::string matroid_desc, quasirep_desc;

    const FgaClass& cell(int i, int j) const;
    bool same_cells(const CohomologyTable& other) const;
    std::string pretty() const;
};

CohomologyTable cohomology_table(const BigradedComplex& cx, const QuasiRep& q);

// Graded Euler characteristic from chain-group ranks over the quotient field.
std::vector<Int> graded_euler(const BigradedComplex& cx);

// Dimension table over a field from the plain Gaussian pipeline.
std::map<std::pair<int, int>, int> field_table(const BigradedComplex& cx, Field f);

// Verifies that the composite of consecutive differentials induces zero maps.
void check_d_squared(const BigradedComplex& cx);

// Primes among the given list that divide no chain-group torsion of cx.
std::vector<long> torsion_free_primes(const BigradedComplex& cx, const std::vector<long>& primes);

// dim_p H == free + tor_p(H^i) + tor_p(H^{i+1}) accounting between an integer
// table and a mod-p dimension table; valid at torsion-free primes.
bool uct_consistent(const CohomologyTable& t, const std::map<std::pair<int, int>, int>& dims_p,
                    long p, std::string* why = nullptr);

}  // namespace matcoh
