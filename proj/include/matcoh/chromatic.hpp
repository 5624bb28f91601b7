#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matcoh/complex.hpp"
#include "matcoh/graph.hpp"

namespace matcoh {

// Enhanced state: an edge subset S with each component of [G:S] colored 1 or
// x. The coloring is stored as the set of minimal vertices of the x-colored
// components.
struct EnhancedState {
    uint32_t edges = 0;
    uint32_t xmins = 0;
};

// Free bigraded complex on enhanced states; the differential merges
// components with multiplication in Z[x]/(x^2).
class ChromaticComplex {
public:
    Graph g;
    int jmax = 0;

    const std::vector<EnhancedState>& basis(int i, int j) const { return basis_[idx(i, j)]; }
    int rank(int i, int j) const { return int(basis_[idx(i, j)].size()); }
    const IntMatrix& differential(int i, int j) const { return diffs_[idx(i, j)]; }
    int state_position(int i, int j, const EnhancedState& st) const;

    PresentedModule group(int i, int j) const { return PresentedModule::free_module(rank(i, j)); }
    ModuleMap incoming(int i, int j) const;
    ModuleMap outgoing(int i, int j) const;

    friend ChromaticComplex chromatic_complex(const Graph& g);

private:
    int idx(int i, int j) const { return i * (jmax + 1) + j; }
    std::vector<std::vector<EnhancedState>> basis_;
    std::vector<IntMatrix> diffs_;
};

ChromaticComplex chromatic_complex(const Graph& g);

CohomologyTable chromatic_cohomology(const Graph& g);

// Chain maps between the chromatic complex and the bigraded complex of the
// graphic matroid with its graphic quasi-representation.
struct ChainMaps {
    ChromaticComplex cg;
    BigradedComplex cm;
    // theta^{i,j}: C^{i,j}(G) -> C^{i,j}(M(G))
    std::map<std::pair<int, int>, IntMatrix> theta;
    // tau^{i,j-1}: C^{i,j-1}(M(G)) -> C^{i,j}(G), keyed by (i, j)
    std::map<std::pair<int, int>, IntMatrix> tau;
};

ChainMaps comparison_maps(const Graph& g);

struct ChromaticVerdict {
    bool pass = true;
    std::string detail;
};

// theta and tau commute with the differentials (as induced maps).
ChromaticVerdict check_chain_maps(const ChainMaps& maps);
// 0 -> C^{i,j-1}(M(G)) -> C^{i,j}(G) -> C^{i,j}(M(G)) -> 0 exact per cell
// (connected graphs).
ChromaticVerdict check_ses_exactness(const ChainMaps& maps);
// Rank-alternation constraint of the long exact sequence over Q, plus the
// empirical window where H^{i,j}(M(G)) matches H^{i+1,j-1}(M(G)).
ChromaticVerdict les_rank_check(const Graph& g);

}  // namespace matcoh
