#pragma once

#include <string>
#include <vector>

#include "matcoh/complex.hpp"
#include "matcoh/quasirep.hpp"

namespace matcoh {

struct Verdict {
    std::string property;
    bool pass = true;
    std::string witness;  // cell, basis element or subset on failure

    static Verdict ok(std::string name) { return {std::move(name), true, ""}; }
    static Verdict bad(std::string name, std::string w) { return {std::move(name), false, std::move(w)}; }
};

// Chain-level short exact sequence 0 -> C^{i-1,j}(M/e) -> C^{i,j}(M) ->
// C^{i,j}(M\e) -> 0 for a non-coloop e: chain maps plus lattice exactness.
Verdict verify_ses(const QuasiRep& q, int e);

// For a coloop e under the saturation and splitting hypotheses: the modified
// restriction map gives an exact sequence onto C^{i,j}(M\e) (+) C^{i,j-1}(M\e),
// and H^{i,j}(M) ~ H^{i,j-1}(M\e) ~ H^{i,j-1}(M/e). A hypothesis failure is
// reported distinctly from an identity failure.
Verdict verify_coloop(const QuasiRep& q, int e);

// Rank-alternation constraint of the long exact sequence over Q.
Verdict verify_les_ranks(const QuasiRep& q, int e);

// Loop annihilation, parallel invariance, field Kunneth (run against a second
// instance), relaxation rank drop, and the Euler identity; each identity runs
// whenever its structural precondition applies.
std::vector<Verdict> verify_identities(const QuasiRep& q);

}  // namespace matcoh
