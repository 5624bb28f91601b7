#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matcoh/graph.hpp"
#include "matcoh/intmatrix.hpp"

namespace matcoh {

// Matroid on elements 0..n-1 (reported 1-based through `names`) with the full
// rank table indexed by subset bitmask. n is capped at 20.
struct Matroid {
    int n = 0;
    std::vector<uint8_t> rank_tbl;       // size 1 << n
    std::vector<std::string> names;      // reporting only; minors keep surviving names

    int rank(uint32_t s) const { return rank_tbl[s]; }
    int rank() const { return rank_tbl.empty() ? 0 : rank_tbl[(1u << n) - 1]; }
    int corank(uint32_t s) const { return rank() - rank(s); }
    uint32_t full_mask() const { return n ? (1u << n) - 1 : 0; }
    std::string subset_str(uint32_t s) const;
};

enum class ElementClass { Loop, Coloop, Ordinary };

struct AxiomReport {
    bool ok = true;
    int axiom = 0;          // 1 = bounds, 2 = monotone, 3 = submodular
    uint32_t s1 = 0, s2 = 0;
    std::string message;
};

Matroid from_uniform(int k, int n);
Matroid from_graph(const Graph& g);
Matroid from_matrix(const IntMatrix& a);  // columns indexed by the ground set
Matroid from_rank_table(int n, std::vector<uint8_t> table);
Matroid pappus_matroid();
Matroid non_pappus_matroid();

AxiomReport validate_axioms(const Matroid& m, uint64_t sample_seed = 1);

Matroid deletion(const Matroid& m, int e);
Matroid contraction(const Matroid& m, int e);
Matroid direct_sum(const Matroid& a, const Matroid& b);

std::vector<uint32_t> circuit_hyperplanes(const Matroid& m);
Matroid relax(const Matroid& m, uint32_t s0);

bool is_loop(const Matroid& m, int e);
bool is_coloop(const Matroid& m, int e);
ElementClass classify_element(const Matroid& m, int e);
std::vector<std::pair<int, int>> parallel_pairs(const Matroid& m);
uint32_t closure(const Matroid& m, uint32_t s);
std::vector<uint32_t> flats(const Matroid& m);

// chi(M; lambda), coefficients ascending in lambda.
std::vector<Int> char_poly(const Matroid& m);

bool isomorphic(const Matroid& a, const Matroid& b);  // exhaustive, n <= 8

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> poly_sub(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> poly_add(const std::vector<Int>& a, const std::vector<Int>& b);
// Substitute lambda = 1 + q.
std::vector<Int> poly_shift_one_plus_q(const std::vector<Int>& p);
Int poly_eval(const std::vector<Int>& p, const Int& x);
std::string poly_str(const std::vector<Int>& p, const std::string& var);

}  // namespace matcoh
