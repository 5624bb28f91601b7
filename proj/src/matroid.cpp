#include "matcoh/matroid.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "matcoh/combinatorics.hpp"
#include "matcoh/presented.hpp"

namespace matcoh {

namespace {

std::vector<std::string> default_names(int n) {
    std::vector<std::string> v(n);
    for (int i = 0; i < n; ++i) v[i] = std::to_string(i + 1);
    return v;
}

void check_size(int n) {
    if (n < 0 || n > 20) throw CheckError("ground set size out of range (0..20)");
}

}  // namespace

std::string Matroid::subset_str(uint32_t s) const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int e : mask_elements(s)) {
        if (!first) os << ",";
        os << (e < int(names.size()) ? names[e] : std::to_string(e + 1));
        first = false;
    }
    os << "}";
    return os.str();
}

Matroid from_uniform(int k, int n) {
    check_size(n);
    if (k < 0 || k > n) throw CheckError("uniform matroid requires 0 <= k <= n");
    Matroid m;
    m.n = n;
    m.names = default_names(n);
    m.rank_tbl.resize(1u << n);
    for (uint32_t s = 0; s < (1u << n); ++s) m.rank_tbl[s] = uint8_t(std::min(k, popcount(s)));
    return m;
}

Matroid from_graph(const Graph& g) {
    check_size(g.ne());
    Matroid m;
    m.n = g.ne();
    m.names = default_names(m.n);
    m.rank_tbl.resize(1u << m.n);
    for (uint32_t s = 0; s < (1u << m.n); ++s)
        m.rank_tbl[s] = uint8_t(g.nv - g.component_count(s));
    return m;
}

Matroid from_matrix(const IntMatrix& a) {
    check_size(a.cols());
    Matroid m;
    m.n = a.cols();
    m.names = default_names(m.n);
    m.rank_tbl.resize(1u << m.n);
    for (uint32_t s = 0; s < (1u << m.n); ++s)
        m.rank_tbl[s] = uint8_t(rank_rational(a.columns(mask_elements(s))));
    return m;
}

Matroid from_rank_table(int n, std::vector<uint8_t> table) {
    check_size(n);
    if (table.size() != (size_t(1) << n)) throw CheckError("rank table has wrong size");
    Matroid m;
    m.n = n;
    m.names = default_names(n);
    m.rank_tbl = std::move(table);
    return m;
}

Matroid pappus_matroid() {
    static const uint32_t lines[] = {
        // {1,2,3} {1,4,8} {1,5,9} {2,4,7} {2,6,9} {3,5,7} {3,6,8} {4,5,6} {7,8,9}
        0b000000111, 0b010001001, 0b100010001, 0b001001010,
        0b100100010, 0b001010100, 0b010100100, 0b000111000, 0b111000000};
    Matroid m;
    m.n = 9;
    m.names = default_names(9);
    m.rank_tbl.resize(1u << 9);
    for (uint32_t s = 0; s < (1u << 9); ++s) {
        int c = popcount(s);
        if (c <= 2) {
            m.rank_tbl[s] = uint8_t(c);
            continue;
        }
        bool line = false;
        for (uint32_t l : lines) line = line || s == l;
        m.rank_tbl[s] = line ? 2 : 3;
    }
    return m;
}

Matroid non_pappus_matroid() {
    return relax(pappus_matroid(), 0b000111000);  // {4,5,6}
}

AxiomReport validate_axioms(const Matroid& m, uint64_t sample_seed) {
    uint32_t full = m.n ? (1u << m.n) : 1;
    if (m.rank_tbl.size() != full) return {false, 0, 0, 0, "rank table size mismatch"};
    if (m.rank_tbl[0] != 0) return {false, 1, 0, 0, "rank(empty set) != 0"};
    for (uint32_t s = 0; s < full; ++s) {
        if (m.rank(s) > popcount(s))
            return {false, 1, s, 0, "rank exceeds cardinality at " + m.subset_str(s)};
        for (int e = 0; e < m.n; ++e) {
            if (s & (1u << e)) continue;
            if (m.rank(s | (1u << e)) < m.rank(s))
                return {false, 2, s, s | (1u << e), "rank not monotone at " + m.subset_str(s)};
        }
    }
    auto submodular_at = [&](uint32_t s1, uint32_t s2) {
        return m.rank(s1) + m.rank(s2) >= m.rank(s1 & s2) + m.rank(s1 | s2);
    };
    if (m.n <= 12) {
        for (uint32_t s1 = 0; s1 < full; ++s1)
            for (uint32_t s2 = s1; s2 < full; ++s2)
                if (!submodular_at(s1, s2))
                    return {false, 3, s1, s2,
                            "submodularity fails at " + m.subset_str(s1) + ", " + m.subset_str(s2)};
    } else {
        std::mt19937_64 rng(sample_seed);
        for (int t = 0; t < 2'000'000; ++t) {
            uint32_t s1 = uint32_t(rng()) & (full - 1);
            uint32_t s2 = uint32_t(rng()) & (full - 1);
            if (!submodular_at(s1, s2))
                return {false, 3, s1, s2,
                        "submodularity fails at " + m.subset_str(s1) + ", " + m.subset_str(s2)};
        }
    }
    return {};
}

namespace {

// Rebuilds a rank table over E \ {e} from a lookup on the original masks.
template <typename F>
Matroid minor_table(const Matroid& m, int e, F&& old_rank) {
    Matroid out;
    out.n = m.n - 1;
    out.rank_tbl.resize(1u << out.n);
    for (int i = 0; i < m.n; ++i)
        if (i != e) out.names.push_back(m.names[i]);
    uint32_t low = (1u << e) - 1;
    for (uint32_t s = 0; s < (1u << out.n); ++s) {
        uint32_t old_mask = (s & low) | ((s & ~low) << 1);
        out.rank_tbl[s] = uint8_t(old_rank(old_mask));
    }
    return out;
}

}  // namespace

Matroid deletion(const Matroid& m, int e) {
    if (e < 0 || e >= m.n) throw CheckError("deletion: element out of range");
    return minor_table(m, e, [&](uint32_t s) { return m.rank(s); });
}

Matroid contraction(const Matroid& m, int e) {
    if (e < 0 || e >= m.n) throw CheckError("contraction: element out of range");
    uint32_t em = 1u << e;
    return minor_table(m, e, [&](uint32_t s) { return m.rank(s | em) - m.rank(em); });
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    check_size(a.n + b.n);
    Matroid m;
    m.n = a.n + b.n;
    m.names = a.names;
    m.names.insert(m.names.end(), b.names.begin(), b.names.end());
    m.rank_tbl.resize(1u << m.n);
    uint32_t amask = a.n ? (1u << a.n) - 1 : 0;
    for (uint32_t s = 0; s < (1u << m.n); ++s)
        m.rank_tbl[s] = uint8_t(a.rank(s & amask) + b.rank(s >> a.n));
    return m;
}

std::vector<uint32_t> circuit_hyperplanes(const Matroid& m) {
    std::vector<uint32_t> out;
    int r = m.rank();
    for (uint32_t s = 0; s < (1u << m.n); ++s) {
        int c = popcount(s);
        if (m.rank(s) != r - 1 || c != r) continue;  // rank(S0) = r-1 = |S0|-1
        bool ok = true;
        for (int e = 0; e < m.n && ok; ++e) {
            if (s & (1u << e))
                ok = m.rank(s & ~(1u << e)) == r - 1;  // deleting keeps rank (circuit)
            else
                ok = m.rank(s | (1u << e)) == r;  // extending jumps (hyperplane)
        }
        if (ok) out.push_back(s);
    }
    return out;
}

Matroid relax(const Matroid& m, uint32_t s0) {
    auto chs = circuit_hyperplanes(m);
    if (std::find(chs.begin(), chs.end(), s0) == chs.end())
        throw CheckError("relax: " + m.subset_str(s0) + " is not a circuit-hyperplane");
    Matroid out = m;
    out.rank_tbl[s0] = uint8_t(m.rank());
    return out;
}

bool is_loop(const Matroid& m, int e) { return m.rank(1u << e) == 0; }

bool is_coloop(const Matroid& m, int e) { return m.corank(m.full_mask() & ~(1u << e)) == 1; }

ElementClass classify_element(const Matroid& m, int e) {
    if (e < 0 || e >= m.n) throw CheckError("classify_element: element out of range");
    if (is_loop(m, e)) return ElementClass::Loop;
    if (is_coloop(m, e)) return ElementClass::Coloop;
    return ElementClass::Ordinary;
}

std::vector<std::pair<int, int>> parallel_pairs(const Matroid& m) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < m.n; ++a)
        for (int b = a + 1; b < m.n; ++b)
            if (!is_loop(m, a) && !is_loop(m, b) && m.rank((1u << a) | (1u << b)) == 1)
                out.push_back({a, b});
    return out;
}

uint32_t closure(const Matroid& m, uint32_t s) {
    uint32_t cl = s;
    for (int e = 0; e < m.n; ++e)
        if (!(s & (1u << e)) && m.rank(s | (1u << e)) == m.rank(s)) cl |= (1u << e);
    return cl;
}

std::vector<uint32_t> flats(const Matroid& m) {
    std::vector<uint32_t> out;
    for (uint32_t s = 0; s < (1u << m.n); ++s)
        if (closure(m, s) == s) out.push_back(s);
    return out;
}

std::vector<Int> char_poly(const Matroid& m) {
    std::vector<Int> p(m.rank() + 1);
    for (uint32_t s = 0; s < (1u << m.n); ++s) {
        int c = m.corank(s);
        p[c] += (popcount(s) & 1) ? -1 : 1;
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool isomorphic(const Matroid& a, const Matroid& b) {
    if (a.n != b.n || a.rank() != b.rank()) return false;
    if (a.n > 8) throw CheckError("isomorphic: exhaustive search capped at n <= 8");
    std::vector<int> perm(a.n);
    for (int i = 0; i < a.n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (uint32_t s = 0; s < (1u << a.n) && ok; ++s) {
            uint32_t t = 0;
            for (int i = 0; i < a.n; ++i)
                if (s & (1u << i)) t |= (1u << perm[i]);
            ok = a.rank(s) == b.rank(t);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> p(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::vector<Int> poly_add(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> p = a;
    if (p.size() < b.size()) p.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) p[i] += b[i];
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::vector<Int> poly_sub(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> p = a;
    if (p.size() < b.size()) p.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) p[i] -= b[i];
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::vector<Int> poly_shift_one_plus_q(const std::vector<Int>& p) {
    std::vector<Int> out;
    std::vector<Int> pw = {1};  // (1+q)^k
    const std::vector<Int> base = {1, 1};
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] != 0) {
            std::vector<Int> term = pw;
            for (auto& c : term) c *= p[k];
            out = poly_add(out, term);
        }
        pw = poly_mul(pw, base);
    }
    return out;
}

Int poly_eval(const std::vector<Int>& p, const Int& x) {
    Int v = 0;
    for (size_t k = p.size(); k-- > 0;) v = v * x + p[k];
    return v;
}

std::string poly_str(const std::vector<Int>& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0) continue;
        Int c = p[k];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int ac = c < 0 ? Int(-c) : c;
        if (ac != 1 || k == 0) os << ac;
        if (k >= 1) {
            os << var;
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace matcoh
