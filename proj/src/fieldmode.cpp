#include "matcoh/fieldmode.hpp"

#include <stdexcept>
#include <vector>

namespace matcoh {

namespace {

long long mod_reduce(const Int& x, long p) {
    Int r = x % p;
    if (r < 0) r += p;
    return r.convert_to<long long>();
}

long long inv_mod(long long a, long p) {
    long long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible (p not prime?)");
    return ((t % p) + p) % p;
}

int rank_mod_p(const IntMatrix& a, long p) {
    int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = mod_reduce(a(i, j), p);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        long long inv = inv_mod(m[rank][c], p);
        for (int j = c; j < cols; ++j) m[rank][j] = (__int128(m[rank][j]) * inv) % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            long long f = m[i][c];
            for (int j = c; j < cols; ++j) {
                long long v = m[i][j] - (__int128(f) * m[rank][j]) % p;
                m[i][j] = (v % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_over_field(const IntMatrix& a, Field f) {
    if (f.is_rational()) return rank_rational(a);
    if (f.p < 2) throw std::invalid_argument("rank_over_field: p must be prime");
    return rank_mod_p(a, f.p);
}

int field_dim(const PresentedModule& p, Field f) {
    return p.gens - rank_over_field(p.relations, f);
}

int field_induced_rank(const ModuleMap& m, Field f) {
    int with = rank_over_field(hcat(m.lift, m.target.relations), f);
    return with - rank_over_field(m.target.relations, f);
}

int field_cohomology_dim(const ModuleMap& f_in, const ModuleMap& f_out, Field f) {
    int dim_mid = field_dim(f_out.source, f);
    int rk_out = field_induced_rank(f_out, f);
    int rk_in = field_induced_rank(f_in, f);
    return dim_mid - rk_out - rk_in;
}

bool les_ranks_consistent(const std::vector<int>& dims) {
    int carry = 0;  // rank of the map leaving the previous term
    for (int t : dims) {
        carry = t - carry;
        if (carry < 0) return false;
    }
    return carry == 0;
}

}  // namespace matcoh
