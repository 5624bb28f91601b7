#include "matcoh/complex.hpp"

#include <algorithm>
#include <sstream>

#include "matcoh/combinatorics.hpp"
#include "matcoh/lattice.hpp"

namespace matcoh {

ModuleMap BigradedComplex::incoming(int i, int j) const {
    if (i == 0) return ModuleMap::zero_from(group(0, j));
    return differential(i - 1, j);
}

ModuleMap BigradedComplex::outgoing(int i, int j) const {
    if (i == n) return ModuleMap::zero_to(group(n, j));
    return differential(i, j);
}

BasisIndex BigradedComplex::basis_index(int i, int j, int pos) const {
    int per_block = int(combs_[j].size());
    return BasisIndex{subsets_[i][pos / per_block], combs_[j][pos % per_block]};
}

int BigradedComplex::generator_position(int i, int j, uint32_t s, const std::vector<int>& jidx) const {
    const auto& subs = subsets_[i];
    int block = int(std::lower_bound(subs.begin(), subs.end(), s) - subs.begin());
    const auto& combs = combs_[j];
    int inner = int(std::lower_bound(combs.begin(), combs.end(), jidx) - combs.begin());
    return block * int(combs.size()) + inner;
}

BigradedComplex build_complex(const QuasiRep& q, int jmax, bool raw) {
    if (!raw) {
        QValidation v = validate(q);
        if (!v.ok) throw CheckError("build_complex: invalid quasi-representation: " + v.message);
    }
    BigradedComplex cx;
    cx.n = q.m.n;
    int g = q.ambient.gens;
    cx.ambient_gens = g;
    if (jmax < 0) {
        FgaClass amb = cokernel_class(q.ambient);
        jmax = int(amb.free_rank + long(amb.torsion.size()));
    }
    cx.jmax = jmax;

    cx.subsets_.resize(cx.n + 1);
    for (uint32_t s = 0; s < (1u << cx.n); ++s) cx.subsets_[popcount(s)].push_back(s);
    for (auto& v : cx.subsets_) std::sort(v.begin(), v.end());

    cx.combs_.resize(jmax + 1);
    for (int j = 0; j <= jmax; ++j) cx.combs_[j] = subsets_lex(g, j);

    // exterior powers of the quotient presentations, per subset and degree
    std::vector<std::vector<std::vector<PresentedModule>>> ext(cx.n + 1);
    for (int i = 0; i <= cx.n; ++i) {
        ext[i].resize(cx.subsets_[i].size());
        for (size_t b = 0; b < cx.subsets_[i].size(); ++b) {
            PresentedModule quot{g, q.lattice(cx.subsets_[i][b])};
            ext[i][b].resize(jmax + 1);
            for (int j = 0; j <= jmax; ++j) ext[i][b][j] = exterior_power(quot, j);
        }
    }

    cx.groups_.resize((cx.n + 1) * (jmax + 1));
    for (int i = 0; i <= cx.n; ++i)
        for (int j = 0; j <= jmax; ++j) {
            int per_block = int(cx.combs_[j].size());
            int blocks = int(cx.subsets_[i].size());
            int total_rel = 0;
            for (int b = 0; b < blocks; ++b) total_rel += ext[i][b][j].relations.cols();
            IntMatrix rel(per_block * blocks, total_rel);
            int at = 0;
            for (int b = 0; b < blocks; ++b) {
                const IntMatrix& r = ext[i][b][j].relations;
                for (int c = 0; c < r.cols(); ++c, ++at)
                    for (int row = 0; row < r.rows(); ++row) rel(b * per_block + row, at) = r(row, c);
            }
            cx.groups_[cx.idx(i, j)] = PresentedModule{per_block * blocks, std::move(rel)};
        }

    cx.diffs_.resize((cx.n + 1) * (jmax + 1));
    for (int i = 0; i < cx.n; ++i)
        for (int j = 0; j <= jmax; ++j) {
            const auto& src_subs = cx.subsets_[i];
            const auto& tgt_subs = cx.subsets_[i + 1];
            int per_block = int(cx.combs_[j].size());
            IntMatrix lift(int(tgt_subs.size()) * per_block, int(src_subs.size()) * per_block);
            for (size_t b = 0; b < src_subs.size(); ++b) {
                uint32_t s = src_subs[b];
                for (int e = 0; e < cx.n; ++e) {
                    if (s & (1u << e)) continue;
                    uint32_t t = s | (1u << e);
                    int tb = int(std::lower_bound(tgt_subs.begin(), tgt_subs.end(), t) - tgt_subs.begin());
                    int sign = eps_sign(s, e);
                    for (int k = 0; k < per_block; ++k)
                        lift(tb * per_block + k, int(b) * per_block + k) = sign;
                }
            }
            cx.diffs_[cx.idx(i, j)] =
                ModuleMap{cx.groups_[cx.idx(i, j)], cx.groups_[cx.idx(i + 1, j)], std::move(lift)};
        }
    for (int j = 0; j <= jmax; ++j)
        cx.diffs_[cx.idx(cx.n, j)] = ModuleMap::zero_to(cx.groups_[cx.idx(cx.n, j)]);
    return cx;
}

const FgaClass& CohomologyTable::cell(int i, int j) const {
    static const FgaClass zero{};
    auto it = cells.find({i, j});
    return it == cells.end() ? zero : it->second;
}

bool CohomologyTable::same_cells(const CohomologyTable& other) const {
    int jm = std::max(jmax, other.jmax);
    int nm = std::max(n, other.n);
    for (int i = 0; i <= nm; ++i)
        for (int j = 0; j <= jm; ++j)
            if (!(cell(i, j) == other.cell(i, j))) return false;
    return true;
}

std::string CohomologyTable::pretty() const {
    std::ostringstream os;
    os << "H^{i,j}  (rows i = 0.." << n << ", cols j = 0.." << jmax << ")\n";
    for (int i = 0; i <= n; ++i) {
        os << "  i=" << i << ": ";
        for (int j = 0; j <= jmax; ++j) {
            os << cell(i, j).str();
            if (j < jmax) os << " | ";
        }
        os << "\n";
    }
    return os.str();
}

CohomologyTable cohomology_table(const BigradedComplex& cx, const QuasiRep& q) {
    CohomologyTable t;
    t.n = cx.n;
    t.jmax = cx.jmax;
    t.matroid_desc = "n=" + std::to_string(q.m.n) + ",r=" + std::to_string(q.m.rank());
    t.quasirep_desc = q.descriptor;
    for (int i = 0; i <= cx.n; ++i)
        for (int j = 0; j <= cx.jmax; ++j) {
            FgaClass h = cohomology_at(cx.incoming(i, j), cx.outgoing(i, j));
            if (!h.is_zero()) t.cells[{i, j}] = std::move(h);
        }
    t.euler = graded_euler(cx);
    return t;
}

std::vector<Int> graded_euler(const BigradedComplex& cx) {
    std::vector<Int> out;
    for (int i = 0; i <= cx.n; ++i) {
        for (int j = 0; j <= cx.jmax; ++j) {
            const PresentedModule& p = cx.group(i, j);
            int rank = p.gens - rank_rational(p.relations);
            if (rank == 0) continue;
            if (int(out.size()) <= j) out.resize(j + 1);
            out[j] += (i & 1) ? -rank : rank;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::map<std::pair<int, int>, int> field_table(const BigradedComplex& cx, Field f) {
    std::map<std::pair<int, int>, int> t;
    for (int i = 0; i <= cx.n; ++i)
        for (int j = 0; j <= cx.jmax; ++j) {
            int d = field_cohomology_dim(cx.incoming(i, j), cx.outgoing(i, j), f);
            if (d) t[{i, j}] = d;
        }
    return t;
}

void check_d_squared(const BigradedComplex& cx) {
    for (int j = 0; j <= cx.jmax; ++j)
        for (int i = 0; i + 1 < cx.n; ++i) {
            const ModuleMap& d0 = cx.differential(i, j);
            const ModuleMap& d1 = cx.differential(i + 1, j);
            IntMatrix comp = d1.lift * d0.lift;
            for (int c = 0; c < comp.cols(); ++c)
                if (!lattice_contains(d1.target.relations, comp.col(c))) {
                    BasisIndex b = cx.basis_index(i, j, c);
                    throw CheckError("d^2 != 0 at generator S=" + std::to_string(b.s) +
                                     " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
                }
        }
}

std::vector<long> torsion_free_primes(const BigradedComplex& cx, const std::vector<long>& primes) {
    std::vector<long> good;
    for (long p : primes) {
        bool ok = true;
        for (int i = 0; i <= cx.n && ok; ++i)
            for (int j = 0; j <= cx.jmax && ok; ++j) {
                FgaClass c = cokernel_class(cx.group(i, j));
                for (const auto& d : c.torsion)
                    if (d % p == 0) { ok = false; break; }
            }
        if (ok) good.push_back(p);
    }
    return good;
}

bool uct_consistent(const CohomologyTable& t, const std::map<std::pair<int, int>, int>& dims_p,
                    long p, std::string* why) {
    auto torsion_count = [&](int i, int j) {
        int c = 0;
        for (const auto& d : t.cell(i, j).torsion)
            if (d % p == 0) ++c;
        return c;
    };
    for (int i = 0; i <= t.n; ++i)
        for (int j = 0; j <= t.jmax; ++j) {
            int expected = int(t.cell(i, j).free_rank) + torsion_count(i, j) + torsion_count(i + 1, j);
            auto it = dims_p.find({i, j});
            int got = it == dims_p.end() ? 0 : it->second;
            if (expected != got) {
                if (why) {
                    std::ostringstream os;
                    os << "mod-" << p << " dimension mismatch at (" << i << "," << j << "): expected "
                       << expected << ", pipeline got " << got;
                    *why = os.str();
                }
                return false;
            }
        }
    return true;
}

}  // namespace matcoh
