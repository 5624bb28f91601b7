#include "matcoh/arrangement.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <sstream>
#include <vector>

#include "matcoh/combinatorics.hpp"
#include "matcoh/complex.hpp"
#include "matcoh/fieldmode.hpp"
#include "matcoh/lattice.hpp"
#include "matcoh/matroid.hpp"
#include "matcoh/quasirep.hpp"

namespace matcoh {

namespace {

using Rat = boost::rational<Int>;

// boost::rational comparisons against int literals recurse for non-builtin
// integer backends; always test through the numerator.
bool rat_zero(const Rat& x) { return x.numerator() == 0; }

struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;
    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Rat& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const Rat& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    RatMatrix operator*(const RatMatrix& rhs) const {
        RatMatrix m(rows, rhs.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Rat& x = (*this)(i, k);
                if (rat_zero(x)) continue;
                for (int j = 0; j < rhs.cols; ++j)
                    if (!rat_zero(rhs(k, j))) m(i, j) += x * rhs(k, j);
            }
        return m;
    }
    bool is_zero() const {
        for (const auto& x : a)
            if (!rat_zero(x)) return false;
        return true;
    }
};

RatMatrix from_int_columns(const IntMatrix& m, const std::vector<int>& cols) {
    RatMatrix r(m.rows(), int(cols.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < int(cols.size()); ++j) r(i, j) = Rat(m(i, cols[j]));
    return r;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!rat_zero(m(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        Rat d = m(r, c);
        for (int j = 0; j < m.cols; ++j) m(r, j) /= d;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || rat_zero(m(i, c))) continue;
            Rat f = m(i, c);
            for (int j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rat_rank(RatMatrix m) { return int(rref(m).size()); }

// Columns form a deterministic basis of {x : m x = 0}.
RatMatrix rat_kernel(RatMatrix m) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix k(m.cols, int(free_cols.size()));
    for (int t = 0; t < int(free_cols.size()); ++t) {
        int fc = free_cols[t];
        k(fc, t) = 1;
        for (int pr = 0; pr < int(pivots.size()); ++pr) k(pivots[pr], t) = -m(pr, fc);
    }
    return k;
}

// Solve m x = b for every column of b; requires solvability.
RatMatrix rat_solve(const RatMatrix& m, const RatMatrix& b) {
    RatMatrix aug(m.rows, m.cols + b.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        for (int j = 0; j < b.cols; ++j) aug(i, m.cols + j) = b(i, j);
    }
    std::vector<int> pivots = rref(aug);
    RatMatrix x(m.cols, b.cols);
    for (int pr = 0; pr < int(pivots.size()); ++pr) {
        if (pivots[pr] >= m.cols) throw CheckError("rational system is inconsistent");
        for (int j = 0; j < b.cols; ++j) x(pivots[pr], j) = aug(pr, m.cols + j);
    }
    return x;
}

Rat dot(const RatMatrix& a, int col_a, const RatMatrix& b, int col_b) {
    Rat s = 0;
    for (int i = 0; i < a.rows; ++i) s += a(i, col_a) * b(i, col_b);
    return s;
}

// The assembled rational complex of an arrangement: bases of every H_S and
// per-cell differentials.
struct ArrComplex {
    int n = 0, dim = 0, jmax = 0;
    std::vector<std::vector<uint32_t>> subsets;            // per i
    std::vector<RatMatrix> basis;                          // per subset mask
    std::vector<std::map<int, RatMatrix>> proj;            // per mask: e -> projection H_S -> H_{S+e}
    std::map<std::pair<int, int>, RatMatrix> differential;  // (i, j) -> big matrix

    int block_dim(uint32_t s) const { return basis[s].cols; }
};

RatMatrix exterior_minors(const RatMatrix& m, int j) {
    auto rows = subsets_lex(m.rows, j);
    auto cols = subsets_lex(m.cols, j);
    RatMatrix out(int(rows.size()), int(cols.size()));
    for (int r = 0; r < int(rows.size()); ++r)
        for (int c = 0; c < int(cols.size()); ++c) {
            // Laplace on small minors; j stays tiny at desk scale
            RatMatrix sub(j, j);
            for (int i = 0; i < j; ++i)
                for (int k = 0; k < j; ++k) sub(i, k) = m(rows[r][i], cols[c][k]);
            // determinant by elimination
            Rat det = 1;
            bool zero = false;
            for (int p = 0; p < j && !zero; ++p) {
                int piv = -1;
                for (int i = p; i < j; ++i)
                    if (!rat_zero(sub(i, p))) { piv = i; break; }
                if (piv < 0) {
                    zero = true;
                    break;
                }
                if (piv != p) {
                    for (int k = 0; k < j; ++k) std::swap(sub(piv, k), sub(p, k));
                    det = -det;
                }
                det *= sub(p, p);
                for (int i = p + 1; i < j; ++i) {
                    Rat f = sub(i, p) / sub(p, p);
                    for (int k = p; k < j; ++k) sub(i, k) -= f * sub(p, k);
                }
            }
            out(r, c) = zero ? Rat(0) : det;
        }
    return out;
}

ArrComplex build_arr_complex(const Arrangement& a, bool essentialize) {
    ArrComplex cx;
    cx.n = a.size();
    cx.dim = a.dim;
    if (cx.n > 20) throw CheckError("arrangement too large");

    std::vector<int> all_cols(cx.n);
    for (int i = 0; i < cx.n; ++i) all_cols[i] = i;
    RatMatrix ambient;  // columns span the working subspace W
    if (essentialize) {
        RatMatrix rows(cx.n, a.dim);  // normals as rows
        for (int p = 0; p < cx.n; ++p)
            for (int i = 0; i < a.dim; ++i) rows(p, i) = Rat(a.normals(i, p));
        std::vector<int> piv = rref(rows);
        ambient = RatMatrix(a.dim, int(piv.size()));
        for (int t = 0; t < int(piv.size()); ++t)
            for (int i = 0; i < a.dim; ++i) ambient(i, t) = rows(t, i);  // echelon row basis of W
    } else {
        ambient = RatMatrix(a.dim, a.dim);
        for (int i = 0; i < a.dim; ++i) ambient(i, i) = 1;
    }

    cx.subsets.resize(cx.n + 1);
    for (uint32_t s = 0; s < (1u << cx.n); ++s) cx.subsets[popcount(s)].push_back(s);

    cx.basis.resize(1u << cx.n);
    for (uint32_t s = 0; s < (1u << cx.n); ++s) {
        // H_S inside W: solve <nu_p, ambient x> = 0
        auto elems = mask_elements(s);
        RatMatrix sys(int(elems.size()), ambient.cols);
        for (int r = 0; r < int(elems.size()); ++r)
            for (int c = 0; c < ambient.cols; ++c) {
                Rat v = 0;
                for (int i = 0; i < a.dim; ++i) v += Rat(a.normals(i, elems[r])) * ambient(i, c);
                sys(r, c) = v;
            }
        RatMatrix knl = rat_kernel(sys);  // coordinates in the ambient basis
        cx.basis[s] = ambient * knl;
    }
    cx.jmax = cx.basis[0].cols;

    cx.proj.resize(1u << cx.n);
    for (uint32_t s = 0; s < (1u << cx.n); ++s) {
        const RatMatrix& bs = cx.basis[s];
        for (int e = 0; e < cx.n; ++e) {
            if (s & (1u << e)) continue;
            const RatMatrix& bt = cx.basis[s | (1u << e)];
            // component of nu_e inside H_S via the Gram system
            RatMatrix gram(bs.cols, bs.cols), rhs(bs.cols, 1);
            for (int i = 0; i < bs.cols; ++i) {
                for (int j = 0; j < bs.cols; ++j) gram(i, j) = dot(bs, i, bs, j);
                Rat v = 0;
                for (int r = 0; r < bs.rows; ++r) v += bs(r, i) * Rat(a.normals(r, e));
                rhs(i, 0) = v;
            }
            RatMatrix coef = bs.cols ? rat_solve(gram, rhs) : RatMatrix(0, 1);
            RatMatrix u(bs.rows, 1);
            for (int r = 0; r < bs.rows; ++r)
                for (int i = 0; i < bs.cols; ++i) u(r, 0) += bs(r, i) * coef(i, 0);
            Rat uu = dot(u, 0, u, 0);
            // projected basis vectors land in H_{S+e}
            RatMatrix img(bs.rows, bs.cols);
            for (int c = 0; c < bs.cols; ++c) {
                Rat vu = 0;
                for (int r = 0; r < bs.rows; ++r) vu += bs(r, c) * u(r, 0);
                for (int r = 0; r < bs.rows; ++r) {
                    img(r, c) = bs(r, c);
                    if (!rat_zero(uu)) img(r, c) -= (vu / uu) * u(r, 0);
                }
            }
            cx.proj[s][e] = rat_solve(bt, img);
        }
    }

    for (int j = 0; j <= cx.jmax; ++j) {
        for (int i = 0; i < cx.n; ++i) {
            // offsets per subset
            std::vector<int> src_off(cx.subsets[i].size() + 1, 0), tgt_off(cx.subsets[i + 1].size() + 1, 0);
            for (size_t b = 0; b < cx.subsets[i].size(); ++b)
                src_off[b + 1] = src_off[b] + int(binomial(cx.block_dim(cx.subsets[i][b]), j));
            for (size_t b = 0; b < cx.subsets[i + 1].size(); ++b)
                tgt_off[b + 1] = tgt_off[b] + int(binomial(cx.block_dim(cx.subsets[i + 1][b]), j));
            RatMatrix d(tgt_off.back(), src_off.back());
            for (size_t b = 0; b < cx.subsets[i].size(); ++b) {
                uint32_t s = cx.subsets[i][b];
                for (int e = 0; e < cx.n; ++e) {
                    if (s & (1u << e)) continue;
                    uint32_t t = s | (1u << e);
                    size_t tb = std::lower_bound(cx.subsets[i + 1].begin(), cx.subsets[i + 1].end(), t) -
                                cx.subsets[i + 1].begin();
                    RatMatrix block = exterior_minors(cx.proj[s].at(e), j);
                    int sign = eps_sign(s, e);
                    for (int r = 0; r < block.rows; ++r)
                        for (int c = 0; c < block.cols; ++c)
                            if (!rat_zero(block(r, c)))
                                d(tgt_off[tb] + r, src_off[b] + c) = sign * block(r, c);
                }
            }
            cx.differential[{i, j}] = std::move(d);
        }
    }
    return cx;
}

}  // namespace

ArrTable arr_cohomology(const Arrangement& a, bool essentialize) {
    ArrComplex cx = build_arr_complex(a, essentialize);
    ArrTable t;
    t.n = cx.n;
    t.jmax = cx.jmax;
    for (int j = 0; j <= cx.jmax; ++j) {
        for (int i = 0; i <= cx.n; ++i) {
            int dim_i = 0;
            for (uint32_t s : cx.subsets[i]) dim_i += int(binomial(cx.block_dim(s), j));
            int rk_out = i < cx.n ? rat_rank(cx.differential.at({i, j})) : 0;
            int rk_in = i > 0 ? rat_rank(cx.differential.at({i - 1, j})) : 0;
            int h = dim_i - rk_out - rk_in;
            if (h) t.dims[{i, j}] = h;
        }
    }
    return t;
}

ArrVerdict arr_d_squared(const Arrangement& a) {
    ArrComplex cx = build_arr_complex(a, false);
    for (int j = 0; j <= cx.jmax; ++j)
        for (int i = 0; i + 1 < cx.n; ++i) {
            RatMatrix comp = cx.differential.at({i + 1, j}) * cx.differential.at({i, j});
            if (!comp.is_zero()) {
                std::ostringstream os;
                os << "d^2 != 0 at (i,j) = (" << i << "," << j << ")";
                return {false, os.str()};
            }
        }
    return {};
}

ArrVerdict compare_with_matroid(const Arrangement& a) {
    ArrTable left = arr_cohomology(a, /*essentialize=*/true);

    Matroid m = from_matrix(a.normals);
    // the canonical span assignment, re-presented on a basis of the full span
    IntMatrix basis = hnf(a.normals).h;
    QuasiRep q;
    q.m = m;
    q.ambient = PresentedModule::free_module(basis.cols());
    q.descriptor = "arrangement-span";
    for (uint32_t f : flats(m)) {
        IntMatrix span = hnf(a.normals.columns(mask_elements(f))).h;
        auto sol = solve_integral_cols(basis, span);
        if (!sol) return {false, "normal span is not integral over the full span"};
        q.flat_lattice[f] = hnf(*sol).h;
    }
    BigradedComplex cm = build_complex(q, basis.cols(), /*raw=*/true);
    auto right = field_table(cm, Field::rationals());

    int jmax = std::max(left.jmax, cm.jmax);
    for (int i = 0; i <= a.size(); ++i)
        for (int j = 0; j <= jmax; ++j) {
            auto it = right.find({i, j});
            int rd = it == right.end() ? 0 : it->second;
            if (left.dim(i, j) != rd) {
                std::ostringstream os;
                os << "dimension mismatch at (" << i << "," << j << "): arrangement "
                   << left.dim(i, j) << ", matroid " << rd;
                return {false, os.str()};
            }
        }
    return {};
}

ArrVerdict essentialization_les(const Arrangement& a) {
    int center = a.dim - rank_rational(a.normals);
    if (center != 1) return {false, "center is not one-dimensional"};
    ArrTable full = arr_cohomology(a, false);
    ArrTable ess = arr_cohomology(a, true);
    for (int j = 0; j <= full.jmax; ++j) {
        std::vector<int> seq;
        for (int i = 0; i <= a.size() + 1; ++i) {
            seq.push_back(j >= 1 ? ess.dim(i, j - 1) : 0);
            seq.push_back(full.dim(i, j));
            seq.push_back(ess.dim(i, j));
        }
        if (!les_ranks_consistent(seq)) {
            std::ostringstream os;
            os << "essentialization sequence ranks inconsistent at j = " << j;
            return {false, os.str()};
        }
    }
    return {};
}

}  // namespace matcoh
