#include "matcoh/snf.hpp"

#include <algorithm>
#include <utility>

namespace matcoh {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct SnfWorker {
    IntMatrix d, u, v;
    bool with_t;

    SnfWorker(const IntMatrix& a, bool transforms) : d(a), with_t(transforms) {
        if (with_t) {
            u = IntMatrix::identity(a.rows());
            v = IntMatrix::identity(a.cols());
        }
    }

    void row_sub(int i, int t, const Int& q) {  // row i -= q * row t
        if (q == 0) return;
        for (int j = 0; j < d.cols(); ++j)
            if (d(t, j) != 0) d(i, j) -= q * d(t, j);
        if (with_t)
            for (int j = 0; j < u.cols(); ++j)
                if (u(t, j) != 0) u(i, j) -= q * u(t, j);
    }

    void col_sub(int j, int t, const Int& q) {  // col j -= q * col t
        if (q == 0) return;
        for (int i = 0; i < d.rows(); ++i)
            if (d(i, t) != 0) d(i, j) -= q * d(i, t);
        if (with_t)
            for (int i = 0; i < v.rows(); ++i)
                if (v(i, t) != 0) v(i, j) -= q * v(i, t);
    }

    void row_add(int i, int t) { row_sub(i, t, Int(-1)); }

    void swap_rows(int i, int j) {
        if (i == j) return;
        d.swap_rows(i, j);
        if (with_t) u.swap_rows(i, j);
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        d.swap_cols(i, j);
        if (with_t) v.swap_cols(i, j);
    }

    void negate_row(int i) {
        for (int j = 0; j < d.cols(); ++j) d(i, j) = -d(i, j);
        if (with_t)
            for (int j = 0; j < u.cols(); ++j) u(i, j) = -u(i, j);
    }

    // Smallest-magnitude nonzero entry in the trailing submatrix.
    bool find_pivot(int t, int& pi, int& pj) {
        pi = pj = -1;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j)
                if (d(i, j) != 0 && (pi < 0 || abs_int(d(i, j)) < abs_int(d(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        return pi >= 0;
    }

    void run() {
        int k = std::min(d.rows(), d.cols());
        for (int t = 0; t < k; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            while (true) {
                // clear column t
                bool again = true;
                while (again) {
                    again = false;
                    for (int i = t + 1; i < d.rows(); ++i) {
                        if (d(i, t) == 0) continue;
                        Int q = d(i, t) / d(t, t);
                        row_sub(i, t, q);
                        if (d(i, t) != 0) {  // remainder smaller than pivot: promote it
                            swap_rows(t, i);
                            again = true;
                        }
                    }
                }
                // clear row t (may dirty the column again)
                bool col_dirty = false;
                again = true;
                while (again) {
                    again = false;
                    for (int j = t + 1; j < d.cols(); ++j) {
                        if (d(t, j) == 0) continue;
                        Int q = d(t, j) / d(t, t);
                        col_sub(j, t, q);
                        if (d(t, j) != 0) {
                            swap_cols(t, j);
                            again = true;
                        }
                    }
                }
                for (int i = t + 1; i < d.rows() && !col_dirty; ++i) col_dirty = d(i, t) != 0;
                if (col_dirty) continue;
                // pivot must divide the rest of the submatrix
                int bi = -1, bj = -1;
                for (int i = t + 1; i < d.rows() && bi < 0; ++i)
                    for (int j = t + 1; j < d.cols(); ++j)
                        if (d(i, j) % d(t, t) != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi < 0) break;
                row_add(t, bi);
            }
            if (d(t, t) < 0) negate_row(t);
        }
    }
};

}  // namespace

std::vector<Int> SmithDecomposition::diagonal() const {
    int k = std::min(d.rows(), d.cols());
    std::vector<Int> out(k);
    for (int i = 0; i < k; ++i) out[i] = d(i, i);
    return out;
}

SmithDecomposition snf(const IntMatrix& a) {
    SnfWorker w(a, true);
    w.run();
    return SmithDecomposition{std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::vector<Int> snf_diagonal(const IntMatrix& a) {
    SnfWorker w(a, false);
    w.run();
    int k = std::min(a.rows(), a.cols());
    std::vector<Int> out(k);
    for (int i = 0; i < k; ++i) out[i] = w.d(i, i);
    return out;
}

}  // namespace matcoh
