#include "matcoh/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace matcoh {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Shared worker: column-reduce `h` to staircase form, optionally maintaining
// the transform so that input * u == h at every step.
struct HnfWorker {
    IntMatrix h;
    IntMatrix u;
    bool with_u;
    std::vector<int> pivot_rows;
    int next = 0;  // next pivot column

    explicit HnfWorker(const IntMatrix& a, bool transform) : h(a), with_u(transform) {
        if (with_u) u = IntMatrix::identity(a.cols());
    }

    void add_col(int dst, int src, const Int& q) {  // col dst -= q * col src
        if (q == 0) return;
        for (int i = 0; i < h.rows(); ++i)
            if (h(i, src) != 0) h(i, dst) -= q * h(i, src);
        if (with_u)
            for (int i = 0; i < u.rows(); ++i)
                if (u(i, src) != 0) u(i, dst) -= q * u(i, src);
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        h.swap_cols(i, j);
        if (with_u) u.swap_cols(i, j);
    }

    void negate_col(int j) {
        for (int i = 0; i < h.rows(); ++i) h(i, j) = -h(i, j);
        if (with_u)
            for (int i = 0; i < u.rows(); ++i) u(i, j) = -u(i, j);
    }

    void run() {
        int m = h.cols();
        for (int row = 0; row < h.rows() && next < m; ++row) {
            // Euclidean sweep: leave a single nonzero at column `next`.
            while (true) {
                int best = -1;
                for (int j = next; j < m; ++j)
                    if (h(row, j) != 0 && (best < 0 || abs_int(h(row, j)) < abs_int(h(row, best))))
                        best = j;
                if (best < 0) break;
                swap_cols(next, best);
                bool clean = true;
                for (int j = next + 1; j < m; ++j) {
                    if (h(row, j) == 0) continue;
                    Int q = h(row, j) / h(row, next);  // truncated division is fine: loop until clean
                    add_col(j, next, q);
                    if (h(row, j) != 0) clean = false;
                }
                if (clean) break;
            }
            if (next < m && h(row, next) != 0) {
                if (h(row, next) < 0) negate_col(next);
                // canonical reduction of earlier columns in this pivot row
                for (int j = 0; j < next; ++j) {
                    Int q = h(row, j) / h(row, next);
                    if (h(row, j) - q * h(row, next) < 0) q -= 1;  // floor
                    add_col(j, next, q);
                }
                pivot_rows.push_back(row);
                ++next;
            }
        }
    }
};

}  // namespace

HnfResult hnf(const IntMatrix& a) {
    HnfWorker w(a, false);
    w.run();
    std::vector<int> keep(w.next);
    for (int j = 0; j < w.next; ++j) keep[j] = j;
    return HnfResult{w.h.columns(keep), w.pivot_rows};
}

HnfTransform hnf_transform(const IntMatrix& a) {
    HnfWorker w(a, true);
    w.run();
    return HnfTransform{w.h, w.u, w.next, w.pivot_rows};
}

IntMatrix kernel(const IntMatrix& a) {
    HnfTransform t = hnf_transform(a);
    std::vector<int> ker_cols;
    for (int j = t.rank; j < a.cols(); ++j) ker_cols.push_back(j);
    return t.u.columns(ker_cols);
}

std::optional<std::vector<Int>> solve_integral(const IntMatrix& a, const std::vector<Int>& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("solve shape mismatch");
    HnfTransform t = hnf_transform(a);
    std::vector<Int> res = b;
    std::vector<Int> y(a.cols());
    for (int k = 0; k < t.rank; ++k) {
        int p = t.pivot_rows[k];
        const Int& piv = t.h(p, k);
        if (res[p] % piv != 0) return std::nullopt;
        Int q = res[p] / piv;
        if (q != 0)
            for (int i = 0; i < a.rows(); ++i)
                if (t.h(i, k) != 0) res[i] -= q * t.h(i, k);
        y[k] = std::move(q);
    }
    for (const auto& r : res)
        if (r != 0) return std::nullopt;
    return t.u.apply(y);
}

std::optional<IntMatrix> solve_integral_cols(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    HnfTransform t = hnf_transform(a);
    IntMatrix x(a.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        std::vector<Int> res = b.col(c);
        std::vector<Int> y(a.cols());
        for (int k = 0; k < t.rank; ++k) {
            int p = t.pivot_rows[k];
            const Int& piv = t.h(p, k);
            if (res[p] % piv != 0) return std::nullopt;
            Int q = res[p] / piv;
            if (q != 0)
                for (int i = 0; i < a.rows(); ++i)
                    if (t.h(i, k) != 0) res[i] -= q * t.h(i, k);
            y[k] = std::move(q);
        }
        for (const auto& r : res)
            if (r != 0) return std::nullopt;
        x.set_col(c, t.u.apply(y));
    }
    return x;
}

bool lattice_contains(const IntMatrix& a, const std::vector<Int>& v) {
    return solve_integral(a, v).has_value();
}

bool lattice_subset(const IntMatrix& a, const IntMatrix& b) {
    return solve_integral_cols(b, a).has_value();
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return hnf(a).h == hnf(b).h;
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) {
    return hnf(hcat(a, b)).h;
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    // x = a*y = b*z; kernel of [a | -b] gives all (y, z).
    IntMatrix k = kernel(hcat(a, b.negated()));
    std::vector<int> top(a.cols());
    for (int i = 0; i < a.cols(); ++i) top[i] = i;
    std::vector<int> all_cols(k.cols());
    for (int j = 0; j < k.cols(); ++j) all_cols[j] = j;
    IntMatrix y = k.submatrix(top, all_cols);
    return hnf(a * y).h;
}

IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& l) {
    if (f.rows() != l.rows()) throw std::invalid_argument("preimage_lattice row mismatch");
    IntMatrix k = kernel(hcat(f, l));
    std::vector<int> top(f.cols());
    for (int i = 0; i < f.cols(); ++i) top[i] = i;
    std::vector<int> all_cols(k.cols());
    for (int j = 0; j < k.cols(); ++j) all_cols[j] = j;
    return hnf(k.submatrix(top, all_cols)).h;
}

IntMatrix saturation(const IntMatrix& a) {
    // Integer kernel of transpose spans the rational left kernel saturately;
    // its own kernel is then the saturation of colLat(a).
    IntMatrix left = kernel(a.transposed()).transposed();
    return hnf(kernel(left)).h;
}

}  // namespace matcoh
