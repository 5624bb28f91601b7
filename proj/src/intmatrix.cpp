#include "matcoh/intmatrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace matcoh {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = int(rows.size());
    int c = r ? int(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (int(row.size()) != c) throw std::invalid_argument("ragged row list");
        int j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::column(const std::vector<Int>& v) {
    IntMatrix m(int(v.size()), 1);
    for (int i = 0; i < int(v.size()); ++i) m(i, 0) = v[i];
    return m;
}

std::vector<Int> IntMatrix::col(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Int> IntMatrix::row(int i) const {
    std::vector<Int> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void IntMatrix::set_col(int j, const std::vector<Int>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix m(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Int& b = rhs(k, j);
                if (b != 0) m(i, j) += aik * b;
            }
        }
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
    IntMatrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= rhs.a_[i];
    return m;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (int(x.size()) != cols_) throw std::invalid_argument("apply shape mismatch");
    std::vector<Int> y(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int s = 0;
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && x[j] != 0) s += (*this)(i, j) * x[j];
        y[i] = std::move(s);
    }
    return y;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const {
    IntMatrix m(int(row_ids.size()), int(col_ids.size()));
    for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < m.cols_; ++j) m(i, j) = (*this)(row_ids[i], col_ids[j]);
    return m;
}

IntMatrix IntMatrix::columns(const std::vector<int>& col_ids) const {
    IntMatrix m(rows_, int(col_ids.size()));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < m.cols_; ++j) m(i, j) = (*this)(i, col_ids[j]);
    return m;
}

IntMatrix IntMatrix::drop_zero_columns() const {
    std::vector<int> keep;
    for (int j = 0; j < cols_; ++j) {
        bool z = true;
        for (int i = 0; i < rows_ && z; ++i) z = (*this)(i, j) == 0;
        if (!z) keep.push_back(j);
    }
    return columns(keep);
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[" << rows_ << "x" << cols_ << "]";
    for (int i = 0; i < rows_; ++i) {
        os << "\n  ";
        for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? " " : "");
    }
    return os.str();
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat col mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

// Bareiss fraction-free elimination; returns rank and, for square full-rank
// input, leaves the determinant in the last pivot.
static int bareiss(IntMatrix& m, Int* det_out) {
    int r = m.rows(), c = m.cols();
    Int prev = 1;
    int pr = 0;
    int sign = 1;
    for (int pc = 0; pc < c && pr < r; ++pc) {
        int piv = -1;
        for (int i = pr; i < r; ++i)
            if (m(i, pc) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != pr) { m.swap_rows(piv, pr); sign = -sign; }
        for (int i = pr + 1; i < r; ++i) {
            for (int j = pc + 1; j < c; ++j)
                m(i, j) = (m(pr, pc) * m(i, j) - m(i, pc) * m(pr, j)) / prev;
            m(i, pc) = 0;
        }
        prev = m(pr, pc);
        ++pr;
    }
    if (det_out) *det_out = (pr == r && r == c) ? Int(sign * prev) : Int(0);
    return pr;
}

Int det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
    if (a.rows() == 0) return 1;
    IntMatrix m = a;
    Int d;
    bareiss(m, &d);
    return d;
}

int rank_rational(const IntMatrix& a) {
    IntMatrix m = a;
    return bareiss(m, nullptr);
}

}  // namespace matcoh
