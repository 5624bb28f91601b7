#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace matcoh {

using Int = boost::multiprecision::cpp_int;

// Dense matrix of arbitrary-precision integers, row-major.
// 0xN and Nx0 shapes are legal and denote empty relation sets / zero modules.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix column(const std::vector<Int>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    std::vector<Int> col(int j) const;
    std::vector<Int> row(int i) const;
    void set_col(int j, const std::vector<Int>& v);

    IntMatrix transposed() const;
    IntMatrix negated() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x

    IntMatrix submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;
    IntMatrix columns(const std::vector<int>& col_ids) const;
    IntMatrix drop_zero_columns() const;

    bool is_zero() const;
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

// Exact determinant of a square matrix (Bareiss).
Int det(const IntMatrix& a);

// Exact rank over the rationals (fraction-free elimination).
int rank_rational(const IntMatrix& a);

}  // namespace matcoh
