#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace sigsys {

using Int = boost::multiprecision::cpp_int;

// Dense arbitrary-precision integer matrix, row-major. No floating point
// anywhere in this module.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // matrix * column vector
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(int i, int j);
    void negate_row(int i);
    void add_row_multiple(int dst, int src, const Int& factor);  // row dst += factor * row src
    void swap_cols(int i, int j);
    void negate_col(int i);
    void add_col_multiple(int dst, int src, const Int& factor);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Determinant by fraction-free (Bareiss) elimination; square matrices only.
Int determinant(const IntMatrix& m);

struct HnfResult {
    IntMatrix h;  // row Hermite normal form: echelon, positive pivots, reduced above
    IntMatrix u;  // unimodular, u * m = h
};
HnfResult hnf(IntMatrix m);

struct SnfResult {
    IntMatrix d;  // diagonal, d1 | d2 | ..., entries >= 0
    IntMatrix u;  // unimodular, u * m * v = d
    IntMatrix v;
};
SnfResult snf(IntMatrix m);

// Some integer x with a*x = b, or nullopt iff no integer solution exists.
std::optional<std::vector<Int>> solve_diophantine(const IntMatrix& a,
                                                  const std::vector<Int>& b);

// Element of Z^r (+) Z_{d_1} (+) ... written in presentation coordinates.
struct GroupElement {
    std::vector<Int> free_part;
    std::vector<Int> torsion_part;  // 0 <= t_i < d_i

    bool is_zero() const;
    bool operator==(const GroupElement&) const = default;
};

// Presentation of Z^m / L for a relation lattice L: free rank, invariant
// factors d_1 | d_2 | ... (each >= 2), and a projection onto the coordinates.
class QuotientPresentation {
public:
    int ambient_rank() const { return ambient_; }
    int free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    GroupElement project(const std::vector<Int>& x) const;

    // Projection coefficient of ambient coordinate j in torsion coordinate i.
    const Int& torsion_coeff(int i, int j) const { return torsion_rows_.at(i, j); }
    const Int& free_coeff(int i, int j) const { return free_rows_.at(i, j); }

    friend QuotientPresentation quotient(int ambient,
                                         const std::vector<std::vector<long long>>& relations);

private:
    int ambient_ = 0;
    int free_rank_ = 0;
    std::vector<Int> factors_;
    IntMatrix torsion_rows_;  // factors x ambient
    IntMatrix free_rows_;     // free_rank x ambient
};

QuotientPresentation quotient(int ambient,
                              const std::vector<std::vector<long long>>& relations);

}  // namespace sigsys
