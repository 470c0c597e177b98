#include "sigsys/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigsys {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply shape mismatch");
    std::vector<Int> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * x[j];
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& factor) {
    if (factor == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& factor) {
    if (factor == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p == -1) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    // b > 0
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace

HnfResult hnf(IntMatrix m) {
    int rows = m.rows(), cols = m.cols();
    IntMatrix u = IntMatrix::identity(rows);
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        // gcd out the column below r, keeping the smallest pivot at r
        while (true) {
            int pivot = -1;
            for (int i = r; i < rows; ++i) {
                if (m.at(i, col) == 0) continue;
                if (pivot == -1 || abs(m.at(i, col)) < abs(m.at(pivot, col))) pivot = i;
            }
            if (pivot == -1) break;
            if (pivot != r) {
                m.swap_rows(r, pivot);
                u.swap_rows(r, pivot);
            }
            bool more = false;
            for (int i = r + 1; i < rows; ++i) {
                if (m.at(i, col) == 0) continue;
                Int q = m.at(i, col) / m.at(r, col);
                m.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (m.at(i, col) != 0) more = true;
            }
            if (!more) break;
        }
        if (m.at(r, col) == 0) continue;
        if (m.at(r, col) < 0) {
            m.negate_row(r);
            u.negate_row(r);
        }
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(m.at(i, col), m.at(r, col));
            m.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return {std::move(m), std::move(u)};
}

SnfResult snf(IntMatrix m) {
    int rows = m.rows(), cols = m.cols();
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    int limit = std::min(rows, cols);
    for (int t = 0; t < limit; ++t) {
        // smallest nonzero |entry| in the remaining submatrix, ties by (row, col)
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (m.at(i, j) == 0) continue;
                if (pi == -1 || abs(m.at(i, j)) < abs(m.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == -1) break;
        if (pi != t) {
            m.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            m.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }
        while (true) {
            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                m.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (m.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                m.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (m.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // a smaller remainder appeared; move it to the pivot slot
                int bi = t, bj = t;
                for (int i = t; i < rows; ++i)
                    for (int j = t; j < cols; ++j) {
                        if (m.at(i, j) == 0) continue;
                        if (abs(m.at(i, j)) < abs(m.at(bi, bj))) {
                            bi = i;
                            bj = j;
                        }
                    }
                if (bi != t) {
                    m.swap_rows(t, bi);
                    u.swap_rows(t, bi);
                }
                if (bj != t) {
                    m.swap_cols(t, bj);
                    v.swap_cols(t, bj);
                }
                continue;
            }
            // row and column t are clean; enforce divisibility on the rest
            int di = -1, dj = -1;
            for (int i = t + 1; i < rows && di == -1; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        di = i;
                        dj = j;
                        break;
                    }
            if (di == -1) break;
            m.add_row_multiple(t, di, 1);
            u.add_row_multiple(t, di, 1);
        }
        if (m.at(t, t) < 0) {
            m.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(m), std::move(u), std::move(v)};
}

std::optional<std::vector<Int>> solve_diophantine(const IntMatrix& a,
                                                  const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("right-hand side length mismatch");
    SnfResult s = snf(a);
    std::vector<Int> c = s.u.apply(b);
    int limit = std::min(a.rows(), a.cols());
    std::vector<Int> y(a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        Int d = i < limit ? s.d.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    return s.v.apply(y);
}

bool GroupElement::is_zero() const {
    for (const Int& x : free_part)
        if (x != 0) return false;
    for (const Int& x : torsion_part)
        if (x != 0) return false;
    return true;
}

GroupElement QuotientPresentation::project(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != ambient_)
        throw std::invalid_argument("project: vector length mismatch");
    GroupElement e;
    e.torsion_part.resize(factors_.size());
    for (int i = 0; i < static_cast<int>(factors_.size()); ++i) {
        Int t = 0;
        for (int j = 0; j < ambient_; ++j)
            if (torsion_rows_.at(i, j) != 0) t += torsion_rows_.at(i, j) * x[j];
        t %= factors_[i];
        if (t < 0) t += factors_[i];
        e.torsion_part[i] = t;
    }
    e.free_part.resize(free_rank_);
    for (int i = 0; i < free_rank_; ++i) {
        Int t = 0;
        for (int j = 0; j < ambient_; ++j)
            if (free_rows_.at(i, j) != 0) t += free_rows_.at(i, j) * x[j];
        e.free_part[i] = t;
    }
    return e;
}

QuotientPresentation quotient(int ambient,
                              const std::vector<std::vector<long long>>& relations) {
    QuotientPresentation q;
    q.ambient_ = ambient;
    if (relations.empty()) {
        q.free_rank_ = ambient;
        q.free_rows_ = IntMatrix::identity(ambient);
        q.torsion_rows_ = IntMatrix(0, ambient);
        return q;
    }
    IntMatrix m(static_cast<int>(relations.size()), ambient);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(relations[i].size()) != ambient)
            throw std::invalid_argument("relation vector length mismatch");
        for (int j = 0; j < ambient; ++j) m.at(i, j) = relations[i][j];
    }
    // compress to a row basis first; the lattice is unchanged
    HnfResult h = hnf(std::move(m));
    int nonzero = 0;
    for (int i = 0; i < h.h.rows(); ++i)
        for (int j = 0; j < ambient; ++j)
            if (h.h.at(i, j) != 0) {
                nonzero = i + 1;
                break;
            }
    IntMatrix basis(nonzero, ambient);
    for (int i = 0; i < nonzero; ++i)
        for (int j = 0; j < ambient; ++j) basis.at(i, j) = h.h.at(i, j);
    SnfResult s = snf(std::move(basis));
    int rank = 0;
    for (int i = 0; i < std::min(nonzero, ambient); ++i)
        if (s.d.at(i, i) != 0) ++rank;
    q.free_rank_ = ambient - rank;
    // x -> x * V carries the lattice onto the diagonal lattice (+) d_i Z e_i,
    // so coordinate i of x*V, taken mod d_i, presents the quotient
    std::vector<int> torsion_cols;
    for (int i = 0; i < rank; ++i)
        if (s.d.at(i, i) >= 2) {
            q.factors_.push_back(s.d.at(i, i));
            torsion_cols.push_back(i);
        }
    q.torsion_rows_ = IntMatrix(static_cast<int>(torsion_cols.size()), ambient);
    for (int r = 0; r < static_cast<int>(torsion_cols.size()); ++r)
        for (int j = 0; j < ambient; ++j) q.torsion_rows_.at(r, j) = s.v.at(j, torsion_cols[r]);
    q.free_rows_ = IntMatrix(q.free_rank_, ambient);
    for (int r = 0; r < q.free_rank_; ++r)
        for (int j = 0; j < ambient; ++j) q.free_rows_.at(r, j) = s.v.at(j, rank + r);
    return q;
}

}  // namespace sigsys
