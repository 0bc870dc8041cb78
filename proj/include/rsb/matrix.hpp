#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rsb/ratfunc.hpp"

namespace rsb {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline int entry_degree(const Rational&) { return 0; }
inline int entry_degree(const RatFunc& f) { return f.degree(); }

/// Dense row-major matrix over an exact field K (Rational or RatFunc).
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw DimensionError("entry count does not match matrix shape");
    }
    Matrix(std::initializer_list<std::initializer_list<K>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<K>& entries() const { return a_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix column(std::size_t j) const {
        Matrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    /// Columns [first, first + count).
    Matrix columns(std::size_t first, std::size_t count) const {
        Matrix c(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) c(i, j) = (*this)(i, first + j);
        return c;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    K trace() const {
        if (!is_square()) throw DimensionError("trace of a non-square matrix");
        K t(0);
        for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    int max_entry_degree() const {
        int d = 0;
        for (const auto& x : a_) d = std::max(d, entry_degree(x));
        return d;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& bkj = b(k, j);
                    if (is_zero(bkj)) continue;
                    c(i, j) = c(i, j) + aik * bkj;
                }
            }
        }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = c.a_[i] + b.a_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = c.a_[i] - b.a_[i];
        return c;
    }
    friend Matrix operator*(const K& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.a_) x = s * x;
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(long e) const {
        if (!is_square()) throw DimensionError("power of a non-square matrix");
        if (e < 0) return inverse(*this).pow(-e);
        Matrix r = identity(rows_);
        Matrix b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e > 0) b = b * b;
        }
        return r;
    }

private:
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> a_;
};

/// Horizontal concatenation [a | b].
template <class K>
Matrix<K> hconcat(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows()) throw DimensionError("hconcat row mismatch");
    Matrix<K> c(a.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

template <class K>
struct RowEchelon {
    Matrix<K> reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class K>
RowEchelon<K> rref(Matrix<K> m) {
    RowEchelon<K> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        int best_cost = 0;
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            int cost = entry_degree(m(i, c));
            if (best == m.rows() || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == m.rows()) continue;
        if (best != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(r, j));
        const K inv = K(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const K f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return rref(m).pivots.size();
}

template <class K>
K determinant(Matrix<K> m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return K(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n == 3)
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    K det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = n;
        for (std::size_t i = c; i < n; ++i)
            if (!is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p == n) return K(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        const K inv = K(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            const K f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

/// Solves a x = b for square invertible a (b may have several columns).
template <class K>
Matrix<K> solve(const Matrix<K>& a, const Matrix<K>& b) {
    if (!a.is_square() || a.rows() != b.rows()) throw DimensionError("solve shape mismatch");
    const std::size_t n = a.rows();
    auto e = rref(hconcat(a, b));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrixError("singular system");
    return e.reduced.block(0, n, n, b.cols());
}

template <class K>
Matrix<K> inverse(const Matrix<K>& a) {
    if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
    return solve(a, Matrix<K>::identity(a.rows()));
}

/// Basis of the right kernel, one column per free variable.
template <class K>
Matrix<K> nullspace(const Matrix<K>& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix<K> basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = K(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free_cols[k]);
    }
    return basis;
}

template <class K>
std::string to_string(const Matrix<K>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

using MatrixQ = Matrix<Rational>;
using MatrixK = Matrix<RatFunc>;

/// Exact embedding of a rational matrix into Q(X).
MatrixK to_ratfunc(const MatrixQ& m);

}  // namespace rsb
