#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "liecas/scalar.hpp"

namespace liecas {

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : v_(n) {}
    Vector(std::initializer_list<Scalar> init) : v_(init) {}

    std::size_t size() const { return v_.size(); }
    Scalar& operator[](std::size_t i) { return v_[i]; }
    const Scalar& operator[](std::size_t i) const { return v_[i]; }

    bool is_zero() const {
        for (const auto& x : v_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vector& operator+=(const Vector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    Vector& operator*=(const Scalar& s) {
        for (auto& x : v_) x *= s;
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
    friend Vector operator-(Vector a) {
        for (auto& x : a.v_) x = -x;
        return a;
    }
    friend bool operator==(const Vector& a, const Vector& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Vector& v) {
        os << "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ", ";
            os << v[i];
        }
        return os << ")";
    }

private:
    void check_same_size(const Vector& o) const {
        if (v_.size() != o.v_.size()) throw ShapeError("vector size mismatch");
    }
    std::vector<Scalar> v_;
};

/// Dense row-major matrix of Scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Vector row(std::size_t i) const {
        Vector r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }
    Vector col(std::size_t j) const {
        Vector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const Scalar& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.a_) x = -x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend Vector operator*(const Matrix& a, const Vector& x) {
        if (a.cols_ != x.size()) throw ShapeError("matrix-vector shape mismatch");
        Vector y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a.at(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < m.cols_; ++j) {
                if (j) os << ", ";
                os << m.at(i, j);
            }
        }
        return os << "]";
    }

    Scalar trace() const {
        if (!is_square()) throw ShapeError("trace of non-square matrix");
        Scalar t;
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

/// Dense rank-3 array; index convention is up to the caller.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t n1, std::size_t n2, std::size_t n3)
        : n1_(n1), n2_(n2), n3_(n3), a_(n1 * n2 * n3) {}

    std::size_t dim1() const { return n1_; }
    std::size_t dim2() const { return n2_; }
    std::size_t dim3() const { return n3_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n2_ + j) * n3_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * n2_ + j) * n3_ + k];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.n3_ == b.n3_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

private:
    std::size_t n1_ = 0, n2_ = 0, n3_ = 0;
    std::vector<Scalar> a_;
};

/// sigma(x (x) y) = y (x) x on V (x) V, with tensors stored as square matrices
/// t[i][j] = coefficient of e_i (x) e_j. Involutive: braid(braid(t)) = t.
inline Matrix braid(const Matrix& t) {
    if (!t.is_square()) throw ShapeError("braid expects a square tensor");
    return t.transpose();
}

/// Kronecker product with row-major composite indices:
/// (A (x) B)[i*bn+j][k*bm+l] = A[i][k] * B[j][l].
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.rows(); ++j)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c.at(i * b.rows() + j, k * b.cols() + l) = aik * b.at(j, l);
        }
    return c;
}

/// Row-major flattening of a square tensor t[i][j] -> vec[i*n+j].
inline Vector vec(const Matrix& t) {
    Vector v(t.rows() * t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) v[i * t.cols() + j] = t.at(i, j);
    return v;
}

inline Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw ShapeError("unvec size mismatch");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

inline Vector vec3(const Tensor3& t) {
    Vector v(t.dim1() * t.dim2() * t.dim3());
    std::size_t p = 0;
    for (std::size_t i = 0; i < t.dim1(); ++i)
        for (std::size_t j = 0; j < t.dim2(); ++j)
            for (std::size_t k = 0; k < t.dim3(); ++k) v[p++] = t.at(i, j, k);
    return v;
}

namespace detail {

/// Row echelon form by fraction-free (Bareiss) elimination.
///
/// Rows are first scaled to Gaussian-integer entries, so every division in
/// the cross-multiplication step is exact and intermediate entries stay the
/// size of minors of the scaled matrix. The determinant of a square input is
/// recovered from the final pivot, the row scalings and the swap parity.
struct Echelon {
    Matrix r;                           // echelon form (integer-scaled rows)
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows; // pivot_rows[k] = k after swaps; kept for clarity
    std::size_t rank = 0;
    Scalar det;                         // valid only for square input
};

inline Echelon echelon(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Echelon e;
    Scalar scale_product(1);
    int swap_sign = 1;

    // Clear denominators row by row.
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            l = boost::multiprecision::lcm(l, m.at(i, j).real_den());
            l = boost::multiprecision::lcm(l, m.at(i, j).imag_den());
        }
        if (l != 1) {
            Scalar s((Rational(l)));
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) *= s;
            scale_product *= s;
        }
    }

    Scalar prev_pivot(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m.at(pr, c).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
            swap_sign = -swap_sign;
        }
        const Scalar pivot = m.at(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar mic = m.at(i, c);
            for (std::size_t j = 0; j < cols; ++j) {
                Scalar num = m.at(i, j) * pivot - mic * m.at(r, j);
                m.at(i, j) = num / prev_pivot;
            }
        }
        prev_pivot = pivot;
        e.pivot_cols.push_back(c);
        e.pivot_rows.push_back(r);
        ++r;
    }
    e.rank = r;
    if (rows == cols) {
        if (r == rows) {
            Scalar d = prev_pivot;
            if (swap_sign < 0) d = -d;
            e.det = d / scale_product;
        } else {
            e.det = Scalar(0);
        }
    }
    e.r = std::move(m);
    return e;
}

} // namespace detail

/// Rank over the field of Scalars, computed exactly.
inline std::size_t rank(const Matrix& m) { return detail::echelon(m).rank; }

/// Determinant of a square matrix.
inline Scalar det(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("determinant of non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    return detail::echelon(m).det;
}

/// Exact basis of the null space; empty iff m is injective.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    detail::Echelon e = detail::echelon(m);
    const std::size_t cols = m.cols();

    // Back substitution to reduced form on the pivot rows.
    Matrix& r = e.r;
    for (std::size_t k = e.rank; k-- > 0;) {
        const std::size_t pc = e.pivot_cols[k];
        const Scalar inv = Scalar(1) / r.at(k, pc);
        for (std::size_t j = pc; j < cols; ++j) r.at(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar f = r.at(i, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < cols; ++j) r.at(i, j) -= f * r.at(k, j);
        }
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : e.pivot_cols) is_pivot[pc] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = Scalar(1);
        for (std::size_t k = 0; k < e.rank; ++k) v[e.pivot_cols[k]] = -r.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact solution of m x = b, or nullopt when b is outside the column space.
/// Free coordinates are set to zero.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (m.rows() != b.size()) throw ShapeError("solve: shape mismatch");
    const std::size_t cols = m.cols();
    Matrix aug(m.rows(), cols + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
    }
    detail::Echelon e = detail::echelon(std::move(aug));
    for (std::size_t pc : e.pivot_cols)
        if (pc == cols) return std::nullopt;

    Vector x(cols);
    for (std::size_t k = e.rank; k-- > 0;) {
        const std::size_t pc = e.pivot_cols[k];
        Scalar acc = e.r.at(k, cols);
        for (std::size_t j = pc + 1; j < cols; ++j) {
            if (!e.r.at(k, j).is_zero()) acc -= e.r.at(k, j) * x[j];
        }
        x[pc] = acc / e.r.at(k, pc);
    }
    return x;
}

/// Basis of the row space: the nonzero rows of an echelon form.
inline std::vector<Vector> row_space_basis(const Matrix& m) {
    detail::Echelon e = detail::echelon(m);
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < e.rank; ++k) basis.push_back(e.r.row(k));
    return basis;
}

/// Stacks vectors as matrix columns.
inline Matrix columns(const std::vector<Vector>& vs, std::size_t dim) {
    Matrix m(dim, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j) {
        if (vs[j].size() != dim) throw ShapeError("columns: vector size mismatch");
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = vs[j][i];
    }
    return m;
}

/// Membership of v in the span of the given vectors.
inline bool in_span(const std::vector<Vector>& basis, const Vector& v) {
    if (v.is_zero()) return true;
    if (basis.empty()) return false;
    return solve(columns(basis, v.size()), v).has_value();
}

} // namespace liecas
