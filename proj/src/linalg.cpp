#include "qaut/linalg.hpp"

#include <algorithm>

namespace qaut {

Vector Vector::basis(std::size_t n, std::size_t i) {
    Vector e(n);
    e[i] = 1;
    return e;
}

bool Vector::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return x == 0; });
}

Vector Vector::operator+(const Vector& o) const {
    if (size() != o.size())
        throw DimensionError("vector size mismatch in +");
    Vector r(size());
    for (std::size_t i = 0; i < size(); ++i)
        r[i] = v_[i] + o[i];
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    if (size() != o.size())
        throw DimensionError("vector size mismatch in -");
    Vector r(size());
    for (std::size_t i = 0; i < size(); ++i)
        r[i] = v_[i] - o[i];
    return r;
}

Vector Vector::operator*(const Rational& c) const {
    Vector r(size());
    for (std::size_t i = 0; i < size(); ++i)
        r[i] = v_[i] * c;
    return r;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

bool Matrix::is_permutation() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& x = (*this)(i, j);
            if (x == 1)
                ++ones;
            else if (x != 0)
                return false;
        }
        if (ones != 1)
            return false;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, j) == 1)
                ++ones;
        if (ones != 1)
            return false;
    }
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix shape mismatch in +");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix shape mismatch in -");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionError("matrix shape mismatch in *");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += x * o(k, j);
        }
    return r;
}

Vector Matrix::operator*(const Vector& x) const {
    if (cols_ != x.size())
        throw DimensionError("matrix/vector shape mismatch in *");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += (*this)(i, j) * x[j];
    return r;
}

Matrix Matrix::operator*(const Rational& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

namespace {

struct Rref {
    Matrix m;
    std::vector<std::size_t> pivot_cols;
};

Rref rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(pivot, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::optional<Vector> solve_linear(const Matrix& A, const Vector& b) {
    if (A.rows() != b.size())
        throw DimensionError("solve_linear: rows(A) != size(b)");
    Matrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j)
            aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    Rref r = rref(std::move(aug));
    // A pivot in the augmented column means the system is inconsistent.
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == A.cols())
        return std::nullopt;
    Vector x(A.cols());
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        x[r.pivot_cols[k]] = r.m(k, A.cols());
    return x;
}

std::vector<Vector> kernel_basis(const Matrix& A) {
    Rref r = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : r.pivot_cols)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < A.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(A.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
            v[r.pivot_cols[k]] = -r.m(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const Matrix& A) {
    if (A.rows() != A.cols())
        throw DimensionError("determinant of non-square matrix");
    Matrix m = A;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Rational inv = 1 / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0)
                continue;
            Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

std::optional<Matrix> invert(const Matrix& A) {
    if (A.rows() != A.cols())
        throw DimensionError("invert of non-square matrix");
    const std::size_t n = A.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = rref(std::move(aug));
    if (r.pivot_cols.size() != n || (n > 0 && r.pivot_cols.back() != n - 1))
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r.m(i, n + j);
    return inv;
}

}  // namespace qaut
