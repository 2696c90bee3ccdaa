// Dense exact linear algebra over Q. Dimensions at desk scale (<= ~20), so
// everything is plain Gaussian elimination on row-major storage.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qaut/rational.hpp"

namespace qaut {

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : v_(n) {}
    Vector(std::initializer_list<Rational> xs) : v_(xs) {}

    static Vector zero(std::size_t n) { return Vector(n); }
    // e_i in dimension n
    static Vector basis(std::size_t n, std::size_t i);

    std::size_t size() const { return v_.size(); }
    Rational& operator[](std::size_t i) { return v_[i]; }
    const Rational& operator[](std::size_t i) const { return v_[i]; }

    bool operator==(const Vector& o) const = default;
    bool is_zero() const;

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector operator*(const Rational& c) const;

private:
    std::vector<Rational> v_;
};

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const = default;
    bool is_zero() const;
    bool is_identity() const;
    bool is_permutation() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& x) const;
    Matrix operator*(const Rational& c) const;
    Matrix transpose() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Kronecker product, row index (i, k) -> i * b.rows() + k.
Matrix kron(const Matrix& a, const Matrix& b);

class Tensor3 {
public:
    Tensor3() : d0_(0), d1_(0), d2_(0) {}
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
        : d0_(d0), d1_(d1), d2_(d2), a_(d0 * d1 * d2) {}

    std::size_t dim0() const { return d0_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }

    Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return a_[(i * d1_ + j) * d2_ + k];
    }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * d1_ + j) * d2_ + k];
    }

    bool operator==(const Tensor3& o) const = default;

private:
    std::size_t d0_, d1_, d2_;
    std::vector<Rational> a_;
};

// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve_linear(const Matrix& A, const Vector& b);

// Exact basis of the null space; empty iff A is injective. Deterministic:
// one vector per free column of the RREF, in ascending column order.
std::vector<Vector> kernel_basis(const Matrix& A);

Rational determinant(const Matrix& A);

std::optional<Matrix> invert(const Matrix& A);

}  // namespace qaut
