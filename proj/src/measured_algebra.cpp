#include "qaut/measured_algebra.hpp"

#include <fmt/format.h>

namespace qaut {

Vector MeasuredAlgebra::multiply(const Vector& a, const Vector& b) const {
    if (a.size() != dim || b.size() != dim)
        throw DimensionError("multiply: coordinate size mismatch");
    Vector r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j] == 0)
                continue;
            Rational ab = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (structure(i, j, k) != 0)
                    r[k] += ab * structure(i, j, k);
        }
    }
    return r;
}

Matrix MeasuredAlgebra::left_mult_matrix(const Vector& a) const {
    if (a.size() != dim)
        throw DimensionError("left_mult_matrix: coordinate size mismatch");
    Matrix L(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (structure(i, j, k) != 0)
                    L(k, j) += a[i] * structure(i, j, k);
    }
    return L;
}

Rational MeasuredAlgebra::apply_measure(const Vector& a) const {
    if (a.size() != dim)
        throw DimensionError("apply_measure: coordinate size mismatch");
    Rational r = 0;
    for (std::size_t i = 0; i < dim; ++i)
        r += measure[i] * a[i];
    return r;
}

ValidationReport validate(const MeasuredAlgebra& Z) {
    ValidationReport report;
    const std::size_t n = Z.dim;
    if (n == 0) {
        report.fail("dimension must be positive");
        return report;
    }
    if (Z.basis.size() != n || Z.structure.dim0() != n || Z.structure.dim1() != n ||
        Z.structure.dim2() != n || Z.unit.size() != n || Z.measure.size() != n) {
        report.fail("field sizes do not match stated dimension");
        return report;
    }

    // associativity: sum_p c(i,j,p) c(p,k,l) = sum_q c(j,k,q) c(i,q,l)
    for (std::size_t i = 0; i < n && report.ok; ++i)
        for (std::size_t j = 0; j < n && report.ok; ++j)
            for (std::size_t k = 0; k < n && report.ok; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational lhs = 0, rhs = 0;
                    for (std::size_t p = 0; p < n; ++p)
                        lhs += Z.structure(i, j, p) * Z.structure(p, k, l);
                    for (std::size_t q = 0; q < n; ++q)
                        rhs += Z.structure(j, k, q) * Z.structure(i, q, l);
                    if (lhs != rhs) {
                        report.fail(fmt::format(
                            "associativity fails at (i,j,k,l)=({},{},{},{}): {} != {}", i, j, k, l,
                            to_string(lhs), to_string(rhs)));
                        break;
                    }
                }

    // unit: 1 * e_j = e_j and e_i * 1 = e_i
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Rational left = 0;
            for (std::size_t i = 0; i < n; ++i)
                left += Z.unit[i] * Z.structure(i, j, k);
            if (left != (j == k ? 1 : 0)) {
                report.fail(fmt::format("left unit fails at (j,k)=({},{}): got {}", j, k,
                                        to_string(left)));
            }
            Rational right = 0;
            for (std::size_t i = 0; i < n; ++i)
                right += Z.unit[i] * Z.structure(j, i, k);
            if (right != (j == k ? 1 : 0)) {
                report.fail(fmt::format("right unit fails at (j,k)=({},{}): got {}", j, k,
                                        to_string(right)));
            }
        }

    if (determinant(gram(Z)) == 0)
        report.fail("measure is degenerate: Gram matrix is singular");

    return report;
}

Matrix gram(const MeasuredAlgebra& Z) {
    Matrix G(Z.dim, Z.dim);
    for (std::size_t i = 0; i < Z.dim; ++i)
        for (std::size_t j = 0; j < Z.dim; ++j)
            for (std::size_t k = 0; k < Z.dim; ++k)
                G(i, j) += Z.structure(i, j, k) * Z.measure[k];
    return G;
}

Copairing copairing(const MeasuredAlgebra& Z) {
    auto inv = invert(gram(Z));
    if (!inv)
        throw Error("copairing: Gram matrix is singular");
    return Copairing{*inv};
}

std::vector<std::pair<Rational, Vector>> invertible_decomposition(const MeasuredAlgebra& Z,
                                                                  const Vector& a) {
    if (a.size() != Z.dim)
        throw DimensionError("invertible_decomposition: coordinate size mismatch");
    if (a.is_zero())
        return {};
    Matrix L = Z.left_mult_matrix(a);
    if (determinant(L) != 0)
        return {{Rational(1), a}};
    // a = (a - lambda 1) + lambda 1; L(a) has at most n eigenvalues, so some
    // lambda in {1..n+1} makes L(a) - lambda id invertible.
    for (long lambda = 1; lambda <= static_cast<long>(Z.dim) + 1; ++lambda) {
        Matrix shifted = L - Matrix::identity(Z.dim) * Rational(lambda);
        if (determinant(shifted) != 0) {
            Vector shifted_elt = a - Z.unit * Rational(lambda);
            return {{Rational(1), shifted_elt}, {Rational(lambda), Z.unit}};
        }
    }
    throw Error("invertible_decomposition: no shift found (algebra invalid?)");
}

Vector measure_shift(const MeasuredAlgebra& Z, const Vector& a) {
    // phi(a e_j) = sum_i a_i G(i,j)
    Matrix G = gram(Z);
    Vector r(Z.dim);
    for (std::size_t j = 0; j < Z.dim; ++j)
        for (std::size_t i = 0; i < Z.dim; ++i)
            r[j] += a[i] * G(i, j);
    return r;
}

Matrix gram_of_form(const MeasuredAlgebra& Z, const Vector& psi) {
    Matrix G(Z.dim, Z.dim);
    for (std::size_t i = 0; i < Z.dim; ++i)
        for (std::size_t j = 0; j < Z.dim; ++j)
            for (std::size_t k = 0; k < Z.dim; ++k)
                G(i, j) += Z.structure(i, j, k) * psi[k];
    return G;
}

std::vector<std::pair<Rational, Vector>> measure_decomposition(const MeasuredAlgebra& Z,
                                                               const Vector& f) {
    if (f.size() != Z.dim)
        throw DimensionError("measure_decomposition: coordinate size mismatch");
    if (f.is_zero())
        return {};
    // f = phi(a -) means f = G^T a.
    auto a = solve_linear(gram(Z).transpose(), f);
    if (!a)
        throw Error("measure_decomposition: Gram matrix is singular");
    std::vector<std::pair<Rational, Vector>> result;
    for (auto& [lambda, elt] : invertible_decomposition(Z, *a)) {
        Vector form = measure_shift(Z, elt);
        if (determinant(gram_of_form(Z, form)) == 0)
            throw Error("measure_decomposition: produced a degenerate form");
        result.emplace_back(lambda, std::move(form));
    }
    return result;
}

ValidationReport validate(const AlgebraMap& f) {
    ValidationReport report;
    const std::size_t ns = f.source.dim, nt = f.target.dim;
    if (f.matrix.rows() != nt || f.matrix.cols() != ns) {
        report.fail(fmt::format("matrix shape {}x{} does not match algebras {}->{}",
                                f.matrix.rows(), f.matrix.cols(), ns, nt));
        return report;
    }
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < ns; ++j) {
            Vector ei = Vector::basis(ns, i), ej = Vector::basis(ns, j);
            Vector lhs = f.matrix * f.source.multiply(ei, ej);
            Vector rhs = f.target.multiply(f.matrix * ei, f.matrix * ej);
            if (lhs != rhs)
                report.fail(fmt::format("not multiplicative at (i,j)=({},{})", i, j));
        }
    if (f.matrix * f.source.unit != f.target.unit)
        report.fail("not unital");
    return report;
}

MeasuredAlgebra function_algebra(std::size_t n, const std::vector<Rational>& weights) {
    if (n == 0)
        throw Error("function_algebra: n must be positive");
    if (weights.size() != n)
        throw DimensionError("function_algebra: weight count mismatch");
    for (const Rational& w : weights)
        if (w == 0)
            throw Error("function_algebra: zero weight makes the measure degenerate");
    MeasuredAlgebra Z;
    Z.dim = n;
    Z.structure = Tensor3(n, n, n);
    Z.unit = Vector(n);
    Z.measure = Vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        Z.basis.push_back("d" + std::to_string(i));
        Z.structure(i, i, i) = 1;
        Z.unit[i] = 1;
        Z.measure[i] = weights[i];
    }
    return Z;
}

MeasuredAlgebra function_algebra_uniform(std::size_t n) {
    return function_algebra(n, std::vector<Rational>(n, frac(1, static_cast<long>(n))));
}

MeasuredAlgebra matrix_algebra(std::size_t d) {
    if (d == 0)
        throw Error("matrix_algebra: d must be positive");
    const std::size_t n = d * d;
    auto idx = [d](std::size_t a, std::size_t b) { return a * d + b; };
    MeasuredAlgebra Z;
    Z.dim = n;
    Z.structure = Tensor3(n, n, n);
    Z.unit = Vector(n);
    Z.measure = Vector(n);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Z.basis.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
            // E_ab E_cd = delta_bc E_ad
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e)
                    if (b == c)
                        Z.structure(idx(a, b), idx(c, e), idx(a, e)) = 1;
            if (a == b) {
                Z.unit[idx(a, b)] = 1;    // 1 = sum_a E_aa
                Z.measure[idx(a, b)] = 1; // tr(E_aa) = 1
            }
        }
    return Z;
}

MeasuredAlgebra group_algebra(std::size_t m) {
    if (m == 0)
        throw Error("group_algebra: order must be positive");
    MeasuredAlgebra Z;
    Z.dim = m;
    Z.structure = Tensor3(m, m, m);
    Z.unit = Vector(m);
    Z.measure = Vector(m);
    for (std::size_t i = 0; i < m; ++i) {
        Z.basis.push_back("g" + std::to_string(i));
        for (std::size_t j = 0; j < m; ++j)
            Z.structure(i, j, (i + j) % m) = 1;
    }
    Z.unit[0] = 1;
    Z.measure[0] = 1;
    return Z;
}

MeasuredAlgebra dual_function_algebra_of_group(std::size_t m) {
    if (m == 0)
        throw Error("dual_function_algebra_of_group: order must be positive");
    MeasuredAlgebra Z = function_algebra_uniform(m);
    for (std::size_t i = 0; i < m; ++i)
        Z.basis[i] = "dg" + std::to_string(i);
    return Z;
}

MeasuredAlgebra dual_numbers_algebra() {
    MeasuredAlgebra Z;
    Z.dim = 2;
    Z.basis = {"1", "x"};
    Z.structure = Tensor3(2, 2, 2);
    Z.structure(0, 0, 0) = 1;  // 1*1 = 1
    Z.structure(0, 1, 1) = 1;  // 1*x = x
    Z.structure(1, 0, 1) = 1;  // x*1 = x
    // x*x = 0
    Z.unit = Vector{Rational(1), Rational(0)};
    Z.measure = Vector{Rational(0), Rational(1)};
    return Z;
}

}  // namespace qaut
