// Finite-dimensional measured algebras (Z, phi): a measure is a linear form
// whose bilinear form phi(ab) is nondegenerate, which makes (Z, phi) a
// Frobenius algebra. Structure constants are stored as a Tensor3 with
// c(i,j,k) = coefficient of e_k in e_i * e_j.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qaut/linalg.hpp"
#include "qaut/report.hpp"

namespace qaut {

struct MeasuredAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Tensor3 structure;  // c(i,j,k)
    Vector unit;        // coordinates of 1
    Vector measure;     // phi_i = phi(e_i)

    // Coordinates of a*b.
    Vector multiply(const Vector& a, const Vector& b) const;
    // L(a) with L(a) e_j = a * e_j; entry (k, j) = sum_i a_i c(i,j,k).
    Matrix left_mult_matrix(const Vector& a) const;
    // phi(a)
    Rational apply_measure(const Vector& a) const;
};

// Checks associativity, two-sided unit, and invertibility of the Gram
// matrix; failures carry witness indices.
ValidationReport validate(const MeasuredAlgebra& Z);

// G(i,j) = phi(e_i e_j) = sum_k c(i,j,k) phi_k.
Matrix gram(const MeasuredAlgebra& Z);

// B' = sum_{ij} B'(i,j) e_i (x) e_j, the element dual to B = phi o m.
// Snake identity in coordinates: sum_j G(k,j) B'(j,l) = delta_{kl}.
struct Copairing {
    Matrix coefficients;
};

// Throws Error when the Gram matrix is singular.
Copairing copairing(const MeasuredAlgebra& Z);

// Writes a as sum lambda_i a_i with every a_i invertible (certificate:
// L(a_i) has nonzero determinant). At most two terms, following
// a = (a - lambda 1) + lambda 1 with lambda the first value in {1..n+1}
// making L(a) - lambda id invertible. a = 0 yields the empty combination.
std::vector<std::pair<Rational, Vector>> invertible_decomposition(const MeasuredAlgebra& Z,
                                                                  const Vector& a);

// Writes the linear form f (coordinates f_i = f(e_i)) as sum lambda_i
// phi(a_i -) with every phi(a_i -) a measure; returns the forms'
// coordinate vectors. f = 0 yields the empty combination.
std::vector<std::pair<Rational, Vector>> measure_decomposition(const MeasuredAlgebra& Z,
                                                               const Vector& f);

// Coordinates of the form phi(a -), i.e. e_j -> phi(a e_j).
Vector measure_shift(const MeasuredAlgebra& Z, const Vector& a);

// Gram matrix of an arbitrary linear form psi on Z: psi(e_i e_j).
Matrix gram_of_form(const MeasuredAlgebra& Z, const Vector& psi);

struct AlgebraMap {
    MeasuredAlgebra source;
    MeasuredAlgebra target;
    Matrix matrix;  // f(e_i^src) = sum_l matrix(l,i) e_l^tgt
};

// Multiplicative and unital; measure preservation is deliberately not
// required (arrows of Malg_f are plain algebra morphisms).
ValidationReport validate(const AlgebraMap& f);

// --- constructors ---

// C(n points): e_i e_j = delta_{ij} e_i, unit = (1,..,1), phi = weights.
MeasuredAlgebra function_algebra(std::size_t n, const std::vector<Rational>& weights);
MeasuredAlgebra function_algebra_uniform(std::size_t n);

// M_d(Q) with basis E_11, E_12, ..., E_dd (row-major) and trace measure.
MeasuredAlgebra matrix_algebra(std::size_t d);

// Q[Z/m] with phi = coefficient of the identity.
MeasuredAlgebra group_algebra(std::size_t m);

// Functions on Z/m with the normalized counting measure (weights 1/m);
// the underlying measured algebra of the dual of Q[Z/m].
MeasuredAlgebra dual_function_algebra_of_group(std::size_t m);

// Q[x]/(x^2) with phi(alpha + beta x) = beta.
MeasuredAlgebra dual_numbers_algebra();

}  // namespace qaut
