// Finite-dimensional Hopf algebras as structure tensors, their comodules,
// the Haar functional, and the kappa operator V (x) A -> V0 (x) A.
//
// Tensor conventions:
//   mult(i,j,k)   = coefficient of e_k in e_i * e_j
//   comul(i,j,k)  = coefficient of e_i (x) e_j in Delta(e_k)
//   antipode(i,j) : S(e_j) = sum_i antipode(i,j) e_i

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qaut/linalg.hpp"
#include "qaut/measured_algebra.hpp"
#include "qaut/report.hpp"

namespace qaut {

struct FiniteHopfAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Tensor3 mult;
    Vector unit;
    Tensor3 comul;
    Vector counit;
    Matrix antipode;

    Vector multiply(const Vector& a, const Vector& b) const;
    // The underlying algebra with a chosen measure.
    MeasuredAlgebra as_measured_algebra(const Vector& measure) const;
};

// Every Hopf axiom checked exactly; failures carry witness indices.
ValidationReport validate_hopf(const FiniteHopfAlgebra& A);

// Which tensor leg the functional contracts in the colinearity equation.
//   Right (default): (J (x) id) Delta = J(-) 1   (right integral on A)
//   Left:            (id (x) J) Delta = J(-) 1   (left integral on A)
enum class HaarSide { Right, Left };

struct HaarResult {
    // Normalized so J(1) = 1 when J(1) != 0, else first nonzero coord = 1.
    std::optional<Vector> functional;
    std::size_t solution_dim = 0;  // != 1 signals an invalid input Hopf algebra
    bool is_measure = false;       // Gram of (A as algebra, J) invertible
    bool cosemisimple = false;     // J(1) != 0
};

HaarResult haar_integral(const FiniteHopfAlgebra& A, HaarSide side = HaarSide::Right);

struct Comodule {
    std::size_t dim = 0;        // dim V
    FiniteHopfAlgebra host;     // A
    // (dim*n) x dim matrix, row j*n + a: alpha(e_i) = sum rho(j,a;i) e_j (x) f_a
    Matrix coaction;

    const Rational& rho(std::size_t j, std::size_t a, std::size_t i) const {
        return coaction(j * host.dim + a, i);
    }
};

// V = A with alpha = Delta.
Comodule regular_comodule(const FiniteHopfAlgebra& A);
// Coaction v -> v (x) 1.
Comodule trivial_comodule(const FiniteHopfAlgebra& A, std::size_t v);

// Coassociativity and counit law of the coaction.
ValidationReport validate_comodule(const Comodule& V);

struct KappaResult {
    Matrix kappa;    // (1 (x) m)(alpha_V (x) 1)
    Matrix inverse;  // (1 (x) m)(1 (x) S (x) 1)(alpha_V (x) 1)
    ValidationReport report;  // fails when either composite is not the identity
};

KappaResult kappa(const Comodule& V);

// A measured algebra and a comodule structure on the same space.
struct ComoduleAlgebra {
    MeasuredAlgebra algebra;
    Comodule comodule;
};

// alpha multiplicative/unital, comodule axioms, and the measure colinear:
// (phi (x) id) alpha = phi(-) 1_A.
ValidationReport check_comodule_algebra(const ComoduleAlgebra& ca);

// Lemma-2.2-style check. pi : H -> A as an n_A x n_H matrix; alpha an
// H-coaction on A as an (n_A*n_H) x n_A matrix (same layout as Comodule).
// Verifies the preconditions (pi a bialgebra morphism, alpha an H-comodule
// algebra structure, (1 (x) pi) alpha = Delta_A), hypothesis (ii) (kappa_A
// is an H-comodule map) and the equation (*) for mu = m_A (pi (x) 1).
ValidationReport check_star_condition(const FiniteHopfAlgebra& H, const FiniteHopfAlgebra& A,
                                      const Matrix& pi, const Matrix& alpha);

// --- constructors ---

// Q[Z/m] with Delta g = g (x) g.
FiniteHopfAlgebra group_hopf(std::size_t m);

// Functions on Z/m, the dual of group_hopf(m).
FiniteHopfAlgebra dual_function_hopf(std::size_t m);

// Sweedler's 4-dimensional Hopf algebra: basis 1, g, x, gx with g^2 = 1,
// x^2 = 0, xg = -gx, Delta x = x (x) 1 + g (x) x.
FiniteHopfAlgebra sweedler_hopf();

// Sweedler's algebra with its Haar measure (the x-coefficient form).
MeasuredAlgebra sweedler_algebra();

}  // namespace qaut
