#include "qaut/hopf.hpp"

#include <fmt/format.h>

namespace qaut {

Vector FiniteHopfAlgebra::multiply(const Vector& a, const Vector& b) const {
    Vector r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j] == 0)
                continue;
            Rational ab = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (mult(i, j, k) != 0)
                    r[k] += ab * mult(i, j, k);
        }
    }
    return r;
}

MeasuredAlgebra FiniteHopfAlgebra::as_measured_algebra(const Vector& measure) const {
    MeasuredAlgebra Z;
    Z.dim = dim;
    Z.basis = basis;
    Z.structure = mult;
    Z.unit = unit;
    Z.measure = measure;
    return Z;
}

ValidationReport validate_hopf(const FiniteHopfAlgebra& A) {
    ValidationReport report;
    const std::size_t n = A.dim;
    if (n == 0) {
        report.fail("dimension must be positive");
        return report;
    }
    if (A.basis.size() != n || A.unit.size() != n || A.counit.size() != n ||
        A.antipode.rows() != n || A.antipode.cols() != n || A.mult.dim0() != n ||
        A.comul.dim0() != n) {
        report.fail("field sizes do not match stated dimension");
        return report;
    }

    // Algebra axioms via the measured-algebra validator (Gram check skipped:
    // no measure involved here).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational lhs = 0, rhs = 0;
                    for (std::size_t p = 0; p < n; ++p)
                        lhs += A.mult(i, j, p) * A.mult(p, k, l);
                    for (std::size_t q = 0; q < n; ++q)
                        rhs += A.mult(j, k, q) * A.mult(i, q, l);
                    if (lhs != rhs) {
                        report.fail(fmt::format("associativity fails at ({},{},{},{})", i, j, k, l));
                        goto assoc_done;
                    }
                }
assoc_done:
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Rational left = 0, right = 0;
            for (std::size_t i = 0; i < n; ++i) {
                left += A.unit[i] * A.mult(i, j, k);
                right += A.unit[i] * A.mult(j, i, k);
            }
            if (left != (j == k ? 1 : 0))
                report.fail(fmt::format("left unit fails at (j,k)=({},{})", j, k));
            if (right != (j == k ? 1 : 0))
                report.fail(fmt::format("right unit fails at (j,k)=({},{})", j, k));
        }

    // Coassociativity: coefficient of e_a (x) e_b (x) e_c in both
    // expansions of (Delta (x) 1)Delta(e_k) = (1 (x) Delta)Delta(e_k).
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    Rational lhs = 0, rhs = 0;
                    for (std::size_t i = 0; i < n; ++i)
                        lhs += A.comul(i, c, k) * A.comul(a, b, i);
                    for (std::size_t j = 0; j < n; ++j)
                        rhs += A.comul(a, j, k) * A.comul(b, c, j);
                    if (lhs != rhs) {
                        report.fail(fmt::format("coassociativity fails at (k;a,b,c)=({};{},{},{})",
                                                k, a, b, c));
                        goto coassoc_done;
                    }
                }
coassoc_done:
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            Rational left = 0, right = 0;
            for (std::size_t i = 0; i < n; ++i) {
                left += A.comul(i, j, k) * A.counit[i];
                right += A.comul(j, i, k) * A.counit[i];
            }
            if (left != (j == k ? 1 : 0))
                report.fail(fmt::format("counit law (eps (x) id) fails at (k,j)=({},{})", k, j));
            if (right != (j == k ? 1 : 0))
                report.fail(fmt::format("counit law (id (x) eps) fails at (k,j)=({},{})", k, j));
        }

    // Delta is an algebra map.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    Rational lhs = 0, rhs = 0;
                    for (std::size_t k = 0; k < n; ++k)
                        lhs += A.mult(i, j, k) * A.comul(a, b, k);
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q)
                            for (std::size_t r = 0; r < n; ++r)
                                for (std::size_t s = 0; s < n; ++s)
                                    rhs += A.comul(p, q, i) * A.comul(r, s, j) * A.mult(p, r, a) *
                                           A.mult(q, s, b);
                    if (lhs != rhs) {
                        report.fail(fmt::format(
                            "Delta not multiplicative at (i,j;a,b)=({},{};{},{})", i, j, a, b));
                        goto delta_mult_done;
                    }
                }
delta_mult_done:
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Rational lhs = 0;
            for (std::size_t k = 0; k < n; ++k)
                lhs += A.unit[k] * A.comul(a, b, k);
            if (lhs != A.unit[a] * A.unit[b])
                report.fail(fmt::format("Delta(1) != 1 (x) 1 at (a,b)=({},{})", a, b));
        }

    // epsilon is an algebra map.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational lhs = 0;
            for (std::size_t k = 0; k < n; ++k)
                lhs += A.mult(i, j, k) * A.counit[k];
            if (lhs != A.counit[i] * A.counit[j])
                report.fail(fmt::format("eps not multiplicative at (i,j)=({},{})", i, j));
        }
    {
        Rational eps1 = 0;
        for (std::size_t k = 0; k < n; ++k)
            eps1 += A.unit[k] * A.counit[k];
        if (eps1 != 1)
            report.fail("eps(1) != 1");
    }

    // Antipode axiom: m(S (x) id)Delta = u eps = m(id (x) S)Delta.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) {
            Rational lhs = 0, rhs = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t a = 0; a < n; ++a) {
                        if (A.comul(i, j, k) == 0)
                            continue;
                        lhs += A.comul(i, j, k) * A.antipode(a, i) * A.mult(a, j, t);
                        rhs += A.comul(i, j, k) * A.antipode(a, j) * A.mult(i, a, t);
                    }
            Rational expected = A.counit[k] * A.unit[t];
            if (lhs != expected)
                report.fail(fmt::format("antipode axiom m(S (x) id)Delta fails at (k,t)=({},{})",
                                        k, t));
            if (rhs != expected)
                report.fail(fmt::format("antipode axiom m(id (x) S)Delta fails at (k,t)=({},{})",
                                        k, t));
        }

    return report;
}

HaarResult haar_integral(const FiniteHopfAlgebra& A, HaarSide side) {
    const std::size_t n = A.dim;
    // Right: sum_i comul(i,j,k) J_i = J_k eta_j   for all (k, j)
    // Left:  sum_j comul(i,j,k) J_j = J_k eta_i   for all (k, i)
    Matrix M(n * n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = k * n + j;
            for (std::size_t i = 0; i < n; ++i) {
                if (side == HaarSide::Right)
                    M(row, i) += A.comul(i, j, k);
                else
                    M(row, i) += A.comul(j, i, k);
            }
            M(row, k) -= A.unit[j];
        }
    std::vector<Vector> sols = kernel_basis(M);

    HaarResult result;
    result.solution_dim = sols.size();
    if (sols.empty())
        return result;

    Vector J = sols.front();
    Rational j1 = 0;
    for (std::size_t i = 0; i < n; ++i)
        j1 += A.unit[i] * J[i];
    if (j1 != 0) {
        J = J * (1 / j1);
        result.cosemisimple = true;
    } else {
        for (std::size_t i = 0; i < n; ++i)
            if (J[i] != 0) {
                J = J * (1 / J[i]);
                break;
            }
    }
    result.is_measure = determinant(gram(A.as_measured_algebra(J))) != 0;
    result.functional = std::move(J);
    return result;
}

Comodule regular_comodule(const FiniteHopfAlgebra& A) {
    Comodule V;
    V.dim = A.dim;
    V.host = A;
    V.coaction = Matrix(A.dim * A.dim, A.dim);
    for (std::size_t k = 0; k < A.dim; ++k)
        for (std::size_t i = 0; i < A.dim; ++i)
            for (std::size_t j = 0; j < A.dim; ++j)
                V.coaction(i * A.dim + j, k) = A.comul(i, j, k);
    return V;
}

Comodule trivial_comodule(const FiniteHopfAlgebra& A, std::size_t v) {
    Comodule V;
    V.dim = v;
    V.host = A;
    V.coaction = Matrix(v * A.dim, v);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t a = 0; a < A.dim; ++a)
            V.coaction(i * A.dim + a, i) = A.unit[a];
    return V;
}

ValidationReport validate_comodule(const Comodule& V) {
    ValidationReport report;
    const std::size_t v = V.dim, n = V.host.dim;
    if (V.coaction.rows() != v * n || V.coaction.cols() != v) {
        report.fail("coaction matrix shape mismatch");
        return report;
    }
    // coassociativity: (alpha (x) 1) alpha = (1 (x) Delta) alpha
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t k = 0; k < v; ++k)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    Rational lhs = 0, rhs = 0;
                    for (std::size_t j = 0; j < v; ++j)
                        lhs += V.rho(j, c, i) * V.rho(k, b, j);
                    for (std::size_t a = 0; a < n; ++a)
                        rhs += V.rho(k, a, i) * V.host.comul(b, c, a);
                    if (lhs != rhs) {
                        report.fail(fmt::format(
                            "coaction not coassociative at (i;k,b,c)=({};{},{},{})", i, k, b, c));
                        goto done;
                    }
                }
done:
    // counit: (1 (x) eps) alpha = id
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) {
            Rational s = 0;
            for (std::size_t a = 0; a < n; ++a)
                s += V.rho(j, a, i) * V.host.counit[a];
            if (s != (i == j ? 1 : 0))
                report.fail(fmt::format("coaction counit law fails at (i,j)=({},{})", i, j));
        }
    return report;
}

KappaResult kappa(const Comodule& V) {
    const std::size_t v = V.dim, n = V.host.dim;
    const FiniteHopfAlgebra& A = V.host;
    Matrix K(v * n, v * n), Kinv(v * n, v * n);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t col = i * n + b;
            for (std::size_t j = 0; j < v; ++j)
                for (std::size_t a = 0; a < n; ++a) {
                    const Rational& r = V.rho(j, a, i);
                    if (r == 0)
                        continue;
                    for (std::size_t c = 0; c < n; ++c) {
                        if (A.mult(a, b, c) != 0)
                            K(j * n + c, col) += r * A.mult(a, b, c);
                        for (std::size_t ap = 0; ap < n; ++ap)
                            if (A.antipode(ap, a) != 0 && A.mult(ap, b, c) != 0)
                                Kinv(j * n + c, col) +=
                                    r * A.antipode(ap, a) * A.mult(ap, b, c);
                    }
                }
        }
    KappaResult result{K, Kinv, {}};
    if (!(K * Kinv).is_identity())
        result.report.fail("kappa composed with its inverse is not the identity");
    if (!(Kinv * K).is_identity())
        result.report.fail("inverse composed with kappa is not the identity");
    return result;
}

ValidationReport check_comodule_algebra(const ComoduleAlgebra& ca) {
    ValidationReport report;
    const MeasuredAlgebra& Z = ca.algebra;
    const Comodule& V = ca.comodule;
    const FiniteHopfAlgebra& A = V.host;
    const std::size_t v = Z.dim, n = A.dim;
    if (V.dim != v) {
        report.fail("algebra and comodule dimensions differ");
        return report;
    }
    report.merge(validate(Z));
    report.merge(validate_comodule(V));
    if (!report.ok)
        return report;

    // alpha multiplicative: alpha(e_i e_j) = alpha(e_i) alpha(e_j)
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j)
            for (std::size_t l = 0; l < v; ++l)
                for (std::size_t c = 0; c < n; ++c) {
                    Rational lhs = 0, rhs = 0;
                    for (std::size_t k = 0; k < v; ++k)
                        lhs += Z.structure(i, j, k) * V.rho(l, c, k);
                    for (std::size_t p = 0; p < v; ++p)
                        for (std::size_t q = 0; q < v; ++q) {
                            if (Z.structure(p, q, l) == 0)
                                continue;
                            for (std::size_t a = 0; a < n; ++a)
                                for (std::size_t b = 0; b < n; ++b)
                                    rhs += V.rho(p, a, i) * V.rho(q, b, j) *
                                           Z.structure(p, q, l) * A.mult(a, b, c);
                        }
                    if (lhs != rhs) {
                        report.fail(fmt::format(
                            "coaction not multiplicative at (i,j;l,c)=({},{};{},{})", i, j, l, c));
                        goto mult_done;
                    }
                }
mult_done:
    // alpha unital
    for (std::size_t j = 0; j < v; ++j)
        for (std::size_t a = 0; a < n; ++a) {
            Rational s = 0;
            for (std::size_t i = 0; i < v; ++i)
                s += Z.unit[i] * V.rho(j, a, i);
            if (s != Z.unit[j] * A.unit[a])
                report.fail(fmt::format("coaction not unital at (j,a)=({},{})", j, a));
        }
    // measure colinear: (phi (x) id) alpha = phi(-) 1_A
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t a = 0; a < n; ++a) {
            Rational s = 0;
            for (std::size_t j = 0; j < v; ++j)
                s += Z.measure[j] * V.rho(j, a, i);
            if (s != Z.measure[i] * A.unit[a])
                report.fail(fmt::format("measure not colinear at (i,a)=({},{})", i, a));
        }
    return report;
}

ValidationReport check_star_condition(const FiniteHopfAlgebra& H, const FiniteHopfAlgebra& A,
                                      const Matrix& pi, const Matrix& alpha) {
    ValidationReport report;
    const std::size_t nh = H.dim, na = A.dim;
    if (pi.rows() != na || pi.cols() != nh) {
        report.fail("pi matrix shape mismatch");
        return report;
    }
    if (alpha.rows() != na * nh || alpha.cols() != na) {
        report.fail("alpha matrix shape mismatch");
        return report;
    }
    auto rho = [&](std::size_t j, std::size_t h, std::size_t i) -> const Rational& {
        return alpha(j * nh + h, i);
    };
    auto pi_col = [&](std::size_t i) {
        Vector c(na);
        for (std::size_t a = 0; a < na; ++a)
            c[a] = pi(a, i);
        return c;
    };

    // pi is a bialgebra morphism.
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
            Vector lhs(na);
            for (std::size_t k = 0; k < nh; ++k)
                if (H.mult(i, j, k) != 0)
                    lhs = lhs + pi_col(k) * H.mult(i, j, k);
            Vector rhs = A.multiply(pi_col(i), pi_col(j));
            if (lhs != rhs)
                report.fail(fmt::format("pi not multiplicative at (i,j)=({},{})", i, j));
        }
    if (pi * H.unit != A.unit)
        report.fail("pi not unital");
    for (std::size_t k = 0; k < nh; ++k)
        for (std::size_t b = 0; b < na; ++b)
            for (std::size_t c = 0; c < na; ++c) {
                Rational lhs = 0, rhs = 0;
                for (std::size_t a = 0; a < na; ++a)
                    lhs += pi(a, k) * A.comul(b, c, a);
                for (std::size_t i = 0; i < nh; ++i)
                    for (std::size_t j = 0; j < nh; ++j)
                        if (H.comul(i, j, k) != 0)
                            rhs += H.comul(i, j, k) * pi(b, i) * pi(c, j);
                if (lhs != rhs) {
                    report.fail(fmt::format("pi not comultiplicative at (k;b,c)=({};{},{})",
                                            k, b, c));
                    goto pi_comul_done;
                }
            }
pi_comul_done:
    for (std::size_t k = 0; k < nh; ++k) {
        Rational lhs = 0;
        for (std::size_t a = 0; a < na; ++a)
            lhs += pi(a, k) * A.counit[a];
        if (lhs != H.counit[k])
            report.fail(fmt::format("pi not counital at k={}", k));
    }

    // alpha is an H-comodule algebra structure on A.
    {
        Comodule V;
        V.dim = na;
        V.host = H;
        V.coaction = alpha;
        report.merge(validate_comodule(V));
        for (std::size_t i = 0; i < na && report.ok; ++i)
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t l = 0; l < na; ++l)
                    for (std::size_t c = 0; c < nh; ++c) {
                        Rational lhs = 0, rhs = 0;
                        for (std::size_t k = 0; k < na; ++k)
                            lhs += A.mult(i, j, k) * rho(l, c, k);
                        for (std::size_t p = 0; p < na; ++p)
                            for (std::size_t q = 0; q < na; ++q) {
                                if (A.mult(p, q, l) == 0)
                                    continue;
                                for (std::size_t a = 0; a < nh; ++a)
                                    for (std::size_t b = 0; b < nh; ++b)
                                        rhs += rho(p, a, i) * rho(q, b, j) * A.mult(p, q, l) *
                                               H.mult(a, b, c);
                            }
                        if (lhs != rhs) {
                            report.fail(fmt::format(
                                "alpha not multiplicative at (i,j;l,c)=({},{};{},{})", i, j, l,
                                c));
                            goto alpha_mult_done;
                        }
                    }
alpha_mult_done:
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t a = 0; a < nh; ++a) {
                Rational s = 0;
                for (std::size_t i = 0; i < na; ++i)
                    s += A.unit[i] * rho(j, a, i);
                if (s != A.unit[j] * H.unit[a])
                    report.fail(fmt::format("alpha not unital at (j,a)=({},{})", j, a));
            }
    }

    // (1_A (x) pi) alpha = Delta_A
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t b = 0; b < na; ++b) {
                Rational lhs = 0;
                for (std::size_t h = 0; h < nh; ++h)
                    lhs += rho(j, h, i) * pi(b, h);
                if (lhs != A.comul(j, b, i))
                    report.fail(fmt::format("(1 (x) pi) alpha != Delta_A at (i;j,b)=({};{},{})",
                                            i, j, b));
            }
    if (!report.ok)
        return report;

    // Hypothesis (ii): kappa_A = (1 (x) m_A)(Delta_A (x) 1) is an H-comodule
    // map from A (x) A (diagonal coaction) to A_0 (x) A.
    {
        Matrix K(na * na, na * na);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t b = 0; b < na; ++b)
                for (std::size_t j = 0; j < na; ++j)
                    for (std::size_t a = 0; a < na; ++a) {
                        if (A.comul(j, a, i) == 0)
                            continue;
                        for (std::size_t c = 0; c < na; ++c)
                            if (A.mult(a, b, c) != 0)
                                K(j * na + c, i * na + b) += A.comul(j, a, i) * A.mult(a, b, c);
                    }
        // Diagonal coaction on A (x) A: rows (k,l,t), cols (i,j).
        Matrix C1(na * na * nh, na * na);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t k = 0; k < na; ++k)
                    for (std::size_t l = 0; l < na; ++l)
                        for (std::size_t g = 0; g < nh; ++g) {
                            if (rho(k, g, i) == 0)
                                continue;
                            for (std::size_t gp = 0; gp < nh; ++gp) {
                                if (rho(l, gp, j) == 0)
                                    continue;
                                for (std::size_t t = 0; t < nh; ++t)
                                    if (H.mult(g, gp, t) != 0)
                                        C1((k * na + l) * nh + t, i * na + j) +=
                                            rho(k, g, i) * rho(l, gp, j) * H.mult(g, gp, t);
                            }
                        }
        // Coaction on A_0 (x) A: first leg trivial.
        Matrix C0(na * na * nh, na * na);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t l = 0; l < na; ++l)
                    for (std::size_t t = 0; t < nh; ++t)
                        if (rho(l, t, j) != 0)
                            C0((i * na + l) * nh + t, i * na + j) = rho(l, t, j);
        Matrix lhs = C0 * K;
        Matrix rhs = kron(K, Matrix::identity(nh)) * C1;
        if (lhs != rhs)
            report.fail("hypothesis (ii) fails: kappa_A is not an H-comodule map");
    }

    // (*): alpha(mu(h (x) a)) = sum mu(h_(1) (x) a_(0)) (x) h_(2) a_(1)
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            Vector lhs = alpha * A.multiply(pi_col(i), Vector::basis(na, j));
            Vector rhs(na * nh);
            for (std::size_t p = 0; p < nh; ++p)
                for (std::size_t q = 0; q < nh; ++q) {
                    if (H.comul(p, q, i) == 0)
                        continue;
                    for (std::size_t l = 0; l < na; ++l)
                        for (std::size_t g = 0; g < nh; ++g) {
                            if (rho(l, g, j) == 0)
                                continue;
                            Rational coeff = H.comul(p, q, i) * rho(l, g, j);
                            Vector a_part = A.multiply(pi_col(p), Vector::basis(na, l));
                            Vector h_part = H.multiply(Vector::basis(nh, q), Vector::basis(nh, g));
                            for (std::size_t c = 0; c < na; ++c) {
                                if (a_part[c] == 0)
                                    continue;
                                for (std::size_t t = 0; t < nh; ++t)
                                    if (h_part[t] != 0)
                                        rhs[c * nh + t] += coeff * a_part[c] * h_part[t];
                            }
                        }
                }
            if (!(lhs == rhs)) {
                report.fail(fmt::format("(*) fails on basis pair (h_{}, a_{})", i, j));
            }
        }
    return report;
}

FiniteHopfAlgebra group_hopf(std::size_t m) {
    if (m == 0)
        throw Error("group_hopf: order must be positive");
    FiniteHopfAlgebra A;
    A.dim = m;
    A.mult = Tensor3(m, m, m);
    A.unit = Vector(m);
    A.comul = Tensor3(m, m, m);
    A.counit = Vector(m);
    A.antipode = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        A.basis.push_back("g" + std::to_string(i));
        for (std::size_t j = 0; j < m; ++j)
            A.mult(i, j, (i + j) % m) = 1;
        A.comul(i, i, i) = 1;
        A.counit[i] = 1;
        A.antipode((m - i) % m, i) = 1;
    }
    A.unit[0] = 1;
    return A;
}

FiniteHopfAlgebra dual_function_hopf(std::size_t m) {
    if (m == 0)
        throw Error("dual_function_hopf: order must be positive");
    FiniteHopfAlgebra A;
    A.dim = m;
    A.mult = Tensor3(m, m, m);
    A.unit = Vector(m);
    A.comul = Tensor3(m, m, m);
    A.counit = Vector(m);
    A.antipode = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        A.basis.push_back("dg" + std::to_string(i));
        A.mult(i, i, i) = 1;
        A.unit[i] = 1;
        for (std::size_t j = 0; j < m; ++j)
            A.comul(i, j, (i + j) % m) = 1;
        A.antipode((m - i) % m, i) = 1;
    }
    A.counit[0] = 1;
    return A;
}

FiniteHopfAlgebra sweedler_hopf() {
    // basis 1, g, x, gx
    FiniteHopfAlgebra A;
    A.dim = 4;
    A.basis = {"1", "g", "x", "gx"};
    A.mult = Tensor3(4, 4, 4);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
        A.mult(i, j, k) = v;
    };
    // row: left factor, column: right factor
    set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1); set(0, 3, 3, 1);
    set(1, 0, 1, 1); set(1, 1, 0, 1); set(1, 2, 3, 1); set(1, 3, 2, 1);
    set(2, 0, 2, 1); set(2, 1, 3, -1);  // x g = -gx
    set(3, 0, 3, 1); set(3, 1, 2, -1);  // gx g = -x
    A.unit = Vector(4);
    A.unit[0] = 1;
    A.comul = Tensor3(4, 4, 4);
    A.comul(0, 0, 0) = 1;                      // Delta 1 = 1 (x) 1
    A.comul(1, 1, 1) = 1;                      // Delta g = g (x) g
    A.comul(2, 0, 2) = 1; A.comul(1, 2, 2) = 1;  // Delta x = x (x) 1 + g (x) x
    A.comul(3, 1, 3) = 1; A.comul(0, 3, 3) = 1;  // Delta gx = gx (x) g + 1 (x) gx
    A.counit = Vector(4);
    A.counit[0] = 1;
    A.counit[1] = 1;
    A.antipode = Matrix(4, 4);
    A.antipode(0, 0) = 1;   // S(1) = 1
    A.antipode(1, 1) = 1;   // S(g) = g
    A.antipode(3, 2) = -1;  // S(x) = -gx
    A.antipode(2, 3) = 1;   // S(gx) = x
    return A;
}

MeasuredAlgebra sweedler_algebra() {
    Vector haar(4);
    haar[2] = 1;  // the x-coefficient form
    MeasuredAlgebra Z = sweedler_hopf().as_measured_algebra(haar);
    return Z;
}

}  // namespace qaut
