// The universal quantum automorphism Hopf algebra of a diagram of measured
// algebras, materialized as a finite presentation: one generator matrix u^X
// per object, relations making multiplication, unit, measure, the duality
// pairing/copairing, and every arrow colinear for the coactions
// alpha_X(e_i) = sum_j e_j (x) u^X_ji.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qaut/diagram.hpp"
#include "qaut/ncpoly.hpp"
#include "qaut/report.hpp"
#include "qaut/rewrite.hpp"

namespace qaut {

struct GeneratorMatrix {
    std::string object_id;
    std::size_t dim = 0;
    std::vector<std::vector<GenId>> ids;  // ids[i][j] = generator u^X_{i+1,j+1}
};

struct HopfPresentation {
    SymbolTable symbols;
    std::vector<GeneratorMatrix> objects;  // in lexicographic object-id order
    std::vector<NCPoly> relations;
    std::vector<std::string> relation_labels;  // parallel to relations
    // Per-object Gram matrix and copairing, fixed here so the antipode
    // formula is reproducible from the presentation alone.
    std::map<std::string, Matrix> gram;
    std::map<std::string, Matrix> copairing;

    const GeneratorMatrix& object(const std::string& id) const;
    GenId generator(const std::string& id, std::size_t i, std::size_t j) const;
};

// Emits the relation families R-mult, R-unit, R-measure, R-B, R-B' per
// object and R-intertwine per arrow. Identically zero relations are
// dropped. Throws Error when the diagram does not validate.
HopfPresentation present(const Diagram& D);

// S(u_ij) = sum_{a,b} B'(j,a) G(b,i) u_ab, as generator-linear combinations.
// The formula is verified against the relations by check_hopf_wellformedness;
// it is emitted here, not assumed.
std::vector<std::vector<NCPoly>> antipode_matrix(const HopfPresentation& P,
                                                 const std::string& object_id);

struct WellformednessReport {
    std::size_t degree_cap = 0;

    bool counit_annihilates = true;
    std::vector<std::string> counit_failures;

    Verdict coproduct_verdict = Verdict::Zero;  // worst over all relations
    CompletionStatus coproduct_status = CompletionStatus::Complete;
    std::vector<std::string> coproduct_failures;

    Verdict antipode_verdict = Verdict::Zero;  // worst over both axioms, all objects
    CompletionStatus antipode_status = CompletionStatus::Complete;
    std::vector<std::string> antipode_failures;

    bool all_zero() const {
        return counit_annihilates && coproduct_verdict == Verdict::Zero &&
               antipode_verdict == Verdict::Zero;
    }
    bool any_definite_failure() const {
        return !counit_annihilates || coproduct_verdict == Verdict::NonzeroWitness ||
               antipode_verdict == Verdict::NonzeroWitness;
    }
};

// (a) the counit substitution u_ij <- delta_ij kills every relation;
// (b) Delta maps every relation into the ideal of the tensor-square
//     presentation (two generator copies u', u'' with cross-commutation,
//     Delta(u_ij) evaluated as the matrix product u' u'');
// (c) the antipode axioms sum_j S(u_ij) u_jk = delta_ik = sum_j u_ij S(u_jk)
//     reduce to zero modulo the relations.
WellformednessReport check_hopf_wellformedness(const HopfPresentation& P,
                                               std::size_t degree_cap);

struct ClassicalPoint {
    std::map<std::string, Matrix> matrices;  // value of u^X_{ij} = matrices[X](i,j)
};

// Enumerates all tuples of measure-preserving permutation matrices commuting
// with every arrow. Only diagrams whose objects are all function algebras
// (idempotent basis) are supported; anything else throws Error and should go
// through verify_classical_point instead.
std::vector<ClassicalPoint> classical_points(const Diagram& D);

bool verify_classical_point(const HopfPresentation& P, const ClassicalPoint& pt);
// Same, with the failing relations listed.
ValidationReport verify_classical_point_report(const HopfPresentation& P,
                                               const ClassicalPoint& pt);

// Universal-property check for a Hopf target B: substitutes the coaction
// coefficients of B-comodule structures (one per object, value of u^X_ij =
// rho^X(i,-,j) in B) into every relation and evaluates in B.
ValidationReport verify_comodule_coaction(const HopfPresentation& P,
                                          const std::map<std::string, Comodule>& coactions);

}  // namespace qaut
