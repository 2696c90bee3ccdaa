// A functor F : C -> Malg_f presented as a finite quiver of measured
// algebras and algebra maps, with optional composition assertions.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qaut/measured_algebra.hpp"
#include "qaut/report.hpp"

namespace qaut {

struct Arrow {
    std::string id;
    std::string src;
    std::string dst;
    Matrix matrix;  // columns indexed by the source basis
};

struct CompositeAssertion {
    std::string g, f, h;  // g o f = h
};

struct Diagram {
    std::map<std::string, MeasuredAlgebra> objects;
    std::vector<Arrow> arrows;
    std::vector<CompositeAssertion> composites;

    const MeasuredAlgebra& object(const std::string& id) const;
    const Arrow& arrow(const std::string& id) const;
};

// Object validity, arrow shapes, multiplicativity/unitality of every arrow,
// and exact equality of every asserted composite.
ValidationReport validate_diagram(const Diagram& D);

// One measured algebra, no arrows; object id "0".
Diagram single_object_diagram(MeasuredAlgebra Z);

// The two-object diagram of a finite directed graph: F(0) = C(V), F(1) = C(E)
// with normalized uniform measures, and the pullbacks s_*, t_* of the source
// and target maps as arrows "s" and "t".
Diagram graph_diagram(std::size_t num_vertices,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace qaut
