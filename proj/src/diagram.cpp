#include "qaut/diagram.hpp"

#include <fmt/format.h>

namespace qaut {

const MeasuredAlgebra& Diagram::object(const std::string& id) const {
    auto it = objects.find(id);
    if (it == objects.end())
        throw Error("diagram: unknown object '" + id + "'");
    return it->second;
}

const Arrow& Diagram::arrow(const std::string& id) const {
    for (const Arrow& a : arrows)
        if (a.id == id)
            return a;
    throw Error("diagram: unknown arrow '" + id + "'");
}

ValidationReport validate_diagram(const Diagram& D) {
    ValidationReport report;
    if (D.objects.empty())
        report.fail("diagram has no objects");
    for (const auto& [id, Z] : D.objects) {
        ValidationReport r = validate(Z);
        for (const std::string& msg : r.failures)
            report.fail(fmt::format("object '{}': {}", id, msg));
    }
    for (const Arrow& a : D.arrows) {
        if (!D.objects.count(a.src) || !D.objects.count(a.dst)) {
            report.fail(fmt::format("arrow '{}': unknown endpoint", a.id));
            continue;
        }
        const MeasuredAlgebra& src = D.objects.at(a.src);
        const MeasuredAlgebra& dst = D.objects.at(a.dst);
        if (a.matrix.rows() != dst.dim || a.matrix.cols() != src.dim) {
            report.fail(fmt::format("arrow '{}': matrix is {}x{}, expected {}x{}", a.id,
                                    a.matrix.rows(), a.matrix.cols(), dst.dim, src.dim));
            continue;
        }
        ValidationReport r = validate(AlgebraMap{src, dst, a.matrix});
        for (const std::string& msg : r.failures)
            report.fail(fmt::format("arrow '{}': {}", a.id, msg));
    }
    for (const auto& comp : D.composites) {
        try {
            const Arrow& g = D.arrow(comp.g);
            const Arrow& f = D.arrow(comp.f);
            const Arrow& h = D.arrow(comp.h);
            if (f.dst != g.src || h.src != f.src || h.dst != g.dst) {
                report.fail(fmt::format("composite {} o {} = {}: endpoints do not line up",
                                        comp.g, comp.f, comp.h));
                continue;
            }
            if (!(g.matrix * f.matrix == h.matrix))
                report.fail(fmt::format("composite {} o {} = {} fails as matrix equality",
                                        comp.g, comp.f, comp.h));
        } catch (const Error& e) {
            report.fail(fmt::format("composite {} o {} = {}: {}", comp.g, comp.f, comp.h,
                                    e.what()));
        }
    }
    return report;
}

Diagram single_object_diagram(MeasuredAlgebra Z) {
    Diagram D;
    D.objects.emplace("0", std::move(Z));
    return D;
}

Diagram graph_diagram(std::size_t num_vertices,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (num_vertices == 0)
        throw Error("graph_diagram: vertex set is empty");
    if (edges.empty())
        throw Error("graph_diagram: edge set is empty");
    for (auto [s, t] : edges)
        if (s >= num_vertices || t >= num_vertices)
            throw Error("graph_diagram: edge endpoint out of range");

    Diagram D;
    D.objects.emplace("0", function_algebra_uniform(num_vertices));
    D.objects.emplace("1", function_algebra_uniform(edges.size()));

    // Pullbacks of the source/target maps: s_*(d_v) = sum over edges with
    // source v of d_e, so column v of S has a 1 in each such edge row.
    Matrix S(edges.size(), num_vertices), T(edges.size(), num_vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        S(e, edges[e].first) = 1;
        T(e, edges[e].second) = 1;
    }
    D.arrows.push_back({"s", "0", "1", std::move(S)});
    D.arrows.push_back({"t", "0", "1", std::move(T)});
    return D;
}

}  // namespace qaut
