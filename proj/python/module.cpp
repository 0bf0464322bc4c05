#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polychrome/constructions.hpp"
#include "polychrome/families.hpp"
#include "polychrome/io.hpp"
#include "polychrome/search.hpp"
#include "polychrome/transforms.hpp"
#include "polychrome/verify.hpp"

namespace py = pybind11;
using namespace polychrome;

namespace {

FamilyKind family(const std::string& name) { return parse_family(name); }

std::vector<std::pair<int, int>> edge_pairs(const std::vector<Edge>& edges) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

py::dict witness_dict(const SubgraphWitness& w) {
    py::dict d;
    d["family"] = std::string(family_name(w.kind));
    d["edges"] = edge_pairs(w.edges);
    return d;
}

py::dict report_dict(const SearchReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["family"] = std::string(family_name(r.kind));
    d["mode"] = std::string(mode_name(r.mode));
    d["k"] = r.k;
    d["exact"] = r.exact;
    d["refuted_k"] = r.refuted_k;
    d["nodes"] = r.nodes;
    d["seconds"] = r.seconds;
    d["coloring"] = r.coloring;
    return d;
}

}  // namespace

PYBIND11_MODULE(_polychrome, m) {
    m.doc() = "Polychromatic edge-colorings of complete graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init([](int n, std::vector<Color> colors) { return EdgeColoring(n, std::move(colors)); }),
             py::arg("n"), py::arg("colors"))
        .def_static("monochromatic", &EdgeColoring::monochromatic)
        .def_static("from_json", [](const std::string& text) { return coloring_from_json(text); })
        .def_property_readonly("n", &EdgeColoring::n)
        .def_property_readonly("k", &EdgeColoring::k)
        .def("color", [](const EdgeColoring& c, int a, int b) {
            if (a == b || a < 1 || b < 1 || a > c.n() || b > c.n()) throw py::index_error("not an edge of K_n");
            return c.color(a, b);
        })
        .def("colors", [](const EdgeColoring& c) { return std::vector<Color>(c.colors().begin(), c.colors().end()); })
        .def("canonical", &EdgeColoring::canonical)
        .def("to_json", [](const EdgeColoring& c) { return coloring_to_json(c); })
        .def("to_dot", [](const EdgeColoring& c) { return coloring_to_dot(c); })
        .def("__eq__", [](const EdgeColoring& a, const EdgeColoring& b) { return a == b; })
        .def("__repr__", [](const EdgeColoring& c) {
            return "EdgeColoring(n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) + ")";
        });

    m.def("palette_size", [](const std::string& f, int n) { return palette_size(family(f), n); });
    m.def("class_sizes", [](const std::string& f, int n) { return class_sizes(family(f), n); });
    m.def("formula_k", [](const std::string& f, int n) { return formula_k(family(f), n); });
    m.def("build", [](const std::string& f, int n) { return build(family(f), n); }, py::arg("family"), py::arg("n"));
    m.def("build_ordered", [](const std::vector<Color>& main) { return build_ordered(main); });

    m.def("is_polychromatic", [](const EdgeColoring& c, const std::string& f) {
        const auto cert = is_polychromatic(c, family(f));
        py::dict d;
        d["polychromatic"] = cert.polychromatic;
        if (!cert.polychromatic) {
            d["color"] = cert.color;
            d["witness"] = witness_dict(*cert.witness);
        }
        return d;
    });

    m.def("find_member", [](const std::string& f, int n, const std::vector<std::pair<int, int>>& edges) -> py::object {
        std::vector<Edge> es;
        for (auto [a, b] : edges) es.emplace_back(a, b);
        auto w = find_member(family(f), AllowedGraph::from_edges(n, es));
        if (!w) return py::none();
        return witness_dict(*w);
    }, py::arg("family"), py::arg("n"), py::arg("edges"));
    m.def("count_members", [](const std::string& f, int n) { return count_members(family(f), n); });

    m.def("brute_force_poly", [](int n, const std::string& f, int max_k, int threads) {
        return report_dict(brute_force_poly(n, family(f), max_k > 0 ? max_k : static_cast<int>(edge_count(n)), {threads}));
    }, py::arg("n"), py::arg("family"), py::arg("max_k") = 0, py::arg("threads") = 1);
    m.def("structured_poly", [](int n, const std::string& f, const std::string& mode, int threads) {
        return report_dict(structured_poly(n, family(f), parse_mode(mode), {threads}));
    }, py::arg("n"), py::arg("family"), py::arg("mode") = "ordered", py::arg("threads") = 1);
    m.def("theorem_table", [](const std::string& f, int lo, int hi, bool search) {
        TableOptions options;
        options.search = search;
        py::list rows;
        for (const auto& r : theorem_table(family(f), lo, hi, options)) {
            py::dict d;
            d["n"] = r.n;
            d["construction_k"] = r.construction_k;
            d["formula_k"] = r.formula_k;
            d["search_k"] = r.search_k ? py::object(py::int_(*r.search_k)) : py::object(py::none());
            d["search_mode"] = r.search_mode ? py::object(py::str(std::string(mode_name(*r.search_mode)))) : py::object(py::none());
            d["agrees"] = r.agrees;
            rows.append(d);
        }
        return rows;
    }, py::arg("family"), py::arg("lo"), py::arg("hi"), py::arg("search") = true);

    m.def("recolor_unitary_triple", &recolor_unitary_triple);
    m.def("improve_toward_combed", [](const EdgeColoring& c, const std::string& f) {
        auto r = improve_toward_combed(c, family(f));
        return py::make_tuple(r.coloring, r.moves, r.combed);
    });
}
