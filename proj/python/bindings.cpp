#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "facetlab/report.hpp"

namespace py = pybind11;
namespace fl = facetlab;

namespace {

std::vector<std::vector<int>> rows_of(const fl::IncidenceMatrix& A) {
    std::vector<std::vector<int>> out;
    for (const auto& r : A.rows) out.push_back(r.elements());
    return out;
}

fl::IncidenceMatrix matrix_from_rows(int n, const std::vector<std::vector<int>>& rows) {
    std::vector<fl::Bits> bs;
    for (const auto& r : rows) {
        fl::Bits row{n};
        for (int v : r) {
            if (v < 0 || v >= n) throw fl::Error(fl::Errc::OutOfRange, "vertex id out of range");
            row.set(v);
        }
        bs.push_back(std::move(row));
    }
    return fl::IncidenceMatrix::from_rows(n, std::move(bs));
}

fl::Bits set_from(int n, const std::vector<int>& xs) {
    fl::Bits b{n};
    for (int v : xs) {
        if (v < 0 || v >= n) throw fl::Error(fl::Errc::OutOfRange, "vertex id out of range");
        b.set(v);
    }
    return b;
}

py::dict poset_dict(const fl::ReconstructedFacePoset& P) {
    py::dict d;
    py::list rays;
    for (const auto& r : P.rays) {
        py::dict ray;
        ray["vertex"] = r.base_vertex;
        ray["facets"] = r.facet_set.elements();
        rays.append(ray);
    }
    py::list faces;
    for (const auto& f : P.faces) {
        py::dict face;
        face["verts"] = f.verts.elements();
        face["rays"] = f.ray_set.elements();
        faces.append(face);
    }
    d["rays"] = rays;
    d["faces"] = faces;
    d["includes_top"] = P.includes_top;
    return d;
}

}  // namespace

PYBIND11_MODULE(_facetlab, m) {
    m.doc() = "vertex-facet incidence analysis for pointed polyhedra";

    py::register_exception<fl::Error>(m, "FacetlabError");

    py::class_<fl::IncidenceMatrix>(m, "IncidenceMatrix")
        .def(py::init([](int n, const std::vector<std::vector<int>>& rows) {
                 return matrix_from_rows(n, rows);
             }),
             py::arg("n"), py::arg("rows"))
        .def_readonly("m", &fl::IncidenceMatrix::m)
        .def_readonly("n", &fl::IncidenceMatrix::n)
        .def("rows", &rows_of)
        .def("__eq__", [](const fl::IncidenceMatrix& a,
                          const fl::IncidenceMatrix& b) { return a == b; })
        .def("__repr__", [](const fl::IncidenceMatrix& A) {
            return "<IncidenceMatrix " + std::to_string(A.m) + "x" + std::to_string(A.n) + ">";
        });

    m.def("parse", [](const std::string& text) { return fl::parse_incidence_any(text); },
          "parse a .vfi or JSON incidence matrix");
    m.def("serialize", [](const fl::IncidenceMatrix& A, const std::string& fmt) {
        return fl::serialize_incidence(A, fmt == "json" ? fl::WireFormat::Json
                                                        : fl::WireFormat::Vfi);
    }, py::arg("matrix"), py::arg("format") = "vfi");

    m.def("closure", [](const fl::IncidenceMatrix& A, size_t cap) {
        std::vector<std::vector<int>> out;
        for (const auto& s : fl::vertex_set_closure(A, cap).members) out.push_back(s.elements());
        return out;
    }, py::arg("matrix"), py::arg("member_cap") = fl::Limits{}.member_cap,
       "vertex sets of the nontrivial faces, canonical order");

    m.def("facets_containing", [](const fl::IncidenceMatrix& A, const std::vector<int>& S) {
        return fl::facets_containing(A, S).elements();
    });

    m.def("validate", [](const fl::IncidenceMatrix& A) {
        fl::ValidationReport r = fl::validate(A);
        py::list checks;
        for (const auto& c : r.checks) {
            py::dict d;
            d["id"] = c.id;
            d["pass"] = c.pass;
            d["message"] = c.message;
            checks.append(d);
        }
        py::dict d;
        d["overall"] = r.overall;
        d["checks"] = checks;
        return d;
    });

    m.def("moebius_number", [](const fl::IncidenceMatrix& A) {
        return fl::moebius_number(fl::vertex_set_closure(A));
    });
    m.def("euler_oracle", [](const fl::IncidenceMatrix& A, long long cap) {
        return fl::euler_oracle(fl::vertex_set_closure(A), cap);
    }, py::arg("matrix"), py::arg("chain_cap") = fl::Limits{}.chain_cap);

    m.def("is_bounded", [](const fl::IncidenceMatrix& A) {
        auto v = fl::is_bounded(A);
        return py::make_tuple(v.bounded, v.mobius);
    }, "(bounded, moebius number)");

    m.def("facets_bounded", [](const fl::IncidenceMatrix& A) {
        return fl::facets_bounded(A, fl::vertex_set_closure(A));
    });

    m.def("longest_chain", [](const fl::IncidenceMatrix& A) {
        fl::ChainWitness w = fl::longest_chain(fl::vertex_set_closure(A));
        std::vector<std::vector<int>> chain;
        for (const auto& s : w.chain) chain.push_back(s.elements());
        return py::make_tuple(w.size, chain);
    });

    m.def("detect_dim3", [](const fl::IncidenceMatrix& A) {
        return std::string(fl::to_string(fl::detect_dim3(A)));
    });
    m.def("dimension_from_bounded_facet", [](const fl::IncidenceMatrix& A) {
        return fl::dimension_from_bounded_facet(A);
    });

    m.def("graph_class", [](const fl::IncidenceMatrix& A) {
        return std::string(fl::to_string(fl::classify_graph(fl::vertex_graph(fl::vertex_set_closure(A)))));
    });
    m.def("vertex_graph_edges", [](const fl::IncidenceMatrix& A) {
        fl::VertexGraph G = fl::vertex_graph(fl::vertex_set_closure(A));
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < G.node_count; ++v)
            for (int w = G.adj[size_t(v)].next(v); w >= 0; w = G.adj[size_t(v)].next(w))
                edges.emplace_back(v, w);
        return edges;
    });

    m.def("circulant", &fl::circulant, py::arg("n"), py::arg("d"));
    m.def("recognize_circulant", [](const fl::IncidenceMatrix& A) -> py::object {
        auto w = fl::recognize_circulant(A);
        if (!w) return py::none();
        py::dict d;
        d["n"] = w->n;
        d["d"] = w->d;
        d["row_perm"] = w->row_perm;
        d["col_perm"] = w->col_perm;
        return d;
    });
    m.def("is_simple_simplicial", [](const fl::IncidenceMatrix& A) {
        return fl::is_simple_simplicial(A);
    });
    m.def("circulant_realizability", [](int n, int d) {
        return std::string(fl::to_string(fl::circulant_realizability(n, d)));
    });

    m.def("rays_simple", [](const fl::IncidenceMatrix& A) {
        py::list out;
        for (const auto& r : fl::rays_simple(A)) {
            py::dict d;
            d["vertex"] = r.base_vertex;
            d["facets"] = r.facet_set.elements();
            out.append(d);
        }
        return out;
    });
    m.def("face_poset_simple", [](const fl::IncidenceMatrix& A, bool with_top) {
        return poset_dict(fl::face_poset_simple(A, with_top));
    }, py::arg("matrix"), py::arg("with_top") = false);
    m.def("face_poset_dim3", [](const fl::IncidenceMatrix& A, bool with_top) {
        return poset_dict(fl::face_poset_dim3(A, with_top));
    }, py::arg("matrix"), py::arg("with_top") = false);

    m.def("generate", [](const std::string& expr) {
        fl::GroundTruth g = fl::parse_generator_expr(expr);
        py::dict d;
        d["matrix"] = g.matrix;
        d["vfi"] = fl::serialize_incidence(g.matrix, fl::WireFormat::Vfi);
        d["polyhedral"] = g.polyhedral;
        d["provenance"] = g.provenance;
        if (g.polyhedral) {
            d["dim_lo"] = g.dim_lo;
            d["dim_hi"] = g.dim_hi;
            d["bounded"] = g.bounded;
            d["facet_bounded"] = g.facet_bounded;
        }
        return d;
    }, "build a ground-truth instance from a generator expression");

    m.def("analyze_json", [](const fl::IncidenceMatrix& A, bool one_indexed) {
        return fl::report_to_json(fl::analyze(A), one_indexed);
    }, py::arg("matrix"), py::arg("one_indexed") = false,
       "full analysis report as a JSON string");
}
