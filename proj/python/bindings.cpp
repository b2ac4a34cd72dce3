// Python bindings for the comaximal-graph toolkit. Rings, ideals and graphs
// are exposed as thin wrappers; analysis results come back as dicts/lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "comax/verify.hpp"

namespace py = pybind11;
using namespace comax;

namespace {

struct PyRing {
    RingPtr p;
};

struct PyIdeal {
    LeftIdeal v;
};

struct PyGraph {
    ComaxGraph g;
};

py::object json_to_py(const nlohmann::ordered_json& j) {
    using J = nlohmann::ordered_json;
    switch (j.type()) {
        case J::value_t::null: return py::none();
        case J::value_t::boolean: return py::bool_(j.get<bool>());
        case J::value_t::number_integer: return py::int_(j.get<long long>());
        case J::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case J::value_t::number_float: return py::float_(j.get<double>());
        case J::value_t::string: return py::str(j.get<std::string>());
        case J::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case J::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

py::dict report_to_py(const TheoremReport& r) {
    py::dict d;
    d["theorem_id"] = r.theorem_id;
    d["ring_label"] = r.ring_label;
    d["verdict"] = r.verdict;
    d["certificate"] = json_to_py(r.certificate);
    return d;
}

PyIdeal wrap(LeftIdeal I) { return PyIdeal{std::move(I)}; }

std::vector<LeftIdeal> unwrap(const std::vector<PyIdeal*>& xs) {
    std::vector<LeftIdeal> out;
    out.reserve(xs.size());
    for (auto* x : xs) out.push_back(x->v);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-ring comaximal graph toolkit";

    py::register_exception<InvalidSpecError>(m, "InvalidSpecError", PyExc_ValueError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<FalsificationError>(m, "FalsificationError", PyExc_RuntimeError);

    py::class_<PyRing>(m, "Ring")
        .def_property_readonly("size", [](const PyRing& r) { return r.p->size(); })
        .def_property_readonly("label", [](const PyRing& r) { return r.p->label(); })
        .def_property_readonly("one", [](const PyRing& r) { return r.p->one(); })
        .def("add", [](const PyRing& r, Elem a, Elem b) { return r.p->add(a, b); })
        .def("mul", [](const PyRing& r, Elem a, Elem b) { return r.p->mul(a, b); })
        .def("neg", [](const PyRing& r, Elem a) { return r.p->neg(a); })
        .def("decode", [](const PyRing& r, Elem a) { return r.p->decode(a); })
        .def("encode",
             [](const PyRing& r, const std::vector<unsigned>& d) { return r.p->encode(d); })
        .def("render", [](const PyRing& r, Elem a) { return r.p->render(a); })
        .def("is_unit", [](const PyRing& r, Elem a) { return r.p->is_unit(a); })
        .def("is_left_invertible",
             [](const PyRing& r, Elem a) { return r.p->is_left_invertible(a); })
        .def("is_commutative", [](const PyRing& r) { return r.p->commutative(); })
        .def("units", [](const PyRing& r) { return units(*r.p); })
        .def("central_idempotents", [](const PyRing& r) { return central_idempotents(*r.p); })
        .def("adjacent", [](const PyRing& r, Elem a, Elem b) { return adjacent(*r.p, a, b); })
        .def("__repr__", [](const PyRing& r) { return "<Ring " + r.p->label() + ">"; });

    py::class_<PyIdeal>(m, "LeftIdeal")
        .def_property_readonly("elements", [](const PyIdeal& i) { return i.v.elements; })
        .def_property_readonly("generators", [](const PyIdeal& i) { return i.v.generators; })
        .def_property_readonly("size", [](const PyIdeal& i) { return i.v.size(); })
        .def("contains", [](const PyIdeal& i, Elem a) { return i.v.contains(a); })
        .def("is_proper", [](const PyIdeal& i) { return i.v.is_proper(); })
        .def("is_two_sided", [](const PyIdeal& i) { return is_two_sided(i.v); })
        .def("__len__", [](const PyIdeal& i) { return i.v.size(); })
        .def("__repr__", [](const PyIdeal& i) {
            return "<LeftIdeal of " + i.v.ring->label() + ", size " +
                   std::to_string(i.v.size()) + ">";
        });

    py::class_<PyGraph>(m, "Graph")
        .def_property_readonly("ring_label", [](const PyGraph& g) { return g.g.ring_label; })
        .def_property_readonly("variant",
                               [](const PyGraph& g) { return std::string(to_string(g.g.variant)); })
        .def_property_readonly("vertices", [](const PyGraph& g) { return g.g.vertices; })
        .def_property_readonly("vertex_labels",
                               [](const PyGraph& g) { return g.g.vertex_labels; })
        .def("edges", [](const PyGraph& g) { return g.g.edges(); })
        .def("edge_count", [](const PyGraph& g) { return g.g.edge_count(); })
        .def("adjacent", [](const PyGraph& g, std::size_t i, std::size_t j) {
            return g.g.adjacent(i, j);
        })
        .def("degree", [](const PyGraph& g, std::size_t i) { return g.g.degree(i); })
        .def("to_dot", [](const PyGraph& g) { return export_dot(g.g); })
        .def("to_json", [](const PyGraph& g) { return export_json(g.g).dump(2) + "\n"; })
        .def("__repr__", [](const PyGraph& g) {
            return "<Graph " + g.g.ring_label + " " + to_string(g.g.variant) + ", " +
                   std::to_string(g.g.num_vertices()) + " vertices>";
        });

    m.def("ring", [](const std::string& spec) { return PyRing{build_ring(spec)}; },
          py::arg("spec"), "Build a ring from a spec string, e.g. 'Z30' or 'M2(GF(3))'.");
    m.def("zmod", [](unsigned n) { return PyRing{make_zmod(n)}; });
    m.def("gf", [](unsigned p, unsigned k) { return PyRing{make_gf(p, k)}; }, py::arg("p"),
          py::arg("k") = 1);
    m.def("matrix_ring",
          [](const PyRing& base, unsigned dim) { return PyRing{make_matrix_ring(base.p, dim)}; });
    m.def("product", [](const std::vector<PyRing*>& factors) {
        std::vector<RingPtr> fs;
        for (auto* f : factors) fs.push_back(f->p);
        return PyRing{make_product(std::move(fs))};
    });
    m.def("table_ring",
          [](const std::vector<std::vector<Elem>>& add, const std::vector<std::vector<Elem>>& mul,
             const std::string& label) { return PyRing{make_table_ring(add, mul, label)}; },
          py::arg("add"), py::arg("mul"), py::arg("label") = "");
    m.def("t2", [](unsigned q) { return PyRing{make_t2(q)}; },
          "Upper-triangular 2x2 matrices over GF(q), as a table ring.");
    m.def("t2_table_json", &t2_table_json_text);

    m.def("central_idempotents",
          [](const PyRing& r) { return central_idempotents(*r.p); });
    m.def("principal_ideal",
          [](const PyRing& r, Elem a) { return wrap(principal_left_ideal(r.p, a)); });
    m.def("ideal_closure", [](const PyRing& r, const std::vector<Elem>& seed) {
        return wrap(left_ideal_closure(r.p, seed));
    });
    m.def("ideal_sum",
          [](const PyIdeal& a, const PyIdeal& b) { return wrap(ideal_sum(a.v, b.v)); });
    m.def("maximal_left_ideals", [](const PyRing& r) {
        std::vector<PyIdeal> out;
        for (auto& I : maximal_left_ideals(r.p)) out.push_back(wrap(std::move(I)));
        return out;
    });
    m.def("jacobson_radical", [](const PyRing& r) { return wrap(jacobson_radical(r.p)); });
    m.def("avoidance_pick", [](const PyRing& r, const std::vector<PyIdeal*>& inside,
                               const std::vector<PyIdeal*>& avoid) -> py::object {
        auto res = avoidance_pick(r.p, unwrap(inside), unwrap(avoid));
        if (!res) return py::none();
        return py::int_(*res);
    });

    m.def("build_graph", [](const PyRing& r, const std::string& variant) {
        return PyGraph{build_graph(r.p, graph_variant_from_string(variant))};
    }, py::arg("ring"), py::arg("variant") = "core");
    m.def("blowup_check", [](const PyRing& r) {
        BlowupReport b = blowup_check(r.p);
        py::dict d;
        d["fiber_size"] = b.fiber_size;
        d["adjacency_transfer_ok"] = b.adjacency_transfer_ok;
        d["fibers_independent_ok"] = b.fibers_independent_ok;
        d["fiber_sizes_ok"] = b.fiber_sizes_ok;
        d["quotient"] = b.quotient_label;
        d["ok"] = b.ok();
        return d;
    });

    m.def("is_complete_multipartite", [](const PyGraph& g) -> py::object {
        auto cert = is_complete_multipartite(g.g);
        if (!cert) return py::none();
        py::list parts;
        for (const auto& p : cert->parts) {
            py::list part;
            for (std::size_t i : p) part.append(g.g.vertices[i]);
            parts.append(part);
        }
        return parts;
    });
    m.def("chromatic_number", [](const PyGraph& g) {
        ColoringResult c = chromatic_number(g.g);
        py::dict d;
        d["n"] = c.num_colors;
        d["coloring"] = c.color;
        d["exact"] = c.exact;
        return d;
    });
    m.def("is_n_partite", [](const PyGraph& g, std::size_t n) {
        return is_n_partite(g.g, n).value;
    });
    m.def("max_clique", [](const PyGraph& g) {
        CliqueCertificate c = max_clique(g.g);
        py::dict d;
        d["members"] = c.members;
        d["construction"] = to_string(c.construction);
        d["exact"] = c.exact;
        return d;
    });
    m.def("theorem2_clique", [](const PyRing& r, const std::vector<PyIdeal*>& ms) {
        CliqueCertificate c = theorem2_clique(r.p, unwrap(ms));
        py::dict d;
        d["members"] = c.members;
        d["construction"] = to_string(c.construction);
        return d;
    });
    m.def("universal_vertices",
          [](const PyGraph& g) { return universal_vertices(g.g).universal; });

    m.def("quotient_by", [](const PyRing& r, const PyIdeal& i, const std::string& label) {
        QuotientRing q = quotient_by(r.p, i.v, label);
        return py::make_tuple(PyRing{q.ring}, q.projection, q.section);
    }, py::arg("ring"), py::arg("ideal"), py::arg("label") = "");
    m.def("semisimple_decompose", [](const PyRing& r) {
        std::vector<PyRing> out;
        for (auto& c : semisimple_decompose(r.p)) out.push_back(PyRing{c});
        return out;
    });
    m.def("wedderburn_report", [](const PyRing& r) {
        WedderburnReport w = wedderburn_report(r.p);
        py::list comps;
        for (const auto& c : w.components) {
            py::dict cd;
            cd["n"] = c.n;
            cd["q"] = c.q;
            cd["cardinality"] = c.cardinality;
            cd["max_left_ideal_count"] = c.max_left_ideal_count;
            comps.append(cd);
        }
        py::dict d;
        d["components"] = comps;
        d["consistent"] = w.consistent;
        d["quotient"] = w.quotient_label;
        d["radical_size"] = w.radical_size;
        return d;
    });
    m.def("remark6_maximal_ideals", [](unsigned q) {
        std::vector<PyIdeal> out;
        for (auto& I : remark6_maximal_ideals(q)) out.push_back(wrap(std::move(I)));
        return out;
    });
    m.def("ring_isomorphic", [](const PyRing& a, const PyRing& b) {
        IsoResult r = ring_isomorphic(a.p, b.p);
        py::dict d;
        d["verdict"] = std::string(to_string(r.verdict));
        d["witness"] = r.witness ? py::cast(*r.witness) : py::object(py::none());
        d["obstruction"] = r.obstruction ? py::cast(*r.obstruction) : py::object(py::none());
        return d;
    });

    m.def("default_catalog", [] {
        py::list out;
        for (const auto& e : default_catalog().entries) {
            py::dict d;
            d["label"] = e.label;
            d["spec"] = e.spec;
            out.append(d);
        }
        return out;
    });
    m.def("run_catalog", [](const std::string& theorem) {
        py::list out;
        for (const auto& rep : run_catalog(default_catalog(), theorem)) out.append(report_to_py(rep));
        return out;
    }, py::arg("theorem") = "all");

    m.def("size_cap", &size_cap);
    m.def("set_size_cap", &set_size_cap);
}
