#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dicut/cover.hpp"
#include "dicut/digraph.hpp"
#include "dicut/exact.hpp"
#include "dicut/instances.hpp"

namespace py = pybind11;
using namespace dicut;

PYBIND11_MODULE(_dicut, m) {
    m.doc() = "Directed cut covers of digraphs: constructions, verification, exact minimization";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NotMemberError>(m, "NotMemberError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::enum_<Side>(m, "Side").value("X", Side::X).value("Y", Side::Y);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("id_bound", &Digraph::id_bound)
        .def_property_readonly("vertex_count", &Digraph::vertex_count)
        .def_property_readonly("edge_count", &Digraph::edge_count)
        .def("has_vertex", &Digraph::has_vertex)
        .def("vertices", &Digraph::vertices)
        .def("edges", &Digraph::edges)
        .def("has_edge", &Digraph::has_edge)
        .def("out_neighbors", &Digraph::out_neighbors)
        .def("in_neighbors", &Digraph::in_neighbors)
        .def("out_degree", &Digraph::out_degree)
        .def("in_degree", &Digraph::in_degree)
        .def("degree", &Digraph::degree)
        .def("underlying_neighbors", &Digraph::underlying_neighbors)
        .def("underlying_degree", &Digraph::underlying_degree)
        .def("remove_vertices", &Digraph::remove_vertices)
        .def("__repr__", [](const Digraph& d) {
            return "Digraph(n=" + std::to_string(d.vertex_count()) +
                   ", m=" + std::to_string(d.edge_count()) + ")";
        });

    py::class_<Bipartition>(m, "Bipartition")
        .def(py::init<>())
        .def_readwrite("side", &Bipartition::side)
        .def("__str__", [](const Bipartition& p) {
            std::string s = serialize_bipartition(p);
            s.pop_back();
            return s;
        });

    py::class_<RestrictedDegrees>(m, "RestrictedDegrees")
        .def_readonly("in_x", &RestrictedDegrees::in_x)
        .def_readonly("out_x", &RestrictedDegrees::out_x)
        .def_readonly("in_y", &RestrictedDegrees::in_y)
        .def_readonly("out_y", &RestrictedDegrees::out_y);

    py::class_<MembershipCheck>(m, "MembershipCheck")
        .def_property_readonly("is_member", &MembershipCheck::is_member)
        .def_readonly("bipartition", &MembershipCheck::bipartition)
        .def_readonly("offending", &MembershipCheck::offending);

    m.def("find_bipartition", &find_bipartition, py::arg("d"), py::arg("k"), py::arg("l"));
    m.def("restricted_degrees", &restricted_degrees, py::arg("d"), py::arg("p"), py::arg("v"));
    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
    m.def("serialize_edge_list", &serialize_edge_list);
    m.def("serialize_bipartition", &serialize_bipartition);
    m.def("parse_bipartition", [](const std::string& text) { return parse_bipartition(text); });
    m.def(
        "export_dot",
        [](const Digraph& d, const CutCover* cover) { return export_dot(d, cover); },
        py::arg("d"), py::arg("cover") = nullptr);

    py::class_<Color>(m, "Color")
        .def_static("from_index", &Color::from_index)
        .def_static("all", &Color::all)
        .def_property_readonly("index", &Color::index)
        .def_property_readonly("elems", &Color::elems)
        .def("__eq__", [](Color a, Color b) { return a == b; })
        .def("__hash__", [](Color c) { return c.index(); })
        .def("__repr__", [](Color c) { return to_string(c); });

    m.def("adjacent", &adjacent);
    m.def("common_neighbors", &common_neighbors);
    m.def("cross_neighbor_pair", &cross_neighbor_pair);
    m.def("c_of_n", &c_of_n);

    py::class_<CodeWord>(m, "CodeWord")
        .def(py::init([](int width, const std::vector<int>& elements) {
                 CodeWord w{width, 0};
                 for (int e : elements) {
                     if (e < 1 || e > width) {
                         throw std::invalid_argument("code element out of range");
                     }
                     w.bits |= 1u << (e - 1);
                 }
                 return w;
             }),
             py::arg("width"), py::arg("elements"))
        .def_readonly("width", &CodeWord::width)
        .def_readonly("bits", &CodeWord::bits)
        .def_property_readonly("elements", &CodeWord::elements)
        .def("__eq__", [](const CodeWord& a, const CodeWord& b) { return a == b; })
        .def("__repr__", [](const CodeWord& w) { return to_string(w); });

    m.def("antichain_codes", &antichain_codes);

    py::class_<CutCover>(m, "CutCover")
        .def(py::init<>())
        .def_readwrite("k", &CutCover::k)
        .def_readwrite("code", &CutCover::code)
        .def("in_a", &CutCover::in_a, py::arg("cut"), py::arg("v"))
        .def("__repr__",
             [](const CutCover& c) { return "CutCover(k=" + std::to_string(c.k) + ")"; });

    py::class_<VerifyResult>(m, "VerifyResult")
        .def_property_readonly("ok", &VerifyResult::ok)
        .def_readonly("uncovered", &VerifyResult::uncovered);

    py::class_<Coloring>(m, "Coloring")
        .def(py::init<>())
        .def(py::init([](const std::vector<int>& color) { return Coloring{color}; }))
        .def_readwrite("color", &Coloring::color);

    py::class_<GoodColoringCertificate>(m, "GoodColoringCertificate")
        .def_readonly("bipartition", &GoodColoringCertificate::bipartition)
        .def_readonly("coloring", &GoodColoringCertificate::coloring);

    py::class_<Theorem4Result>(m, "Theorem4Result")
        .def_readonly("certificate", &Theorem4Result::certificate)
        .def_readonly("cover", &Theorem4Result::cover);

    m.def("verify_cover", &verify_cover);
    m.def("cover_from_codes", &cover_from_codes);
    m.def("degeneracy_order", &degeneracy_order);
    m.def("greedy_color_underlying", &greedy_color_underlying);
    m.def("cover_via_coloring", &cover_via_coloring);
    m.def("theorem3_cover", &theorem3_cover, py::arg("d"), py::arg("k"));
    m.def("is_good_coloring", &is_good_coloring);
    m.def("cuts_from_good_coloring", &cuts_from_good_coloring);
    m.def("theorem4_cover", &theorem4_cover);
    m.def("drop_empty_cuts", &drop_empty_cuts);
    m.def("serialize_cover", &serialize_cover);
    m.def("parse_cover", [](const std::string& text) { return parse_cover(text); });
    m.def("serialize_certificate", &serialize_certificate);
    m.def("parse_certificate", [](const std::string& text) { return parse_certificate(text); });

    py::class_<SearchBudget>(m, "SearchBudget")
        .def(py::init<>())
        .def(py::init([](std::uint64_t max_nodes, double wall_time_s) {
                 return SearchBudget{max_nodes, wall_time_s};
             }),
             py::arg("max_nodes"), py::arg("wall_time_s"))
        .def_readwrite("max_nodes", &SearchBudget::max_nodes)
        .def_readwrite("wall_time_s", &SearchBudget::wall_time_s);

    py::class_<SearchOptions>(m, "SearchOptions")
        .def(py::init<>())
        .def_readwrite("symmetry_breaking", &SearchOptions::symmetry_breaking)
        .def_readwrite("threads", &SearchOptions::threads);

    py::enum_<SearchStatus>(m, "SearchStatus")
        .value("found", SearchStatus::found)
        .value("none", SearchStatus::none)
        .value("timeout", SearchStatus::timeout);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("status", &SearchResult::status)
        .def_readonly("witness", &SearchResult::witness)
        .def_readonly("nodes_explored", &SearchResult::nodes_explored);

    py::class_<MinCoverResult>(m, "MinCoverResult")
        .def_readonly("status", &MinCoverResult::status)
        .def_readonly("min_cuts", &MinCoverResult::min_cuts)
        .def_readonly("proven_infeasible_up_to", &MinCoverResult::proven_infeasible_up_to)
        .def_readonly("witness", &MinCoverResult::witness)
        .def_readonly("nodes_explored", &MinCoverResult::nodes_explored);

    m.def("exists_cover", &exists_cover, py::arg("d"), py::arg("k"),
          py::arg("budget") = SearchBudget{}, py::arg("options") = SearchOptions{},
          py::call_guard<py::gil_scoped_release>());
    m.def("min_cover_number", &min_cover_number, py::arg("d"), py::arg("k_max"),
          py::arg("budget") = SearchBudget{}, py::arg("options") = SearchOptions{},
          py::call_guard<py::gil_scoped_release>());
    m.def("export_cnf", &export_cnf, py::arg("d"), py::arg("k"));

    py::class_<DStarLabels>(m, "DStarLabels")
        .def_readonly("entries", &DStarLabels::entries)
        .def("id_of", &DStarLabels::id_of);

    m.def("complete_digraph", &complete_digraph);
    m.def("circulant_tournament7", &circulant_tournament7);
    m.def("build_dstar", &build_dstar);
    m.def("serialize_labels", &serialize_labels);
    m.def("random_dkl", &random_dkl, py::arg("nx"), py::arg("ny"), py::arg("k"), py::arg("l"),
          py::arg("density"), py::arg("seed"));
}
