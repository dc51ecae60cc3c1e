#include "satlab/clique.hpp"
#include "satlab/constructions.hpp"
#include "satlab/decomposition.hpp"
#include "satlab/graph6.hpp"
#include "satlab/json_io.hpp"
#include "satlab/oracle.hpp"
#include "satlab/optimizer.hpp"
#include "satlab/saturation.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace satlab;

namespace {

VertexSet set_from_list(int n, const std::vector<int>& vs)
{
    VertexSet s(n);
    for (int v : vs)
        s.set(v);
    return s;
}

py::dict audit_to_dict(const Graph& g, const AuditReport& rep)
{
    py::dict d;
    d["n"] = rep.decomposition.n;
    d["e"] = g.edge_count();
    d["t"] = std::to_string(rep.decomposition.packing_size) + "/"
        + std::to_string(rep.decomposition.n);
    d["e_t"] = rep.decomposition.e_t;
    d["e_gprime"] = rep.decomposition.e_gprime;
    d["r1"] = rep.decomposition.r1_count;
    d["r2"] = rep.decomposition.r2_count;
    d["selected_triangle"] = rep.analysis.t;
    d["joint_book_k"] = rep.analysis.joint_book_k;
    py::list audits;
    for (const auto& a : rep.audits) {
        py::dict e;
        e["name"] = a.name;
        e["left"] = to_string(a.left);
        e["right"] = to_string(a.right);
        e["holds"] = a.holds;
        e["slack"] = to_string(a.slack);
        audits.append(e);
    }
    d["audits"] = audits;
    return d;
}

} // namespace

PYBIND11_MODULE(_satlab, m)
{
    m.doc() = "Bit-parallel graph kernels for K_r-saturating edge problems";

    py::register_exception<Graph6ParseError>(m, "Graph6ParseError");
    py::register_exception<PackingBudgetError>(m, "PackingBudgetError");

    py::class_<Graph>(m, "Graph")
        .def_static("from_graph6", &from_graph6, py::arg("text"))
        .def_static(
            "from_edges",
            [](int n, const std::vector<std::pair<int, int>>& edges) {
                return Graph::from_edges(n, edges);
            },
            py::arg("n"), py::arg("edges"))
        .def_static("empty", &Graph::empty, py::arg("n"))
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); },
            py::arg("v"))
        .def("edges", &Graph::edges)
        .def("complement", &Graph::complement)
        .def("with_edge", &Graph::with_edge, py::arg("u"), py::arg("v"))
        .def("without_edge", &Graph::without_edge, py::arg("u"), py::arg("v"))
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("contains_triangle", [](const Graph& g) { return contains_triangle(g); })
        .def("is_clique_free", [](const Graph& g, int r) { return is_clique_free(g, r); },
            py::arg("r"))
        .def("common_neighborhood",
            [](const Graph& g, const std::vector<int>& us) {
                return common_neighborhood(g, set_from_list(g.vertex_count(), us)).to_vector();
            },
            py::arg("vertices"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.vertex_count() << ", e=" << g.edge_count() << ")";
            return os.str();
        });

    m.def("is_saturating_pair", &is_saturating_pair, py::arg("g"), py::arg("u"), py::arg("v"),
        py::arg("r") = 4);
    m.def(
        "count_saturating",
        [](const Graph& g, int r, int workers) {
            auto rep = count_saturating(g, r, workers);
            py::dict d;
            d["r"] = rep.r;
            d["count"] = rep.count;
            d["total_nonedges"] = rep.total_nonedges;
            return d;
        },
        py::arg("g"), py::arg("r") = 4, py::arg("workers") = 0);
    m.def(
        "classify_nonedges",
        [](const Graph& g, int r) {
            auto rep = classify_nonedges(g, r);
            std::vector<std::tuple<int, int, bool>> out;
            for (const auto& p : *rep.classified)
                out.emplace_back(p.u, p.v, p.saturating);
            return out;
        },
        py::arg("g"), py::arg("r") = 4);

    m.def("c5_with_chord", &c5_with_chord);
    m.def(
        "blowup",
        [](const Graph& pattern, const std::vector<int>& sizes) {
            return blowup({pattern, sizes});
        },
        py::arg("pattern"), py::arg("sizes"));
    m.def(
        "classify_parts",
        [](const Graph& pattern, const std::vector<int>& nonempty, int r) {
            auto pc = classify_parts(pattern, set_from_list(pattern.vertex_count(), nonempty), r);
            py::dict d;
            d["within"] = pc.within.to_vector();
            d["cross"] = pc.cross;
            return d;
        },
        py::arg("pattern"), py::arg("nonempty"), py::arg("r") = 4);
    m.def("construct_h", &construct_h, py::arg("n"));
    m.def("construct_h_prime", &construct_h_prime, py::arg("n"));
    m.def("construct_h_minus", &construct_h_minus, py::arg("n"), py::arg("k"));
    m.def("bollobas_f", &bollobas_f, py::arg("n"));
    m.def("turan_bipartite", &turan_bipartite, py::arg("n"));
    m.def("join_pattern", &join_pattern, py::arg("r"));

    py::class_<TrianglePacking>(m, "TrianglePacking")
        .def_readonly("triangles", &TrianglePacking::triangles)
        .def_readonly("exact", &TrianglePacking::exact)
        .def("__len__", [](const TrianglePacking& p) { return p.triangles.size(); });

    m.def(
        "max_triangle_packing",
        [](const Graph& g, int exact_limit, std::uint64_t node_budget) {
            return max_triangle_packing(g, PackingOptions{exact_limit, node_budget});
        },
        py::arg("g"), py::arg("exact_limit") = 24, py::arg("node_budget") = 50'000'000ULL);
    m.def(
        "decompose",
        [](const Graph& g, const TrianglePacking& p) {
            auto rep = decompose(g, p);
            py::dict d;
            d["n"] = rep.n;
            d["packing_size"] = rep.packing_size;
            d["t"] = std::to_string(rep.packing_size) + "/" + std::to_string(rep.n);
            d["e_t"] = rep.e_t;
            d["e_gprime"] = rep.e_gprime;
            d["t_i"] = rep.t_i;
            d["r1"] = rep.r1_count;
            d["r2"] = rep.r2_count;
            return d;
        },
        py::arg("g"), py::arg("packing"));
    m.def("select_best_triangle", &select_best_triangle, py::arg("g"), py::arg("packing"));
    m.def(
        "analyze_triangle",
        [](const Graph& g, const TrianglePacking& p, int which) {
            auto an = analyze_triangle(g, p, which);
            py::dict d;
            d["triangle"] = an.t;
            d["n0"] = an.n0.to_vector();
            d["n1"] = an.n1.to_vector();
            d["n2"] = an.n2.to_vector();
            d["A"] = an.a.to_vector();
            d["B"] = an.b.to_vector();
            d["C"] = an.c.to_vector();
            d["joint_book_k"] = an.joint_book_k;
            return d;
        },
        py::arg("g"), py::arg("packing"), py::arg("which"));
    m.def(
        "audit_lemmas",
        [](const Graph& g, int exact_limit, std::uint64_t node_budget) {
            auto rep = audit_report(g, PackingOptions{exact_limit, node_budget});
            return audit_to_dict(g, rep);
        },
        py::arg("g"), py::arg("exact_limit") = 24, py::arg("node_budget") = 50'000'000ULL);
    m.def("reduce_preserving_triangle", &reduce_preserving_triangle, py::arg("g"));

    m.def("canonical_form",
        [](const Graph& g) { return py::bytes(canonical_form(g)); }, py::arg("g"));
    m.def(
        "enumerate_k4free",
        [](int n, long long e) {
            std::vector<Graph> out;
            enumerate_k4free(n, e, [&](const Graph& g) {
                out.push_back(g);
                return true;
            });
            return out;
        },
        py::arg("n"), py::arg("e"));
    m.def(
        "f_table",
        [](int n, long long e) {
            auto rec = f_table(n, e);
            py::dict d;
            d["n"] = rec.n;
            d["e"] = rec.e;
            d["f_min"] = rec.f_min;
            d["witness"] = to_graph6(rec.witness);
            d["classes"] = rec.classes;
            return d;
        },
        py::arg("n"), py::arg("e"));

    m.def("conjecture_value", [](int r) { return to_string(conjecture_value(r)); }, py::arg("r"));
    m.def(
        "evaluate_point",
        [](const Graph& pattern, const std::vector<double>& w, int r) {
            DensityProgram prog;
            prog.pattern = pattern;
            prog.r = r;
            return evaluate_point(prog, w);
        },
        py::arg("pattern"), py::arg("weights"), py::arg("r") = 4);
    m.def(
        "optimize",
        [](const Graph& pattern, int r, const std::vector<int>& support,
            const std::string& floor, int restarts, std::uint64_t seed) {
            DensityProgram prog;
            prog.pattern = pattern;
            prog.r = r;
            prog.required_support = set_from_list(pattern.vertex_count(), support);
            if (!floor.empty()) {
                const auto slash = floor.find('/');
                prog.edge_density_floor = slash == std::string::npos
                    ? Rational(BigInt(floor))
                    : Rational(BigInt(floor.substr(0, slash)), BigInt(floor.substr(slash + 1)));
            }
            prog.restarts = restarts;
            prog.seed = seed;
            auto res = optimize(prog);
            py::dict d;
            d["weights"] = res.weights;
            d["edge_density"] = res.edge_density;
            d["sat_density"] = res.sat_density;
            d["converged"] = res.converged;
            d["best_over_restarts"] = res.best_over_restarts;
            d["restart_spread"] = res.restart_spread;
            d["certified_feasible"] = res.certified_feasible;
            return d;
        },
        py::arg("pattern"), py::arg("r") = 4, py::arg("support") = std::vector<int>{},
        py::arg("floor") = "1/4", py::arg("restarts") = 64, py::arg("seed") = 1);
}
