#include "satlab/json_io.hpp"

#include "satlab/graph6.hpp"

#include <cstdio>
#include <cstdlib>

namespace satlab {

double round12(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

OrderedJson count_json(const Graph& g, const SaturationReport& report)
{
    OrderedJson j;
    j["r"] = report.r;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["count"] = report.count;
    j["total_nonedges"] = report.total_nonedges;
    return j;
}

OrderedJson audit_json(const Graph& g, const AuditReport& report)
{
    const auto& d = report.decomposition;
    OrderedJson j;
    j["n"] = d.n;
    j["e"] = g.edge_count();
    j["t"] = std::to_string(d.packing_size) + "/" + std::to_string(d.n);
    j["e_t"] = d.e_t;
    j["e_gprime"] = d.e_gprime;
    j["r1"] = d.r1_count;
    j["r2"] = d.r2_count;
    j["f"] = d.r1_count + d.r2_count;
    j["selected_triangle"] = report.analysis.t;
    j["joint_book_k"] = report.analysis.joint_book_k;
    OrderedJson audits = OrderedJson::array();
    for (const auto& a : report.audits) {
        OrderedJson e;
        e["name"] = a.name;
        e["left"] = to_string(a.left);
        e["right"] = to_string(a.right);
        e["holds"] = a.holds;
        e["slack"] = to_string(a.slack);
        audits.push_back(std::move(e));
    }
    j["audits"] = std::move(audits);
    return j;
}

OrderedJson oracle_json(const OracleRecord& record)
{
    OrderedJson j;
    j["n"] = record.n;
    j["e"] = record.e;
    j["f_min"] = record.f_min;
    j["witness"] = to_graph6(record.witness);
    j["classes"] = record.classes;
    return j;
}

OrderedJson optimize_json(const DensityProgram& prog, const OptimizationResult& result)
{
    const Rational conjecture = conjecture_value(prog.r);
    OrderedJson j;
    OrderedJson w = OrderedJson::array();
    for (double x : result.weights)
        w.push_back(round12(x));
    j["weights"] = std::move(w);
    j["edge_density"] = round12(result.edge_density);
    j["sat_density"] = round12(result.sat_density);
    j["conjecture"] = to_string(conjecture);
    j["gap"] = round12(result.sat_density - to_double(conjecture));
    j["converged"] = result.converged;
    j["best_over_restarts"] = round12(result.best_over_restarts);
    j["restart_spread"] = round12(result.restart_spread);
    j["certified_feasible"] = result.certified_feasible;
    return j;
}

} // namespace satlab
