#pragma once

#include "satlab/graph.hpp"
#include "satlab/rational.hpp"
#include "satlab/vertex_set.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satlab {

using Triangle = std::array<int, 3>; // ascending vertices

/// Vertex-disjoint triangles; exact means proven maximum.
struct TrianglePacking {
    std::vector<Triangle> triangles;
    bool exact = false;
};

struct PackingOptions {
    /// Exact branch-and-bound runs when n <= exact_limit, otherwise greedy
    /// plus swap improvements.
    int exact_limit = 24;
    /// Deterministic cap on search nodes; exceeding it raises
    /// PackingBudgetError instead of silently degrading to a heuristic.
    std::uint64_t node_budget = 50'000'000;
};

/// Maximum (or heuristic, see PackingOptions) family of vertex-disjoint
/// triangles; among maximum packings the lexicographically least triangle
/// list is returned.
TrianglePacking max_triangle_packing(const Graph& g, const PackingOptions& opts = {});

struct DecompositionReport {
    int n = 0;
    int packing_size = 0;       // tn
    Rational t;                 // packing_size / n
    long long e_t = 0;          // edges inside V(T)
    long long e_gprime = 0;     // edges of G' = G - V(T)
    std::vector<long long> t_i; // cascade degrees e(T_i, G \ T_1..T_i)
    long long r1_count = 0;     // saturating pairs incident to V(T)
    long long r2_count = 0;     // saturating pairs inside V(G')
};

/// All packing-relative counts; r1/r2 require g to be K4-free.
DecompositionReport decompose(const Graph& g, const TrianglePacking& packing);

struct TriangleAnalysis {
    Triangle t{};
    VertexSet n0, n1, n2; // vertices of G' with 0/1/2 neighbours on t
    Rational p0, p1, p2;  // |N_j| / n
    VertexSet a, b, c;    // N_{G'}(xy), N_{G'}(yz), N_{G'}(xz)
    std::optional<Rational> ra, rb, rc; // |A|/|N2| etc.; unset when N2 empty
    VertexSet nx, ny, nz; // N_{G'}(x) etc.
    int joint_book_k = 0; // nonempty sets among A,B,C (0 iff N2 empty)
};

/// Errors if some G' vertex has 3 neighbours on the triangle (a K4 witness).
TriangleAnalysis analyze_triangle(const Graph& g, const TrianglePacking& packing, int which);

/// Index of the packing triangle sending the most edges to G'; ties go to
/// the smallest index.
int select_best_triangle(const Graph& g, const TrianglePacking& packing);

struct LemmaAudit {
    std::string name;
    Rational left;
    Rational right;
    bool holds = false;
    Rational slack; // left - right
};

struct AuditReport {
    DecompositionReport decomposition;
    int selected = -1;
    TriangleAnalysis analysis;
    std::vector<LemmaAudit> audits;
};

/// Audit the decomposition inequalities on a K4-free graph with exactly
/// floor(n^2/4) edges and a triangle. The packing must be exact.
AuditReport audit_report(const Graph& g, const TrianglePacking& packing);
AuditReport audit_report(const Graph& g, const PackingOptions& opts = {});

std::vector<LemmaAudit> audit_lemmas(const Graph& g, const TrianglePacking& packing);
std::vector<LemmaAudit> audit_lemmas(const Graph& g, const PackingOptions& opts = {});

/// Remove the lexicographically first edge whose removal still leaves a
/// triangle; errors when no such edge exists.
Graph reduce_preserving_triangle(const Graph& g);

} // namespace satlab
