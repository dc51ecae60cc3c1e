#pragma once

#include "satlab/graph.hpp"
#include "satlab/vertex_set.hpp"

#include <array>
#include <utility>
#include <vector>

namespace satlab {

/// A pattern graph together with one part size per pattern vertex. The
/// blow-up replaces vertex i by an independent set of sizes[i] vertices and
/// each pattern edge by a complete bipartite graph between the parts.
struct BlowupPattern {
    Graph pattern;
    std::vector<int> sizes;
};

/// Which pattern positions carry saturating pairs in a blow-up with the
/// given support: `within` holds pattern vertices whose internal pairs are
/// saturating, `cross` the pattern non-edges whose cross pairs are.
struct PartClassification {
    int r = 4;
    VertexSet within;
    std::vector<std::pair<int, int>> cross;
};

/// C5 on 0..4 (0-1-2-3-4-0) plus the chord 0-2.
Graph c5_with_chord();

Graph blowup(const BlowupPattern& bp);

PartClassification classify_parts(const Graph& pattern, const VertexSet& nonempty, int r);

/// Part sizes (|V1|..|V5|) of the named constructions; 66 must divide n.
std::array<int, 5> h_part_sizes(int n);
std::array<int, 5> h_prime_part_sizes(int n);

/// C5-with-chord blow-up with e = n^2/4 + n/66 and f = 2n^2/33 - 7n/33.
Graph construct_h(int n);

/// Extremal variant: e = n^2/4 exactly, f = 2n^2/33 - 3n/11.
Graph construct_h_prime(int n);

/// construct_h(n) minus the k lexicographically first V4-V5 edges,
/// 0 <= k <= n/66 - 1; the saturating-pair set is unchanged.
Graph construct_h_minus(int n, int k);

/// Two adjacent dominating vertices over an independent set; e = 2n-3 and
/// every complement edge is saturating (n >= 4).
Graph bollobas_f(int n);

/// Complete bipartite K_{ceil(n/2),floor(n/2)}; f = 0.
Graph turan_bipartite(int n);

/// Clique on r-4 apex vertices (first) joined completely to C5-with-chord;
/// equals c5_with_chord() for r = 4.
Graph join_pattern(int r);

} // namespace satlab
