#pragma once

#include "satlab/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace satlab {

/// Hard cap for the exhaustive small-graph machinery.
inline constexpr int kOracleMaxVertices = 9;

/// Canonical byte string: equal iff isomorphic (n <= kOracleMaxVertices).
/// Degree refinement fixes an ordered cell partition; the string is the
/// lexicographically maximal column-order adjacency bit string over all
/// cell-respecting relabelings, prefixed by n.
std::string canonical_form(const Graph& g);

struct EnumerateOptions {
    bool prune_k4 = true;
    /// Resume strictly after the graph with this edge list (a checkpoint
    /// previously emitted by the enumeration).
    std::optional<std::vector<std::pair<int, int>>> resume_after;
};

/// Stream every isomorphism class of K4-free graphs with n vertices and e
/// edges exactly once (orderly generation: a partial edge list survives only
/// while it is the canonical representative of its class). The visitor
/// returns false to stop early. Returns the number of classes visited.
long long enumerate_k4free(int n, long long e, const std::function<bool(const Graph&)>& visit,
    const EnumerateOptions& opts = {});

/// Brute-force fallback (n <= 6): generate all labeled graphs, deduplicate
/// by canonical form. Used to cross-validate the orderly generator.
std::vector<Graph> enumerate_k4free_bruteforce(int n, long long e, bool prune_k4 = true);

struct OracleRecord {
    int n = 0;
    long long e = 0;
    long long f_min = 0;
    Graph witness;
    long long classes = 0;
};

/// Exact extremal value f(n,e): minimum saturating count over every
/// isomorphism class, with an argmin witness. Errors when no K4-free graph
/// with e edges on n vertices exists.
OracleRecord f_table(int n, long long e);

} // namespace satlab
