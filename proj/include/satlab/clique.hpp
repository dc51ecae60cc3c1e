#pragma once

#include "satlab/graph.hpp"
#include "satlab/vertex_set.hpp"

#include <optional>
#include <span>
#include <vector>

namespace satlab {

/// N(U) = intersection of the neighborhoods of all members of `us`.
/// `us` must be non-empty.
VertexSet common_neighborhood(const Graph& g, const VertexSet& us);

bool contains_triangle(const Graph& g);

/// True iff g contains no clique on r vertices (r >= 2).
bool is_clique_free(const Graph& g, int r);

/// Some k-clique of g in ascending vertex order, if one exists.
std::optional<std::vector<int>> find_clique(const Graph& g, int k);

/// Does the subgraph induced on `mask` contain a k-clique? `mask` is a
/// row-width word span; fills `witness` (ascending) when given and found.
bool clique_in_mask(const Graph& g, std::span<const std::uint64_t> mask, int k,
    std::vector<int>* witness = nullptr);

/// Lexicographically least K4 (as {u,v,w,x}, u<v, w<x the witness edge in
/// N(u) ∩ N(v)), if any. Specialised bit-parallel scan used by the r=4 paths.
std::optional<std::array<int, 4>> find_k4(const Graph& g);

} // namespace satlab
