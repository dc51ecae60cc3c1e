#pragma once

#include "satlab/vertex_set.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace satlab {

/// Immutable simple undirected graph. Adjacency is stored as n bit rows
/// padded to 64-bit words; row v is the neighborhood N(v). All operations
/// are pure; instances are safe to share across threads.
class Graph {
public:
    static constexpr int kDefaultMaxVertices = 4096;

    /// Process-wide cap on vertex counts accepted by constructors/codecs.
    static int max_vertices();
    static void set_max_vertices(int n);

    Graph() = default;

    static Graph empty(int n);
    static Graph complete(int n);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return edge_count_; }
    int words_per_row() const { return words_; }

    bool adjacent(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        return row_ptr(u)[v / detail::kWordBits] & detail::bit(v);
    }

    int degree(int v) const;

    std::span<const std::uint64_t> row(int v) const
    {
        check_vertex(v);
        return {row_ptr(v), static_cast<std::size_t>(words_)};
    }

    VertexSet neighbors(int v) const;

    /// Edges as (u,v), u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    friend class GraphBuilder;

    explicit Graph(int n);

    const std::uint64_t* row_ptr(int v) const { return bits_.data() + std::size_t(v) * words_; }
    std::uint64_t* row_ptr(int v) { return bits_.data() + std::size_t(v) * words_; }

    void check_vertex(int v) const;
    void set_edge_bit(int u, int v);
    void clear_edge_bit(int u, int v);
    void recount_edges();

    int n_ = 0;
    int words_ = 0;
    long long edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Accumulates edges, then freezes into an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    int vertex_count() const { return g_.n_; }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
    void add_edge(int u, int v);
    Graph build();

private:
    Graph g_;
};

} // namespace satlab
