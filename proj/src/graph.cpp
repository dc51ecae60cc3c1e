#include "satlab/graph.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>

namespace satlab {

namespace {
    std::atomic<int> g_max_vertices{Graph::kDefaultMaxVertices};
}

int Graph::max_vertices() { return g_max_vertices.load(); }

void Graph::set_max_vertices(int n)
{
    if (n < 0)
        throw std::invalid_argument("max_vertices must be non-negative");
    g_max_vertices.store(n);
}

Graph::Graph(int n)
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    if (n > max_vertices())
        throw std::invalid_argument(
            "vertex count " + std::to_string(n) + " exceeds max " + std::to_string(max_vertices()));
    n_ = n;
    words_ = detail::word_count(n);
    bits_.assign(std::size_t(n) * words_, 0);
}

Graph Graph::empty(int n) { return Graph(n); }

Graph Graph::complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.set_edge_bit(u, v);
    g.recount_edges();
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.set_edge_bit(u, v);
    }
    g.recount_edges();
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

void Graph::set_edge_bit(int u, int v)
{
    row_ptr(u)[v / detail::kWordBits] |= detail::bit(v);
    row_ptr(v)[u / detail::kWordBits] |= detail::bit(u);
}

void Graph::clear_edge_bit(int u, int v)
{
    row_ptr(u)[v / detail::kWordBits] &= ~detail::bit(v);
    row_ptr(v)[u / detail::kWordBits] &= ~detail::bit(u);
}

void Graph::recount_edges()
{
    long long total = 0;
    for (auto w : bits_)
        total += std::popcount(w);
    edge_count_ = total / 2;
}

int Graph::degree(int v) const
{
    check_vertex(v);
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

VertexSet Graph::neighbors(int v) const
{
    VertexSet s(n_);
    auto r = row(v);
    auto out = s.words();
    for (std::size_t i = 0; i < r.size(); ++i)
        out[i] = r[i];
    return s;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u) {
        auto r = row(u);
        for (int w = u / detail::kWordBits; w < words_; ++w) {
            std::uint64_t word = r[w];
            // 2 << 63 wraps to 0, so this clears the whole word when u is its top bit
            if (w == u / detail::kWordBits)
                word &= ~((std::uint64_t{2} << (u % detail::kWordBits)) - 1);
            while (word) {
                int v = w * detail::kWordBits + std::countr_zero(word);
                out.emplace_back(u, v);
                word &= word - 1;
            }
        }
    }
    return out;
}

Graph Graph::complement() const
{
    Graph g(n_);
    for (int v = 0; v < n_; ++v) {
        auto src = row(v);
        auto* dst = g.row_ptr(v);
        for (int w = 0; w < words_; ++w)
            dst[w] = ~src[w];
        // mask the loop bit and the padding beyond n
        dst[v / detail::kWordBits] &= ~detail::bit(v);
        if (n_ % detail::kWordBits != 0)
            dst[words_ - 1] &= (std::uint64_t{1} << (n_ % detail::kWordBits)) - 1;
    }
    g.recount_edges();
    return g;
}

Graph Graph::with_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loop edge");
    Graph g = *this;
    if (!g.adjacent(u, v)) {
        g.set_edge_bit(u, v);
        ++g.edge_count_;
    }
    return g;
}

Graph Graph::without_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    if (g.adjacent(u, v)) {
        g.clear_edge_bit(u, v);
        --g.edge_count_;
    }
    return g;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v)
{
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g_.set_edge_bit(u, v);
}

Graph GraphBuilder::build()
{
    g_.recount_edges();
    return std::move(g_);
}

} // namespace satlab
