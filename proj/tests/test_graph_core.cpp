#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satlab/clique.hpp"
#include "satlab/constructions.hpp"
#include "satlab/graph6.hpp"

#include "support/naive.hpp"
#include "support/random_graphs.hpp"

#include <random>
#include <sstream>

using namespace satlab;
using namespace satlab::testing;

TEST_CASE("graph6 decodes the reference examples")
{
    Graph k4 = from_graph6("C~");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    Graph c5 = from_graph6("Dhc");
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.adjacent(0, 1));
    CHECK(c5.adjacent(1, 2));
    CHECK(c5.adjacent(2, 3));
    CHECK(c5.adjacent(3, 4));
    CHECK(c5.adjacent(0, 4));
    CHECK_FALSE(c5.adjacent(0, 2));

    Graph one = from_graph6("@");
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);

    // networkx reference encodings
    CHECK(to_graph6(Graph::complete(4)) == "C~");
    CHECK(to_graph6(from_graph6("DhC")) == "DhC"); // P5
    CHECK(to_graph6(turan_bipartite(6)) == "EFz_");
    CHECK(to_graph6(from_graph6("IheA@GUAo")) == "IheA@GUAo"); // Petersen
}

TEST_CASE("graph6 handles the extended size form and headers")
{
    Graph k33_33 = turan_bipartite(66);
    std::string s = to_graph6(k33_33);
    CHECK(s.substr(0, 4) == "~?@A");
    CHECK(s.size() == 362);
    CHECK(from_graph6(s) == k33_33);
    CHECK(from_graph6(">>graph6<<" + s) == k33_33);

    CHECK(to_graph6(Graph::empty(0)) == "?");
    CHECK(from_graph6("?").vertex_count() == 0);
}

TEST_CASE("graph6 errors name the offending byte")
{
    CHECK_THROWS_AS(from_graph6(""), Graph6ParseError);
    CHECK_THROWS_AS(from_graph6("C"), Graph6ParseError);       // truncated
    CHECK_THROWS_AS(from_graph6("C~~"), Graph6ParseError);     // trailing garbage
    CHECK_THROWS_AS(from_graph6("C\x07"), Graph6ParseError);   // non-printable
    CHECK_THROWS_AS(from_graph6("D\x1f\x1f"), Graph6ParseError);
    CHECK_THROWS_WITH_AS(from_graph6(":Fa@x^"), doctest::Contains("sparse6"), Graph6ParseError);
    CHECK_THROWS_WITH_AS(from_graph6("&C~~~"), doctest::Contains("digraph6"), Graph6ParseError);
    try {
        from_graph6("C~x");
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(std::string(e.what()).find("byte 2") != std::string::npos);
    }
}

TEST_CASE("graph6 round-trips on random graphs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng() % 80);
        Graph g = random_graph(n, 0.3, rng);
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("complement involution and edge-count identity")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 40);
        Graph g = random_graph(n, 0.4, rng);
        Graph c = g.complement();
        CHECK(c.complement() == g);
        CHECK(g.edge_count() + c.edge_count() == static_cast<long long>(n) * (n - 1) / 2);
    }

    CHECK(Graph::complete(4).complement() == Graph::empty(4));
    CHECK(Graph::empty(5).complement() == Graph::complete(5));
    // e(complement of F(6)) = 15 - 9
    CHECK(bollobas_f(6).complement().edge_count() == 6);
}

TEST_CASE("common neighborhood matches the examples")
{
    Graph k4 = Graph::complete(4);
    CHECK(common_neighborhood(k4, VertexSet(4, {0, 1})) == VertexSet(4, {2, 3}));

    Graph c5 = from_graph6("Dhc");
    CHECK(common_neighborhood(c5, VertexSet(5, {0, 2})) == VertexSet(5, {1}));

    Graph hp = construct_h_prime(66);
    // one vertex of V1 (0) and one of V2 (16): common neighborhood is V3
    VertexSet got = common_neighborhood(hp, VertexSet(66, {0, 16}));
    CHECK(got.count() == 16);
    for (int v = 20; v < 36; ++v)
        CHECK(got.test(v));

    CHECK_THROWS_AS(common_neighborhood(k4, VertexSet(4)), std::invalid_argument);
}

TEST_CASE("common neighborhood of a singleton is the row, and shrinks under enlargement")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 20);
        Graph g = random_graph(n, 0.5, rng);
        const int v = static_cast<int>(rng() % n);
        CHECK(common_neighborhood(g, VertexSet(n, {v})) == g.neighbors(v));

        const int u = static_cast<int>(rng() % n);
        if (u != v) {
            VertexSet big = common_neighborhood(g, VertexSet(n, {u, v}));
            CHECK(big.subset_of(common_neighborhood(g, VertexSet(n, {v}))));
        }
    }
}

TEST_CASE("clique search agrees with the all-subsets oracle")
{
    // exhaustive on 4 vertices, sampled at 5..8
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        GraphBuilder b(4);
        int bit = 0;
        for (int j = 1; j < 4; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (mask >> bit & 1)
                    b.add_edge(i, j);
        Graph g = b.build();
        for (int r = 2; r <= 5; ++r)
            CHECK(is_clique_free(g, r) == !naive_has_clique(g, r));
    }
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
        Graph g = random_graph(n, p, rng);
        for (int r = 2; r <= 6; ++r)
            CHECK(is_clique_free(g, r) == !naive_has_clique(g, r));
    }
}

TEST_CASE("clique examples from the constructions")
{
    CHECK_FALSE(is_clique_free(Graph::complete(4), 4));
    CHECK(is_clique_free(construct_h(66), 4));
    CHECK(is_clique_free(turan_bipartite(10), 3));

    CHECK_FALSE(contains_triangle(turan_bipartite(6)));
    CHECK(contains_triangle(construct_h_prime(66)));
    CHECK_FALSE(contains_triangle(from_graph6("Dhc")));
}

TEST_CASE("contains_triangle equals the r=3 clique test")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        Graph g = random_graph(n, 0.35, rng);
        CHECK(contains_triangle(g) == !is_clique_free(g, 3));
    }
}

TEST_CASE("edge listing straddles word boundaries")
{
    Graph g = Graph::from_edges(130, {{63, 64}, {0, 63}, {64, 129}, {127, 128}, {2, 3}});
    auto edges = g.edges();
    CHECK(edges == std::vector<std::pair<int, int>>{
        {0, 63}, {2, 3}, {63, 64}, {64, 129}, {127, 128}});
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        Graph h = random_graph(70, 0.4, rng);
        long long listed = 0;
        for (auto [u, v] : h.edges()) {
            CHECK(u < v);
            CHECK(h.adjacent(u, v));
            ++listed;
        }
        CHECK(listed == h.edge_count());
    }
}

TEST_CASE("vertex count cap")
{
    CHECK(Graph::max_vertices() == Graph::kDefaultMaxVertices);
    CHECK_THROWS_AS(Graph::empty(Graph::kDefaultMaxVertices + 1), std::invalid_argument);
}
