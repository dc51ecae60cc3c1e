#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satlab/clique.hpp"
#include "satlab/constructions.hpp"
#include "satlab/graph6.hpp"
#include "satlab/saturation.hpp"

#include "support/naive.hpp"
#include "support/random_graphs.hpp"

#include <random>
#include <sstream>

using namespace satlab;
using namespace satlab::testing;

TEST_CASE("single-pair examples")
{
    Graph k4e = Graph::complete(4).without_edge(0, 1);
    CHECK(is_saturating_pair(k4e, 0, 1, 4));

    Graph k33 = turan_bipartite(6);
    CHECK_FALSE(is_saturating_pair(k33, 0, 1, 4)); // same part
    CHECK_FALSE(is_saturating_pair(k33, 0, 2, 4));

    Graph f6 = bollobas_f(6);
    for (int u = 2; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            CHECK(is_saturating_pair(f6, u, v, 4));

    CHECK_THROWS_AS(is_saturating_pair(k4e, 0, 2, 4), std::invalid_argument); // an edge
    CHECK_THROWS_AS(is_saturating_pair(Graph::complete(5), 0, 0, 4), std::invalid_argument);
    // not K4-free
    CHECK_THROWS_WITH_AS(is_saturating_pair(Graph::complete(5).without_edge(0, 1), 0, 1, 4),
        doctest::Contains("not K4-free"), std::invalid_argument);
}

TEST_CASE("count matches the closed forms of the constructions")
{
    CHECK(count_saturating(construct_h(66), 4).count == 250);
    CHECK(count_saturating(construct_h_prime(66), 4).count == 246);
    for (int n : {4, 5, 6, 7, 8, 9, 10, 11, 12, 66})
        CHECK(count_saturating(turan_bipartite(n), 4).count == 0);
}

TEST_CASE("count errors on graphs that are not K_r-free, naming a witness")
{
    Graph k4 = Graph::complete(4);
    CHECK_THROWS_WITH_AS(count_saturating(k4, 4), doctest::Contains("{0,1,2,3}"),
        std::invalid_argument);
    CHECK_THROWS_AS(count_saturating(Graph::complete(6), 5), std::invalid_argument);
}

TEST_CASE("classification examples")
{
    auto f6 = classify_nonedges(bollobas_f(6), 4);
    REQUIRE(f6.classified.has_value());
    CHECK(f6.total_nonedges == 6);
    CHECK(f6.count == 6);
    for (const auto& p : *f6.classified)
        CHECK(p.saturating);

    // H(66): saturating pairs are exactly the within-part pairs of V1,V2,V3
    Graph h = construct_h(66);
    auto sizes = h_part_sizes(66);
    auto rep = classify_nonedges(h, 4);
    const int b1 = sizes[0], b2 = sizes[0] + sizes[1], b3 = sizes[0] + sizes[1] + sizes[2];
    auto part = [&](int v) {
        if (v < b1)
            return 1;
        if (v < b2)
            return 2;
        if (v < b3)
            return 3;
        return v < b3 + sizes[3] ? 4 : 5;
    };
    for (const auto& p : *rep.classified) {
        const bool expect = part(p.u) == part(p.v) && part(p.u) <= 3;
        CHECK(p.saturating == expect);
    }

    auto empty5 = classify_nonedges(Graph::empty(5), 4);
    CHECK(empty5.count == 0);
    CHECK(empty5.total_nonedges == 10);

    // lexicographic order of the dump
    for (std::size_t i = 1; i < rep.classified->size(); ++i) {
        const auto& a = (*rep.classified)[i - 1];
        const auto& b = (*rep.classified)[i];
        CHECK((a.u < b.u || (a.u == b.u && a.v < b.v)));
    }
}

TEST_CASE("CSV export shape")
{
    auto rep = classify_nonedges(bollobas_f(4), 4);
    std::ostringstream os;
    write_classification_csv(os, rep);
    CHECK(os.str() == "u,v,saturating\n2,3,1\n");
    CHECK_THROWS_AS(write_classification_csv(os, count_saturating(bollobas_f(4), 4)),
        std::invalid_argument);
}

TEST_CASE("counter agrees with the subset-enumeration reference")
{
    std::mt19937_64 rng(101);
    int checked = 0;
    while (checked < 200) {
        const int n = 5 + static_cast<int>(rng() % 5); // up to 9
        Graph g = random_k4free(n, 0.55, rng);
        if (!contains_triangle(g))
            continue;
        ++checked;
        CHECK(count_saturating(g, 4).count == naive_count_saturating(g, 4));
    }
    // named constructions at reference scale
    CHECK(count_saturating(bollobas_f(9), 4).count == naive_count_saturating(bollobas_f(9), 4));
    CHECK(count_saturating(turan_bipartite(9), 4).count == 0);

    // r = 5 on random K5-free graphs
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.4, rng);
        if (!is_clique_free(g, 5))
            continue;
        CHECK(count_saturating(g, 5).count == naive_count_saturating(g, 5));
    }
}

TEST_CASE("adding a saturating pair creates K_r, a non-saturating one does not")
{
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 10);
        Graph g = random_k4free(n, 0.5, rng);
        auto rep = classify_nonedges(g, 4);
        for (const auto& p : *rep.classified) {
            Graph h = g.with_edge(p.u, p.v);
            CHECK(is_clique_free(h, 4) == !p.saturating);
        }
    }
}

TEST_CASE("removing an edge never increases the count")
{
    Graph h = construct_h(66);
    const long long base = count_saturating(h, 4).count;
    std::mt19937_64 rng(107);
    auto edges = h.edges();
    for (int s = 0; s < 25; ++s) {
        auto [u, v] = edges[rng() % edges.size()];
        CHECK(count_saturating(h.without_edge(u, v), 4).count <= base);
    }
}

TEST_CASE("worker count does not change the result")
{
    Graph h = construct_h(66);
    const long long w1 = count_saturating(h, 4, 1).count;
    const long long w3 = count_saturating(h, 4, 3).count;
    const long long w8 = count_saturating(h, 4, 8).count;
    CHECK(w1 == 250);
    CHECK(w3 == 250);
    CHECK(w8 == 250);
}
