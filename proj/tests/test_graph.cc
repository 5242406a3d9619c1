#include <doctest.h>

#include <vecchoose/errors.hh>
#include <vecchoose/graph.hh>

#include <random>

using namespace vecchoose;

TEST_CASE("builders")
{
    CHECK(complete_graph(3).edges().size() == 3);
    CHECK(complete_graph(7).edges().size() == 21);
    CHECK(complete_bipartite_graph(2, 3).edges().size() == 6);
    CHECK(multipartite_graph({ 2, 2, 2 }).edges().size() == 12);
    CHECK(cycle_graph(5).edges().size() == 5);
    CHECK(path_graph(2).size() == 3);
    CHECK_THROWS_AS(cycle_graph(2), InvalidParameter);
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), InvalidParameter);
    CHECK_THROWS_AS(g.add_edge(2, 2), InvalidParameter);
    CHECK(g.edge_index(1, 0) == 0);
    CHECK(! g.edge_index(1, 2));
}

TEST_CASE("structure checks")
{
    auto c4 = cycle_graph(4);
    CHECK(bipartition(c4).bipartite);
    CHECK(! is_acyclic(c4));
    CHECK(degeneracy(c4) == 2);
    CHECK(average_degree(c4) == 2.0);

    auto c5 = cycle_graph(5);
    auto b = bipartition(c5);
    CHECK(! b.bipartite);
    REQUIRE(b.odd_cycle.size() >= 4);
    CHECK(b.odd_cycle.front() == b.odd_cycle.back());
    CHECK(b.odd_cycle.size() % 2 == 0);
    for (size_t i = 0 ; i + 1 < b.odd_cycle.size() ; ++i)
        CHECK(c5.adjacent(b.odd_cycle[i], b.odd_cycle[i + 1]));

    auto p = path_graph(4);
    CHECK(is_acyclic(p));
    CHECK(degeneracy(p) == 1);
    CHECK(degeneracy(complete_graph(6)) == 5);
}

TEST_CASE("acyclicity agrees with a union-find forest test")
{
    std::mt19937_64 rng(23);
    for (int trial = 0 ; trial < 500 ; ++trial) {
        size_t n = 1 + rng() % 9;
        Graph g(n);
        std::vector<size_t> parent(n);
        for (size_t i = 0 ; i < n ; ++i)
            parent[i] = i;
        auto find = [&] (size_t x) { while (parent[x] != x) x = parent[x]; return x; };
        bool cycle = false;
        for (size_t u = 0 ; u < n ; ++u)
            for (size_t v = u + 1 ; v < n ; ++v)
                if (rng() % 4 == 0) {
                    g.add_edge(u, v);
                    size_t a = find(u), c = find(v);
                    if (a == c)
                        cycle = true;
                    else
                        parent[a] = c;
                }
        CHECK(is_acyclic(g) == ! cycle);
        auto b = bipartition(g);
        if (b.bipartite)
            for (auto & [u, v] : g.edges())
                CHECK(b.side[u] != b.side[v]);
    }
}
