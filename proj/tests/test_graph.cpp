#include "oracles.hpp"

#include "listpack/graph.hpp"
#include "listpack/permutation.hpp"

#include <doctest.h>

using namespace listpack;

TEST_CASE("graph construction rejects loops, duplicates and bad ids")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    const Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edges().front() == Edge{0, 3});
    CHECK(g.edge_id(1, 2) == 1);
    CHECK(g.edge_id(0, 1) == -1);
}

TEST_CASE("standard graphs")
{
    const Graph p = petersen_graph();
    CHECK(p.n() == 10);
    CHECK(p.m() == 15);
    CHECK(min_degree(p) == 3);
    CHECK(max_degree(p) == 3);
    CHECK(clique_number(p) == 2);
    const Graph f = fan7_graph();
    CHECK(f.n() == 7);
    CHECK(f.m() == 11);
    CHECK(f.degree(6) == 6);
    CHECK(diamond_necklace_graph().m() == 12);
    CHECK(max_degree(diamond_necklace_graph()) == 3);
    CHECK(complete_minus_edge_graph(5).m() == 9);
    CHECK(!complete_minus_edge_graph(5).has_edge(0, 1));
    CHECK(latin_square_graph(3).m() == 9 * 4 / 2);
    CHECK(build_standard("complete_bipartite:3,3") == complete_bipartite_graph(3, 3));
    CHECK(build_standard("cycle:5") == cycle_graph(5));
    CHECK_THROWS(build_standard("cycle"));
    CHECK_THROWS(build_standard("nonsense:3"));
}

TEST_CASE("degeneracy and clique number match brute force")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 7;
        const Graph g = oracle::random_graph(n, 0.2 + 0.1 * (trial % 7), rng);
        const auto d = degeneracy(g);
        CHECK(d.degeneracy == oracle::degeneracy(g));
        CHECK(clique_number(g) == oracle::clique_number(g));
        // the order realises the value: every vertex has at most d later neighbours in removal order
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) {
            pos[d.order[i]] = i;
        }
        for (int v = 0; v < n; ++v) {
            int later = 0;
            for (const auto& nb : g.neighbours(v)) {
                later += pos[nb.vertex] > pos[v];
            }
            CHECK(later <= d.degeneracy);
        }
    }
    CHECK(degeneracy(cycle_graph(5)).degeneracy == 2);
    CHECK(degeneracy(complete_graph(4)).degeneracy == 3);
}

TEST_CASE("canonical code is a complete isomorphism invariant on small graphs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 6;
        const Graph g = oracle::random_graph(n, 0.5, rng);
        std::vector<int> to(n);
        for (int i = 0; i < n; ++i) {
            to[i] = i;
        }
        std::shuffle(to.begin(), to.end(), rng);
        CHECK(canonical_code(g) == canonical_code(oracle::relabel(g, to)));
    }
    CHECK(canonical_code(path_graph(4)) != canonical_code(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST_CASE("isomorphism class counts")
{
    const int all[] = {1, 1, 2, 4, 11, 34, 156};
    const int connected[] = {1, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<int>(nonisomorphic_graphs(n).size()) == all[n]);
        CHECK(static_cast<int>(nonisomorphic_graphs(n, true).size()) == connected[n]);
    }
}

TEST_CASE("spanning forests, components and bipartitions")
{
    const Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    int count = 0;
    const auto comp = connected_components(g, &count);
    CHECK(count == 3);
    CHECK(comp == std::vector<int>{0, 0, 0, 1, 1, 2});
    const auto f = spanning_forest(g);
    CHECK(f.size() == 3);
    CHECK(is_forest(g, f));
    CHECK(!is_forest(g, {0, 1, 2}));
    CHECK(!bipartition(g));
    const auto side = bipartition(complete_bipartite_graph(2, 3));
    REQUIRE(side);
    CHECK((*side)[0] != (*side)[2]);
    CHECK(!is_connected(g));
    CHECK(is_connected(petersen_graph()));
}

TEST_CASE("edge not in a triangle")
{
    CHECK_THROWS_AS(edge_not_in_triangle(complete_graph(4)), PreconditionError);
    CHECK_THROWS_AS(edge_not_in_triangle(cycle_graph(5)), PreconditionError);
    for (const Graph& g : {petersen_graph(), complete_bipartite_graph(3, 3), diamond_necklace_graph()}) {
        const auto e = edge_not_in_triangle(g);
        REQUIRE(e);
        CHECK(g.has_edge(e->u, e->v));
        for (const auto& nb : g.neighbours(e->u)) {
            CHECK(!g.has_edge(nb.vertex, e->v));
        }
    }
    // both connected cubic graphs on 6 vertices
    int cubic = 0;
    for (const auto& g : nonisomorphic_graphs(6, true)) {
        if (min_degree(g) == 3 && max_degree(g) == 3) {
            ++cubic;
            CHECK(edge_not_in_triangle(g).has_value());
        }
    }
    CHECK(cubic == 2);
}

TEST_CASE("induced subgraph keeps the given order")
{
    const Graph g = cycle_graph(5);
    const Graph h = induced_subgraph(g, {4, 0, 1});
    CHECK(h.n() == 3);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));
    CHECK(!h.has_edge(0, 2));
}

TEST_CASE("permutations")
{
    CHECK(all_perms(4).size() == 24);
    for (std::uint64_t r = 0; r < 120; ++r) {
        const Perm p = perm_unrank(r, 5);
        CHECK(is_permutation(p));
        CHECK(perm_rank(p) == r);
        CHECK(is_identity(compose(p, inverse(p))));
        CHECK(perm_from_string(perm_to_string(p)) == p);
    }
    CHECK(parity(Perm{1, 0, 2}) == -1);
    CHECK(parity(Perm{1, 2, 0}) == 1);
    CHECK(perm_to_string(Perm{1, 2, 3, 0}) == "(2,3,4,1)");
    CHECK(compose(Perm{1, 2, 0}, Perm{1, 0, 2}) == Perm{2, 1, 0});
    CHECK_THROWS(perm_from_string("(1,1)"));
}
