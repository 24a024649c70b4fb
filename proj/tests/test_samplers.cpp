#include "oracles.hpp"

#include "listpack/graph.hpp"
#include "listpack/samplers.hpp"

#include <doctest.h>

#include <cmath>

using namespace listpack;

namespace {

bool rows_sum_to_one(const MarginalTable& t)
{
    for (const auto& row : t) {
        Rational s = 0;
        for (const auto& q : row) {
            s += q;
        }
        if (s != 1) {
            return false;
        }
    }
    return true;
}

// Largest gap between empirical slot frequencies and the exact table.
double monte_carlo_gap(const Cover& c, const MarginalTable& exact, const std::function<Transversal()>& draw, int samples)
{
    std::vector<std::vector<int>> hits(c.base().n());
    for (int v = 0; v < c.base().n(); ++v) {
        hits[v].assign(c.fold(v), 0);
    }
    for (int i = 0; i < samples; ++i) {
        const auto t = draw();
        REQUIRE(is_transversal(c, t));
        for (int v = 0; v < c.base().n(); ++v) {
            ++hits[v][t[v]];
        }
    }
    double gap = 0;
    for (int v = 0; v < c.base().n(); ++v) {
        for (int s = 0; s < c.fold(v); ++s) {
            gap = std::max(gap, std::abs(double(hits[v][s]) / samples - exact[v][s].get_d()));
        }
    }
    return gap;
}

}  // namespace

TEST_CASE("greedy sampler meets the list demand on random covers")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 5, 0.5, rng);
        const int k = max_degree(g) + 1;
        Cover c = random_full_cover(g, k, rng);
        if (trial % 2 && g.m() > 0) {
            auto pairs = c.matching_pairs(0);
            pairs.pop_back();
            c.set_matching(0, pairs);
        }
        const auto table = exact_marginals_greedy(c);
        CHECK(rows_sum_to_one(table));
        CHECK(meets_list_demand(c, table));
        for (int i = 0; i < 20; ++i) {
            CHECK(is_transversal(c, greedy_fractional_sampler(c, rng)));
        }
    }
}

TEST_CASE("greedy sampler frequencies match the exact marginals")
{
    std::mt19937_64 rng(63);
    const Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    const Cover c = random_full_cover(g, 4, rng);
    const auto exact = exact_marginals_greedy(c);
    CHECK(monte_carlo_gap(c, exact, [&] { return greedy_fractional_sampler(c, rng); }, 40000) < 0.015);
}

TEST_CASE("bipartite sampler is exactly uniform")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        const int a = 1 + trial % 3;
        const int b = 1 + trial % 4;
        std::vector<std::pair<int, int>> e;
        std::bernoulli_distribution coin(0.6);
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) {
                if (coin(rng)) {
                    e.emplace_back(i, a + j);
                }
            }
        }
        const Graph g(a + b, e);
        const auto side = bipartite_a_side(g);
        int delta_a = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (side[v]) {
                delta_a = std::max(delta_a, g.degree(v));
            }
        }
        const Cover c = random_full_cover(g, delta_a + 1, rng);
        const auto table = exact_marginals_bipartite(c);
        CHECK(is_uniform(c, table));
        CHECK(meets_list_demand(c, table));
    }
    const Graph k23 = complete_bipartite_graph(2, 3);
    const Cover c = random_full_cover(k23, 3, rng);
    CHECK(monte_carlo_gap(c, exact_marginals_bipartite(c), [&] { return bipartite_sampler(c, rng); }, 30000) < 0.015);
}

TEST_CASE("sampler preconditions")
{
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(greedy_fractional_sampler(identity_cover(complete_graph(4), 3), rng), PreconditionError);
    CHECK_THROWS_AS(bipartite_sampler(identity_cover(cycle_graph(5), 3), rng), PreconditionError);
    CHECK_THROWS_AS(exact_marginals_bipartite(identity_cover(complete_bipartite_graph(3, 3), 2)), PreconditionError);
    CHECK_THROWS_AS(exact_marginals_greedy(identity_cover(complete_graph(6), 6), 10), CapExceeded);
}

TEST_CASE("completing matchings")
{
    Cover c(path_graph(3), {3, 3, 3});
    c.set_matching(0, std::vector<std::pair<int, int>>{{0, 2}});
    const Cover full = complete_matchings(c);
    CHECK(full.matching_pairs(0).size() == 3);
    CHECK(full.mate(0, 0, 0) == 2);
    CHECK(full.mate(0, 1, 0) == 0);
    CHECK(full.matching_pairs(1).size() == 3);
}
