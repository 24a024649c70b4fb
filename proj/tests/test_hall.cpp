#include "listpack/graph.hpp"
#include "listpack/hall.hpp"

#include <doctest.h>

#include <random>

using namespace listpack;

namespace {

BipartiteGraph random_bipartite(int na, int nb, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    BipartiteGraph bg(na, nb);
    for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nb; ++b) {
            if (coin(rng)) {
                bg.add_edge(a, b);
            }
        }
    }
    return bg;
}

bool hall_by_subsets(const BipartiteGraph& bg)
{
    for (std::uint32_t s = 1; s < (1u << bg.size_a()); ++s) {
        std::vector<int> subset;
        for (int a = 0; a < bg.size_a(); ++a) {
            if (s >> a & 1) {
                subset.push_back(a);
            }
        }
        if (bg.neighbourhood(subset).size() < subset.size()) {
            return false;
        }
    }
    return true;
}

int matching_size(const std::vector<int>& m)
{
    return static_cast<int>(std::count_if(m.begin(), m.end(), [](int b) { return b >= 0; }));
}

// largest matching by trying every injective assignment (tiny graphs only)
int max_matching_brute(const BipartiteGraph& bg, int a, std::vector<bool>& used)
{
    if (a == bg.size_a()) {
        return 0;
    }
    int best = max_matching_brute(bg, a + 1, used);
    for (int b : bg.adj_a(a)) {
        if (!used[b]) {
            used[b] = true;
            best = std::max(best, 1 + max_matching_brute(bg, a + 1, used));
            used[b] = false;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("bipartite graph basics")
{
    BipartiteGraph bg(2, 3);
    bg.add_edge(0, 2);
    bg.add_edge(1, 2);
    CHECK_THROWS(bg.add_edge(0, 2));
    CHECK_THROWS(bg.add_edge(2, 0));
    CHECK(bg.edge_count() == 2);
    CHECK(bg.min_degree() == 0);
    CHECK(bg.neighbourhood({0, 1}) == std::vector<int>{2});
    CHECK(bg.transposed().adj_a(2) == std::vector<int>{0, 1});
    bg.remove_edge(0, 2);
    CHECK(!bg.has_edge(0, 2));
    CHECK(BipartiteGraph::complete(3, 4).edge_count() == 12);
}

TEST_CASE("maximum matching and Hall certificates agree with brute force")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const int na = 1 + trial % 6;
        const int nb = 1 + (trial / 6) % 6;
        const auto bg = random_bipartite(na, nb, 0.15 + 0.1 * (trial % 7), rng);
        std::vector<bool> used(nb, false);
        CHECK(matching_size(maximum_matching(bg)) == max_matching_brute(bg, 0, used));
        const auto cert = saturating_matching(bg);
        CHECK(verify_certificate(bg, cert));
        CHECK(cert.saturated == hall_by_subsets(bg));
        if (!cert.saturated) {
            CHECK(cert.neighbourhood.size() < cert.violator.size());
        }
    }
    auto bad = BipartiteGraph::complete(2, 2);
    auto cert = saturating_matching(bad);
    cert.matching = {0, 0};
    CHECK(!verify_certificate(bad, cert));
}

TEST_CASE("odd deficiency structure")
{
    const int m = 2;
    // A1 = {0,1,2} only see B1 = {0,1}; A2 = {3,4} see B2 = {2,3,4}
    BipartiteGraph bg(5, 5);
    for (int a : {0, 1, 2}) {
        for (int b : {0, 1}) {
            bg.add_edge(a, b);
        }
    }
    for (int a : {3, 4}) {
        for (int b : {2, 3, 4}) {
            bg.add_edge(a, b);
        }
    }
    const auto d = classify_deficiency_odd(bg, m);
    CHECK(!d.hall_holds);
    CHECK(d.structured());
    CHECK(d.blocks.a1 == std::vector<int>{0, 1, 2});
    CHECK(d.blocks.b1 == std::vector<int>{0, 1});
    CHECK(classify_deficiency_odd(BipartiteGraph::complete(5, 5), m).hall_holds);
    CHECK_THROWS_AS(classify_deficiency_odd(BipartiteGraph(5, 5), m), PreconditionError);
    CHECK_THROWS_AS(classify_deficiency_odd(BipartiteGraph::complete(4, 4), m), PreconditionError);
}

TEST_CASE("even deficiency cases")
{
    const int m = 3;
    SUBCASE("case 1")
    {
        BipartiteGraph bg = BipartiteGraph::complete(6, 6);
        for (int a : {0, 1, 2}) {
            for (int b : {2, 3, 4, 5}) {
                bg.remove_edge(a, b);
            }
        }
        const auto d = classify_deficiency_even(bg, m);
        CHECK(!d.hall_holds);
        CHECK(d.structured());
        CHECK(d.kind == 1);
    }
    SUBCASE("case 3")
    {
        // A1 = {0..3} inside B1 = {0,1,2} with degree 2 each; B2 = {3,4,5} complete to A2 = {4,5}
        BipartiteGraph bg(6, 6);
        const int pairs[4][2] = {{0, 1}, {1, 2}, {0, 2}, {0, 1}};
        for (int a = 0; a < 4; ++a) {
            bg.add_edge(a, pairs[a][0]);
            bg.add_edge(a, pairs[a][1]);
        }
        for (int a : {4, 5}) {
            for (int b = 0; b < 6; ++b) {
                bg.add_edge(a, b);
            }
        }
        const auto d = classify_deficiency_even(bg, m);
        CHECK(!d.hall_holds);
        CHECK(d.structured());
        CHECK(d.kind == 3);
    }
    CHECK_THROWS_AS(classify_deficiency_even(BipartiteGraph(4, 4), 2), PreconditionError);
}

TEST_CASE("robust structure: removing a sparse matching keeps a perfect matching")
{
    const int m = 3;
    // A1 = {0,1,2}, B1 = {0,1}, spokes 0-2, 1-3, 2-4, K1 = 5; A2 = {3,4,5} complete to B
    BipartiteGraph bg(6, 6);
    for (int a = 0; a < 3; ++a) {
        bg.add_edge(a, 0);
        bg.add_edge(a, 1);
        bg.add_edge(a, 2 + a);
    }
    for (int a = 3; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            bg.add_edge(a, b);
        }
    }
    const BlockPartition blocks{{0, 1, 2}, {3, 4, 5}, {0, 1}, {2, 3, 4, 5}};
    CHECK(check_robust_hall(bg, m, blocks, {{0, 2}}));
    CHECK(check_robust_hall(bg, m, blocks, {{0, 2}, {3, 3}, {4, 4}}));
    const auto found = find_robust_structures(bg, m);
    CHECK(std::any_of(found.begin(), found.end(), [](const RobustStructure& s) { return s.blocks.a1 == std::vector<int>{0, 1, 2}; }));
    // three spokes is more than m - 2
    CHECK_THROWS_AS(check_robust_hall(bg, m, blocks, {{0, 2}, {1, 3}, {2, 4}}), PreconditionError);
    // wrong block sizes
    CHECK_THROWS_AS(check_robust_hall(bg, m, BlockPartition{{0, 1}, {2, 3, 4, 5}, {0, 1}, {2, 3, 4, 5}}, {}),
                    PreconditionError);
}
