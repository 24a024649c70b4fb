#include "oracles.hpp"

#include "listpack/constructions.hpp"
#include "listpack/packing.hpp"

#include <doctest.h>

using namespace listpack;

TEST_CASE("find_packing agrees with a search over transversal sets")
{
    std::mt19937_64 rng(21);
    int yes = 0;
    int no = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 5;
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const int k = 2 + trial % 2;
        Cover c = random_full_cover(g, k, rng);
        if (trial % 4 == 0 && g.m() > 0) {
            // drop a pair to exercise partial matchings
            auto pairs = c.matching_pairs(0);
            pairs.pop_back();
            c.set_matching(0, pairs);
        }
        const bool expected = oracle::has_packing(c);
        const auto p = find_packing(c);
        CHECK(p.has_value() == expected);
        CHECK(find_packing(c, FindOptions{false}).has_value() == expected);
        if (p) {
            CHECK(!packing_violation(c, *p));
        }
        (expected ? yes : no)++;
    }
    CHECK(yes > 20);
    CHECK(no > 20);
}

TEST_CASE("packing violations are reported")
{
    const Cover c = identity_cover(path_graph(2), 2);
    Packing p = Packing::empty(2, 2);
    CHECK(packing_violation(c, p));
    CHECK(!packing_violation(c, p, true));
    p.set(0, {0, 1});
    p.set(1, {0, 1});  // colouring 0 uses slot 0 on both ends of a matched edge
    CHECK(packing_violation(c, p));
    p.set(1, {1, 0});
    CHECK(!packing_violation(c, p));
    p.set(1, {1, 1});
    CHECK(packing_violation(c, p));
}

TEST_CASE("count_packings matches enumeration of permutation tuples")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = trial % 2 ? cycle_graph(3) : path_graph(3);
        const Cover c = random_full_cover(g, 3, rng);
        std::uint64_t brute = 0;
        const auto perms = all_perms(3);
        for (const auto& a : perms) {
            for (const auto& b : perms) {
                for (const auto& d : perms) {
                    Packing p = Packing::empty(3, 3);
                    p.set(0, a);
                    p.set(1, b);
                    p.set(2, d);
                    brute += !packing_violation(c, p);
                }
            }
        }
        CHECK(count_packings(c) == brute);
    }
}

TEST_CASE("cycles: 3-fold covers pack iff the monodromy is even")
{
    for (int n = 3; n <= 7; ++n) {
        const Graph g = cycle_graph(n);
        const CoverEnumerator e(g, 3);
        const auto walk = fundamental_cycle(g, e.forest_edges(), e.free_edges()[0]);
        for (std::uint64_t i = 0; i < e.count(); ++i) {
            const Cover c = e.at(i);
            CHECK(find_packing(c).has_value() == (parity(monodromy(c, walk)) > 0));
        }
    }
}

TEST_CASE("greedy packing within twice the degeneracy")
{
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(3 + trial % 6, 0.4, rng);
        const int k = std::max(1, 2 * degeneracy(g).degeneracy);
        const Cover c = random_full_cover(g, k, rng);
        const Packing p = greedy_degenerate_packing(c);
        CHECK(!packing_violation(c, p));
    }
    CHECK_THROWS_AS(greedy_degenerate_packing(identity_cover(complete_graph(4), 5)), PreconditionError);
}

TEST_CASE("match_vertex honours forbidden slots")
{
    const Cover c = identity_cover(path_graph(2), 3);
    Packing p = Packing::empty(3, 2);
    p.set(0, {0, 1, 2});
    const auto m = match_vertex(c, p, 1);
    REQUIRE(m);
    for (int i = 0; i < 3; ++i) {
        CHECK((*m)[i] != i);
    }
    // index 0 may not use slot 1 or 2 either: only slot 0 remains, which it conflicts with
    CHECK(!match_vertex(c, p, 1, {{1, 2}, {}, {}}));
}

TEST_CASE("lift_packing places sub-packings")
{
    Packing sub = Packing::empty(2, 2);
    sub.set(0, {0, 1});
    sub.set(1, {1, 0});
    const Packing p = lift_packing(sub, {3, 1}, 4);
    CHECK(p.colours(3));
    CHECK(p.colours(1));
    CHECK(!p.colours(0));
    CHECK(p.at(3) == Perm{0, 1});
}

TEST_CASE("packing numbers of small graphs")
{
    CHECK(packing_number(complete_graph(1), PackingMode::Correspondence, 3).value == 1);
    CHECK(packing_number(path_graph(2), PackingMode::Correspondence, 4).value == 2);
    const auto c5 = packing_number(cycle_graph(5), PackingMode::Correspondence, 5);
    CHECK(c5.exact);
    CHECK(c5.value == 4);
    REQUIRE(c5.witness_cover);
    CHECK(!find_packing(*c5.witness_cover));
    const auto l4 = packing_number(cycle_graph(4), PackingMode::List, 4);
    CHECK(l4.exact);
    CHECK(l4.value == 3);
    REQUIRE(l4.witness_lists);
    CHECK(!find_packing(cover_from_lists(cycle_graph(4), *l4.witness_lists)));
    const auto k4 = packing_number(complete_graph(4), PackingMode::Correspondence, 3);
    CHECK(!k4.exact);
    CHECK(k4.value == 4);
}

TEST_CASE("sweep options do not change the verdict")
{
    SweepOptions a;
    a.shard_size = 7;
    a.jobs = 3;
    a.stop_at_first = false;
    const auto r1 = correspondence_sweep(cycle_graph(5), 3, a);
    const auto r2 = correspondence_sweep(cycle_graph(5), 3, {});
    CHECK(r1.failures.size() == 3);
    REQUIRE(!r2.failures.empty());
    CHECK(r1.failures.front() == r2.failures.front());
}

TEST_CASE("cubic extension analysis")
{
    const auto r = delta3_case_analysis();
    CHECK(r.non_extendable.size() == 112);
    CHECK(r.excluded.size() == 4);
    CHECK(r.excellent.size() + r.good.size() + r.bad.size() == 20);
    int total = 0;
    for (const auto& [u2, count] : r.triples_per_u2) {
        total += count;
    }
    CHECK(total == 112);
    // the excluded choices are among those with the most bad triples
    int most = 0;
    for (const auto& [u2, count] : r.triples_per_u2) {
        most = std::max(most, count);
    }
    for (const auto& p : r.excluded) {
        CHECK(r.triples_per_u2.at(p) == most);
    }
    CHECK(!r.admissible_exclusions.empty());
}

TEST_CASE("two-vertex extension on K5 and its preconditions")
{
    std::mt19937_64 rng(27);
    const Graph g = complete_graph(5);
    const std::vector<Vertex> keep{0, 1, 2};
    for (int trial = 0; trial < 100; ++trial) {
        const Cover c = random_full_cover(g, 6, rng);
        const auto sub = find_packing(induced_subcover(c, keep));
        REQUIRE(sub);
        const auto out = extend_packing_two_vertices(c, lift_packing(*sub, keep, 5), 3, 4);
        REQUIRE(out.packing);
        CHECK(!packing_violation(c, *out.packing));
    }
    const Cover wrong_fold = identity_cover(g, 5);
    CHECK_THROWS_AS(extend_packing_two_vertices(wrong_fold, Packing::empty(5, 5), 3, 4), PreconditionError);
}

TEST_CASE("witness verdicts")
{
    for (int n = 4; n <= 8; n += 2) {
        CHECK(!find_packing(even_cycle_bad_lists(n).as_cover()));
    }
    for (int n = 3; n <= 8; ++n) {
        CHECK(!find_packing(twisted_cycle_cover(n).as_cover()));
        CHECK(count_packings(twisted_cycle_cover(n).as_cover()) == 0);
    }
}
