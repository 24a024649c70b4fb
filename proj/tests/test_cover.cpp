#include "oracles.hpp"

#include "listpack/cover.hpp"
#include "listpack/packing.hpp"

#include <doctest.h>

#include <set>

using namespace listpack;

namespace {

bool trivial_monodromy(const Cover& c)
{
    const auto forest = spanning_forest(c.base());
    for (int e = 0; e < c.base().m(); ++e) {
        if (std::find(forest.begin(), forest.end(), e) == forest.end() &&
            !is_identity(monodromy(c, fundamental_cycle(c.base(), forest, e)))) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("cover matchings and validation")
{
    Cover c(path_graph(2), {2, 2});
    c.set_matching(0, std::vector<int>{1, 0});
    CHECK(c.mate(0, 0, 0) == 1);
    CHECK(c.mate(1, 1, 0) == 0);
    CHECK(c.is_full(2));
    CHECK_THROWS(c.set_matching(0, std::vector<int>{0, 0}));
    CHECK_THROWS(c.set_matching(0, std::vector<int>{0, 2}));
    c.set_matching(0, std::vector<std::pair<int, int>>{{0, 0}});
    CHECK(!c.is_full());
    CHECK(validate(c).empty());

    RawCover raw;
    raw.base = path_graph(3);
    raw.fold = {2, 2, 2};
    raw.matchings[{0, 2}] = {{0, 0}};          // non-edge
    raw.matchings[{0, 1}] = {{0, 0}, {1, 0}};  // not injective
    const auto v = validate(raw);
    std::set<int> axioms;
    for (const auto& x : v) {
        axioms.insert(x.axiom);
    }
    CHECK(axioms.count(2));
    CHECK(axioms.count(3));
    CHECK_THROWS_AS(cover_from_raw(raw), std::invalid_argument);
    CHECK(cover_from_raw(to_raw(identity_cover(cycle_graph(4), 3))) == identity_cover(cycle_graph(4), 3));
}

TEST_CASE("list covers: equal colours are matched")
{
    const Graph g = path_graph(3);
    const ListAssignment l({{1, 2}, {2, 3}, {1, 3}});
    const Cover c = cover_from_lists(g, l);
    CHECK(c.mate(0, 1, 0) == 0);   // colour 2
    CHECK(c.mate(0, 0, 0) == -1);  // colour 1 absent at vertex 1
    CHECK(c.mate(1, 1, 1) == 1);   // colour 3
    const auto back = is_list_cover(c);
    REQUIRE(back);
    // names in order of first appearance: vertex 2 gets a fresh colour before the shared one
    CHECK(back->lists() == std::vector<std::vector<int>>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(oracle::transversals(cover_from_lists(g, *back)).size() == oracle::transversals(c).size());
}

TEST_CASE("is_list_cover holds exactly when the monodromy is trivial")
{
    std::mt19937_64 rng(3);
    int lists = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 4;
        Graph g = oracle::random_graph(n, 0.6, rng);
        if (!is_connected(g)) {
            continue;
        }
        const int k = 2 + trial % 2;
        const Cover c = trial % 3 == 0 ? random_untwisted_cover(g, k, spanning_forest(g), rng)
                                       : random_full_cover(g, k, rng);
        const bool list = is_list_cover(c).has_value();
        lists += list;
        CHECK(list == trivial_monodromy(c));
        if (list) {
            CHECK(cover_from_lists(g, *is_list_cover(c)).is_full(k));
        }
    }
    CHECK(lists > 0);
}

TEST_CASE("untwisting relabels slots without changing packability")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = trial % 2 ? cycle_graph(4) : complete_graph(4);
        const Cover c = random_full_cover(g, 3, rng);
        const auto forest = spanning_forest(g);
        const auto u = untwist(c, forest);
        for (int e : forest) {
            const auto& ed = g.edge(e);
            for (int s = 0; s < 3; ++s) {
                CHECK(u.cover.mate(ed.u, s, e) == s);
            }
        }
        for (int e = 0; e < g.m(); ++e) {
            const auto& ed = g.edge(e);
            for (int s = 0; s < 3; ++s) {
                CHECK(u.cover.mate(ed.u, u.relabel[ed.u][s], e) == u.relabel[ed.v][c.mate(ed.u, s, e)]);
            }
        }
        CHECK(find_packing(c).has_value() == find_packing(u.cover).has_value());
        CHECK(oracle::transversals(c).size() == oracle::transversals(u.cover).size());
    }
}

TEST_CASE("cover enumerator")
{
    const CoverEnumerator e(cycle_graph(4), 3);
    CHECK(e.count() == 6);
    CHECK(e.forest_edges().size() == 3);
    std::set<std::vector<std::pair<int, int>>> seen;
    for (std::uint64_t i = 0; i < e.count(); ++i) {
        const Cover c = e.at(i);
        CHECK(c.is_full(3));
        seen.insert(c.matching_pairs(e.free_edges()[0]));
        Cover d = e.at(0);
        e.assign(i, d);
        CHECK(d == c);
    }
    CHECK(seen.size() == 6);
    CHECK(CoverEnumerator(complete_graph(4), 4).count() == 13824);
    CHECK(CoverEnumerator(petersen_graph(), 3).count() == 46656);
}

TEST_CASE("cover graph expansion and DIMACS")
{
    const Cover c = identity_cover(path_graph(2), 2);
    const auto h = expand(c);
    CHECK(h.graph.n() == 4);
    CHECK(h.graph.m() == 2 + 2);  // two fibre edges plus two matching edges
    CHECK(h.slot_of(h.id(1, 1)) == std::pair{1, 1});
    const std::string text = to_dimacs(h, "test");
    CHECK(text.find("p edge 4 4") != std::string::npos);
    CHECK(text.find("c test") == 0);
    int edges = 0;
    for (size_t pos = 0; (pos = text.find("\ne ", pos)) != std::string::npos; ++pos) {
        ++edges;
    }
    CHECK(edges == 4);
}

TEST_CASE("induced subcover")
{
    std::mt19937_64 rng(9);
    const Cover c = random_full_cover(complete_graph(4), 3, rng);
    const Cover s = induced_subcover(c, {2, 0});
    CHECK(s.base().n() == 2);
    const int e = c.base().edge_id(0, 2);
    for (int x = 0; x < 3; ++x) {
        CHECK(s.mate(1, x, 0) == c.mate(0, x, e));
    }
}

TEST_CASE("list configuration enumeration")
{
    // on K2 with k = 2 only the identical lists are maximal
    std::vector<ListAssignment> seen;
    for_each_maximal_list_assignment(path_graph(2), 2, [&](const ListAssignment& l) {
        seen.push_back(l);
        return true;
    });
    REQUIRE(seen.size() == 1);
    CHECK(seen[0].list(0) == seen[0].list(1));
    std::uint64_t canonical = for_each_canonical_list_assignment(path_graph(2), 2, 3, [](const ListAssignment&) { return true; });
    // first list {1,2}; second any 2-subset of {1,2,3}
    CHECK(canonical == 3);
}
