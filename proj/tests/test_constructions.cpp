#include "oracles.hpp"

#include "listpack/constructions.hpp"
#include "listpack/fractional.hpp"
#include "listpack/packing.hpp"

#include <doctest.h>

using namespace listpack;

TEST_CASE("fixed witnesses reach their recorded verdicts")
{
    for (const auto& w : all_witnesses()) {
        CAPTURE(w.name);
        if (w.degree_demand) {
            const auto r = general_fractional_packing(w.graph, *w.lists);
            CHECK(r.feasible == (w.expected == Verdict::FractionalExists));
            continue;
        }
        const Cover c = w.as_cover();
        CHECK(validate(c).empty());
        switch (w.expected) {
        case Verdict::NoPacking:
            CHECK(!find_packing(c));
            if (c.base().n() <= 8) {
                CHECK(!oracle::has_packing(c));
            }
            break;
        case Verdict::PackingExists:
            CHECK(find_packing(c));
            break;
        case Verdict::NoFractionalPacking: {
            const auto r = fractional_packing(c, FractionalOptions{.column_generation = true});
            CHECK(!r.feasible);
            CHECK(verify_dual(c, r.dual));
            break;
        }
        case Verdict::FractionalExists: {
            const auto r = fractional_packing(c);
            CHECK(r.feasible);
            CHECK(verify_fractional(c, r));
            break;
        }
        }
    }
}

TEST_CASE("cycle witnesses")
{
    for (int n : {4, 6, 8}) {
        const auto w = even_cycle_bad_lists(n);
        REQUIRE(w.lists);
        CHECK(w.lists->uniform(2));
        CHECK(w.lists->list(n - 2) == std::vector<int>{1, 3});
        CHECK(w.lists->list(n - 1) == std::vector<int>{2, 3});
        CHECK(count_packings(w.as_cover()) == 0);
    }
    for (int n = 3; n <= 8; ++n) {
        const auto w = twisted_cycle_cover(n);
        REQUIRE(w.cover);
        CHECK(!is_list_cover(*w.cover));
        CHECK(w.cover->mate(n - 1, 1, w.graph.edge_id(n - 1, 0)) == 2);
    }
    CHECK_THROWS(even_cycle_bad_lists(5));
}

TEST_CASE("degeneracy gap shape")
{
    for (int d : {2, 3}) {
        const auto w = degeneracy_gap(d);
        const int layers = degeneracy_gap_layers(d);
        CHECK(layers == 3 * (d - 1) * (d - 1) + 1);
        CHECK(w.graph.n() == layers * (d + 1) + 1);
        CHECK(degeneracy(w.graph).degeneracy == d);
        REQUIRE(w.lists);
        CHECK(w.lists->uniform(d + 1));
        const int apex = w.graph.n() - 1;
        CHECK(w.graph.degree(apex) == d);
        for (int i = 0; i <= d; ++i) {
            for (int j = i + 1; j <= d; ++j) {
                CHECK(w.graph.has_edge(i, j));
            }
        }
    }
    CHECK_THROWS(degeneracy_gap(1));
}

TEST_CASE("latin square and necklace witnesses")
{
    const auto n = necklace_witness();
    CHECK(n.graph.n() == 8);
    CHECK(n.lists->list(0) == std::vector<int>{1, 3, 4});
    CHECK(n.lists->list(7) == std::vector<int>{1, 2, 4});
    // every single (vertex, colour) pair extends to a colouring
    const auto flex = check_flexibility(n.as_cover());
    CHECK(all_flexible(flex));

    for (int k : {2, 3}) {
        const auto w = latin_square_witness(k);
        CHECK(w.graph.n() == k * k);
        CHECK(w.lists->uniform(k));
        CHECK(!find_packing(w.as_cover()));
    }
}

TEST_CASE("search for unpackable lists")
{
    const Graph c4 = cycle_graph(4);
    const auto none = search_unpackable_lists(c4, 2, 3, 0);
    CHECK(none.status == ListSearchResult::Status::Budget);
    CHECK(none.examined == 0);

    const auto found = search_unpackable_lists(c4, 2, 3, 1'000'000);
    REQUIRE(found.status == ListSearchResult::Status::Found);
    REQUIRE(found.witness);
    CHECK(!oracle::has_packing(cover_from_lists(c4, *found.witness)));

    const auto small = search_unpackable_lists(c4, 2, 3, found.examined - 1);
    CHECK(small.status == ListSearchResult::Status::Budget);
    CHECK(small.examined == found.examined - 1);

    // odd cycles with 3-lists always pack
    const auto c5 = search_unpackable_lists(cycle_graph(5), 3, 4, 1'000'000);
    CHECK(c5.status == ListSearchResult::Status::None);
    CHECK(c5.examined > 0);
}
