#include "oracles.hpp"

#include "listpack/json_io.hpp"

#include <doctest.h>

using namespace listpack;

TEST_CASE("graph, list and cover documents round-trip")
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 6, 0.5, rng);
        const Json gj = to_json(g);
        CHECK(gj["schema"] == kGraphSchema);
        CHECK(graph_from_json(Json::parse(gj.dump())) == g);

        Cover c = random_full_cover(g, 3, rng);
        if (g.m() > 0) {
            auto pairs = c.matching_pairs(0);
            pairs.pop_back();
            c.set_matching(0, pairs);
        }
        CHECK(cover_from_json(Json::parse(to_json(c).dump())) == c);
        CHECK(instance_from_json(to_json(c)).cover == c);
    }
    const Graph p = path_graph(3);
    const ListAssignment l({{1, 2}, {2, 5}, {1, 5, 7}});
    const Json lj = to_json(p, l);
    CHECK(lists_from_json(lj, p) == l);
    const auto inst = instance_from_json(lj);
    REQUIRE(inst.lists);
    CHECK(*inst.lists == l);
    CHECK(inst.cover == cover_from_lists(p, l));
    CHECK(to_json(Cover(p, {2, 2, 3}))["fold"] == Json::array({2, 2, 3}));
}

TEST_CASE("slots are written from 1")
{
    Cover c(Graph(2, {{0, 1}}), {2, 2});
    c.set_matching(0, std::vector<std::pair<int, int>>{{0, 1}});
    const Json j = to_json(c);
    CHECK(j["matchings"]["0-1"] == Json::array({Json::array({1, 2})}));

    Packing p = Packing::empty(2, 2);
    p.set(0, Perm{0, 1});
    p.set(1, Perm{1, 0});
    const Json pj = to_json(p);
    CHECK(pj["colourings"][0] == Json::array({1, 2}));
    CHECK(packing_from_json(pj) == p);

    Packing partial = Packing::empty(2, 2);
    partial.set(1, Perm{0, 1});
    CHECK(to_json(partial)["colourings"][0][0].is_null());
    CHECK(packing_from_json(to_json(partial)) == partial);
}

TEST_CASE("malformed documents are rejected")
{
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"schema":"listpack.cover/1","n":2,"edges":[]})")), SchemaError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,0]]})")), SchemaError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,1],[1,0]]})")), SchemaError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,2]]})")), SchemaError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":"two","edges":[]})")), SchemaError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"([1,2])")), SchemaError);
    CHECK(graph_from_json(Json::parse(R"({"n":3,"edges":[[0,1],[1,2]]})")) == path_graph(3));

    const Json g2 = to_json(Graph(2, {{0, 1}}));
    CHECK_THROWS_AS(lists_from_json(Json{{"schema", kListsSchema}, {"graph", g2}, {"lists", {{1}}}}, Graph(2, {{0, 1}})),
                    SchemaError);
    CHECK_THROWS_AS(
        lists_from_json(Json{{"schema", kListsSchema}, {"graph", g2}, {"lists", {{1, 1}, {2}}}}, Graph(2, {{0, 1}})),
        SchemaError);
    CHECK_THROWS_AS(instance_from_json(Json{{"schema", kGraphSchema}}), SchemaError);
    CHECK_THROWS_AS(instance_from_json(Json{{"n", 1}}), SchemaError);
    CHECK_THROWS_AS(packing_from_json(Json{{"schema", kPackingSchema}, {"k", 2}, {"colourings", {{1, 2}}}}), SchemaError);
}

TEST_CASE("cover documents violating the axioms name them")
{
    auto doc = [](const Json& matchings) {
        return Json{{"schema", kCoverSchema}, {"graph", to_json(path_graph(3))}, {"fold", 2}, {"matchings", matchings}};
    };
    // slot 1 of vertex 0 matched twice on one edge
    const Json twice = doc(Json{{"0-1", {{1, 1}, {1, 2}}}});
    try {
        cover_from_json(twice);
        FAIL("accepted a non-injective matching");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("axiom") != std::string::npos);
    }
    // slot 0 does not exist in the 1-based format
    CHECK_THROWS_AS(cover_from_json(doc(Json{{"0-1", {{0, 1}}}})), SchemaError);
    CHECK_THROWS_AS(cover_from_json(doc(Json{{"0-1", {{1, 3}}}})), SchemaError);
    // matching on a non-edge
    CHECK_THROWS_AS(cover_from_json(doc(Json{{"0-2", {{1, 1}}}})), SchemaError);
    CHECK_THROWS_AS(cover_from_json(doc(Json{{"zero-one", {{1, 1}}}})), SchemaError);
    CHECK_NOTHROW(cover_from_json(doc(Json{{"1-0", {{1, 2}}}})));
    const Cover reversed = cover_from_json(doc(Json{{"1-0", {{1, 2}}}}));
    CHECK(reversed.mate(0, 1, 0) == 0);
}

TEST_CASE("certificates serialise rationals as strings")
{
    const Cover c = identity_cover(cycle_graph(5), 3);
    const auto r = fractional_packing(c, FractionalOptions{.integral_shortcut = false});
    const Json j = to_json(c, r);
    CHECK(j["schema"] == kFractionalSchema);
    CHECK(j["feasible"] == true);
    Rational sum = 0;
    for (const auto& s : j["support"]) {
        sum += rational_from_string(s["weight"].get<std::string>());
        CHECK(s["transversal"].size() == 5);
    }
    CHECK(sum == 3);
    CHECK(rational_from_string("6/4") == Rational(3, 2));
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}
