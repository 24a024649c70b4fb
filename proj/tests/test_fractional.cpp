#include "oracles.hpp"

#include "listpack/constructions.hpp"
#include "listpack/fractional.hpp"

#include <doctest.h>

using namespace listpack;

namespace {

Cover random_cover(int trial, std::mt19937_64& rng)
{
    const int n = 2 + trial % 5;
    const Graph g = oracle::random_graph(n, 0.6, rng);
    Cover c = random_full_cover(g, 2 + trial % 2, rng);
    if (trial % 3 == 0 && g.m() > 0) {
        auto pairs = c.matching_pairs(0);
        pairs.pop_back();
        c.set_matching(0, pairs);
    }
    return c;
}

// Uniform-fold LP over the brute-force transversal list.
bool oracle_fractional(const Cover& c)
{
    const auto offset = slot_offsets(c);
    std::vector<SparseColumn> cols;
    for (const auto& t : oracle::transversals(c)) {
        SparseColumn col;
        for (int v = 0; v < c.base().n(); ++v) {
            col.entries.emplace_back(offset[v] + t[v], 1);
        }
        cols.push_back(col);
    }
    return solve_feasibility(cols, std::vector<Rational>(offset.back(), 1)).feasible;
}

}  // namespace

TEST_CASE("transversal enumeration and pricing agree with brute force")
{
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> w(-5, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const Cover c = random_cover(trial, rng);
        const auto all = oracle::transversals(c);
        auto mine = enumerate_transversals(c);
        std::sort(mine.begin(), mine.end());
        auto expected = all;
        std::sort(expected.begin(), expected.end());
        CHECK(mine == expected);
        CHECK(for_each_transversal(c, [](const Transversal&) { return true; }) == all.size());

        std::vector<std::vector<Rational>> weights(c.base().n());
        for (int v = 0; v < c.base().n(); ++v) {
            for (int s = 0; s < c.fold(v); ++s) {
                Rational q(w(rng), 1 + trial % 3);
                q.canonicalize();
                weights[v].push_back(q);
            }
        }
        const auto best = max_weight_transversal(c, weights);
        CHECK(best.has_value() == !all.empty());
        if (best) {
            CHECK(is_transversal(c, best->first));
            Rational top = 0;
            bool first = true;
            for (const auto& t : all) {
                Rational s = 0;
                for (int v = 0; v < c.base().n(); ++v) {
                    s += weights[v][t[v]];
                }
                if (first || s > top) {
                    top = s;
                }
                first = false;
            }
            CHECK(best->second == top);
        }

        const auto flex = check_flexibility(c);
        for (int v = 0; v < c.base().n(); ++v) {
            for (int s = 0; s < c.fold(v); ++s) {
                const bool used = std::any_of(all.begin(), all.end(), [&](const auto& t) { return t[v] == s; });
                CHECK(flex[v][s] == used);
                CHECK(transversal_through(c, v, s).has_value() == used);
            }
        }
    }
}

TEST_CASE("every solver configuration reaches the brute-force verdict with a valid certificate")
{
    std::mt19937_64 rng(53);
    std::vector<FractionalOptions> configs(6);
    configs[1].integral_shortcut = false;
    configs[1].flexibility_prefilter = false;
    configs[2].column_generation = true;
    configs[2].integral_shortcut = false;
    configs[3].column_generation = true;
    configs[3].float_guided = false;
    configs[3].flexibility_prefilter = false;
    configs[4].covering_bound = true;
    configs[4].flexibility_prefilter = false;
    configs[4].integral_shortcut = false;
    configs[5].covering_bound = true;
    configs[5].column_generation = true;
    int yes = 0;
    int no = 0;
    for (int trial = 0; trial < 240; ++trial) {
        const Cover c = random_cover(trial, rng);
        const bool expected = oracle_fractional(c);
        (expected ? yes : no)++;
        for (const auto& o : configs) {
            const auto r = fractional_packing(c, o);
            CHECK(r.feasible == expected);
            if (r.feasible) {
                CHECK(verify_fractional(c, r));
            } else {
                CHECK(verify_dual(c, r.dual));
            }
        }
    }
    CHECK(yes > 30);
    CHECK(no > 30);
}

TEST_CASE("fractional certificates are checked, not trusted")
{
    const Cover c5 = identity_cover(cycle_graph(5), 3);
    auto r = fractional_packing(c5, FractionalOptions{.integral_shortcut = false});
    REQUIRE(r.feasible);
    CHECK(verify_fractional(c5, r));
    r.support.front().weight += Rational(1, 7);
    CHECK(!verify_fractional(c5, r));

    const auto bad = twisted_cycle_cover(5).as_cover();
    const auto d = fractional_packing(bad);
    if (!d.feasible) {
        CHECK(verify_dual(bad, d.dual));
        auto flipped = d.dual;
        for (auto& q : flipped) {
            q = -q;
        }
        CHECK(!verify_dual(bad, flipped));
    }
    CHECK(!verify_dual(c5, std::vector<Rational>(15, 1)));
}

TEST_CASE("covering bound certifies the necklace and the d=2 degeneracy gap")
{
    for (const auto& w : {necklace_witness(), degeneracy_gap(2)}) {
        const Cover c = w.as_cover();
        FractionalOptions o;
        o.covering_bound = true;
        o.column_generation = true;
        const auto r = fractional_packing(c, o);
        CHECK(!r.feasible);
        CHECK(verify_dual(c, r.dual));
    }
}

TEST_CASE("layer-counting dual of the degeneracy gap")
{
    for (int d : {2, 3}) {
        const Witness w = degeneracy_gap(d);
        const Cover c = w.as_cover();
        const auto y = degeneracy_gap_dual(d);
        CHECK(y.size() == static_cast<size_t>(slot_offsets(c).back()));
        Rational sum = 0;
        for (const auto& q : y) {
            sum += q;
        }
        CHECK(sum == d - 1);
        CHECK(verify_dual(c, y));
    }
}

namespace {

// All independent sets of the list cover, as colour (or 0) per vertex.
std::vector<std::vector<int>> independent_sets(const Graph& g, const ListAssignment& l)
{
    std::vector<std::vector<int>> out;
    std::vector<int> pick(g.n(), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n()) {
            out.push_back(pick);
            return;
        }
        pick[v] = 0;
        rec(v + 1);
        for (int c : l.list(v)) {
            bool ok = true;
            for (const auto& nb : g.neighbours(v)) {
                ok = ok && !(nb.vertex < v && pick[nb.vertex] == c);
            }
            if (ok) {
                pick[v] = c;
                rec(v + 1);
            }
        }
        pick[v] = 0;
    };
    rec(0);
    return out;
}

bool oracle_general(const Graph& g, const ListAssignment& l)
{
    std::vector<int> offset(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) {
        offset[v + 1] = offset[v] + static_cast<int>(l.list(v).size());
    }
    const int total = offset[g.n()];
    std::vector<SparseColumn> cols;
    for (const auto& s : independent_sets(g, l)) {
        SparseColumn col;
        for (int v = 0; v < g.n(); ++v) {
            if (s[v]) {
                const auto& lv = l.list(v);
                col.entries.emplace_back(offset[v] + int(std::find(lv.begin(), lv.end(), s[v]) - lv.begin()), 1);
            }
        }
        col.entries.emplace_back(total, 1);
        cols.push_back(col);
    }
    for (int r = 0; r < total; ++r) {
        cols.push_back(SparseColumn{{{r, -1}}});
    }
    std::vector<Rational> rhs(total + 1, 1);
    for (int v = 0; v < g.n(); ++v) {
        for (int i = offset[v]; i < offset[v + 1]; ++i) {
            rhs[i] = Rational(1, offset[v + 1] - offset[v]);
        }
    }
    return solve_feasibility(cols, rhs).feasible;
}

}  // namespace

TEST_CASE("general LP over mixed-size lists")
{
    std::mt19937_64 rng(57);
    int yes = 0;
    int no = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + trial % 4;
        const Graph g = oracle::random_graph(n, 0.7, rng);
        std::vector<std::vector<int>> raw(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> palette{1, 2, 3, 4};
            std::shuffle(palette.begin(), palette.end(), rng);
            const int size = std::max(1, std::min(4, g.degree(v) + (trial % 2 ? 0 : 1)));
            raw[v].assign(palette.begin(), palette.begin() + size);
        }
        const ListAssignment l(raw);
        const bool expected = oracle_general(g, l);
        (expected ? yes : no)++;
        const auto r = general_fractional_packing(g, l);
        CHECK(r.feasible == expected);
        if (r.feasible) {
            Rational mass = 0;
            for (const auto& [pc, x] : r.support) {
                CHECK(sgn(x) > 0);
                mass += x;
                for (const auto& e : g.edges()) {
                    CHECK(!(pc[e.u] && pc[e.u] == pc[e.v]));
                }
            }
            CHECK(mass <= 1);
            for (int v = 0; v < n; ++v) {
                for (const auto& m : r.marginals[v]) {
                    CHECK(m >= Rational(1, l.list(v).size()));
                }
            }
        } else {
            CHECK(verify_general_dual(g, l, r.dual));
            auto junk = r.dual;
            junk.back() = 1;
            CHECK(!verify_general_dual(g, l, junk));
        }
    }
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("degree-sized list witnesses have no distribution")
{
    for (const auto& w : degree_list_witnesses()) {
        const auto r = general_fractional_packing(w.graph, *w.lists);
        CHECK(!r.feasible);
        CHECK(verify_general_dual(w.graph, *w.lists, r.dual));
    }
}
