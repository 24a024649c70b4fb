#include "listpack/repro.hpp"

#include "listpack/constructions.hpp"
#include "listpack/fractional.hpp"
#include "listpack/hall.hpp"
#include "listpack/packing.hpp"
#include "listpack/permutation.hpp"
#include "listpack/samplers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace listpack {

CheckContext::CheckContext(const ReproOptions& options, std::string name)
    : options_(options), seed_(options.seed ^ std::hash<std::string>{}(name))
{
    result_.name = std::move(name);
    result_.passed = true;
}

void CheckContext::expect(bool condition, const std::string& fact)
{
    result_.observed.push_back((condition ? "ok: " : "FAILED: ") + fact);
    result_.passed = result_.passed && condition;
}

void CheckContext::save(const std::string& file, const Json& document)
{
    if (options_.out_dir.empty()) {
        return;
    }
    const auto dir = options_.out_dir / result_.name;
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / file);
    out << document.dump(2) << '\n';
    result_.certificates.push_back(result_.name + "/" + file);
}

CheckResult CheckContext::finish(double seconds)
{
    result_.seconds = seconds;
    return result_;
}

namespace {

template <typename... Parts>
std::string cat(const Parts&... parts)
{
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
}

Json sweep_log(const std::string& what, const SweepResult& r)
{
    return Json{{"schema", "listpack.sweep/1"},
                {"sweep", what},
                {"total", r.total},
                {"checked", r.checked},
                {"failures", r.failures},
                {"resumed_shards", r.resumed_shards}};
}

Json fractional_certificate(const Cover& cover, const FractionalResult& r)
{
    return Json{{"cover", to_json(cover)}, {"certificate", to_json(cover, r)}};
}

// ---------------------------------------------------------------- cycles

void check_cycles(CheckContext& ctx)
{
    for (int n = 3; n <= 8; ++n) {
        const Graph g = cycle_graph(n);
        if (n % 2 == 0) {
            const auto w = even_cycle_bad_lists(n);
            ctx.expect(!find_packing(w.as_cover()), cat("C", n, ": the even-cycle 2-lists have no packing"));
            ctx.save(cat("even-cycle-", n, ".json"), to_json(w));
        }
        const auto t = twisted_cycle_cover(n);
        ctx.expect(!find_packing(t.as_cover()), cat("C", n, ": the twisted 3-fold cover has no packing"));
        ctx.save(cat("twisted-cycle-", n, ".json"), to_json(t));

        const CoverEnumerator e3(g, 3);
        const auto walk = fundamental_cycle(g, e3.forest_edges(), e3.free_edges().front());
        std::uint64_t even = 0;
        std::uint64_t even_packed = 0;
        std::uint64_t odd_packed = 0;
        for (std::uint64_t i = 0; i < e3.count(); ++i) {
            const Cover c = e3.at(i);
            const bool packs = find_packing(c).has_value();
            if (parity(monodromy(c, walk)) > 0) {
                ++even;
                even_packed += packs;
            } else {
                odd_packed += packs;
            }
        }
        ctx.expect(even == 3 && even_packed == even && odd_packed == 0,
                   cat("C", n, ": ", even_packed, "/", even, " even-monodromy 3-fold covers pack, ", odd_packed, "/",
                       e3.count() - even, " odd ones do"));

        const CoverEnumerator e4(g, 4);
        std::uint64_t packed = 0;
        for (std::uint64_t i = 0; i < e4.count(); ++i) {
            packed += find_packing(e4.at(i)).has_value();
        }
        ctx.expect(packed == e4.count() && e4.count() == 24, cat("C", n, ": ", packed, "/", e4.count(), " 4-fold covers pack"));
    }
}

// ---------------------------------------------------------------- K4

void check_k4(CheckContext& ctx)
{
    const Graph g = complete_graph(4);
    SweepOptions sweep = ctx.options().sweep;
    sweep.stop_at_first = false;
    const auto r4 = correspondence_sweep(g, 4, sweep);
    ctx.expect(r4.total == 13824 && r4.checked == r4.total && r4.holds(),
               cat(r4.checked - r4.failures.size(), "/", r4.total, " untwisted 4-fold covers of K4 pack"));
    ctx.save("sweep-4.json", sweep_log("K4 4-fold", r4));

    sweep.stop_at_first = true;
    const auto r3 = correspondence_sweep(g, 3, sweep);
    ctx.expect(r3.total == 216 && !r3.holds(), cat("some untwisted 3-fold cover of K4 (of ", r3.total, ") has no packing"));
    if (!r3.holds()) {
        const Cover bad = CoverEnumerator(g, 3).at(r3.failures.front());
        ctx.expect(!find_packing(bad), cat("3-fold cover #", r3.failures.front(), " re-checked: no packing"));
        ctx.save("no-packing-3.json", to_json(bad));
    }
}

// ---------------------------------------------------------------- delta = 3

std::vector<Perm> perms_of(std::initializer_list<const char*> texts)
{
    std::vector<Perm> out;
    for (const char* t : texts) {
        out.push_back(perm_from_string(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> sorted(std::vector<Perm> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::string render(const std::vector<Perm>& perms)
{
    std::string s = "{";
    for (size_t i = 0; i < perms.size(); ++i) {
        s += (i ? "," : "") + perm_to_string(perms[i]);
    }
    return s + "}";
}

void check_delta3(CheckContext& ctx)
{
    const auto r = delta3_case_analysis();
    ctx.expect(r.non_extendable.size() == 112, cat(r.non_extendable.size(), " non-extendable triples"));
    const auto excluded = perms_of({"(2,3,4,1)", "(2,4,1,3)", "(3,1,4,2)", "(4,1,2,3)"});
    ctx.expect(sorted(r.excluded) == excluded, "excluded u2 choices " + render(sorted(r.excluded)));
    ctx.expect(r.excellent.size() == 10 && r.good.size() == 8 && r.bad.size() == 2,
               cat("remaining split ", r.excellent.size(), "/", r.good.size(), "/", r.bad.size(), " excellent/good/bad"));
    ctx.expect(sorted(r.bad) == perms_of({"(3,4,2,1)", "(4,3,1,2)"}), "bad u2 choices " + render(sorted(r.bad)));
    ctx.expect(sorted(r.avoided) == perms_of({"(1,3,2,4)", "(3,2,1,4)", "(4,2,3,1)", "(1,4,3,2)"}),
               "avoided set " + render(sorted(r.avoided)));
    ctx.expect(r.exclusion_always_possible && r.two_choices_always && r.avoidance_always_possible &&
                   r.avoided_bad_cases_extend,
               "every packed neighbour pair leaves an admissible choice, and avoided bad cases extend");

    Json report{{"non_extendable", r.non_extendable.size()}};
    auto strings = [](const std::vector<Perm>& v) {
        std::vector<std::string> out;
        for (const auto& p : v) {
            out.push_back(perm_to_string(p));
        }
        return out;
    };
    report["excluded"] = strings(r.excluded);
    report["excellent"] = strings(r.excellent);
    report["good"] = strings(r.good);
    report["bad"] = strings(r.bad);
    report["avoided"] = strings(r.avoided);
    for (const auto& t : r.non_extendable) {
        report["triples"].push_back(strings({t[0], t[1], t[2]}));
    }
    ctx.save("report.json", report);
}

// ---------------------------------------------------------------- K5

void check_k5(CheckContext& ctx)
{
    std::mt19937_64 rng(ctx.seed());
    const Graph g = complete_graph(5);
    const auto forest = spanning_forest(g);
    const std::vector<Vertex> keep{0, 1, 2};
    int extended = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const Cover cover = random_untwisted_cover(g, 6, forest, rng);
        const auto sub = find_packing(induced_subcover(cover, keep));
        if (!sub) {
            ctx.save(cat("no-triangle-packing-", t, ".json"), to_json(cover));
            continue;
        }
        const auto out = extend_packing_two_vertices(cover, lift_packing(*sub, keep, 5), 3, 4);
        if (out.packing && !packing_violation(cover, *out.packing)) {
            ++extended;
        } else {
            ctx.save(cat("extension-failure-", t, ".json"), Json{{"cover", to_json(cover)}, {"failure", out.failure}});
        }
    }
    ctx.expect(extended == trials, cat(extended, "/", trials, " random untwisted 6-fold covers of K5 extended from K3"));

    int packed = 0;
    const int direct = 10000;
    for (int t = 0; t < direct; ++t) {
        const Cover cover = random_full_cover(g, 6, rng);
        const auto p = find_packing(cover);
        if (p && !packing_violation(cover, *p)) {
            ++packed;
        } else {
            ctx.save(cat("no-packing-", t, ".json"), to_json(cover));
        }
    }
    ctx.expect(packed == direct, cat(packed, "/", direct, " random 6-fold covers of K5 pack"));
}

// ---------------------------------------------------------------- fractional witnesses

void check_fractional(CheckContext& ctx)
{
    const auto& sweep = ctx.options().sweep;
    const Graph fan = fan7_graph();
    const auto number = fractional_packing_number(fan, FractionalMode::Correspondence, 3, sweep);
    ctx.expect(number.exact && number.value == 3, cat("fan F7: fractional correspondence packing number ", number.value));
    if (number.witness_cover && number.witness_certificate) {
        const bool ok = verify_dual(*number.witness_cover, number.witness_certificate->dual);
        ctx.expect(ok && number.witness_cover->uniform_fold() == 2, "F7: a 2-fold cover is infeasible, dual verified");
        ctx.save("fan7-infeasible-2.json", fractional_certificate(*number.witness_cover, *number.witness_certificate));
    } else {
        ctx.expect(false, "F7: an infeasible 2-fold cover is reported");
    }
    const auto f3 = fractional_sweep(fan, 3, sweep);
    ctx.expect(f3.total == 7776 && f3.checked == f3.total && f3.holds(),
               cat("F7: ", f3.checked - f3.failures.size(), "/", f3.total, " untwisted 3-fold covers feasible"));
    ctx.save("fan7-sweep-3.json", sweep_log("F7 fractional 3-fold", f3));

    const Graph k33 = complete_bipartite_graph(3, 3);
    const auto b3 = fractional_sweep(k33, 3, sweep);
    ctx.expect(!b3.holds(), "K3,3: some untwisted 3-fold cover is fractionally infeasible");
    if (!b3.holds()) {
        const Cover bad = CoverEnumerator(k33, 3).at(b3.failures.front());
        const auto r = fractional_packing(bad);
        ctx.expect(!r.feasible && verify_dual(bad, r.dual), cat("K3,3 cover #", b3.failures.front(), ": dual verified"));
        ctx.save("k33-infeasible-3.json", fractional_certificate(bad, r));
    }
    const CoverEnumerator e(k33, 3);
    std::uint64_t with_transversal = 0;
    for (std::uint64_t i = 0; i < e.count(); ++i) {
        with_transversal += for_each_transversal(e.at(i), [](const Transversal&) { return false; }) > 0;
    }
    ctx.expect(with_transversal == e.count(),
               cat("K3,3: ", with_transversal, "/", e.count(), " untwisted 3-fold covers have a transversal"));

    for (int n = 3; n <= 6; ++n) {
        const auto c = fractional_packing_number(cycle_graph(n), FractionalMode::Correspondence, 3, sweep);
        ctx.expect(c.exact && c.value == 3, cat("C", n, ": fractional correspondence packing number ", c.value));
    }
}

// ---------------------------------------------------------------- Petersen

void check_petersen(CheckContext& ctx)
{
    SweepOptions sweep = ctx.options().sweep;
    sweep.stop_at_first = true;
    const Graph g = petersen_graph();
    const auto r = correspondence_sweep(g, 3, sweep);
    ctx.expect(!r.holds(), cat("Petersen: an untwisted 3-fold cover without a packing (", r.checked, " of ", r.total,
                               " examined)"));
    if (!r.holds()) {
        const Cover bad = CoverEnumerator(g, 3).at(r.failures.front());
        ctx.expect(!find_packing(bad), cat("cover #", r.failures.front(), " re-checked: no packing"));
        ctx.save("no-packing-3.json", to_json(bad));
    }
}

// ---------------------------------------------------------------- necklace

void check_necklace(CheckContext& ctx)
{
    const auto w = necklace_witness();
    const Cover c = w.as_cover();
    ctx.expect(all_flexible(check_flexibility(c)), "every (vertex, colour) lies on some colouring");
    FractionalOptions plain;
    plain.covering_bound = false;
    const auto r = fractional_packing(c, plain);
    ctx.expect(!r.feasible && verify_dual(c, r.dual), "no fractional packing (" + r.method + "), dual verified");
    ctx.save("infeasible.json", Json{{"witness", to_json(w)}, {"certificate", to_json(c, r)}});
}

// ---------------------------------------------------------------- degeneracy gap

Graph reference_gap_graph()
{
    // v_i^m -> 3(m-1) + (i-1), w -> 12
    auto v = [](int i, int m) { return 3 * (m - 1) + (i - 1); };
    std::vector<std::pair<int, int>> e{{v(1, 1), v(2, 1)}, {v(2, 1), v(3, 1)}, {v(3, 1), v(1, 1)},
                                       {v(1, 1), 12},      {12, v(1, 4)}};
    // (a)--(2_3)--(b)--(2_1)--(c)--(2_2)--(a) and the two analogous hexagons
    for (int m = 1; m <= 3; ++m) {
        const int ring[6][2] = {{1, m}, {3, m + 1}, {2, m}, {1, m + 1}, {3, m}, {2, m + 1}};
        for (int i = 0; i < 6; ++i) {
            e.emplace_back(v(ring[i][0], ring[i][1]), v(ring[(i + 1) % 6][0], ring[(i + 1) % 6][1]));
        }
    }
    return Graph(13, e);
}

ListAssignment reference_gap_lists()
{
    std::vector<std::vector<int>> l;
    for (const auto& layer : {std::vector{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 3}}) {
        for (int i = 0; i < 3; ++i) {
            l.push_back(layer);
        }
    }
    l.push_back({1, 2, 3});
    return ListAssignment(l);
}

void check_degeneracy_gap(CheckContext& ctx)
{
    const auto w2 = degeneracy_gap(2);
    ctx.expect(w2.graph == reference_gap_graph() && w2.lists == reference_gap_lists(),
               cat("d=2: ", w2.graph.n(), " vertices, ", w2.graph.m(), " edges and lists as drawn"));
    ctx.expect(degeneracy(w2.graph).degeneracy == 2, "d=2: degeneracy 2");
    const Cover c2 = w2.as_cover();
    FractionalOptions plain;
    plain.covering_bound = false;
    const auto r2 = fractional_packing(c2, plain);
    ctx.expect(!r2.feasible && verify_dual(c2, r2.dual), "d=2: no fractional packing (" + r2.method + "), dual verified");
    ctx.save("d2-infeasible.json", Json{{"witness", to_json(w2)}, {"certificate", to_json(c2, r2)}});
    ctx.expect(verify_dual(c2, degeneracy_gap_dual(2)), "d=2: layer-counting dual verified");

    const auto w3 = degeneracy_gap(3);
    const Cover c3 = w3.as_cover();
    ctx.expect(w3.graph.n() == 53 && degeneracy(w3.graph).degeneracy == 3 && c3.uniform_fold() == 4,
               cat("d=3: ", w3.graph.n(), " vertices, degeneracy ", degeneracy(w3.graph).degeneracy, ", 4-lists"));
    const auto y3 = degeneracy_gap_dual(3);
    ctx.expect(verify_dual(c3, y3), "d=3: layer-counting dual verified (no fractional packing)");
    FractionalResult explicit3;
    explicit3.method = "layer-counting";
    explicit3.dual = y3;
    ctx.save("d3-layer-dual.json", Json{{"witness", to_json(w3)}, {"certificate", to_json(c3, explicit3)}});
    if (ctx.options().skip_slow) {
        ctx.skip("d=3 generic LP solve");
        return;
    }
    FractionalOptions generic;
    generic.integral_shortcut = false;
    generic.column_generation = true;
    generic.covering_bound = true;
    generic.covering_bound_pivots = 5'000'000;
    const auto r3 = fractional_packing(c3, generic);
    ctx.expect(!r3.feasible && verify_dual(c3, r3.dual), "d=3: no fractional packing (" + r3.method + "), dual verified");
    ctx.save("d3-infeasible.json", Json{{"certificate", to_json(c3, r3)}});
}

// ---------------------------------------------------------------- Latin squares

std::uint64_t count_latin_squares(int n)
{
    std::vector<int> cell(n * n, 0);
    std::vector<std::uint32_t> row(n, 0);
    std::vector<std::uint32_t> col(n, 0);
    std::function<std::uint64_t(int)> rec = [&](int i) -> std::uint64_t {
        if (i == n * n) {
            return 1;
        }
        const int r = i / n;
        const int c = i % n;
        std::uint64_t total = 0;
        for (int x = 0; x < n; ++x) {
            const std::uint32_t bit = 1u << x;
            if ((row[r] | col[c]) & bit) {
                continue;
            }
            row[r] |= bit;
            col[c] |= bit;
            total += rec(i + 1);
            row[r] &= ~bit;
            col[c] &= ~bit;
        }
        return total;
    };
    return rec(0);
}

void check_latin(CheckContext& ctx)
{
    const std::uint64_t known[] = {0, 0, 2, 12, 576};
    for (int n = 2; n <= 4; ++n) {
        const auto w = latin_square_witness(n);
        const Cover c = w.as_cover();
        const auto& l0 = w.lists->list(0);
        const int slot = static_cast<int>(std::find(l0.begin(), l0.end(), n + 1) - l0.begin());
        ctx.expect(!transversal_through(c, 0, slot), cat("n=", n, ": no colouring gives cell (1,1) colour ", n + 1));
        FractionalOptions plain;
        plain.covering_bound = false;
        const auto r = fractional_packing(c, plain);
        ctx.expect(!r.feasible && verify_dual(c, r.dual), cat("n=", n, ": no fractional packing (", r.method, "), dual verified"));
        ctx.save(cat("n", n, "-infeasible.json"), Json{{"witness", to_json(w)}, {"certificate", to_json(c, r)}});

        const std::uint64_t squares = count_latin_squares(n);
        ctx.expect(squares == known[n], cat("n=", n, ": ", squares, " Latin squares by enumeration"));
        const std::uint64_t threshold = ((n - 1) * squares + n - 1) / n;
        std::uint64_t seen = 0;
        for_each_transversal(c, [&](const Transversal&) { return ++seen < threshold; });
        ctx.expect(seen >= threshold, cat("n=", n, ": at least ", threshold, " list colourings (counted to the threshold)"));
    }
}

// ---------------------------------------------------------------- greedy

void check_greedy(CheckContext& ctx)
{
    auto succeeds = [](const Cover& c) {
        try {
            return !packing_violation(c, greedy_degenerate_packing(c));
        } catch (const std::logic_error&) {
            return false;
        }
    };
    for (int n = 3; n <= 8; ++n) {
        const CoverEnumerator e(cycle_graph(n), 4);
        std::uint64_t ok = 0;
        for (std::uint64_t i = 0; i < e.count(); ++i) {
            ok += succeeds(e.at(i));
        }
        ctx.expect(ok == e.count(), cat("C", n, ": greedy packs ", ok, "/", e.count(), " 4-fold covers"));
    }
    std::mt19937_64 rng(ctx.seed());
    for (const auto& [name, g] : {std::pair{"necklace", diamond_necklace_graph()}, {"Petersen", petersen_graph()}}) {
        int ok = 0;
        for (int t = 0; t < 1000; ++t) {
            const Cover c = random_full_cover(g, 6, rng);
            if (succeeds(c)) {
                ++ok;
            } else {
                ctx.save(cat(name, "-failure-", t, ".json"), to_json(c));
            }
        }
        ctx.expect(ok == 1000, cat(name, ": greedy packs ", ok, "/1000 random 6-fold covers"));
    }
}

// ---------------------------------------------------------------- Hall

using Row = std::uint32_t;  // neighbourhood in B as a bit mask

bool hall_oracle(const std::vector<Row>& adj)
{
    const int na = static_cast<int>(adj.size());
    for (std::uint32_t s = 1; s < (1u << na); ++s) {
        Row nb = 0;
        for (int a = 0; a < na; ++a) {
            if (s >> a & 1) {
                nb |= adj[a];
            }
        }
        if (std::popcount(nb) < std::popcount(s)) {
            return false;
        }
    }
    return true;
}

Row mask_of(const std::vector<int>& ids)
{
    Row m = 0;
    for (int i : ids) {
        m |= Row{1} << i;
    }
    return m;
}

int pick_bit(Row m, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(0, std::popcount(m) - 1);
    for (int skip = d(rng); skip > 0; --skip) {
        m &= m - 1;
    }
    return std::countr_zero(m);
}

// Starts from `adj`, adds each further allowed edge with probability p, then raises every
// degree to `need` with random allowed edges. Empty when the allowed edges are too few.
std::optional<std::vector<Row>> fill(std::vector<Row> adj, const std::vector<Row>& allowed, int nb, double p, int need,
                                    std::mt19937_64& rng)
{
    const int na = static_cast<int>(adj.size());
    std::bernoulli_distribution coin(p);
    for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nb; ++b) {
            if ((allowed[a] >> b & 1) && coin(rng)) {
                adj[a] |= Row{1} << b;
            }
        }
    }
    for (int a = 0; a < na; ++a) {
        while (std::popcount(adj[a]) < need) {
            const Row free = allowed[a] & ~adj[a];
            if (!free) {
                return std::nullopt;
            }
            adj[a] |= Row{1} << pick_bit(free, rng);
        }
    }
    for (int b = 0; b < nb; ++b) {
        Row column = 0;
        Row free = 0;
        for (int a = 0; a < na; ++a) {
            column |= Row{(adj[a] >> b) & 1} << a;
            free |= Row{(allowed[a] >> b & 1) && !(adj[a] >> b & 1)} << a;
        }
        for (int deg = std::popcount(column); deg < need; ++deg) {
            if (!free) {
                return std::nullopt;
            }
            const int a = pick_bit(free, rng);
            free &= ~(Row{1} << a);
            adj[a] |= Row{1} << b;
        }
    }
    return adj;
}

BipartiteGraph to_bipartite(const std::vector<Row>& adj, int nb)
{
    BipartiteGraph bg(static_cast<int>(adj.size()), nb);
    for (int a = 0; a < static_cast<int>(adj.size()); ++a) {
        for (int b = 0; b < nb; ++b) {
            if (adj[a] >> b & 1) {
                bg.add_edge(a, b);
            }
        }
    }
    return bg;
}

std::vector<int> random_subset(int n, int size, std::mt19937_64& rng)
{
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) {
        ids[i] = i;
    }
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(size);
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool complete_between(const std::vector<Row>& adj, const std::vector<int>& as, Row bs)
{
    return std::all_of(as.begin(), as.end(), [&](int a) { return (adj[a] & bs) == bs; });
}

bool empty_between(const std::vector<Row>& adj, const std::vector<int>& as, Row bs)
{
    return std::all_of(as.begin(), as.end(), [&](int a) { return (adj[a] & bs) == 0; });
}

struct HallTally {
    std::uint64_t instances = 0;
    std::uint64_t violating = 0;
    std::uint64_t mismatches = 0;
};

// Plants a violator: vertices of `a1` may only use `b1`. One extra A1-B2 edge afterwards when
// `perturb`, which usually destroys the violation.
std::vector<Row> planted(int size, int a1_size, int b1_size, int need, bool perturb, std::mt19937_64& rng,
                         std::vector<int>* a1_out = nullptr)
{
    for (;;) {
        const auto a1 = random_subset(size, a1_size, rng);
        const Row b1 = mask_of(random_subset(size, b1_size, rng));
        const Row all = (Row{1} << size) - 1;
        std::vector<Row> allowed(size, all);
        for (int a : a1) {
            allowed[a] = b1;
        }
        std::uniform_real_distribution<double> p(0.15, 0.85);
        auto adj = fill(std::vector<Row>(size, 0), allowed, size, p(rng), need, rng);
        if (!adj) {
            continue;
        }
        if (perturb && b1 != all) {
            const int a = a1[std::uniform_int_distribution<size_t>(0, a1.size() - 1)(rng)];
            (*adj)[a] |= Row{1} << pick_bit(all & ~b1, rng);
        }
        if (a1_out) {
            *a1_out = a1;
        }
        return *adj;
    }
}

void hall_odd(CheckContext& ctx, int m, std::uint64_t trials, std::mt19937_64& rng, HallTally& tally)
{
    const int size = 2 * m + 1;
    std::uniform_real_distribution<double> p(0.15, 0.85);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Row> adj;
        switch (t % 3) {
        case 0:
            adj = *fill(std::vector<Row>(size, 0), std::vector<Row>(size, (Row{1} << size) - 1), size, p(rng), m, rng);
            break;
        default:
            adj = planted(size, m + 1, m, m, t % 3 == 2, rng);
        }
        const auto bg = to_bipartite(adj, size);
        const bool oracle = hall_oracle(adj);
        const auto d = classify_deficiency_odd(bg, m);
        const auto cert = saturating_matching(bg);
        bool ok = d.hall_holds == oracle && verify_certificate(bg, cert) && cert.saturated == oracle;
        if (ok && !oracle) {
            const auto& k = d.blocks;
            const Row b1 = mask_of(k.b1);
            const Row b2 = mask_of(k.b2);
            ok = d.mismatch.empty() && k.a1.size() == static_cast<size_t>(m + 1) && k.b1.size() == static_cast<size_t>(m) &&
                 complete_between(adj, k.a1, b1) && complete_between(adj, k.a2, b2) && empty_between(adj, k.a1, b2);
        }
        ++tally.instances;
        tally.violating += !oracle;
        if (!ok) {
            ++tally.mismatches;
            ctx.save(cat("odd-m", m, "-mismatch-", t, ".json"), Json{{"edges", adj}});
        }
    }
}

void hall_even(CheckContext& ctx, int m, std::uint64_t trials, std::mt19937_64& rng, HallTally& tally)
{
    const int size = 2 * m;
    std::uniform_real_distribution<double> p(0.15, 0.85);
    const int shapes[3][2] = {{m, m - 1}, {m + 1, m - 1}, {m + 1, m}};
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Row> adj;
        const int kind = static_cast<int>(t % 5);
        if (kind == 0) {
            adj = *fill(std::vector<Row>(size, 0), std::vector<Row>(size, (Row{1} << size) - 1), size, p(rng), m - 1, rng);
        } else {
            const auto& s = shapes[kind == 4 ? t / 5 % 3 : kind - 1];
            adj = planted(size, s[0], s[1], m - 1, kind == 4, rng);
        }
        const auto bg = to_bipartite(adj, size);
        const bool oracle = hall_oracle(adj);
        const auto d = classify_deficiency_even(bg, m);
        const auto cert = saturating_matching(bg);
        bool ok = d.hall_holds == oracle && verify_certificate(bg, cert) && cert.saturated == oracle;
        if (ok && !oracle) {
            const auto& k = d.blocks;
            const Row b1 = mask_of(k.b1);
            const Row b2 = mask_of(k.b2);
            const auto a1 = k.a1.size();
            const auto nb1 = k.b1.size();
            const auto um = static_cast<size_t>(m);
            ok = d.mismatch.empty() && empty_between(adj, k.a1, b2);
            switch (d.kind) {
            case 1:
                ok = ok && a1 == um && nb1 == um - 1 && complete_between(adj, k.a1, b1);
                break;
            case 2:
                ok = ok && a1 == um + 1 && nb1 == um - 1 && complete_between(adj, k.a1, b1) &&
                     complete_between(adj, k.a2, b2);
                break;
            case 3:
                ok = ok && a1 == um + 1 && nb1 == um && complete_between(adj, k.a2, b2);
                break;
            default:
                ok = false;
            }
        }
        ++tally.instances;
        tally.violating += !oracle;
        if (!ok) {
            ++tally.mismatches;
            ctx.save(cat("even-m", m, "-mismatch-", t, ".json"), Json{{"edges", adj}});
        }
    }
}

void hall_robust(CheckContext& ctx, int m, std::uint64_t trials, std::mt19937_64& rng, HallTally& tally)
{
    const int size = 2 * m;
    std::uniform_real_distribution<double> p(0.1, 0.9);
    for (std::uint64_t t = 0; t < trials; ++t) {
        // logical layout: A1 = 0..m-1, B1 = 0..m-2, spoke i -> m-1+i, the K1 is 2m-1
        std::vector<int> pa(size);
        std::vector<int> pb(size);
        for (int i = 0; i < size; ++i) {
            pa[i] = pb[i] = i;
        }
        std::shuffle(pa.begin(), pa.end(), rng);
        std::shuffle(pb.begin(), pb.end(), rng);
        std::vector<Row> start(size, 0);
        std::vector<Row> allowed(size, (Row{1} << size) - 1);
        BlockPartition blocks;
        std::vector<std::pair<int, int>> spokes;
        for (int i = 0; i < m; ++i) {
            const int a = pa[i];
            for (int j = 0; j < m - 1; ++j) {
                start[a] |= Row{1} << pb[j];
            }
            start[a] |= Row{1} << pb[m - 1 + i];
            allowed[a] = start[a];
            spokes.emplace_back(a, pb[m - 1 + i]);
            blocks.a1.push_back(a);
            blocks.a2.push_back(pa[m + i]);
        }
        for (int j = 0; j < size; ++j) {
            (j < m - 1 ? blocks.b1 : blocks.b2).push_back(pb[j]);
        }
        for (auto* v : {&blocks.a1, &blocks.a2, &blocks.b1, &blocks.b2}) {
            std::sort(v->begin(), v->end());
        }
        const auto adj = *fill(start, allowed, size, p(rng), m, rng);
        const auto bg = to_bipartite(adj, size);

        // a matching with at most m-2 spokes plus random other edges
        std::shuffle(spokes.begin(), spokes.end(), rng);
        const int kept = std::uniform_int_distribution<int>(0, m - 2)(rng);
        std::vector<std::pair<int, int>> removed(spokes.begin(), spokes.begin() + kept);
        Row used_a = 0;
        Row used_b = 0;
        for (auto [a, b] : removed) {
            used_a |= Row{1} << a;
            used_b |= Row{1} << b;
        }
        std::vector<std::pair<int, int>> others;
        for (int a = 0; a < size; ++a) {
            for (int b = 0; b < size; ++b) {
                const bool spoke = std::find(spokes.begin(), spokes.end(), std::pair{a, b}) != spokes.end();
                if ((adj[a] >> b & 1) && !spoke) {
                    others.emplace_back(a, b);
                }
            }
        }
        std::shuffle(others.begin(), others.end(), rng);
        const double q = p(rng);
        std::bernoulli_distribution take(q);
        for (auto [a, b] : others) {
            if (!(used_a >> a & 1) && !(used_b >> b & 1) && take(rng)) {
                removed.emplace_back(a, b);
                used_a |= Row{1} << a;
                used_b |= Row{1} << b;
            }
        }
        auto reduced = adj;
        for (auto [a, b] : removed) {
            reduced[a] &= ~(Row{1} << b);
        }
        const bool oracle = hall_oracle(reduced);
        const bool claimed = check_robust_hall(bg, m, blocks, removed);
        const auto found = find_robust_structures(bg, m);
        const bool located = std::any_of(found.begin(), found.end(), [&](const RobustStructure& s) {
            auto a1 = s.blocks.a1;
            std::sort(a1.begin(), a1.end());
            return a1 == blocks.a1;
        });
        ++tally.instances;
        if (!(oracle && claimed && located)) {
            ++tally.mismatches;
            ctx.save(cat("robust-m", m, "-failure-", t, ".json"), Json{{"edges", adj}, {"removed", removed}});
        }
    }
}

void check_hall(CheckContext& ctx)
{
    std::mt19937_64 rng(ctx.seed());
    const auto trials = ctx.options().hall_trials;
    for (int m = 2; m <= 3; ++m) {
        HallTally t;
        hall_odd(ctx, m, trials, rng, t);
        ctx.expect(t.mismatches == 0 && t.violating > 0,
                   cat("odd sides, m=", m, ": ", t.instances, " instances (", t.violating, " violating), ", t.mismatches,
                       " mismatches against the subset scan"));
    }
    for (int m = 2; m <= 3; ++m) {
        HallTally t;
        hall_even(ctx, m, trials, rng, t);
        ctx.expect(t.mismatches == 0 && t.violating > 0,
                   cat("even sides, m=", m, ": ", t.instances, " instances (", t.violating, " violating), ", t.mismatches,
                       " mismatches against the subset scan"));
    }
    for (int m = 3; m <= 4; ++m) {
        HallTally t;
        hall_robust(ctx, m, trials, rng, t);
        ctx.expect(t.mismatches == 0, cat("robust structure, m=", m, ": ", t.instances,
                                          " instances, G - M has a perfect matching in all but ", t.mismatches));
    }
}

// ---------------------------------------------------------------- samplers

void check_samplers(CheckContext& ctx)
{
    int graphs = 0;
    int meeting = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : nonisomorphic_graphs(n)) {
            const Cover c = identity_cover(g, max_degree(g) + 1);
            const auto table = exact_marginals_greedy(c);
            bool rows_sum_to_one = true;
            for (const auto& row : table) {
                Rational s = 0;
                for (const auto& q : row) {
                    s += q;
                }
                rows_sum_to_one = rows_sum_to_one && s == 1;
            }
            ++graphs;
            meeting += meets_list_demand(c, table) && rows_sum_to_one;
        }
    }
    ctx.expect(meeting == graphs && graphs == 208,
               cat("greedy sampler: marginals >= 1/(Delta+1) on ", meeting, "/", graphs, " graphs with at most 6 vertices"));

    std::mt19937_64 rng(ctx.seed());
    int covers = 0;
    int uniform = 0;
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            const Graph g = complete_bipartite_graph(a, b);
            const int k = std::min(a, b) + 1;
            for (int t = 0; t < 6; ++t) {
                const Cover c = t == 0 ? identity_cover(g, k) : random_full_cover(g, k, rng);
                ++covers;
                uniform += is_uniform(c, exact_marginals_bipartite(c));
            }
        }
    }
    ctx.expect(uniform == covers,
               cat("bipartite sampler: marginals exactly 1/k on ", uniform, "/", covers, " full covers of K_{a,b}, a,b <= 4"));
}

// ---------------------------------------------------------------- degree lists

void check_degree_lists(CheckContext& ctx)
{
    for (const auto& w : degree_list_witnesses()) {
        const auto r = general_fractional_packing(w.graph, *w.lists);
        ctx.expect(!r.feasible && verify_general_dual(w.graph, *w.lists, r.dual),
                   w.name + ": no distribution meets Pr(v gets c) >= 1/|L(v)|, dual verified");
        ctx.save(w.name + ".json", Json{{"witness", to_json(w)}, {"certificate", to_json(r)}});
    }
}

// ---------------------------------------------------------------- small graphs

void check_small_graphs(CheckContext& ctx)
{
    int graphs = 0;
    int within = 0;
    Json table = Json::array();
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : nonisomorphic_graphs(n, true)) {
            if (max_degree(g) > 3) {
                continue;
            }
            const auto c = packing_number(g, PackingMode::Correspondence, 4, ctx.options().sweep);
            const auto l = packing_number(g, PackingMode::List, 4, ctx.options().sweep);
            ++graphs;
            within += c.exact && l.exact && c.value <= 4 && l.value <= 4 && l.value <= c.value;
            table.push_back(Json{{"graph", to_json(g)}, {"correspondence", c.value}, {"list", l.value}});
        }
    }
    ctx.expect(within == graphs, cat(within, "/", graphs, " connected graphs with at most 5 vertices and maximum degree "
                                                          "at most 3 have both packing numbers <= 4"));
    ctx.save("packing-numbers.json", table);
}

}  // namespace

const std::vector<CheckSpec>& repro_checks()
{
    static const std::vector<CheckSpec> checks{
        {"cycles", "cycles C3..C8: bad 2-lists and twisted covers do not pack; 3-fold covers pack iff the monodromy is even; 4-fold covers pack",
         check_cycles},
        {"k4", "all 13824 untwisted 4-fold covers of K4 pack; some 3-fold cover does not", check_k4},
        {"delta3", "cubic extension analysis: 112 bad triples, 4 exclusions, 10/8/2 split, bad (3,4,2,1),(4,3,1,2), 4 avoided permutations",
         check_delta3},
        {"k5", "6-fold covers of K5 pack: two-vertex extension on 1000 untwisted covers, direct search on 10000", check_k5},
        {"fractional", "fractional correspondence packing number 3 for F7 and C3..C6; K3,3 has an infeasible 3-fold cover yet every 3-fold cover has a transversal",
         check_fractional},
        {"petersen", "some untwisted 3-fold cover of the Petersen graph has no packing", check_petersen},
        {"necklace", "diamond necklace lists: all flexible, no fractional packing", check_necklace},
        {"degeneracy-gap", "layered graphs of degeneracy d=2,3 with (d+1)-lists have no fractional packing", check_degeneracy_gap},
        {"latin", "Latin-square lists n=2..4: cell (1,1) cannot take n+1, no fractional packing, at least (n-1)/n of N(n) colourings",
         check_latin},
        {"greedy", "greedy packing with fold 2*degeneracy succeeds on cycles (4-fold) and on necklace/Petersen (6-fold)", check_greedy},
        {"hall", "Hall deficiency structures match a subset scan; robust structures keep a perfect matching", check_hall},
        {"samplers", "greedy sampler meets 1/(Delta+1); bipartite sampler is exactly uniform on K_{a,b}", check_samplers},
        {"degree-lists", "diamond and K5 minus an edge have degree-sized lists with no 1/|L(v)| distribution", check_degree_lists},
        {"small-graphs", "connected graphs on at most 5 vertices with maximum degree at most 3 have packing numbers <= 4",
         check_small_graphs},
    };
    return checks;
}

CheckResult run_check(const CheckSpec& spec, const ReproOptions& options)
{
    CheckContext ctx(options, spec.name);
    const auto start = std::chrono::steady_clock::now();
    try {
        spec.run(ctx);
    } catch (const std::exception& e) {
        ctx.expect(false, std::string("exception: ") + e.what());
    }
    auto result = ctx.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    result.claim = spec.claim;
    return result;
}

Json manifest_json(const std::vector<CheckResult>& results, const ReproOptions& options)
{
    Json checks = Json::array();
    bool green = true;
    for (const auto& r : results) {
        green = green && r.passed;
        checks.push_back(Json{{"name", r.name},
                              {"claim", r.claim},
                              {"passed", r.passed},
                              {"observed", r.observed},
                              {"skipped", r.skipped},
                              {"certificates", r.certificates},
                              {"seconds", r.seconds}});
    }
    return Json{{"schema", "listpack.manifest/1"},
                {"green", green},
                {"seed", options.seed},
                {"hall_trials", options.hall_trials},
                {"checks", checks}};
}

}  // namespace listpack
