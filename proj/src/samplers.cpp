#include "listpack/samplers.hpp"

#include <algorithm>
#include <functional>

namespace listpack {

namespace {

/// Pairs free slots of the two ends in increasing order until the matching is maximum.
/// alive_u / alive_v mark which slots take part (all when empty).
void top_up(std::vector<int>& fwd, std::vector<int>& bwd, const std::vector<bool>& alive_u,
            const std::vector<bool>& alive_v)
{
    auto live_u = [&](int s) { return alive_u.empty() || alive_u[s]; };
    auto live_v = [&](int s) { return alive_v.empty() || alive_v[s]; };
    std::vector<int> free_u, free_v;
    for (int s = 0; s < static_cast<int>(fwd.size()); ++s) {
        if (live_u(s) && !(fwd[s] >= 0 && live_v(fwd[s]))) {
            free_u.push_back(s);
        }
    }
    for (int s = 0; s < static_cast<int>(bwd.size()); ++s) {
        if (live_v(s) && !(bwd[s] >= 0 && live_u(bwd[s]))) {
            free_v.push_back(s);
        }
    }
    const size_t pairs = std::min(free_u.size(), free_v.size());
    for (size_t i = 0; i < pairs; ++i) {
        fwd[free_u[i]] = free_v[i];
        bwd[free_v[i]] = free_u[i];
    }
}

struct GreedyState {
    std::vector<bool> alive_vertex;
    std::vector<std::vector<bool>> alive_slot;
    std::vector<std::vector<int>> fwd, bwd;  // per edge, over original slots
};

class GreedyExpansion {
public:
    explicit GreedyExpansion(const Cover& cover) : cover_(cover), g_(cover.base())
    {
        for (Vertex v = 0; v < g_.n(); ++v) {
            if (cover.fold(v) < g_.degree(v) + 1) {
                throw PreconditionError("greedy sampler: fold(v) >= deg(v) + 1 required at vertex " +
                                        std::to_string(v));
            }
        }
    }

    GreedyState initial() const
    {
        GreedyState s;
        s.alive_vertex.assign(g_.n(), true);
        for (Vertex v = 0; v < g_.n(); ++v) {
            s.alive_slot.emplace_back(cover_.fold(v), true);
        }
        for (int e = 0; e < g_.m(); ++e) {
            s.fwd.push_back(cover_.mate_map(g_.edge(e).u, e));
            s.bwd.push_back(cover_.mate_map(g_.edge(e).v, e));
        }
        return s;
    }

    static int live_count(const GreedyState& s, Vertex v)
    {
        return static_cast<int>(std::count(s.alive_slot[v].begin(), s.alive_slot[v].end(), true));
    }

    /// Vertex to colour next, or -1 when none is left; tops up matchings as a side effect.
    Vertex prepare(GreedyState& s) const
    {
        Vertex best = -1;
        for (Vertex v = 0; v < g_.n(); ++v) {
            if (s.alive_vertex[v] && (best < 0 || live_count(s, v) > live_count(s, best))) {
                best = v;
            }
        }
        if (best < 0) {
            return best;
        }
        for (int e = 0; e < g_.m(); ++e) {
            const auto& edge = g_.edge(e);
            if (s.alive_vertex[edge.u] && s.alive_vertex[edge.v]) {
                top_up(s.fwd[e], s.bwd[e], s.alive_slot[edge.u], s.alive_slot[edge.v]);
            }
        }
        return best;
    }

    std::vector<int> live_slots(const GreedyState& s, Vertex v) const
    {
        std::vector<int> out;
        for (int x = 0; x < cover_.fold(v); ++x) {
            if (s.alive_slot[v][x]) {
                out.push_back(x);
            }
        }
        return out;
    }

    GreedyState choose(const GreedyState& s, Vertex v, int x) const
    {
        GreedyState t = s;
        t.alive_vertex[v] = false;
        for (const auto& nb : g_.neighbours(v)) {
            if (!t.alive_vertex[nb.vertex]) {
                continue;
            }
            const bool forward = g_.edge(nb.edge).u == v;
            const int y = forward ? t.fwd[nb.edge][x] : t.bwd[nb.edge][x];
            if (y >= 0) {
                t.alive_slot[nb.vertex][y] = false;
            }
        }
        return t;
    }

private:
    const Cover& cover_;
    const Graph& g_;
};

bool is_bipartite_cover_ok(const Cover& cover, const std::vector<bool>& a_side, int& k)
{
    const Graph& g = cover.base();
    int delta_a = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (a_side[v]) {
            delta_a = std::max(delta_a, g.degree(v));
        }
    }
    auto fold = cover.uniform_fold();
    if (!fold || *fold < delta_a + 1) {
        return false;
    }
    k = *fold;
    return true;
}

}  // namespace

bool meets_list_demand(const Cover& cover, const MarginalTable& table)
{
    for (Vertex v = 0; v < cover.base().n(); ++v) {
        for (const auto& p : table.at(v)) {
            if (p < Rational(1, cover.fold(v))) {
                return false;
            }
        }
    }
    return true;
}

bool is_uniform(const Cover& cover, const MarginalTable& table)
{
    for (Vertex v = 0; v < cover.base().n(); ++v) {
        for (const auto& p : table.at(v)) {
            if (p != Rational(1, cover.fold(v))) {
                return false;
            }
        }
    }
    return true;
}

Cover complete_matchings(const Cover& cover)
{
    Cover out = cover;
    const Graph& g = cover.base();
    for (int e = 0; e < g.m(); ++e) {
        auto fwd = cover.mate_map(g.edge(e).u, e);
        auto bwd = cover.mate_map(g.edge(e).v, e);
        top_up(fwd, bwd, {}, {});
        out.set_matching(e, fwd);
    }
    return out;
}

Transversal greedy_fractional_sampler(const Cover& cover, std::mt19937_64& rng)
{
    GreedyExpansion ex(cover);
    GreedyState s = ex.initial();
    Transversal t(cover.base().n(), -1);
    for (;;) {
        const Vertex v = ex.prepare(s);
        if (v < 0) {
            break;
        }
        const auto slots = ex.live_slots(s, v);
        std::uniform_int_distribution<size_t> pick(0, slots.size() - 1);
        const int x = slots[pick(rng)];
        t[v] = x;
        s = ex.choose(s, v, x);
    }
    return t;
}

MarginalTable exact_marginals_greedy(const Cover& cover, std::uint64_t leaf_cap)
{
    GreedyExpansion ex(cover);
    const Graph& g = cover.base();
    MarginalTable table(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        table[v].assign(cover.fold(v), 0);
    }
    std::uint64_t leaves = 0;
    std::function<void(GreedyState, const Rational&)> expand = [&](GreedyState s, const Rational& weight) {
        const Vertex v = ex.prepare(s);
        if (v < 0) {
            if (++leaves > leaf_cap) {
                throw CapExceeded("exact_marginals_greedy: recursion tree exceeds the leaf cap");
            }
            return;
        }
        const auto slots = ex.live_slots(s, v);
        const Rational share = weight / static_cast<long>(slots.size());
        for (int x : slots) {
            table[v][x] += share;
            expand(ex.choose(s, v, x), share);
        }
    };
    expand(ex.initial(), Rational(1));
    return table;
}

std::vector<bool> bipartite_a_side(const Graph& g)
{
    auto sides = bipartition(g);
    if (!sides) {
        throw PreconditionError("bipartite sampler: base graph is not bipartite");
    }
    int delta[2] = {0, 0};
    for (Vertex v = 0; v < g.n(); ++v) {
        delta[(*sides)[v]] = std::max(delta[(*sides)[v]], g.degree(v));
    }
    const int a = delta[1] < delta[0] ? 1 : 0;
    std::vector<bool> out(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        out[v] = (*sides)[v] == a;
    }
    return out;
}

Transversal bipartite_sampler(const Cover& input, std::mt19937_64& rng)
{
    const Graph& g = input.base();
    const auto a_side = bipartite_a_side(g);
    int k = 0;
    if (!is_bipartite_cover_ok(input, a_side, k)) {
        throw PreconditionError("bipartite sampler: uniform fold >= Delta_A + 1 required");
    }
    const Cover cover = complete_matchings(input);
    Transversal t(g.n(), -1);
    std::uniform_int_distribution<int> pick_b(0, k - 1);
    for (Vertex b = 0; b < g.n(); ++b) {
        if (!a_side[b]) {
            t[b] = pick_b(rng);
        }
    }
    for (Vertex a = 0; a < g.n(); ++a) {
        if (!a_side[a]) {
            continue;
        }
        std::vector<bool> blocked(k, false);
        for (const auto& nb : g.neighbours(a)) {
            blocked[cover.mate(nb.vertex, t[nb.vertex], nb.edge)] = true;
        }
        std::vector<int> free;
        for (int x = 0; x < k; ++x) {
            if (!blocked[x]) {
                free.push_back(x);
            }
        }
        std::uniform_int_distribution<size_t> pick(0, free.size() - 1);
        t[a] = free[pick(rng)];
    }
    return t;
}

MarginalTable exact_marginals_bipartite(const Cover& input, std::uint64_t cap)
{
    const Graph& g = input.base();
    const auto a_side = bipartite_a_side(g);
    int k = 0;
    if (!is_bipartite_cover_ok(input, a_side, k)) {
        throw PreconditionError("bipartite sampler: uniform fold >= Delta_A + 1 required");
    }
    const Cover cover = complete_matchings(input);
    std::vector<Vertex> bs;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!a_side[v]) {
            bs.push_back(v);
        }
    }
    std::uint64_t total = 1;
    for (size_t i = 0; i < bs.size(); ++i) {
        if (total > cap / k) {
            throw CapExceeded("exact_marginals_bipartite: k^|B| exceeds the cap");
        }
        total *= k;
    }
    MarginalTable table(g.n(), std::vector<Rational>(k, 0));
    const Rational each(1, total);
    // tally[v][f][x]: choices on B where v had f free slots and x among them
    std::vector<std::vector<std::vector<std::uint64_t>>> tally(
        g.n(), std::vector<std::vector<std::uint64_t>>(k + 1, std::vector<std::uint64_t>(k, 0)));
    std::vector<int> choice(g.n(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
            choice[*it] = static_cast<int>(r % k);
            r /= k;
        }
        for (Vertex b : bs) {
            ++tally[b][1][choice[b]];
        }
        for (Vertex a = 0; a < g.n(); ++a) {
            if (!a_side[a]) {
                continue;
            }
            std::vector<bool> blocked(k, false);
            for (const auto& nb : g.neighbours(a)) {
                blocked[cover.mate(nb.vertex, choice[nb.vertex], nb.edge)] = true;
            }
            const int free = static_cast<int>(std::count(blocked.begin(), blocked.end(), false));
            for (int x = 0; x < k; ++x) {
                if (!blocked[x]) {
                    ++tally[a][free][x];
                }
            }
        }
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        for (int f = 1; f <= k; ++f) {
            for (int x = 0; x < k; ++x) {
                if (tally[v][f][x] != 0) {
                    Rational q(mpz_class(std::to_string(tally[v][f][x])), f);
                    q.canonicalize();
                    table[v][x] += each * q;
                }
            }
        }
    }
    return table;
}

}  // namespace listpack
