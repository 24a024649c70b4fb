#pragma once
// Brute-force reference implementations shared by the tests.

#include "listpack/cover.hpp"
#include "listpack/graph.hpp"
#include "listpack/permutation.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using namespace listpack;

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                e.emplace_back(u, v);
            }
        }
    }
    return Graph(n, e);
}

inline Graph relabel(const Graph& g, const std::vector<int>& to)
{
    std::vector<std::pair<int, int>> e;
    for (const auto& x : g.edges()) {
        e.emplace_back(to[x.u], to[x.v]);
    }
    return Graph(g.n(), e);
}

/// min over all orderings of the largest number of earlier neighbours.
inline int degeneracy(const Graph& g)
{
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) {
        order[i] = i;
    }
    int best = g.n();
    do {
        int worst = 0;
        for (int i = 0; i < g.n(); ++i) {
            int back = 0;
            for (int j = 0; j < i; ++j) {
                back += g.has_edge(order[i], order[j]);
            }
            worst = std::max(worst, back);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return g.n() ? best : 0;
}

inline int clique_number(const Graph& g)
{
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << g.n()); ++s) {
        bool clique = true;
        for (int u = 0; u < g.n() && clique; ++u) {
            for (int v = u + 1; v < g.n() && clique; ++v) {
                clique = !((s >> u & 1) && (s >> v & 1)) || g.has_edge(u, v);
            }
        }
        if (clique) {
            best = std::max(best, __builtin_popcount(s));
        }
    }
    return best;
}

/// Every transversal (independent in the cover graph), by plain product enumeration.
inline std::vector<std::vector<int>> transversals(const Cover& c)
{
    const int n = c.base().n();
    std::vector<std::vector<int>> out;
    std::vector<int> t(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            for (int e = 0; e < c.base().m(); ++e) {
                const auto& ed = c.base().edge(e);
                if (c.mate(ed.u, t[ed.u], e) == t[ed.v]) {
                    return;
                }
            }
            out.push_back(t);
            return;
        }
        for (int s = 0; s < c.fold(v); ++s) {
            t[v] = s;
            rec(v + 1);
        }
    };
    rec(0);
    return out;
}

/// Whether k pairwise disjoint transversals exist (k = uniform fold), by search over transversal sets.
inline bool has_packing(const Cover& c)
{
    const int k = *c.uniform_fold();
    const auto all = transversals(c);
    const int n = c.base().n();
    std::vector<int> chosen;
    std::function<bool(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(chosen.size()) == k) {
            return true;
        }
        for (size_t i = from; i < all.size(); ++i) {
            bool disjoint = true;
            for (int j : chosen) {
                for (int v = 0; v < n && disjoint; ++v) {
                    disjoint = all[j][v] != all[i][v];
                }
            }
            if (disjoint) {
                chosen.push_back(static_cast<int>(i));
                if (rec(i + 1)) {
                    return true;
                }
                chosen.pop_back();
            }
        }
        return false;
    };
    return rec(0);
}

}  // namespace oracle
