#pragma once

#include "listpack/cover.hpp"
#include "listpack/fractional.hpp"
#include "listpack/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace listpack {

/// table[v][slot] = Pr(slot of v is chosen).
using MarginalTable = std::vector<std::vector<Rational>>;

inline constexpr std::uint64_t kDefaultLeafCap = 10'000'000;

/// Every entry of v is at least 1/fold(v).
bool meets_list_demand(const Cover& cover, const MarginalTable& table);
/// Every entry equals 1/fold(v).
bool is_uniform(const Cover& cover, const MarginalTable& table);

/// Requires fold(v) >= deg(v) + 1 everywhere. Repeatedly takes the live vertex with the most
/// live slots (lowest id on ties), tops up its edge matchings to maximum size by pairing free
/// slots in increasing order, draws a uniform live slot x, and deletes x's neighbourhood.
Transversal greedy_fractional_sampler(const Cover& cover, std::mt19937_64& rng);
/// Exact marginals of greedy_fractional_sampler by expanding its recursion tree.
MarginalTable exact_marginals_greedy(const Cover& cover, std::uint64_t leaf_cap = kDefaultLeafCap);

/// Side chosen as A: the colour class with the smaller maximum degree (class 0 on ties).
std::vector<bool> bipartite_a_side(const Graph& g);

/// Base bipartite, fold Delta_A + 1 everywhere. Matchings are completed to perfect ones,
/// B vertices draw uniform slots, then each A vertex draws uniformly among slots not
/// adjacent to the B choices.
Transversal bipartite_sampler(const Cover& cover, std::mt19937_64& rng);
/// Exact marginals of bipartite_sampler, summing over all k^|B| choices on B.
MarginalTable exact_marginals_bipartite(const Cover& cover, std::uint64_t cap = kDefaultLeafCap);

/// Cover with every partial matching extended to maximum size, pairing free slots in
/// increasing order.
Cover complete_matchings(const Cover& cover);

}  // namespace listpack
