#pragma once

#include "listpack/cover.hpp"
#include "listpack/lp.hpp"
#include "listpack/packing.hpp"
#include "listpack/rational.hpp"
#include "listpack/sweep.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace listpack {

/// One slot per vertex; independent in the cover graph.
using Transversal = std::vector<int>;

inline constexpr std::uint64_t kDefaultTransversalCap = 10'000'000;

/// Depth-first over vertices in id order, slots in increasing order. Throws CapExceeded
/// past `cap` (use column generation for larger covers).
std::vector<Transversal> enumerate_transversals(const Cover& cover, std::uint64_t cap = kDefaultTransversalCap);
/// Stops when visit returns false; returns the number visited.
std::uint64_t for_each_transversal(const Cover& cover, const std::function<bool(const Transversal&)>& visit);

bool is_transversal(const Cover& cover, const Transversal& t);

/// Some transversal choosing `slot` at v, if one exists.
std::optional<Transversal> transversal_through(const Cover& cover, Vertex v, int slot);

/// table[v][slot]: some transversal uses the slot.
std::vector<std::vector<bool>> check_flexibility(const Cover& cover);
bool all_flexible(const std::vector<std::vector<bool>>& table);

/// Transversal maximising the sum of weights[v][slot] (exact branch and bound).
std::optional<std::pair<Transversal, Rational>> max_weight_transversal(const Cover& cover,
                                                                        const std::vector<std::vector<Rational>>& weights);

/// Row index of slot (v, s) in the fractional LPs: offset[v] + s.
std::vector<int> slot_offsets(const Cover& cover);

struct WeightedTransversal {
    Transversal choice;
    Rational weight;
};

struct FractionalOptions {
    /// Return k unit-weight colourings when an integral packing exists.
    bool integral_shortcut = true;
    /// Report an unusable slot as a one-row certificate without solving.
    bool flexibility_prefilter = true;
    /// Price transversals by branch and bound instead of enumerating them up front.
    bool column_generation = false;
    /// With column generation, let a double-precision simplex pick the final basis; the
    /// verdict is still re-derived and checked in exact arithmetic.
    bool float_guided = true;
    /// Before the exact LP, search for an infeasibility certificate with a float covering LP
    /// (bounded by covering_bound_pivots). Any certificate found is exact.
    bool covering_bound = false;
    std::uint64_t covering_bound_pivots = 20000;
    std::uint64_t column_cap = kDefaultTransversalCap;
};

struct FractionalResult {
    bool feasible = false;
    /// Weights summing to k; every slot is covered with total weight exactly 1.
    std::vector<WeightedTransversal> support;
    /// When infeasible: y over slots (row order of slot_offsets) with y . I <= 0 for every
    /// transversal I and sum(y) > 0.
    std::vector<Rational> dual;
    /// How the verdict was reached: "integral", "flexibility", "covering-bound", "lp",
    /// "column-generation".
    std::string method;
    std::uint64_t columns = 0;
    std::uint64_t pivots = 0;
};

/// Decides whether the cover graph has fractional chromatic number k (the uniform fold).
FractionalResult fractional_packing(const Cover& cover, const FractionalOptions& options = {});

/// Every slot equation holds exactly and every support element is a transversal.
bool verify_fractional(const Cover& cover, const FractionalResult& r);
/// y . I <= 0 over all transversals (by branch and bound) and sum(y) > 0.
bool verify_dual(const Cover& cover, const std::vector<Rational>& y);

enum class FractionalMode { List, Correspondence };

struct FractionalNumberResult {
    int value = 0;
    bool exact = false;
    std::optional<Cover> witness_cover;
    std::optional<ListAssignment> witness_lists;
    std::optional<FractionalResult> witness_certificate;
    std::uint64_t instances_checked = 0;
};

FractionalNumberResult fractional_packing_number(const Graph& g, FractionalMode mode, int k_max,
                                                 const SweepOptions& sweep = {},
                                                 const FractionalOptions& options = {});

/// Whether every untwisted k-fold cover is fractionally packable.
SweepResult fractional_sweep(const Graph& g, int k, const SweepOptions& sweep = {},
                             const FractionalOptions& options = {});

/// An independent set of the list cover: colour (not slot) per vertex, 0 when absent.
using PartialColouring = std::vector<int>;

struct GeneralFractionalResult {
    bool feasible = false;
    /// Distribution over independent sets with Pr(v gets c) >= 1/|L(v)|; weights sum to at
    /// most 1, the remainder sitting on the empty set.
    std::vector<std::pair<PartialColouring, Rational>> support;
    /// Exact marginal per (v, position in L(v)).
    std::vector<std::vector<Rational>> marginals;
    /// When infeasible: y over (slot rows..., total row) certifying the LP empty.
    std::vector<Rational> dual;
    std::uint64_t columns = 0;
};

/// Distribution over independent sets of the list cover with each (v, c) covered with
/// probability at least 1/|L(v)|. Columns are the maximal independent sets.
GeneralFractionalResult general_fractional_packing(const Graph& g, const ListAssignment& lists,
                                                   std::uint64_t cap = kDefaultTransversalCap);
/// Checks a dual of general_fractional_packing against every independent set of the list
/// cover (enumerated directly, not through the solver's columns): slot entries >= 0, total
/// entry <= 0, y(S) + total <= 0 for each independent set S, and y . b > 0.
bool verify_general_dual(const Graph& g, const ListAssignment& lists, const std::vector<Rational>& y);

}  // namespace listpack
