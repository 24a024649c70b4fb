#pragma once

#include "listpack/cover.hpp"
#include "listpack/hall.hpp"
#include "listpack/sweep.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace listpack {

/// k colourings of a cover; colourings[i][v] is the slot of v used by colouring i,
/// or -1 while v is uncoloured (partial packings).
struct Packing {
    int k = 0;
    std::vector<std::vector<int>> colourings;

    static Packing empty(int k, int n);
    int n() const { return colourings.empty() ? 0 : static_cast<int>(colourings.front().size()); }
    bool colours(Vertex v) const { return k > 0 && colourings[0][v] >= 0; }
    /// (c_1(v), ..., c_k(v)).
    Perm at(Vertex v) const;
    void set(Vertex v, const Perm& slots);

    friend bool operator==(const Packing&, const Packing&) = default;
};

/// Empty when the packing is proper and disjoint on its coloured vertices; requires every
/// vertex coloured unless `allow_partial`.
std::optional<std::string> packing_violation(const Cover& cover, const Packing& p, bool allow_partial = false);

struct FindOptions {
    /// After placing a vertex, reject the branch if some uncoloured neighbour has no
    /// perfect matching between colouring indices and its still-available slots.
    bool hall_pruning = true;
};

/// Exhaustive backtracking in reverse degeneracy order, one whole permutation per vertex.
/// Requires a uniform fold.
std::optional<Packing> find_packing(const Cover& cover, const FindOptions& options = {});

/// Number of ordered packings. Throws CapExceeded once the count passes `cap`.
std::uint64_t count_packings(const Cover& cover, std::uint64_t cap = std::uint64_t{1} << 62);

/// Vertex-by-vertex perfect matchings in reverse degeneracy order. Requires fold >= 2 * degeneracy;
/// throws std::logic_error if a matching step fails (which the degeneracy bound rules out).
Packing greedy_degenerate_packing(const Cover& cover);

/// Extends a partial packing to `v` by one perfect matching between indices and free slots,
/// honouring extra per-index forbidden slots; nullopt if no perfect matching exists.
std::optional<Perm> match_vertex(const Cover& cover, const Packing& partial, Vertex v,
                                 const std::vector<std::vector<int>>& extra_forbidden = {});

/// Copies a packing of induced_subcover(cover, keep) back onto the full vertex set.
Packing lift_packing(const Packing& sub, const std::vector<Vertex>& keep, int n);

enum class PackingMode { List, Correspondence };

struct NumberResult {
    /// The packing number, or a lower bound when `exact` is false (k_max exhausted).
    int value = 0;
    bool exact = false;
    /// A cover (or list assignment) of fold value-1 without a packing.
    std::optional<Cover> witness_cover;
    std::optional<ListAssignment> witness_lists;
    std::uint64_t instances_checked = 0;
};

/// Smallest k <= k_max such that every k-fold cover (correspondence mode: the untwisted covers
/// of CoverEnumerator; list mode: the maximal list configurations of
/// for_each_maximal_list_assignment) has a packing.
NumberResult packing_number(const Graph& g, PackingMode mode, int k_max, const SweepOptions& sweep = {});

/// Whether every untwisted k-fold cover packs; the first failing cover index otherwise.
SweepResult correspondence_sweep(const Graph& g, int k, const SweepOptions& sweep = {});

/// Extendability analysis for a cubic graph around an edge uv not in a triangle. The tree
/// u1-u-v-v1, u-u2, v-v2 carries identity matchings, c(u1) is the identity, and a triple
/// (c(u2), c(v1), c(v2)) is extendable when some permutations c(u), c(v) avoid all conflicts.
struct Delta3Report {
    /// Non-extendable (u2, v1, v2) triples, lexicographic.
    std::vector<std::array<Perm, 3>> non_extendable;
    /// Number of non-extendable triples per choice of c(u2).
    std::map<Perm, int> triples_per_u2;
    /// c(u2) choices ruled out up front, and the split of the remainder.
    std::vector<Perm> excluded;
    std::vector<Perm> excellent;
    std::vector<Perm> good;
    std::vector<Perm> bad;
    /// For each good or bad c(u2): the unordered sets {c(v1), c(v2)} that block extension.
    std::map<Perm, std::vector<std::pair<Perm, Perm>>> problematic;
    /// c(v1), c(v2) are kept outside this set when c(u2) is bad.
    std::vector<Perm> avoided;
    /// Any two already-packed neighbours leave a valid c(u2) outside `excluded`.
    bool exclusion_always_possible = false;
    /// Any two already-packed neighbours leave at least two valid permutations.
    bool two_choices_always = false;
    /// Any two already-packed neighbours leave a valid permutation outside `avoided`.
    bool avoidance_always_possible = false;
    /// For bad c(u2), every triple with c(v1), c(v2) outside `avoided` extends.
    bool avoided_bad_cases_extend = false;
    /// Every 4-subset of the choices with the maximum triple count that could serve as `excluded`.
    std::vector<std::vector<Perm>> admissible_exclusions;
};

Delta3Report delta3_case_analysis();

/// Outcome of the two-vertex extension for Delta-regular graphs with Delta >= 4 and fold 2*Delta - 2.
struct ExtensionOutcome {
    std::optional<Packing> packing;
    /// Empty on success; otherwise the step that failed.
    std::string failure;
    /// Hall violator of the failing matching step.
    std::optional<HallCertificate> certificate;
    /// Number of rigid structures (either orientation) found in the availability graph of v.
    int structures = 0;
    /// Number of extra (index, slot) constraints imposed on u.
    int constraints = 0;
};

/// Extends a packing of G - {u, v} (u and v uncoloured) to u and then v. Throws PreconditionError
/// when the base graph, fold, edge, or partial packing do not fit.
ExtensionOutcome extend_packing_two_vertices(const Cover& cover, const Packing& partial, Vertex u, Vertex v);

}  // namespace listpack
