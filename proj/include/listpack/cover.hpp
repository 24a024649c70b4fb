#pragma once

#include "listpack/graph.hpp"
#include "listpack/permutation.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace listpack {

/// Largest list size supported; slot sets are handled as 64-bit masks.
inline constexpr int kMaxFold = 64;

/// Per-vertex sorted, duplicate-free, non-empty colour lists.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<int>> lists);

    int size() const { return static_cast<int>(lists_.size()); }
    const std::vector<int>& list(Vertex v) const { return lists_.at(v); }
    const std::vector<std::vector<int>>& lists() const { return lists_; }

    /// Common list size, if all lists have the same size.
    std::optional<int> uniform_size() const;
    bool uniform(int k) const { return uniform_size() == k; }

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<int>> lists_;
};

/// Correspondence cover over a base graph. Slots of vertex v are 0..fold(v)-1;
/// every base edge carries a partial injective matching between slot sets.
class Cover {
public:
    Cover() = default;
    /// All matchings empty.
    Cover(Graph base, std::vector<int> fold);

    const Graph& base() const { return base_; }
    int fold(Vertex v) const { return fold_.at(v); }
    const std::vector<int>& folds() const { return fold_; }
    std::optional<int> uniform_fold() const;

    /// Slot of `to` matched with `slot` of `from` across base edge `edge_id`, or -1.
    int mate(Vertex from, int slot, int edge_id) const
    {
        const Edge& e = base_.edges()[edge_id];
        return from == e.u ? forward_[edge_id][slot] : backward_[edge_id][slot];
    }
    /// The whole map from slots of `from` to slots of the other endpoint (-1 = unmatched).
    const std::vector<int>& mate_map(Vertex from, int edge_id) const
    {
        return from == base_.edges()[edge_id].u ? forward_[edge_id] : backward_[edge_id];
    }

    /// Replaces the matching on edge_id. `forward[s]` is the slot of edge.v matched to slot s
    /// of edge.u (or -1). Throws if not injective or out of range.
    void set_matching(int edge_id, const std::vector<int>& forward);
    void set_matching(int edge_id, const std::vector<std::pair<int, int>>& pairs);
    /// Pairs (slot of edge.u, slot of edge.v), sorted.
    std::vector<std::pair<int, int>> matching_pairs(int edge_id) const;

    /// Every matching is a bijection and all folds equal k.
    bool is_full(int k) const;
    bool is_full() const;

    friend bool operator==(const Cover& a, const Cover& b)
    {
        return a.base_ == b.base_ && a.fold_ == b.fold_ && a.forward_ == b.forward_;
    }

private:
    Graph base_;
    std::vector<int> fold_;
    std::vector<std::vector<int>> forward_;
    std::vector<std::vector<int>> backward_;
};

/// Loosely-typed cover as read from JSON, before axiom checks.
struct RawCover {
    Graph base;
    std::vector<int> fold;
    /// Keyed by the ordered pair as written ("u-v"); values are (slot of u, slot of v), 0-based.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
};

struct CoverViolation {
    int axiom = 0;  // 1..4: partition, empty across non-edges, matching across edges, cliques inside lists
    std::string message;
    Vertex u = -1;
    Vertex v = -1;
    int slot_u = -1;
    int slot_v = -1;
};

/// Reports every violated cover axiom, with a witness per violation.
std::vector<CoverViolation> validate(const RawCover& raw);
std::vector<CoverViolation> validate(const Cover& cover);
RawCover to_raw(const Cover& cover);
/// Throws std::invalid_argument listing the violations if raw is not a cover.
Cover cover_from_raw(const RawCover& raw);

/// Slot i of v carries the i-th smallest colour of L(v); equal colours are matched across edges.
Cover cover_from_lists(const Graph& g, const ListAssignment& lists);

/// Uniform fold k with identity matchings on every edge.
Cover identity_cover(const Graph& g, int k);

/// Explicit cover graph; vertex order is (base vertex, slot) lexicographic.
struct CoverGraph {
    Graph graph;
    std::vector<int> offset;  // offset[v] = id of (v, 0); offset[n] = total
    int id(Vertex v, int slot) const { return offset[v] + slot; }
    std::pair<Vertex, int> slot_of(int id) const;
};
CoverGraph expand(const Cover& cover);

/// DIMACS "p edge" rendering of a cover graph (1-based vertex ids).
std::string to_dimacs(const CoverGraph& h, const std::string& comment = {});

struct UntwistResult {
    Cover cover;
    /// relabel[v][old_slot] = new_slot.
    std::vector<Perm> relabel;
};

/// Relabels slots so that the matchings on the given forest edges become identities.
/// Forest edges must carry bijections between equal-size lists.
UntwistResult untwist(const Cover& cover, const std::vector<int>& forest_edges);

/// Composition of the edge matchings along a closed walk walk[0], walk[1], ..., walk[0]
/// (the closing step back to walk[0] is implicit). Requires bijections along the walk.
Perm monodromy(const Cover& cover, const std::vector<Vertex>& walk);

/// Fundamental cycle of a non-forest edge relative to a spanning forest, as a closed walk.
std::vector<Vertex> fundamental_cycle(const Graph& g, const std::vector<int>& forest_edges, int edge_id);

/// A palette naming realising the cover as a list cover, or nullopt. Colours are numbered
/// 1, 2, ... in order of first appearance over (vertex, slot); cover_from_lists of the result
/// equals the cover up to reordering the slots at each vertex.
std::optional<ListAssignment> is_list_cover(const Cover& cover);

/// Cover restricted to the vertices in `keep`; vertex i of the result is keep[i].
Cover induced_subcover(const Cover& cover, const std::vector<Vertex>& keep);

Cover random_full_cover(const Graph& g, int k, std::mt19937_64& rng);
/// Identity on the forest edges, uniformly random bijections elsewhere.
Cover random_untwisted_cover(const Graph& g, int k, const std::vector<int>& forest_edges, std::mt19937_64& rng);

/// The full k-fold covers with identity matchings on the forest edges, indexed in
/// lexicographic order of the permutations placed on the non-forest edges.
class CoverEnumerator {
public:
    CoverEnumerator(Graph g, int k, std::vector<int> forest_edges);
    CoverEnumerator(Graph g, int k);  // BFS spanning forest

    /// (k!)^(#non-forest edges); throws CapExceeded above 2^63.
    std::uint64_t count() const { return count_; }
    Cover at(std::uint64_t index) const;
    /// Overwrites the non-forest matchings of `cover` (which must come from at()) in place.
    void assign(std::uint64_t index, Cover& cover) const;

    const std::vector<int>& forest_edges() const { return forest_; }
    const std::vector<int>& free_edges() const { return free_; }
    int fold() const { return k_; }

private:
    Graph g_;
    int k_;
    std::vector<int> forest_;
    std::vector<int> free_;
    std::vector<Perm> perms_;
    std::uint64_t count_ = 1;
};

/// Support of a shared colour in a list configuration.
using VertexMask = std::uint64_t;

/// Enumerates k-list assignments up to the equivalence that preserves the list cover:
/// each shared colour is described by its support (a connected vertex set of size >= 2)
/// and the remaining slots hold private colours. Only configurations in which no further
/// shared colour fits (spare capacity forms an independent set) are produced, since adding
/// a shared colour only adds cover edges. Requires n <= 24. Returns the number visited;
/// stops early when the callback returns false.
std::uint64_t for_each_maximal_list_assignment(const Graph& g, int k,
                                               const std::function<bool(const ListAssignment&)>& visit);

/// Enumerates k-list assignments over the palette {1..palette} in canonical colour form
/// (colours introduced in increasing order of first use, scanning vertices in id order).
/// Stops early when the callback returns false; returns the number visited.
std::uint64_t for_each_canonical_list_assignment(const Graph& g, int k, int palette,
                                                 const std::function<bool(const ListAssignment&)>& visit);

}  // namespace listpack
