#pragma once

#include <string>
#include <utility>
#include <vector>

namespace listpack {

/// Bipartite graph with sides A = {0..size_a-1} and B = {0..size_b-1}.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int size_a, int size_b);
    static BipartiteGraph complete(int size_a, int size_b);

    int size_a() const { return static_cast<int>(adj_a_.size()); }
    int size_b() const { return static_cast<int>(adj_b_.size()); }
    int edge_count() const;

    /// Throws std::invalid_argument on a duplicate or out-of-range edge.
    void add_edge(int a, int b);
    /// No-op if absent.
    void remove_edge(int a, int b);
    bool has_edge(int a, int b) const;

    const std::vector<int>& adj_a(int a) const { return adj_a_.at(a); }
    const std::vector<int>& adj_b(int b) const { return adj_b_.at(b); }
    int degree_a(int a) const { return static_cast<int>(adj_a_.at(a).size()); }
    int degree_b(int b) const { return static_cast<int>(adj_b_.at(b).size()); }
    /// Over both sides; 0 for an empty side pair.
    int min_degree() const;

    /// Sides swapped.
    BipartiteGraph transposed() const;
    /// N(S) for S a subset of A, sorted.
    std::vector<int> neighbourhood(const std::vector<int>& a_subset) const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    std::vector<std::vector<int>> adj_a_;
    std::vector<std::vector<int>> adj_b_;
};

/// Maximum matching by augmenting paths; result[a] = matched b or -1.
std::vector<int> maximum_matching(const BipartiteGraph& bg);

/// Either a matching saturating A or a set A1 with |N(A1)| < |A1|.
struct HallCertificate {
    bool saturated = false;
    std::vector<int> matching;      // matching[a] = b, when saturated
    std::vector<int> violator;      // A1, when not saturated
    std::vector<int> neighbourhood; // N(A1)
};

/// On failure the violator is the set of A-vertices reachable by alternating paths from
/// the unmatched A-vertices of a maximum matching.
HallCertificate saturating_matching(const BipartiteGraph& bg);

/// Re-checks a certificate from scratch.
bool verify_certificate(const BipartiteGraph& bg, const HallCertificate& cert);

struct BlockPartition {
    std::vector<int> a1;
    std::vector<int> a2;
    std::vector<int> b1;
    std::vector<int> b2;
};

/// The partition induced by a subset A1 of A: B1 = N(A1) and complements.
BlockPartition blocks_of(const BipartiteGraph& bg, const std::vector<int>& a1);

struct Deficiency {
    bool hall_holds = true;
    /// 0 for the odd-size block structure; 1..3 for the three even-size cases.
    int kind = 0;
    BlockPartition blocks;
    /// Non-empty when a violator does not have the predicted structure.
    std::string mismatch;

    bool structured() const { return hall_holds || mismatch.empty(); }
};

/// |A| = |B| = 2m+1, minimum degree >= m. Throws PreconditionError otherwise.
/// On failure: |A1| = |B2| = m+1, |A2| = |B1| = m, G[A1,B1] and G[A2,B2] complete, G[A1,B2] empty.
Deficiency classify_deficiency_odd(const BipartiteGraph& bg, int m);
/// Structural check of a given violator A1 under the same hypotheses.
Deficiency classify_violator_odd(const BipartiteGraph& bg, int m, const std::vector<int>& a1);

/// |A| = |B| = 2m, m >= 2, minimum degree >= m-1. Throws PreconditionError otherwise.
/// Case 1: |A1| = m, |N(A1)| = m-1, G[A1,B1] complete.
/// Case 2: |A1| = m+1, |N(A1)| = m-1, G[A1,B1] and G[A2,B2] complete.
/// Case 3: |A1| = m+1, |N(A1)| = m, G[A2,B2] complete.
/// In every case G[A1,B2] is empty.
Deficiency classify_deficiency_even(const BipartiteGraph& bg, int m);
Deficiency classify_violator_even(const BipartiteGraph& bg, int m, const std::vector<int>& a1);

/// A1 (|A1| = m) whose vertices are all adjacent to B1 (|B1| = m-1) and each have exactly one
/// further neighbour, pairwise distinct, in B2 = B \ B1; that is G[A1,B1] = K_{m,m-1} and
/// G[A1,B2] = mK_2 + K_1.
struct RobustStructure {
    BlockPartition blocks;
    /// The m edges of G[A1,B2] as (a, b).
    std::vector<std::pair<int, int>> spokes;
};

/// All such structures with A1 on side A (call on the transpose for side B).
std::vector<RobustStructure> find_robust_structures(const BipartiteGraph& bg, int m);

/// Checks the hypotheses field by field (throws PreconditionError listing every failure) and
/// returns whether G minus the matching `removed` has a perfect matching.
bool check_robust_hall(const BipartiteGraph& bg, int m, const BlockPartition& blocks,
                       const std::vector<std::pair<int, int>>& removed);

}  // namespace listpack
