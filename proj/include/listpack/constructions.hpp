#pragma once

#include "listpack/cover.hpp"
#include "listpack/graph.hpp"
#include "listpack/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace listpack {

enum class Verdict { NoPacking, NoFractionalPacking, PackingExists, FractionalExists };

std::string to_string(Verdict v);

/// A named instance together with the verdict the solvers are expected to reach.
/// Exactly one of lists / cover is set.
struct Witness {
    std::string name;
    Graph graph;
    std::optional<ListAssignment> lists;
    std::optional<Cover> cover;
    Verdict expected = Verdict::NoPacking;
    /// When set, the verdict refers to the demand Pr(v gets c) >= 1/|L(v)| (lists of mixed size).
    bool degree_demand = false;
    std::string description;

    /// The cover the solvers run on (built from the lists when needed).
    Cover as_cover() const;
};

/// C_n with {1,2} on v_0..v_{n-3}, {1,3} on v_{n-2}, {2,3} on v_{n-1}. n even, n >= 4.
Witness even_cycle_bad_lists(int n);

/// 3-fold cover of C_n: identity on every edge except {n-1, 0}, which swaps slots 2 and 3.
Witness twisted_cycle_cover(int n);

/// Layered graph of degeneracy d with (d+1)-lists and no fractional packing. d >= 2.
///   layer 1: K_{d+1}, lists [d+1]
///   layer m+1: a copy of each vertex of layer m, adjacent to the other d vertices of layer m,
///              with list shifted by the next s_{i,j}: L -> (L - i) + j
///   shifts: each transposition (1 j), j = 2..d, gives s_{1,d+2}, s_{j,1}, s_{d+2,j};
///           the whole sequence is run d-1 times
///   apex w ~ v_1 of layers 1, 3(d-1)+1, ..., 3(d-1)^2+1, list [d+1]
/// Vertex (layer m, index i) is (m-1)(d+1)+i (0-based i); w is last.
Witness degeneracy_gap(int d);
int degeneracy_gap_layers(int d);
/// Candidate Farkas vector for degeneracy_gap(d), in slot_offsets row order. Every colouring
/// gives the incoming colour of each added layer to at least one of its vertices once the
/// earlier layers are tight, the average count is exactly one, and with every count equal to
/// one the colouring is forced layer by layer so that colour d+1 lands exactly once on
/// {v_1^1, w}. The vector negates
///   sum_m 2^(L-1-m) (count_m - 1) + [v_1^1 = d+1] + [w = d+1] - 1 >= 0.
/// Check it with verify_dual.
std::vector<Rational> degeneracy_gap_dual(int d);

/// Two diamonds joined at their degree-2 vertices with lists admitting no fractional packing
/// even though every single assignment extends to a colouring.
/// Lists, by vertex of diamond_necklace_graph():
///   0 {1,3,4}  1 {1,2,4}  2 {2,3,4}  3 {2,3,4}
///   4 {1,3,4}  5 {1,2,4}  6 {1,2,4}  7 {1,2,4}
Witness necklace_witness();

/// K_n x K_n (cells r*n+c): column 0 gets [n+1]-{1}, the rest of row 0 gets [n+1]-{2},
/// every other cell [n]. n >= 2.
Witness latin_square_witness(int n);

/// Degree-sized lists with no distribution meeting Pr(v gets c) >= 1/|L(v)|:
/// the diamond with {1,2},{1,3},{1,2,3},{1,2,3} and K5 minus an edge with
/// {1,2,3},{1,2,4} on the non-adjacent pair and [4] elsewhere.
std::vector<Witness> degree_list_witnesses();

struct ListSearchResult {
    /// found: witness set; none: every assignment packs; budget: stopped after `budget` assignments.
    enum class Status { Found, None, Budget } status = Status::None;
    std::optional<ListAssignment> witness;
    std::uint64_t examined = 0;
};

/// Scans k-list assignments of g over the palette {1..palette_max} in canonical colour form
/// for one with no packing, examining at most `budget` assignments.
ListSearchResult search_unpackable_lists(const Graph& g, int k, int palette_max, std::uint64_t budget);

/// Every fixed witness (cycles for n = 3..8, degeneracy gap for d = 2 only).
std::vector<Witness> all_witnesses();

}  // namespace listpack
