#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace listpack {

using Vertex = int;

/// Unordered edge, always stored with first < second.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration or expansion would exceed a configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Neighbour {
    Vertex vertex;
    int edge;  // index into Graph::edges()
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Validates simplicity: rejects loops, out-of-range ids and parallel edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adjacency_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    /// Edges sorted lexicographically, each with u < v.
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_.at(id); }

    /// Neighbours of v sorted by vertex id.
    const std::vector<Neighbour>& neighbours(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

    bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }
    /// Index of edge {u,v} in edges(), or -1.
    int edge_id(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.n() == b.n(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbour>> adjacency_;
};

struct DegeneracyOrder {
    std::vector<Vertex> order;  // smallest-last removal order
    int degeneracy = 0;
};

// Builders. Vertex numbering:
//   path/cycle: consecutive 0..n-1
//   complete_bipartite(a,b): part A = 0..a-1, part B = a..a+b-1
//   fan7: path 0..5, universal vertex 6
//   petersen: outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5
//   diamond: 0,1 the non-adjacent degree-2 vertices; 2,3 the adjacent degree-3 pair
//   diamond_necklace: two diamonds {0..3}, {4..7} numbered as `diamond`; joins 0-4 and 1-5
//   latin_square(n): cell (r,c) of the n x n grid is vertex r*n+c
//   complete_minus_edge(n): K_n without the edge 0-1
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph fan7_graph();
Graph petersen_graph();
Graph diamond_graph();
Graph diamond_necklace_graph();
Graph latin_square_graph(int n);
Graph complete_minus_edge_graph(int n);

/// Named builder lookup, e.g. "cycle:5", "complete_bipartite:3,3", "petersen".
Graph build_standard(const std::string& key);
/// Keys accepted by build_standard, with placeholder parameters.
std::vector<std::string> standard_graph_keys();

/// Smallest-last ordering; ties are broken by lowest vertex id.
DegeneracyOrder degeneracy(const Graph& g);

int max_degree(const Graph& g);
int min_degree(const Graph& g);
int clique_number(const Graph& g);

bool is_connected(const Graph& g);
/// Component id per vertex, components numbered 0, 1, ... in order of their smallest vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
/// Side (0/1) per vertex when g is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);
/// BFS spanning forest from the lowest id of each component; returns edge ids.
std::vector<int> spanning_forest(const Graph& g);
bool is_forest(const Graph& g, const std::vector<int>& edge_ids);

/// Lexicographically smallest upper-triangle adjacency code over all relabellings (n <= 8).
std::uint64_t canonical_code(const Graph& g);
/// One representative per isomorphism class of graphs on n vertices (n <= 6).
std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only = false);

/// Induced subgraph on `keep` (in the given order); vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

/// An edge whose endpoints share no neighbour, for a connected cubic graph other than K4.
/// Throws PreconditionError when g is disconnected, not cubic, or is K4. Returns
/// nullopt only if no such edge exists, which cannot happen under the preconditions.
std::optional<Edge> edge_not_in_triangle(const Graph& g);

}  // namespace listpack
