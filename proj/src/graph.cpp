#include "listpack/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace listpack {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 0) {
        throw std::invalid_argument("graph: negative vertex count");
    }
    adjacency_.resize(n);
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw std::invalid_argument("graph: edge endpoint out of range");
        }
        if (a == b) {
            throw std::invalid_argument("graph: loop at vertex " + std::to_string(a));
        }
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        auto dup = *std::adjacent_find(edges_.begin(), edges_.end());
        throw std::invalid_argument("graph: parallel edge " + std::to_string(dup.u) + "-" + std::to_string(dup.v));
    }
    for (int id = 0; id < m(); ++id) {
        adjacency_[edges_[id].u].push_back({edges_[id].v, id});
        adjacency_[edges_[id].v].push_back({edges_[id].u, id});
    }
    for (auto& row : adjacency_) {
        std::sort(row.begin(), row.end(), [](const Neighbour& x, const Neighbour& y) { return x.vertex < y.vertex; });
    }
}

int Graph::edge_id(Vertex u, Vertex v) const
{
    if (u < 0 || u >= n() || v < 0 || v >= n()) {
        return -1;
    }
    const auto& row = adjacency_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v, [](const Neighbour& x, Vertex w) { return x.vertex < w; });
    return (it != row.end() && it->vertex == v) ? it->edge : -1;
}

Graph path_graph(int n)
{
    if (n < 1) {
        throw PreconditionError("path: need n >= 1");
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph(n, e);
}

Graph cycle_graph(int n)
{
    if (n < 3) {
        throw PreconditionError("cycle: need n >= 3");
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, e);
}

Graph complete_graph(int n)
{
    if (n < 1) {
        throw PreconditionError("complete: need n >= 1");
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

Graph complete_bipartite_graph(int a, int b)
{
    if (a < 1 || b < 1) {
        throw PreconditionError("complete_bipartite: need a, b >= 1");
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) {
            e.emplace_back(i, a + j);
        }
    }
    return Graph(a + b, e);
}

Graph fan7_graph()
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, i + 1);
    }
    for (int i = 0; i < 6; ++i) {
        e.emplace_back(i, 6);
    }
    return Graph(7, e);
}

Graph petersen_graph()
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return Graph(10, e);
}

Graph diamond_graph()
{
    return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph diamond_necklace_graph()
{
    std::vector<std::pair<int, int>> e;
    for (int base : {0, 4}) {
        e.emplace_back(base + 0, base + 2);
        e.emplace_back(base + 0, base + 3);
        e.emplace_back(base + 1, base + 2);
        e.emplace_back(base + 1, base + 3);
        e.emplace_back(base + 2, base + 3);
    }
    e.emplace_back(0, 4);
    e.emplace_back(1, 5);
    return Graph(8, e);
}

Graph latin_square_graph(int n)
{
    if (n < 1) {
        throw PreconditionError("latin_square: need n >= 1");
    }
    std::vector<std::pair<int, int>> e;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            for (int c2 = c + 1; c2 < n; ++c2) {
                e.emplace_back(r * n + c, r * n + c2);
            }
            for (int r2 = r + 1; r2 < n; ++r2) {
                e.emplace_back(r * n + c, r2 * n + c);
            }
        }
    }
    return Graph(n * n, e);
}

Graph complete_minus_edge_graph(int n)
{
    if (n < 2) {
        throw PreconditionError("complete_minus_edge: need n >= 2");
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!(i == 0 && j == 1)) {
                e.emplace_back(i, j);
            }
        }
    }
    return Graph(n, e);
}

namespace {

std::vector<int> parse_params(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("graph key: bad parameter '" + item + "'");
        }
    }
    return out;
}

}  // namespace

Graph build_standard(const std::string& key)
{
    auto colon = key.find(':');
    std::string name = key.substr(0, colon);
    std::vector<int> p = colon == std::string::npos ? std::vector<int>{} : parse_params(key.substr(colon + 1));
    auto need = [&](size_t count) {
        if (p.size() != count) {
            throw std::invalid_argument("graph key '" + key + "': expected " + std::to_string(count) + " parameter(s)");
        }
    };
    if (name == "path") { need(1); return path_graph(p[0]); }
    if (name == "cycle") { need(1); return cycle_graph(p[0]); }
    if (name == "complete") { need(1); return complete_graph(p[0]); }
    if (name == "complete_bipartite") { need(2); return complete_bipartite_graph(p[0], p[1]); }
    if (name == "fan7") { need(0); return fan7_graph(); }
    if (name == "petersen") { need(0); return petersen_graph(); }
    if (name == "diamond") { need(0); return diamond_graph(); }
    if (name == "diamond_necklace") { need(0); return diamond_necklace_graph(); }
    if (name == "latin_square") { need(1); return latin_square_graph(p[0]); }
    if (name == "complete_minus_edge") { need(1); return complete_minus_edge_graph(p[0]); }
    throw std::invalid_argument("unknown graph key '" + key + "'");
}

std::vector<std::string> standard_graph_keys()
{
    return {"path:N", "cycle:N", "complete:N", "complete_bipartite:A,B", "fan7", "petersen",
            "diamond", "diamond_necklace", "latin_square:N", "complete_minus_edge:N"};
}

DegeneracyOrder degeneracy(const Graph& g)
{
    const int n = g.n();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
    }
    DegeneracyOrder out;
    out.order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) {
                best = v;
            }
        }
        out.degeneracy = std::max(out.degeneracy, deg[best]);
        out.order.push_back(best);
        removed[best] = true;
        for (const auto& nb : g.neighbours(best)) {
            if (!removed[nb.vertex]) {
                --deg[nb.vertex];
            }
        }
    }
    return out;
}

int max_degree(const Graph& g)
{
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

int min_degree(const Graph& g)
{
    if (g.n() == 0) {
        return 0;
    }
    int best = g.degree(0);
    for (int v = 1; v < g.n(); ++v) {
        best = std::min(best, g.degree(v));
    }
    return best;
}

int clique_number(const Graph& g)
{
    // Bron-Kerbosch with pivoting.
    int best = 0;
    std::function<void(std::vector<int>, std::vector<int>, std::vector<int>, int)> expand =
        [&](std::vector<int> r, std::vector<int> p, std::vector<int> x, int size) {
            if (p.empty() && x.empty()) {
                best = std::max(best, size);
                return;
            }
            if (size + static_cast<int>(p.size()) <= best) {
                return;
            }
            int pivot = !p.empty() ? p.front() : x.front();
            for (int u : p) {
                if (g.degree(u) > g.degree(pivot)) {
                    pivot = u;
                }
            }
            std::vector<int> candidates;
            for (int v : p) {
                if (!g.has_edge(pivot, v)) {
                    candidates.push_back(v);
                }
            }
            for (int v : candidates) {
                std::vector<int> p2, x2;
                for (int w : p) {
                    if (g.has_edge(v, w)) p2.push_back(w);
                }
                for (int w : x) {
                    if (g.has_edge(v, w)) x2.push_back(w);
                }
                r.push_back(v);
                expand(r, p2, x2, size + 1);
                r.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
            }
        };
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    expand({}, all, {}, 0);
    return best;
}

std::vector<int> connected_components(const Graph& g, int* count)
{
    std::vector<int> comp(g.n(), -1);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) {
            continue;
        }
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& nb : g.neighbours(v)) {
                if (comp[nb.vertex] < 0) {
                    comp[nb.vertex] = c;
                    q.push(nb.vertex);
                }
            }
        }
        ++c;
    }
    if (count) {
        *count = c;
    }
    return comp;
}

bool is_connected(const Graph& g)
{
    int count = 0;
    connected_components(g, &count);
    return count <= 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g)
{
    std::vector<int> side(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) {
            continue;
        }
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& nb : g.neighbours(v)) {
                if (side[nb.vertex] < 0) {
                    side[nb.vertex] = 1 - side[v];
                    q.push(nb.vertex);
                } else if (side[nb.vertex] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::vector<int> spanning_forest(const Graph& g)
{
    std::vector<bool> seen(g.n(), false);
    std::vector<int> forest;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) {
            continue;
        }
        seen[s] = true;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& nb : g.neighbours(v)) {
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = true;
                    forest.push_back(nb.edge);
                    q.push(nb.vertex);
                }
            }
        }
    }
    std::sort(forest.begin(), forest.end());
    return forest;
}

bool is_forest(const Graph& g, const std::vector<int>& edge_ids)
{
    std::vector<int> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<int> sorted = edge_ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (int id : edge_ids) {
        if (id < 0 || id >= g.m()) {
            return false;
        }
        int a = find(g.edge(id).u);
        int b = find(g.edge(id).v);
        if (a == b) {
            return false;
        }
        parent[a] = b;
    }
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep)
{
    std::vector<int> index(g.n(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        if (keep[i] < 0 || keep[i] >= g.n() || index[keep[i]] >= 0) {
            throw std::invalid_argument("induced_subgraph: bad vertex list");
        }
        index[keep[i]] = i;
    }
    std::vector<std::pair<int, int>> e;
    for (const auto& edge : g.edges()) {
        if (index[edge.u] >= 0 && index[edge.v] >= 0) {
            e.emplace_back(index[edge.u], index[edge.v]);
        }
    }
    return Graph(static_cast<int>(keep.size()), e);
}

std::optional<Edge> edge_not_in_triangle(const Graph& g)
{
    if (!is_connected(g)) {
        throw PreconditionError("edge_not_in_triangle: graph is not connected");
    }
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 3) {
            throw PreconditionError("edge_not_in_triangle: graph is not cubic");
        }
    }
    if (g.n() == 4) {
        throw PreconditionError("edge_not_in_triangle: graph is K4");
    }
    for (const auto& e : g.edges()) {
        bool common = false;
        for (const auto& nb : g.neighbours(e.u)) {
            if (g.has_edge(nb.vertex, e.v)) {
                common = true;
                break;
            }
        }
        if (!common) {
            return e;
        }
    }
    return std::nullopt;
}

std::uint64_t canonical_code(const Graph& g)
{
    const int n = g.n();
    if (n > 8) {
        throw PreconditionError("canonical_code: n <= 8 required");
    }
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        // p maps old -> new; pairs (i<j) in row-major order, most significant first
        std::uint64_t a[8] = {};
        for (const auto& e : g.edges()) {
            a[p[e.u]] |= std::uint64_t{1} << p[e.v];
            a[p[e.v]] |= std::uint64_t{1} << p[e.u];
        }
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                code = code << 1 | (a[i] >> j & 1);
            }
        }
        best = std::min(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only)
{
    if (n < 0 || n > 6) {
        throw PreconditionError("nonisomorphic_graphs: 0 <= n <= 6 required");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<Graph> out;
    std::vector<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> e;
        for (size_t b = 0; b < pairs.size(); ++b) {
            if (mask >> b & 1) {
                e.push_back(pairs[b]);
            }
        }
        Graph g(n, e);
        if (connected_only && !is_connected(g)) {
            continue;
        }
        const auto code = canonical_code(g);
        auto it = std::lower_bound(seen.begin(), seen.end(), code);
        if (it != seen.end() && *it == code) {
            continue;
        }
        seen.insert(it, code);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace listpack
