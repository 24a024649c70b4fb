#include "listpack/cover.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace listpack {

ListAssignment::ListAssignment(std::vector<std::vector<int>> lists) : lists_(std::move(lists))
{
    for (size_t v = 0; v < lists_.size(); ++v) {
        auto& l = lists_[v];
        if (l.empty()) {
            throw std::invalid_argument("list assignment: empty list at vertex " + std::to_string(v));
        }
        std::sort(l.begin(), l.end());
        if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
            throw std::invalid_argument("list assignment: repeated colour at vertex " + std::to_string(v));
        }
        if (l.front() < 0) {
            throw std::invalid_argument("list assignment: negative colour at vertex " + std::to_string(v));
        }
    }
}

std::optional<int> ListAssignment::uniform_size() const
{
    if (lists_.empty()) {
        return std::nullopt;
    }
    const auto k = static_cast<int>(lists_.front().size());
    for (const auto& l : lists_) {
        if (static_cast<int>(l.size()) != k) {
            return std::nullopt;
        }
    }
    return k;
}

Cover::Cover(Graph base, std::vector<int> fold) : base_(std::move(base)), fold_(std::move(fold))
{
    if (static_cast<int>(fold_.size()) != base_.n()) {
        throw std::invalid_argument("cover: fold vector size differs from vertex count");
    }
    for (int f : fold_) {
        if (f < 1 || f > kMaxFold) {
            throw std::invalid_argument("cover: list sizes must lie in 1.." + std::to_string(kMaxFold));
        }
    }
    forward_.resize(base_.m());
    backward_.resize(base_.m());
    for (int id = 0; id < base_.m(); ++id) {
        forward_[id].assign(fold_[base_.edge(id).u], -1);
        backward_[id].assign(fold_[base_.edge(id).v], -1);
    }
}

std::optional<int> Cover::uniform_fold() const
{
    if (fold_.empty()) {
        return std::nullopt;
    }
    for (int f : fold_) {
        if (f != fold_.front()) {
            return std::nullopt;
        }
    }
    return fold_.front();
}

void Cover::set_matching(int edge_id, const std::vector<int>& forward)
{
    const Edge& e = base_.edge(edge_id);
    if (static_cast<int>(forward.size()) != fold_[e.u]) {
        throw std::invalid_argument("set_matching: wrong length");
    }
    std::vector<int> back(fold_[e.v], -1);
    for (int s = 0; s < fold_[e.u]; ++s) {
        int t = forward[s];
        if (t < -1 || t >= fold_[e.v]) {
            throw std::invalid_argument("set_matching: slot out of range");
        }
        if (t >= 0) {
            if (back[t] >= 0) {
                throw std::invalid_argument("set_matching: matching is not injective");
            }
            back[t] = s;
        }
    }
    forward_[edge_id] = forward;
    backward_[edge_id] = std::move(back);
}

void Cover::set_matching(int edge_id, const std::vector<std::pair<int, int>>& pairs)
{
    const Edge& e = base_.edge(edge_id);
    std::vector<int> fwd(fold_[e.u], -1);
    for (auto [s, t] : pairs) {
        if (s < 0 || s >= fold_[e.u]) {
            throw std::invalid_argument("set_matching: slot out of range");
        }
        if (fwd[s] >= 0) {
            throw std::invalid_argument("set_matching: matching is not injective");
        }
        fwd[s] = t;
    }
    set_matching(edge_id, fwd);
}

std::vector<std::pair<int, int>> Cover::matching_pairs(int edge_id) const
{
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s < static_cast<int>(forward_[edge_id].size()); ++s) {
        if (forward_[edge_id][s] >= 0) {
            out.emplace_back(s, forward_[edge_id][s]);
        }
    }
    return out;
}

bool Cover::is_full(int k) const
{
    for (int f : fold_) {
        if (f != k) {
            return false;
        }
    }
    for (const auto& fwd : forward_) {
        if (std::find(fwd.begin(), fwd.end(), -1) != fwd.end()) {
            return false;
        }
    }
    return true;
}

bool Cover::is_full() const
{
    auto k = uniform_fold();
    return k ? is_full(*k) : base_.n() == 0;
}

std::vector<CoverViolation> validate(const RawCover& raw)
{
    std::vector<CoverViolation> out;
    const Graph& g = raw.base;
    if (static_cast<int>(raw.fold.size()) != g.n()) {
        out.push_back({1, "fold vector has " + std::to_string(raw.fold.size()) + " entries for " +
                              std::to_string(g.n()) + " vertices"});
        return out;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (raw.fold[v] < 1 || raw.fold[v] > kMaxFold) {
            out.push_back({1, "list of vertex " + std::to_string(v) + " has unsupported size", v});
        }
    }
    if (!out.empty()) {
        return out;
    }
    std::set<std::pair<int, int>> seen_edges;
    for (const auto& [key, pairs] : raw.matchings) {
        auto [u, v] = key;
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) {
            out.push_back({1, "matching names a vertex outside the graph", u, v});
            continue;
        }
        if (u == v) {
            out.push_back({4, "matching inside the list of vertex " + std::to_string(u) +
                                  " (list slots are already a clique)", u, v});
            continue;
        }
        if (!g.has_edge(u, v)) {
            if (!pairs.empty()) {
                out.push_back({2, "cover edges between lists of non-adjacent vertices " + std::to_string(u) + " and " +
                                      std::to_string(v), u, v, pairs.front().first, pairs.front().second});
            }
            continue;
        }
        if (!seen_edges.insert({std::min(u, v), std::max(u, v)}).second) {
            out.push_back({3, "edge " + std::to_string(u) + "-" + std::to_string(v) + " has two matchings", u, v});
            continue;
        }
        std::map<int, int> from_u;
        std::map<int, int> from_v;
        for (auto [s, t] : pairs) {
            if (s < 0 || s >= raw.fold[u] || t < 0 || t >= raw.fold[v]) {
                out.push_back({1, "slot outside its list", u, v, s, t});
                continue;
            }
            auto [it1, fresh1] = from_u.emplace(s, t);
            auto [it2, fresh2] = from_v.emplace(t, s);
            if (!fresh1 && it1->second != t) {
                out.push_back({3, "slot " + std::to_string(s + 1) + " of vertex " + std::to_string(u) +
                                      " matched twice", u, v, s, t});
            } else if (!fresh2 && it2->second != s) {
                out.push_back({3, "slot " + std::to_string(t + 1) + " of vertex " + std::to_string(v) +
                                      " matched twice", u, v, s, t});
            }
        }
    }
    return out;
}

RawCover to_raw(const Cover& cover)
{
    RawCover raw{cover.base(), cover.folds(), {}};
    for (int id = 0; id < cover.base().m(); ++id) {
        const Edge& e = cover.base().edge(id);
        raw.matchings[{e.u, e.v}] = cover.matching_pairs(id);
    }
    return raw;
}

std::vector<CoverViolation> validate(const Cover& cover)
{
    return validate(to_raw(cover));
}

Cover cover_from_raw(const RawCover& raw)
{
    auto violations = validate(raw);
    if (!violations.empty()) {
        std::string msg = "invalid cover:";
        for (const auto& v : violations) {
            msg += " [axiom " + std::to_string(v.axiom) + "] " + v.message + ";";
        }
        throw std::invalid_argument(msg);
    }
    Cover cover(raw.base, raw.fold);
    for (const auto& [key, pairs] : raw.matchings) {
        auto [u, v] = key;
        if (!raw.base.has_edge(u, v)) {
            continue;
        }
        int id = raw.base.edge_id(u, v);
        std::vector<std::pair<int, int>> oriented;
        for (auto [s, t] : pairs) {
            oriented.push_back(u < v ? std::pair{s, t} : std::pair{t, s});
        }
        std::sort(oriented.begin(), oriented.end());
        oriented.erase(std::unique(oriented.begin(), oriented.end()), oriented.end());
        cover.set_matching(id, oriented);
    }
    return cover;
}

Cover cover_from_lists(const Graph& g, const ListAssignment& lists)
{
    if (lists.size() != g.n()) {
        throw std::invalid_argument("cover_from_lists: list count differs from vertex count");
    }
    std::vector<int> fold(g.n());
    for (int v = 0; v < g.n(); ++v) {
        fold[v] = static_cast<int>(lists.list(v).size());
    }
    Cover cover(g, fold);
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        const auto& lu = lists.list(e.u);
        const auto& lv = lists.list(e.v);
        std::vector<int> fwd(lu.size(), -1);
        for (size_t s = 0; s < lu.size(); ++s) {
            auto it = std::lower_bound(lv.begin(), lv.end(), lu[s]);
            if (it != lv.end() && *it == lu[s]) {
                fwd[s] = static_cast<int>(it - lv.begin());
            }
        }
        cover.set_matching(id, fwd);
    }
    return cover;
}

Cover identity_cover(const Graph& g, int k)
{
    Cover cover(g, std::vector<int>(g.n(), k));
    const Perm id = identity_perm(k);
    for (int e = 0; e < g.m(); ++e) {
        cover.set_matching(e, id);
    }
    return cover;
}

std::pair<Vertex, int> CoverGraph::slot_of(int id) const
{
    auto it = std::upper_bound(offset.begin(), offset.end(), id);
    auto v = static_cast<Vertex>(it - offset.begin()) - 1;
    return {v, id - offset[v]};
}

CoverGraph expand(const Cover& cover)
{
    const Graph& g = cover.base();
    CoverGraph h;
    h.offset.resize(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) {
        h.offset[v + 1] = h.offset[v] + cover.fold(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.n(); ++v) {
        for (int a = 0; a < cover.fold(v); ++a) {
            for (int b = a + 1; b < cover.fold(v); ++b) {
                edges.emplace_back(h.id(v, a), h.id(v, b));
            }
        }
    }
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        for (auto [s, t] : cover.matching_pairs(id)) {
            edges.emplace_back(h.id(e.u, s), h.id(e.v, t));
        }
    }
    h.graph = Graph(h.offset[g.n()], edges);
    return h;
}

std::string to_dimacs(const CoverGraph& h, const std::string& comment)
{
    std::ostringstream out;
    if (!comment.empty()) {
        out << "c " << comment << "\n";
    }
    for (int x = 0; x < h.graph.n(); ++x) {
        auto [v, s] = h.slot_of(x);
        out << "c vertex " << x + 1 << " = base " << v << " slot " << s + 1 << "\n";
    }
    out << "p edge " << h.graph.n() << " " << h.graph.m() << "\n";
    for (const auto& e : h.graph.edges()) {
        out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    }
    return out.str();
}

UntwistResult untwist(const Cover& cover, const std::vector<int>& forest_edges)
{
    const Graph& g = cover.base();
    if (!is_forest(g, forest_edges)) {
        throw std::invalid_argument("untwist: edge set is not a forest");
    }
    std::vector<std::vector<Neighbour>> tree(g.n());
    for (int id : forest_edges) {
        const Edge& e = g.edge(id);
        if (cover.fold(e.u) != cover.fold(e.v)) {
            throw PreconditionError("untwist: forest edge joins lists of different sizes");
        }
        const auto& fwd = cover.mate_map(e.u, id);
        if (std::find(fwd.begin(), fwd.end(), -1) != fwd.end()) {
            throw PreconditionError("untwist: forest edge matching is not a bijection");
        }
        tree[e.u].push_back({e.v, id});
        tree[e.v].push_back({e.u, id});
    }
    UntwistResult out;
    out.relabel.assign(g.n(), {});
    for (int root = 0; root < g.n(); ++root) {
        if (!out.relabel[root].empty()) {
            continue;
        }
        out.relabel[root] = identity_perm(cover.fold(root));
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int p = q.front();
            q.pop();
            for (const auto& nb : tree[p]) {
                if (!out.relabel[nb.vertex].empty()) {
                    continue;
                }
                // the image of slot s of p across the edge takes the new label of s
                const auto& phi = cover.mate_map(p, nb.edge);
                Perm r(cover.fold(nb.vertex));
                for (int s = 0; s < cover.fold(p); ++s) {
                    r[phi[s]] = out.relabel[p][s];
                }
                out.relabel[nb.vertex] = std::move(r);
                q.push(nb.vertex);
            }
        }
    }
    out.cover = Cover(g, cover.folds());
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        std::vector<int> fwd(cover.fold(e.u), -1);
        const auto& old = cover.mate_map(e.u, id);
        for (int s = 0; s < cover.fold(e.u); ++s) {
            if (old[s] >= 0) {
                fwd[out.relabel[e.u][s]] = out.relabel[e.v][old[s]];
            }
        }
        out.cover.set_matching(id, fwd);
    }
    return out;
}

Perm monodromy(const Cover& cover, const std::vector<Vertex>& walk)
{
    if (walk.empty()) {
        throw std::invalid_argument("monodromy: empty walk");
    }
    const Graph& g = cover.base();
    Perm p = identity_perm(cover.fold(walk.front()));
    for (size_t i = 0; i < walk.size(); ++i) {
        Vertex from = walk[i];
        Vertex to = walk[(i + 1) % walk.size()];
        if (walk.size() == 1) {
            break;
        }
        int id = g.edge_id(from, to);
        if (id < 0) {
            throw std::invalid_argument("monodromy: walk uses a non-edge " + std::to_string(from) + "-" +
                                        std::to_string(to));
        }
        if (cover.fold(from) != cover.fold(to)) {
            throw PreconditionError("monodromy: unequal list sizes along walk");
        }
        const auto& phi = cover.mate_map(from, id);
        for (int& x : p) {
            x = phi[x];
            if (x < 0) {
                throw PreconditionError("monodromy: partial matching along walk");
            }
        }
    }
    return p;
}

std::vector<Vertex> fundamental_cycle(const Graph& g, const std::vector<int>& forest_edges, int edge_id)
{
    const Edge& target = g.edge(edge_id);
    std::vector<std::vector<int>> tree(g.n());
    for (int id : forest_edges) {
        if (id == edge_id) {
            throw std::invalid_argument("fundamental_cycle: edge belongs to the forest");
        }
        tree[g.edge(id).u].push_back(g.edge(id).v);
        tree[g.edge(id).v].push_back(g.edge(id).u);
    }
    // path from target.v back to target.u inside the forest
    std::vector<int> parent(g.n(), -2);
    std::queue<int> q;
    q.push(target.u);
    parent[target.u] = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : tree[x]) {
            if (parent[y] == -2) {
                parent[y] = x;
                q.push(y);
            }
        }
    }
    if (parent[target.v] == -2) {
        throw std::invalid_argument("fundamental_cycle: endpoints lie in different forest components");
    }
    std::vector<Vertex> walk{target.u};
    for (int x = target.v; x != target.u; x = parent[x]) {
        walk.push_back(x);
    }
    return walk;
}

std::optional<ListAssignment> is_list_cover(const Cover& cover)
{
    // Slots joined by matching edges must share a name, so the coarsest constraint is the
    // connected components of the matching-edge graph. Giving every component its own
    // colour is the finest admissible naming; if it fails, every coarser naming fails too.
    const Graph& g = cover.base();
    std::vector<int> offset(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) {
        offset[v + 1] = offset[v] + cover.fold(v);
    }
    std::vector<int> parent(offset[g.n()]);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        for (auto [s, t] : cover.matching_pairs(id)) {
            parent[find(offset[e.u] + s)] = find(offset[e.v] + t);
        }
    }
    std::vector<int> name(offset[g.n()], 0);
    int next = 0;
    std::vector<std::vector<int>> lists(g.n());
    for (int v = 0; v < g.n(); ++v) {
        for (int s = 0; s < cover.fold(v); ++s) {
            int root = find(offset[v] + s);
            if (name[root] == 0) {
                name[root] = ++next;
            }
            lists[v].push_back(name[root]);
        }
        std::vector<int> sorted = lists[v];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return std::nullopt;
        }
    }
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        for (int s = 0; s < cover.fold(e.u); ++s) {
            for (int t = 0; t < cover.fold(e.v); ++t) {
                if (lists[e.u][s] == lists[e.v][t] && cover.mate(e.u, s, id) != t) {
                    return std::nullopt;
                }
            }
        }
    }
    // Slot order must follow colour order for cover_from_lists to reproduce this cover;
    // the recovered assignment is returned as a set per vertex, which is what callers compare.
    return ListAssignment(std::move(lists));
}

Cover induced_subcover(const Cover& cover, const std::vector<Vertex>& keep)
{
    const Graph& g = cover.base();
    Graph sub = induced_subgraph(g, keep);
    std::vector<int> fold;
    fold.reserve(keep.size());
    for (Vertex v : keep) {
        fold.push_back(cover.fold(v));
    }
    Cover out(sub, fold);
    for (int id = 0; id < sub.m(); ++id) {
        const Edge& e = sub.edge(id);
        Vertex a = keep[e.u];
        Vertex b = keep[e.v];
        int orig = g.edge_id(a, b);
        std::vector<int> fwd(cover.fold(a), -1);
        for (int s = 0; s < cover.fold(a); ++s) {
            fwd[s] = cover.mate(a, s, orig);
        }
        out.set_matching(id, fwd);
    }
    return out;
}

Cover random_full_cover(const Graph& g, int k, std::mt19937_64& rng)
{
    Cover cover(g, std::vector<int>(g.n(), k));
    Perm p = identity_perm(k);
    for (int id = 0; id < g.m(); ++id) {
        std::shuffle(p.begin(), p.end(), rng);
        cover.set_matching(id, p);
    }
    return cover;
}

Cover random_untwisted_cover(const Graph& g, int k, const std::vector<int>& forest_edges, std::mt19937_64& rng)
{
    Cover cover(g, std::vector<int>(g.n(), k));
    std::vector<bool> in_forest(g.m(), false);
    for (int id : forest_edges) {
        in_forest.at(id) = true;
    }
    Perm p = identity_perm(k);
    for (int id = 0; id < g.m(); ++id) {
        if (in_forest[id]) {
            cover.set_matching(id, identity_perm(k));
        } else {
            std::shuffle(p.begin(), p.end(), rng);
            cover.set_matching(id, p);
        }
    }
    return cover;
}

CoverEnumerator::CoverEnumerator(Graph g, int k, std::vector<int> forest_edges)
    : g_(std::move(g)), k_(k), forest_(std::move(forest_edges))
{
    if (k < 1 || k > 12) {
        throw PreconditionError("enumerate_covers: fold must lie in 1..12");
    }
    if (!is_forest(g_, forest_)) {
        throw std::invalid_argument("enumerate_covers: edge set is not a forest");
    }
    std::sort(forest_.begin(), forest_.end());
    for (int id = 0; id < g_.m(); ++id) {
        if (!std::binary_search(forest_.begin(), forest_.end(), id)) {
            free_.push_back(id);
        }
    }
    const std::uint64_t base = factorial(k);
    for (size_t i = 0; i < free_.size(); ++i) {
        if (count_ > (std::uint64_t{1} << 63) / base) {
            throw CapExceeded("enumerate_covers: more than 2^63 covers");
        }
        count_ *= base;
    }
    if (base <= 40320) {
        perms_ = all_perms(k);
    }
}

CoverEnumerator::CoverEnumerator(Graph g, int k) : CoverEnumerator(g, k, spanning_forest(g)) {}

Cover CoverEnumerator::at(std::uint64_t index) const
{
    Cover cover = identity_cover(g_, k_);
    assign(index, cover);
    return cover;
}

void CoverEnumerator::assign(std::uint64_t index, Cover& cover) const
{
    if (index >= count_) {
        throw std::out_of_range("enumerate_covers: index out of range");
    }
    const std::uint64_t base = factorial(k_);
    // the last free edge is the least significant digit
    for (auto it = free_.rbegin(); it != free_.rend(); ++it) {
        std::uint64_t digit = index % base;
        index /= base;
        cover.set_matching(*it, perms_.empty() ? perm_unrank(digit, k_) : perms_[digit]);
    }
}

namespace {

std::vector<VertexMask> adjacency_masks(const Graph& g)
{
    std::vector<VertexMask> adj(g.n(), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= VertexMask{1} << e.v;
        adj[e.v] |= VertexMask{1} << e.u;
    }
    return adj;
}

bool mask_connected(VertexMask s, const std::vector<VertexMask>& adj)
{
    VertexMask seen = s & (~s + 1);
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f; f &= f - 1) {
            next |= adj[__builtin_ctzll(f)];
        }
        next &= s & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

}  // namespace

std::uint64_t for_each_maximal_list_assignment(const Graph& g, int k,
                                               const std::function<bool(const ListAssignment&)>& visit)
{
    const int n = g.n();
    if (n > 24) {
        throw CapExceeded("list enumeration supports at most 24 vertices");
    }
    if (k < 1) {
        throw PreconditionError("list enumeration: k must be positive");
    }
    const auto adj = adjacency_masks(g);
    std::vector<VertexMask> supports;
    for (VertexMask s = 1; s < (VertexMask{1} << n); ++s) {
        if (__builtin_popcountll(s) >= 2 && mask_connected(s, adj)) {
            supports.push_back(s);
        }
    }
    // larger supports first so that the hardest configurations are met early
    std::stable_sort(supports.begin(), supports.end(),
                     [](VertexMask a, VertexMask b) { return __builtin_popcountll(a) > __builtin_popcountll(b); });

    std::vector<int> capacity(n, k);
    std::vector<int> chosen;
    std::uint64_t visited = 0;
    bool stop = false;

    auto spare_mask = [&] {
        VertexMask m = 0;
        for (int v = 0; v < n; ++v) {
            if (capacity[v] > 0) {
                m |= VertexMask{1} << v;
            }
        }
        return m;
    };
    auto emit = [&] {
        std::vector<std::vector<int>> lists(n);
        int colour = 1;
        for (int idx : chosen) {
            for (VertexMask s = supports[idx]; s; s &= s - 1) {
                lists[__builtin_ctzll(s)].push_back(colour);
            }
            ++colour;
        }
        for (int v = 0; v < n; ++v) {
            while (static_cast<int>(lists[v].size()) < k) {
                lists[v].push_back(colour++);
            }
        }
        ++visited;
        if (!visit(ListAssignment(std::move(lists)))) {
            stop = true;
        }
    };
    std::function<void(size_t)> dfs = [&](size_t start) {
        if (stop) {
            return;
        }
        VertexMask spare = spare_mask();
        bool maximal = true;
        for (VertexMask s = spare; s; s &= s - 1) {
            if (adj[__builtin_ctzll(s)] & spare) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            emit();
            return;
        }
        for (size_t t = start; t < supports.size() && !stop; ++t) {
            if ((supports[t] & spare) != supports[t]) {
                continue;
            }
            for (VertexMask s = supports[t]; s; s &= s - 1) {
                --capacity[__builtin_ctzll(s)];
            }
            chosen.push_back(static_cast<int>(t));
            dfs(t);
            chosen.pop_back();
            for (VertexMask s = supports[t]; s; s &= s - 1) {
                ++capacity[__builtin_ctzll(s)];
            }
        }
    };
    dfs(0);
    return visited;
}

std::uint64_t for_each_canonical_list_assignment(const Graph& g, int k, int palette,
                                                 const std::function<bool(const ListAssignment&)>& visit)
{
    const int n = g.n();
    if (k < 1 || palette < k) {
        return 0;
    }
    std::vector<std::vector<int>> lists(n);
    std::uint64_t visited = 0;
    bool stop = false;
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (stop) {
            return;
        }
        if (v == n) {
            ++visited;
            if (!visit(ListAssignment(lists))) {
                stop = true;
            }
            return;
        }
        // keep `old` colours from {1..used} and introduce k-old fresh ones
        for (int old = std::min(k, used); old >= 0 && !stop; --old) {
            int fresh = k - old;
            if (used + fresh > palette) {
                continue;
            }
            std::vector<int> pick(old);
            std::function<void(int, int)> choose = [&](int pos, int from) {
                if (stop) {
                    return;
                }
                if (pos == old) {
                    lists[v] = pick;
                    for (int j = 1; j <= fresh; ++j) {
                        lists[v].push_back(used + j);
                    }
                    rec(v + 1, used + fresh);
                    return;
                }
                for (int c = from; c <= used - (old - pos - 1); ++c) {
                    pick[pos] = c;
                    choose(pos + 1, c + 1);
                }
            };
            choose(0, 1);
        }
    };
    rec(0, 0);
    return visited;
}

}  // namespace listpack
