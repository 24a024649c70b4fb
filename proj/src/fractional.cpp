#include "listpack/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>
#include <memory>

namespace listpack {

namespace {

using Mask = std::uint64_t;

Mask full_mask(int k)
{
    return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1;
}

/// Slots of v blocked by the chosen slots of its already-decided neighbours.
Mask blocked(const Cover& cover, Vertex v, const std::vector<int>& chosen)
{
    Mask out = 0;
    for (const auto& nb : cover.base().neighbours(v)) {
        int c = chosen[nb.vertex];
        if (c >= 0) {
            int s = cover.mate(nb.vertex, c, nb.edge);
            if (s >= 0) {
                out |= Mask{1} << s;
            }
        }
    }
    return out;
}

/// DFS over transversals in vertex-id order restricted to `allowed[v]`.
std::uint64_t transversal_dfs(const Cover& cover, const std::vector<Mask>& allowed,
                              const std::function<bool(const Transversal&)>& visit)
{
    const int n = cover.base().n();
    std::vector<int> chosen(n, -1);
    std::uint64_t visited = 0;
    bool stop = false;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            ++visited;
            if (!visit(chosen)) {
                stop = true;
            }
            return;
        }
        Mask options = allowed[v] & ~blocked(cover, v, chosen);
        for (; options && !stop; options &= options - 1) {
            chosen[v] = __builtin_ctzll(options);
            rec(v + 1);
        }
        chosen[v] = -1;
    };
    rec(0);
    return visited;
}

std::vector<Mask> all_allowed(const Cover& cover)
{
    std::vector<Mask> allowed(cover.base().n());
    for (int v = 0; v < cover.base().n(); ++v) {
        allowed[v] = full_mask(cover.fold(v));
    }
    return allowed;
}

/// First transversal within `domain`, or nullopt. Branches on the undecided vertex with the
/// fewest options and prunes neighbours after every choice.
std::optional<Transversal> find_transversal(const Cover& cover, std::vector<Mask> domain)
{
    const Graph& g = cover.base();
    const int n = g.n();
    std::vector<int> chosen(n, -1);
    std::function<bool(std::vector<Mask>&, int)> rec = [&](std::vector<Mask>& dom, int left) {
        if (left == 0) {
            return true;
        }
        int v = -1;
        int best = 65;
        for (int u = 0; u < n; ++u) {
            if (chosen[u] < 0) {
                int c = __builtin_popcountll(dom[u]);
                if (c < best) {
                    best = c;
                    v = u;
                }
            }
        }
        if (best == 0) {
            return false;
        }
        for (Mask options = dom[v]; options; options &= options - 1) {
            const int s = __builtin_ctzll(options);
            std::vector<Mask> next = dom;
            bool dead = false;
            for (const auto& nb : g.neighbours(v)) {
                if (chosen[nb.vertex] >= 0) {
                    continue;
                }
                const int t = cover.mate(v, s, nb.edge);
                if (t >= 0) {
                    next[nb.vertex] &= ~(Mask{1} << t);
                    dead = dead || next[nb.vertex] == 0;
                }
            }
            if (dead) {
                continue;
            }
            chosen[v] = s;
            if (rec(next, left - 1)) {
                return true;
            }
        }
        chosen[v] = -1;
        return false;
    };
    if (!rec(domain, n)) {
        return std::nullopt;
    }
    return chosen;
}

int require_uniform_fold(const Cover& cover)
{
    auto k = cover.uniform_fold();
    if (!k) {
        throw PreconditionError("fractional packing requires every list to have the same size");
    }
    return *k;
}

SparseColumn column_of(const Transversal& t, const std::vector<int>& offset)
{
    SparseColumn c;
    for (size_t v = 0; v < t.size(); ++v) {
        c.entries.emplace_back(offset[v] + t[v], 1);
    }
    return c;
}

Transversal transversal_of(const SparseColumn& c, const std::vector<int>& offset)
{
    Transversal t(offset.size() - 1);
    for (auto [row, val] : c.entries) {
        auto v = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), row) - offset.begin()) - 1;
        t[v] = row - offset[v];
    }
    return t;
}

class TransversalPricer : public ColumnSource {
public:
    TransversalPricer(const Cover& cover, std::vector<int> offset) : cover_(cover), offset_(std::move(offset)) {}

    std::optional<SparseColumn> improving(const std::vector<Rational>& y) override
    {
        std::vector<std::vector<Rational>> w(cover_.base().n());
        for (int v = 0; v < cover_.base().n(); ++v) {
            for (int s = 0; s < cover_.fold(v); ++s) {
                w[v].push_back(y[offset_[v] + s]);
            }
        }
        auto best = max_weight_transversal(cover_, w);
        if (!best || sgn(best->second) <= 0) {
            return std::nullopt;
        }
        return column_of(best->first, offset_);
    }

private:
    const Cover& cover_;
    std::vector<int> offset_;
};

}  // namespace

std::uint64_t for_each_transversal(const Cover& cover, const std::function<bool(const Transversal&)>& visit)
{
    return transversal_dfs(cover, all_allowed(cover), visit);
}

std::vector<Transversal> enumerate_transversals(const Cover& cover, std::uint64_t cap)
{
    std::vector<Transversal> out;
    for_each_transversal(cover, [&](const Transversal& t) {
        if (out.size() >= cap) {
            throw CapExceeded("enumerate_transversals: more than " + std::to_string(cap) +
                              " transversals; use column generation");
        }
        out.push_back(t);
        return true;
    });
    return out;
}

bool is_transversal(const Cover& cover, const Transversal& t)
{
    const Graph& g = cover.base();
    if (static_cast<int>(t.size()) != g.n()) {
        return false;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (t[v] < 0 || t[v] >= cover.fold(v)) {
            return false;
        }
    }
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        if (cover.mate(e.u, t[e.u], id) == t[e.v]) {
            return false;
        }
    }
    return true;
}

std::optional<Transversal> transversal_through(const Cover& cover, Vertex v, int slot)
{
    auto allowed = all_allowed(cover);
    allowed.at(v) = Mask{1} << slot;
    return find_transversal(cover, std::move(allowed));
}

std::vector<std::vector<bool>> check_flexibility(const Cover& cover)
{
    const int n = cover.base().n();
    std::vector<std::vector<bool>> table(n);
    for (int v = 0; v < n; ++v) {
        table[v].assign(cover.fold(v), false);
    }
    // every transversal found marks all of its slots
    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < cover.fold(v); ++s) {
            if (table[v][s]) {
                continue;
            }
            if (auto t = transversal_through(cover, v, s)) {
                for (int w = 0; w < n; ++w) {
                    table[w][(*t)[w]] = true;
                }
            }
        }
    }
    return table;
}

bool all_flexible(const std::vector<std::vector<bool>>& table)
{
    for (const auto& row : table) {
        for (bool b : row) {
            if (!b) {
                return false;
            }
        }
    }
    return true;
}

namespace {

using Scored = std::optional<std::pair<std::vector<int>, mpz_class>>;

Scored branch_and_bound(const Cover& cover, const std::vector<std::vector<mpz_class>>& w)
{
    const int n = cover.base().n();
    const Graph& g = cover.base();
    std::vector<int> chosen(n, -1);
    std::vector<int> best_choice;
    mpz_class best_value;
    bool have_best = false;
    mpz_class current = 0;
    mpz_class bound;
    mpz_class top;

    // domains shrink as neighbours are fixed; branch on the smallest one
    std::function<void(const std::vector<Mask>&, int)> rec = [&](const std::vector<Mask>& dom, int left) {
        if (left == 0) {
            if (!have_best || current > best_value) {
                best_value = current;
                best_choice = chosen;
                have_best = true;
            }
            return;
        }
        bound = current;
        int v = -1;
        int smallest = 65;
        for (int u = 0; u < n; ++u) {
            if (chosen[u] >= 0) {
                continue;
            }
            const int c = __builtin_popcountll(dom[u]);
            if (c < smallest) {
                smallest = c;
                v = u;
            }
            bool first = true;
            for (Mask o = dom[u]; o; o &= o - 1) {
                const int s = __builtin_ctzll(o);
                if (first || w[u][s] > top) {
                    top = w[u][s];
                    first = false;
                }
            }
            bound += top;
        }
        if (have_best && bound <= best_value) {
            return;
        }
        std::vector<int> slots;
        for (Mask o = dom[v]; o; o &= o - 1) {
            slots.push_back(__builtin_ctzll(o));
        }
        std::stable_sort(slots.begin(), slots.end(), [&](int a, int b) { return w[v][a] > w[v][b]; });
        std::vector<Mask> next;
        for (int s : slots) {
            next = dom;
            bool dead = false;
            for (const auto& nb : g.neighbours(v)) {
                if (chosen[nb.vertex] >= 0) {
                    continue;
                }
                const int t = cover.mate(v, s, nb.edge);
                if (t >= 0) {
                    next[nb.vertex] &= ~(Mask{1} << t);
                    dead = dead || next[nb.vertex] == 0;
                }
            }
            if (dead) {
                continue;
            }
            chosen[v] = s;
            current += w[v][s];
            rec(next, left - 1);
            current -= w[v][s];
            chosen[v] = -1;
        }
    };
    rec(all_allowed(cover), n);
    if (!have_best) {
        return std::nullopt;
    }
    return std::pair{best_choice, best_value};
}

struct FrontierPlan {
    std::vector<int> order;
    double states = 1;  // most slot assignments the frontier can carry
    size_t width = 0;   // most frontier vertices
};

/// Vertex order keeping the frontier (processed vertices with unprocessed neighbours) small.
FrontierPlan frontier_order(const Cover& cover)
{
    const Graph& g = cover.base();
    const int n = g.n();
    std::vector<int> order;
    std::vector<bool> done(n, false);
    std::vector<int> pending(n);  // unprocessed neighbours
    for (int v = 0; v < n; ++v) {
        pending[v] = g.degree(v);
    }
    std::vector<bool> active(n, false);
    double worst = 1;
    size_t width = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        double pick_size = 0;
        for (int v = 0; v < n; ++v) {
            if (done[v]) {
                continue;
            }
            // frontier weight after adding v
            double size = pending[v] > 0 ? cover.fold(v) : 1;
            for (int u = 0; u < n; ++u) {
                if (!active[u]) {
                    continue;
                }
                int left = pending[u] - (g.has_edge(u, v) ? 1 : 0);
                if (left > 0) {
                    size *= cover.fold(u);
                }
            }
            if (pick < 0 || size < pick_size) {
                pick = v;
                pick_size = size;
            }
        }
        done[pick] = true;
        order.push_back(pick);
        for (const auto& nb : g.neighbours(pick)) {
            --pending[nb.vertex];
        }
        active[pick] = pending[pick] > 0;
        for (int u = 0; u < n; ++u) {
            if (active[u] && pending[u] == 0) {
                active[u] = false;
            }
        }
        worst = std::max(worst, pick_size * cover.fold(pick));
        width = std::max(width, static_cast<size_t>(std::count(active.begin(), active.end(), true)) + 1);
    }
    return {order, worst, width};
}

/// Exact dynamic programme over `order`, keeping one best partial choice per assignment of
/// the frontier.
Scored frontier_dp(const Cover& cover, const std::vector<int>& order, const std::vector<std::vector<mpz_class>>& w)
{
    const Graph& g = cover.base();
    const int n = g.n();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) {
        position[order[i]] = i;
    }
    // last[v]: step after which v leaves the frontier
    std::vector<int> last(n);
    for (int v = 0; v < n; ++v) {
        last[v] = position[v];
        for (const auto& nb : g.neighbours(v)) {
            last[v] = std::max(last[v], position[nb.vertex]);
        }
    }
    // frontier assignments packed 6 bits per position, in frontier order
    auto slot_at = [](std::uint64_t key, size_t j) { return static_cast<int>(key >> (6 * j) & 63); };
    struct Node {
        std::uint64_t key;
        mpz_class value;
        int parent;
        int slot;
    };
    std::vector<int> frontier;
    std::vector<std::vector<Node>> layers(n + 1);
    layers[0].push_back({0, 0, -1, -1});
    std::unordered_map<std::uint64_t, int> index;
    mpz_class value;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        std::vector<int> next_frontier;
        std::vector<int> keep_index;
        std::vector<std::pair<int, int>> edges_to_v;  // (frontier position, edge id)
        for (size_t j = 0; j < frontier.size(); ++j) {
            if (last[frontier[j]] > i) {
                next_frontier.push_back(frontier[j]);
                keep_index.push_back(static_cast<int>(j));
            }
            const int e = g.edge_id(frontier[j], v);
            if (e >= 0) {
                edges_to_v.emplace_back(static_cast<int>(j), e);
            }
        }
        const bool v_stays = last[v] > i;
        if (v_stays) {
            next_frontier.push_back(v);
        }
        index.clear();
        auto& out = layers[i + 1];
        const auto& in = layers[i];
        for (size_t p = 0; p < in.size(); ++p) {
            Mask banned = 0;
            for (auto [j, e] : edges_to_v) {
                const int t = cover.mate(frontier[j], slot_at(in[p].key, j), e);
                if (t >= 0) {
                    banned |= Mask{1} << t;
                }
            }
            std::uint64_t kept = 0;
            for (size_t j = 0; j < keep_index.size(); ++j) {
                kept |= static_cast<std::uint64_t>(slot_at(in[p].key, keep_index[j])) << (6 * j);
            }
            for (int s = 0; s < cover.fold(v); ++s) {
                if (banned >> s & 1) {
                    continue;
                }
                const std::uint64_t key = v_stays ? kept | static_cast<std::uint64_t>(s) << (6 * keep_index.size()) : kept;
                value = in[p].value + w[v][s];
                auto [it, fresh] = index.try_emplace(key, static_cast<int>(out.size()));
                if (fresh) {
                    out.push_back({key, value, static_cast<int>(p), s});
                } else if (value > out[it->second].value) {
                    out[it->second].value = value;
                    out[it->second].parent = static_cast<int>(p);
                    out[it->second].slot = s;
                }
            }
        }
        frontier = std::move(next_frontier);
        if (out.empty()) {
            return std::nullopt;
        }
    }
    int best = 0;
    for (size_t p = 1; p < layers[n].size(); ++p) {
        if (layers[n][p].value > layers[n][best].value) {
            best = static_cast<int>(p);
        }
    }
    std::vector<int> choice(n, -1);
    int at = best;
    for (int i = n; i > 0; --i) {
        choice[order[i - 1]] = layers[i][at].slot;
        at = layers[i][at].parent;
    }
    return std::pair{choice, layers[n][best].value};
}

constexpr double kFrontierStates = 1 << 20;

}  // namespace

std::optional<std::pair<Transversal, Rational>> max_weight_transversal(const Cover& cover,
                                                                        const std::vector<std::vector<Rational>>& weights)
{
    const int n = cover.base().n();
    mpz_class den = 1;
    for (const auto& row : weights) {
        for (const auto& q : row) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        }
    }
    std::vector<std::vector<mpz_class>> w(n);
    for (int v = 0; v < n; ++v) {
        for (const auto& q : weights[v]) {
            w[v].push_back(q.get_num() * (den / q.get_den()));
        }
    }
    const auto plan = frontier_order(cover);
    const bool narrow = plan.states <= kFrontierStates && plan.width <= 10;
    Scored best = narrow ? frontier_dp(cover, plan.order, w) : branch_and_bound(cover, w);
    if (!best) {
        return std::nullopt;
    }
    Rational value(best->second, den);
    value.canonicalize();
    return std::pair{best->first, value};
}

std::vector<int> slot_offsets(const Cover& cover)
{
    std::vector<int> offset(cover.base().n() + 1, 0);
    for (int v = 0; v < cover.base().n(); ++v) {
        offset[v + 1] = offset[v] + cover.fold(v);
    }
    return offset;
}

namespace {

// Float column generation on  min sum x  s.t. every slot covered exactly once, over
// transversals plus single-slot columns. Any y has  LP >= sum(y) / max_T y(T), and the LP
// optimum is k exactly when a fractional packing exists, so sum(y) > k max_T y(T) (checked
// in exact arithmetic) certifies infeasibility. Returns that certificate shifted to a
// Farkas vector for the slot equations, or nullopt if none shows up.
constexpr double kSmoothing = 0.5;

std::optional<std::vector<Rational>> covering_bound_certificate(const Cover& cover, const std::vector<int>& offset,
                                                                int k, std::uint64_t max_pivots)
{
    const int n = cover.base().n();
    const int m = offset[n];
    std::vector<std::vector<int>> cols;  // rows with coefficient 1
    for (int i = 0; i < m; ++i) {
        cols.push_back({i});
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        basis[i] = i;
    }
    std::vector<std::vector<double>> binv(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) {
        binv[i][i] = 1;
    }
    std::vector<double> x(m, 1.0);

    auto reinvert = [&]() {
        std::vector<std::vector<double>> a(m, std::vector<double>(2 * m, 0.0));
        for (int j = 0; j < m; ++j) {
            for (int r : cols[basis[j]]) {
                a[r][j] = 1;
            }
        }
        for (int i = 0; i < m; ++i) {
            a[i][m + i] = 1;
        }
        for (int c = 0; c < m; ++c) {
            int piv = c;
            for (int r = c + 1; r < m; ++r) {
                if (std::abs(a[r][c]) > std::abs(a[piv][c])) {
                    piv = r;
                }
            }
            if (std::abs(a[piv][c]) < 1e-12) {
                return false;
            }
            std::swap(a[piv], a[c]);
            const double inv = 1 / a[c][c];
            for (auto& e : a[c]) {
                e *= inv;
            }
            for (int r = 0; r < m; ++r) {
                if (r != c && a[r][c] != 0) {
                    const double f = a[r][c];
                    for (int j = c; j < 2 * m; ++j) {
                        a[r][j] -= f * a[c][j];
                    }
                }
            }
        }
        for (int i = 0; i < m; ++i) {
            binv[i].assign(a[i].begin() + m, a[i].end());
            x[i] = 0;
            for (int j = 0; j < m; ++j) {
                x[i] += binv[i][j];
            }
        }
        return true;
    };

    std::vector<double> y(m);
    std::vector<double> centre;
    double best_bound = 0;
    std::vector<Rational> yq(m);
    std::vector<std::vector<Rational>> w(n);
    for (std::uint64_t pivot = 0; pivot < max_pivots; ++pivot) {
        if (pivot % 100 == 99 && !reinvert()) {
            return std::nullopt;
        }
        std::fill(y.begin(), y.end(), 0.0);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                y[j] += binv[i][j];
            }
        }
        int enter = -1;
        double best = -1e-9;
        for (size_t c = 0; c < cols.size(); ++c) {
            double d = 1;
            for (int r : cols[c]) {
                d -= y[r];
            }
            if (d < best) {
                best = d;
                enter = static_cast<int>(c);
            }
        }
        if (enter < 0) {
            // pool is optimal: price exactly at a point between y and the best dual seen so far
            std::optional<std::pair<Transversal, Rational>> top;
            for (int attempt = 0; attempt < 2; ++attempt) {
                std::vector<double> probe = y;
                if (attempt == 0 && !centre.empty()) {
                    for (int i = 0; i < m; ++i) {
                        probe[i] = kSmoothing * centre[i] + (1 - kSmoothing) * y[i];
                    }
                }
                Rational total = 0;
                for (int i = 0; i < m; ++i) {
                    yq[i] = Rational(std::ldexp(std::round(std::ldexp(probe[i], 40)), -40));
                    total += yq[i];
                }
                for (int v = 0; v < n; ++v) {
                    w[v].assign(yq.begin() + offset[v], yq.begin() + offset[v + 1]);
                }
                top = max_weight_transversal(cover, w);
                if (!top || sgn(top->second) <= 0) {
                    return std::nullopt;
                }
                if (total > k * top->second) {
                    std::vector<Rational> farkas(m);
                    const Rational shift(1, n);
                    for (int i = 0; i < m; ++i) {
                        farkas[i] = yq[i] / top->second - shift;
                    }
                    return farkas;
                }
                const double scale = top->second.get_d();
                if (const double bound = total.get_d() / scale; bound > best_bound) {
                    best_bound = bound;
                    centre = probe;
                    for (auto& e : centre) {
                        e /= scale;
                    }
                }
                double reduced = 1;
                for (int v = 0; v < n; ++v) {
                    reduced -= y[offset[v] + top->first[v]];
                }
                if (reduced < -1e-9) {
                    break;
                }
                if (attempt == 1) {
                    return std::nullopt;
                }
            }
            std::vector<int> rows;
            for (int v = 0; v < n; ++v) {
                rows.push_back(offset[v] + top->first[v]);
            }
            cols.push_back(std::move(rows));
            enter = static_cast<int>(cols.size()) - 1;
        }
        std::vector<double> d(m, 0.0);
        for (int i = 0; i < m; ++i) {
            for (int r : cols[enter]) {
                d[i] += binv[i][r];
            }
        }
        int leave = -1;
        for (int i = 0; i < m; ++i) {
            if (d[i] > 1e-9 && (leave < 0 || x[i] * d[leave] < x[leave] * d[i] - 1e-12 ||
                                (x[i] * d[leave] <= x[leave] * d[i] + 1e-12 && d[i] > d[leave]))) {
                leave = i;
            }
        }
        if (leave < 0) {
            return std::nullopt;
        }
        const double ratio = x[leave] / d[leave];
        const double inv = 1 / d[leave];
        for (int j = 0; j < m; ++j) {
            binv[leave][j] *= inv;
        }
        for (int i = 0; i < m; ++i) {
            if (i != leave && d[i] != 0) {
                const double f = d[i];
                for (int j = 0; j < m; ++j) {
                    binv[i][j] -= f * binv[leave][j];
                }
                x[i] = std::max(0.0, x[i] - f * ratio);
            }
        }
        x[leave] = ratio;
        basis[leave] = enter;
    }
    return std::nullopt;
}

}  // namespace

FractionalResult fractional_packing(const Cover& cover, const FractionalOptions& options)
{
    const int k = require_uniform_fold(cover);
    const int n = cover.base().n();
    const auto offset = slot_offsets(cover);
    const int rows = offset[n];
    FractionalResult r;
    if (options.integral_shortcut) {
        if (auto p = find_packing(cover)) {
            r.feasible = true;
            r.method = "integral";
            for (int i = 0; i < k; ++i) {
                r.support.push_back({p->colourings[i], Rational(1)});
            }
            return r;
        }
    }
    if (options.flexibility_prefilter) {
        for (int v = 0; v < n; ++v) {
            for (int s = 0; s < k; ++s) {
                if (!transversal_through(cover, v, s)) {
                    r.method = "flexibility";
                    r.dual.assign(rows, 0);
                    r.dual[offset[v] + s] = 1;
                    return r;
                }
            }
        }
    }
    if (options.covering_bound && n > 0) {
        if (auto y = covering_bound_certificate(cover, offset, k, options.covering_bound_pivots)) {
            r.method = "covering-bound";
            r.dual = std::move(*y);
            return r;
        }
    }
    std::vector<SparseColumn> pool;
    std::unique_ptr<TransversalPricer> pricer;
    bool generate = options.column_generation;
    if (!generate) {
        try {
            for (const auto& t : enumerate_transversals(cover, options.column_cap)) {
                pool.push_back(column_of(t, offset));
            }
        } catch (const CapExceeded&) {
            pool.clear();
            generate = true;
        }
    }
    if (generate) {
        pricer = std::make_unique<TransversalPricer>(cover, offset);
        if (auto t = transversal_through(cover, 0, 0); n > 0 && t) {
            pool.push_back(column_of(*t, offset));
        }
    }
    std::vector<Rational> rhs(rows, Rational(1));
    auto sol = generate && options.float_guided ? solve_feasibility_guided(std::move(pool), rhs, pricer.get())
                                                : solve_feasibility(std::move(pool), rhs, pricer.get());
    r.method = generate ? "column-generation" : "lp";
    r.columns = sol.columns.size();
    r.pivots = sol.pivots;
    r.feasible = sol.feasible;
    if (sol.feasible) {
        for (size_t j = 0; j < sol.columns.size(); ++j) {
            if (sgn(sol.x[j]) > 0) {
                r.support.push_back({transversal_of(sol.columns[j], offset), sol.x[j]});
            }
        }
    } else {
        r.dual = std::move(sol.farkas);
    }
    return r;
}

bool verify_fractional(const Cover& cover, const FractionalResult& r)
{
    if (!r.feasible) {
        return false;
    }
    const auto offset = slot_offsets(cover);
    std::vector<Rational> cover_weight(offset.back(), 0);
    for (const auto& wt : r.support) {
        if (sgn(wt.weight) <= 0 || !is_transversal(cover, wt.choice)) {
            return false;
        }
        for (int v = 0; v < cover.base().n(); ++v) {
            cover_weight[offset[v] + wt.choice[v]] += wt.weight;
        }
    }
    for (const auto& w : cover_weight) {
        if (w != 1) {
            return false;
        }
    }
    return true;
}

bool verify_dual(const Cover& cover, const std::vector<Rational>& y)
{
    const auto offset = slot_offsets(cover);
    if (static_cast<int>(y.size()) != offset.back()) {
        return false;
    }
    Rational total = 0;
    for (const auto& q : y) {
        total += q;
    }
    if (sgn(total) <= 0) {
        return false;
    }
    std::vector<std::vector<Rational>> w(cover.base().n());
    for (int v = 0; v < cover.base().n(); ++v) {
        for (int s = 0; s < cover.fold(v); ++s) {
            w[v].push_back(y[offset[v] + s]);
        }
    }
    auto best = max_weight_transversal(cover, w);
    return !best || sgn(best->second) <= 0;
}

SweepResult fractional_sweep(const Graph& g, int k, const SweepOptions& sweep, const FractionalOptions& options)
{
    CoverEnumerator en(g, k);
    auto make = [&]() -> IndexPredicate {
        auto cover = std::make_shared<Cover>(en.at(0));
        return [&en, &options, cover](std::uint64_t index) {
            en.assign(index, *cover);
            return fractional_packing(*cover, options).feasible;
        };
    };
    std::string tag = "frac-n" + std::to_string(g.n()) + "-m" + std::to_string(g.m()) + "-k" + std::to_string(k);
    return run_sweep(en.count(), make, sweep, tag);
}

FractionalNumberResult fractional_packing_number(const Graph& g, FractionalMode mode, int k_max,
                                                 const SweepOptions& sweep, const FractionalOptions& options)
{
    FractionalNumberResult out;
    for (int k = 1; k <= k_max; ++k) {
        if (mode == FractionalMode::Correspondence) {
            CoverEnumerator en(g, k);
            auto r = fractional_sweep(g, k, sweep, options);
            out.instances_checked += r.checked;
            if (r.holds()) {
                out.value = k;
                out.exact = true;
                return out;
            }
            out.witness_cover = en.at(r.failures.front());
        } else {
            std::vector<ListAssignment> configs;
            for_each_maximal_list_assignment(g, k, [&](const ListAssignment& l) {
                configs.push_back(l);
                return true;
            });
            auto make = [&]() -> IndexPredicate {
                return [&](std::uint64_t i) {
                    return fractional_packing(cover_from_lists(g, configs[i]), options).feasible;
                };
            };
            SweepOptions local = sweep;
            local.checkpoint_dir.clear();
            auto r = run_sweep(configs.size(), make, local, "frac-list");
            out.instances_checked += r.checked;
            if (r.holds()) {
                out.value = k;
                out.exact = true;
                return out;
            }
            out.witness_lists = configs[r.failures.front()];
            out.witness_cover = cover_from_lists(g, configs[r.failures.front()]);
        }
        out.witness_certificate = fractional_packing(*out.witness_cover, options);
    }
    out.value = k_max + 1;
    out.exact = false;
    return out;
}

GeneralFractionalResult general_fractional_packing(const Graph& g, const ListAssignment& lists, std::uint64_t cap)
{
    const Cover cover = cover_from_lists(g, lists);
    const int n = g.n();
    const auto offset = slot_offsets(cover);
    const int slot_rows = offset[n];
    const int total_row = slot_rows;

    // maximal independent sets of the cover graph: partial transversals no slot can join
    std::vector<SparseColumn> pool;
    std::vector<int> chosen(n, -1);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            for (int w = 0; w < n; ++w) {
                if (chosen[w] < 0 && (full_mask(cover.fold(w)) & ~blocked(cover, w, chosen))) {
                    return;
                }
            }
            if (pool.size() >= cap) {
                throw CapExceeded("general_fractional_packing: more than " + std::to_string(cap) +
                                  " maximal independent sets");
            }
            SparseColumn c;
            for (int w = 0; w < n; ++w) {
                if (chosen[w] >= 0) {
                    c.entries.emplace_back(offset[w] + chosen[w], 1);
                }
            }
            c.entries.emplace_back(total_row, 1);
            pool.push_back(std::move(c));
            return;
        }
        Mask options = full_mask(cover.fold(v)) & ~blocked(cover, v, chosen);
        for (; options; options &= options - 1) {
            chosen[v] = __builtin_ctzll(options);
            rec(v + 1);
        }
        chosen[v] = -1;
        rec(v + 1);
    };
    rec(0);
    const auto independent = pool.size();
    for (int row = 0; row < slot_rows; ++row) {
        pool.push_back(SparseColumn{{{row, -1}}});
    }
    pool.push_back(SparseColumn{{{total_row, 1}}});

    std::vector<Rational> rhs(slot_rows + 1);
    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < cover.fold(v); ++s) {
            rhs[offset[v] + s] = Rational(1, cover.fold(v));
        }
    }
    rhs[total_row] = 1;
    auto sol = solve_feasibility(pool, rhs);

    GeneralFractionalResult r;
    r.columns = independent;
    r.feasible = sol.feasible;
    if (!sol.feasible) {
        r.dual = std::move(sol.farkas);
        return r;
    }
    r.marginals.resize(n);
    for (int v = 0; v < n; ++v) {
        r.marginals[v].assign(cover.fold(v), 0);
    }
    for (size_t j = 0; j < independent; ++j) {
        if (sgn(sol.x[j]) <= 0) {
            continue;
        }
        PartialColouring pc(n, 0);
        for (auto [row, val] : sol.columns[j].entries) {
            if (row == total_row) {
                continue;
            }
            auto v = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), row) - offset.begin()) - 1;
            pc[v] = lists.list(v)[row - offset[v]];
            r.marginals[v][row - offset[v]] += sol.x[j];
        }
        r.support.emplace_back(std::move(pc), sol.x[j]);
    }
    return r;
}

bool verify_general_dual(const Graph& g, const ListAssignment& lists, const std::vector<Rational>& y)
{
    const int n = g.n();
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        offset[v + 1] = offset[v] + static_cast<int>(lists.list(v).size());
    }
    if (static_cast<int>(y.size()) != offset[n] + 1) {
        return false;
    }
    const Rational& total = y[offset[n]];
    if (sgn(total) > 0) {
        return false;
    }
    Rational objective = total;
    for (int v = 0; v < n; ++v) {
        for (int s = offset[v]; s < offset[v + 1]; ++s) {
            if (sgn(y[s]) < 0) {
                return false;
            }
            objective += y[s] / static_cast<int>(lists.list(v).size());
        }
    }
    if (sgn(objective) <= 0) {
        return false;
    }
    // every independent set: a colour (or nothing) per vertex, no edge with a shared colour
    std::vector<int> colour(n, 0);
    std::function<bool(int, const Rational&)> rec = [&](int v, const Rational& acc) {
        if (v == n) {
            return acc + total <= 0;
        }
        if (!rec(v + 1, acc)) {
            return false;
        }
        const auto& l = lists.list(v);
        for (size_t i = 0; i < l.size(); ++i) {
            bool clash = false;
            for (const auto& nb : g.neighbours(v)) {
                clash = clash || (nb.vertex < v && colour[nb.vertex] == l[i]);
            }
            if (clash) {
                continue;
            }
            colour[v] = l[i];
            const bool ok = rec(v + 1, acc + y[offset[v] + i]);
            colour[v] = 0;
            if (!ok) {
                return false;
            }
        }
        return true;
    };
    return rec(0, Rational(0));
}

}  // namespace listpack
