#include "listpack/packing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace listpack {

Packing Packing::empty(int k, int n)
{
    Packing p;
    p.k = k;
    p.colourings.assign(k, std::vector<int>(n, -1));
    return p;
}

Perm Packing::at(Vertex v) const
{
    Perm out(k);
    for (int i = 0; i < k; ++i) {
        out[i] = colourings[i][v];
    }
    return out;
}

void Packing::set(Vertex v, const Perm& slots)
{
    for (int i = 0; i < k; ++i) {
        colourings[i][v] = slots[i];
    }
}

std::optional<std::string> packing_violation(const Cover& cover, const Packing& p, bool allow_partial)
{
    const Graph& g = cover.base();
    if (p.k < 1 || static_cast<int>(p.colourings.size()) != p.k) {
        return "packing has no colourings";
    }
    for (const auto& c : p.colourings) {
        if (static_cast<int>(c.size()) != g.n()) {
            return "colouring length differs from vertex count";
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        if (cover.fold(v) != p.k) {
            return "vertex " + std::to_string(v) + " has " + std::to_string(cover.fold(v)) + " slots, not k";
        }
        int coloured = 0;
        std::vector<bool> used(p.k, false);
        for (int i = 0; i < p.k; ++i) {
            int s = p.colourings[i][v];
            if (s < 0) {
                continue;
            }
            ++coloured;
            if (s >= p.k) {
                return "slot out of range at vertex " + std::to_string(v);
            }
            if (used[s]) {
                return "vertex " + std::to_string(v) + " repeats slot " + std::to_string(s + 1);
            }
            used[s] = true;
        }
        if (coloured != 0 && coloured != p.k) {
            return "vertex " + std::to_string(v) + " is coloured by only some colourings";
        }
        if (coloured == 0 && !allow_partial) {
            return "vertex " + std::to_string(v) + " is uncoloured";
        }
    }
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        for (int i = 0; i < p.k; ++i) {
            int su = p.colourings[i][e.u];
            int sv = p.colourings[i][e.v];
            if (su >= 0 && sv >= 0 && cover.mate(e.u, su, id) == sv) {
                return "colouring " + std::to_string(i + 1) + " uses adjacent slots on edge " + std::to_string(e.u) +
                       "-" + std::to_string(e.v);
            }
        }
    }
    return std::nullopt;
}

namespace {

using Mask = std::uint64_t;

bool has_perfect_matching(const Mask* avail, int k)
{
    int match_slot[64];
    std::fill(match_slot, match_slot + k, -1);
    Mask seen = 0;
    std::function<bool(int)> augment = [&](int i) {
        for (Mask free = avail[i] & ~seen; free; free &= free - 1) {
            int s = __builtin_ctzll(free);
            seen |= Mask{1} << s;
            if (match_slot[s] < 0 || augment(match_slot[s])) {
                match_slot[s] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < k; ++i) {
        if (!avail[i]) {
            return false;
        }
        seen = 0;
        if (!augment(i)) {
            return false;
        }
    }
    return true;
}

int require_uniform(const Cover& cover)
{
    auto k = cover.uniform_fold();
    if (!k) {
        if (cover.base().n() == 0) {
            return 0;
        }
        throw PreconditionError("packing requires every list to have the same size");
    }
    return *k;
}

std::vector<Vertex> placement_order(const Graph& g)
{
    auto order = degeneracy(g).order;
    std::reverse(order.begin(), order.end());
    return order;
}

class PackingSearch {
public:
    PackingSearch(const Cover& cover, bool hall) : cover_(cover), hall_(hall)
    {
        const Graph& g = cover.base();
        k_ = require_uniform(cover);
        order_ = placement_order(g);
        assign_.assign(g.n(), {});
        avail_.assign(static_cast<size_t>(g.n()) * std::max(k_, 1), 0);
    }

    /// Calls leaf for each packing whose first placed vertex carries the identity.
    void run(const std::function<bool()>& leaf)
    {
        leaf_ = &leaf;
        stop_ = false;
        if (cover_.base().n() == 0) {
            (*leaf_)();
            return;
        }
        dfs(0);
    }

    const std::vector<Perm>& assignment() const { return assign_; }
    int k() const { return k_; }

private:
    void compute_avail(Vertex v, Mask* out) const
    {
        const Mask full = k_ == 64 ? ~Mask{0} : (Mask{1} << k_) - 1;
        for (int i = 0; i < k_; ++i) {
            out[i] = full;
        }
        for (const auto& nb : cover_.base().neighbours(v)) {
            const Perm& pw = assign_[nb.vertex];
            if (pw.empty()) {
                continue;
            }
            const auto& mates = cover_.mate_map(nb.vertex, nb.edge);
            for (int i = 0; i < k_; ++i) {
                int s = mates[pw[i]];
                if (s >= 0) {
                    out[i] &= ~(Mask{1} << s);
                }
            }
        }
    }

    bool neighbours_feasible(Vertex v)
    {
        Mask buf[64];
        for (const auto& nb : cover_.base().neighbours(v)) {
            if (!assign_[nb.vertex].empty()) {
                continue;
            }
            compute_avail(nb.vertex, buf);
            if (!has_perfect_matching(buf, k_)) {
                return false;
            }
        }
        return true;
    }

    void dfs(size_t depth)
    {
        if (depth == order_.size()) {
            if (!(*leaf_)()) {
                stop_ = true;
            }
            return;
        }
        const Vertex v = order_[depth];
        Mask* avail = &avail_[static_cast<size_t>(v) * k_];
        compute_avail(v, avail);
        Perm p(k_);
        if (depth == 0) {
            assign_[v] = identity_perm(k_);
            if (!hall_ || neighbours_feasible(v)) {
                dfs(1);
            }
            assign_[v].clear();
            return;
        }
        for (int i = 0; i < k_; ++i) {
            if (!avail[i]) {
                return;
            }
        }
        std::function<void(int, Mask)> place = [&](int i, Mask used) {
            if (stop_) {
                return;
            }
            if (i == k_) {
                assign_[v] = p;
                if (!hall_ || neighbours_feasible(v)) {
                    dfs(depth + 1);
                }
                assign_[v].clear();
                return;
            }
            for (Mask free = avail[i] & ~used; free; free &= free - 1) {
                int s = __builtin_ctzll(free);
                p[i] = s;
                place(i + 1, used | (Mask{1} << s));
                if (stop_) {
                    return;
                }
            }
        };
        place(0, 0);
    }

    const Cover& cover_;
    bool hall_;
    int k_ = 0;
    std::vector<Vertex> order_;
    std::vector<Perm> assign_;
    std::vector<Mask> avail_;
    const std::function<bool()>* leaf_ = nullptr;
    bool stop_ = false;
};

Packing packing_from_assignment(const std::vector<Perm>& assign, int k)
{
    Packing p = Packing::empty(k, static_cast<int>(assign.size()));
    for (int v = 0; v < static_cast<int>(assign.size()); ++v) {
        p.set(v, assign[v]);
    }
    return p;
}

}  // namespace

std::optional<Packing> find_packing(const Cover& cover, const FindOptions& options)
{
    PackingSearch search(cover, options.hall_pruning);
    std::optional<Packing> found;
    search.run([&] {
        found = packing_from_assignment(search.assignment(), search.k());
        return false;
    });
    return found;
}

std::uint64_t count_packings(const Cover& cover, std::uint64_t cap)
{
    PackingSearch search(cover, true);
    const std::uint64_t sym = search.k() > 0 ? factorial(search.k()) : 1;
    std::uint64_t leaves = 0;
    search.run([&] {
        ++leaves;
        if (leaves > cap / sym) {
            throw CapExceeded("count_packings: more than " + std::to_string(cap) + " packings");
        }
        return true;
    });
    return cover.base().n() == 0 ? leaves : leaves * sym;
}

std::optional<Perm> match_vertex(const Cover& cover, const Packing& partial, Vertex v,
                                 const std::vector<std::vector<int>>& extra_forbidden)
{
    const int k = partial.k;
    std::vector<std::vector<bool>> ok(k, std::vector<bool>(cover.fold(v), true));
    for (const auto& nb : cover.base().neighbours(v)) {
        if (!partial.colours(nb.vertex)) {
            continue;
        }
        const auto& mates = cover.mate_map(nb.vertex, nb.edge);
        for (int i = 0; i < k; ++i) {
            int s = mates[partial.colourings[i][nb.vertex]];
            if (s >= 0) {
                ok[i][s] = false;
            }
        }
    }
    for (size_t i = 0; i < extra_forbidden.size() && static_cast<int>(i) < k; ++i) {
        for (int s : extra_forbidden[i]) {
            ok[i][s] = false;
        }
    }
    BipartiteGraph bg(k, cover.fold(v));
    for (int i = 0; i < k; ++i) {
        for (int s = 0; s < cover.fold(v); ++s) {
            if (ok[i][s]) {
                bg.add_edge(i, s);
            }
        }
    }
    auto m = maximum_matching(bg);
    if (std::find(m.begin(), m.end(), -1) != m.end()) {
        return std::nullopt;
    }
    return m;
}

Packing greedy_degenerate_packing(const Cover& cover)
{
    const int k = require_uniform(cover);
    const Graph& g = cover.base();
    const auto deg = degeneracy(g);
    if (k < 2 * deg.degeneracy) {
        throw PreconditionError("greedy_degenerate_packing: fold " + std::to_string(k) + " is below twice the degeneracy " +
                                std::to_string(deg.degeneracy));
    }
    Packing p = Packing::empty(k, g.n());
    auto order = deg.order;
    std::reverse(order.begin(), order.end());
    for (Vertex v : order) {
        auto perm = match_vertex(cover, p, v);
        if (!perm) {
            throw std::logic_error("greedy_degenerate_packing: no perfect matching at vertex " + std::to_string(v));
        }
        p.set(v, *perm);
    }
    return p;
}

Packing lift_packing(const Packing& sub, const std::vector<Vertex>& keep, int n)
{
    Packing p = Packing::empty(sub.k, n);
    for (size_t j = 0; j < keep.size(); ++j) {
        for (int i = 0; i < sub.k; ++i) {
            p.colourings[i][keep[j]] = sub.colourings[i][j];
        }
    }
    return p;
}

SweepResult correspondence_sweep(const Graph& g, int k, const SweepOptions& sweep)
{
    CoverEnumerator en(g, k);
    auto make = [&]() -> IndexPredicate {
        auto cover = std::make_shared<Cover>(en.at(0));
        return [&en, cover](std::uint64_t index) {
            en.assign(index, *cover);
            return find_packing(*cover).has_value();
        };
    };
    std::string tag = "corr-n" + std::to_string(g.n()) + "-m" + std::to_string(g.m()) + "-k" + std::to_string(k);
    return run_sweep(en.count(), make, sweep, tag);
}

NumberResult packing_number(const Graph& g, PackingMode mode, int k_max, const SweepOptions& sweep)
{
    NumberResult out;
    for (int k = 1; k <= k_max; ++k) {
        if (mode == PackingMode::Correspondence) {
            CoverEnumerator en(g, k);
            auto r = correspondence_sweep(g, k, sweep);
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
                return [&](std::uint64_t i) { return find_packing(cover_from_lists(g, configs[i])).has_value(); };
            };
            SweepOptions local = sweep;
            local.checkpoint_dir.clear();
            auto r = run_sweep(configs.size(), make, local, "list");
            out.instances_checked += r.checked;
            if (r.holds()) {
                out.value = k;
                out.exact = true;
                return out;
            }
            out.witness_lists = configs[r.failures.front()];
            out.witness_cover = cover_from_lists(g, configs[r.failures.front()]);
        }
    }
    out.value = k_max + 1;
    out.exact = false;
    return out;
}

namespace {

bool avoids(const Perm& p, const Perm& q)
{
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == q[i]) {
            return false;
        }
    }
    return true;
}

const std::vector<Perm>& perms4()
{
    static const std::vector<Perm> all = all_perms(4);
    return all;
}

std::vector<Perm> parse_perms(std::initializer_list<const char*> texts)
{
    std::vector<Perm> out;
    for (const char* t : texts) {
        out.push_back(perm_from_string(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Delta3Report delta3_case_analysis()
{
    const auto& all = perms4();
    const Perm id = identity_perm(4);
    Delta3Report r;
    r.excluded = parse_perms({"(2,3,4,1)", "(2,4,1,3)", "(3,1,4,2)", "(4,1,2,3)"});
    r.avoided = parse_perms({"(1,3,2,4)", "(3,2,1,4)", "(4,2,3,1)", "(1,4,3,2)"});

    // candidates for c(u) given c(u2); candidates for c(v) given (c(v1), c(v2))
    auto extendable = [&](const Perm& u2, const Perm& v1, const Perm& v2) {
        for (const auto& cu : all) {
            if (!avoids(cu, id) || !avoids(cu, u2)) {
                continue;
            }
            for (const auto& cv : all) {
                if (avoids(cv, v1) && avoids(cv, v2) && avoids(cu, cv)) {
                    return true;
                }
            }
        }
        return false;
    };
    for (const auto& u2 : all) {
        r.triples_per_u2[u2] = 0;
        for (const auto& v1 : all) {
            for (const auto& v2 : all) {
                if (!extendable(u2, v1, v2)) {
                    r.non_extendable.push_back({u2, v1, v2});
                    ++r.triples_per_u2[u2];
                }
            }
        }
    }
    int worst = 0;
    for (const auto& [u2, count] : r.triples_per_u2) {
        worst = std::max(worst, count);
    }
    std::vector<Perm> worst_choices;
    for (const auto& [u2, count] : r.triples_per_u2) {
        if (count == worst && worst > 0) {
            worst_choices.push_back(u2);
        }
        if (std::binary_search(r.excluded.begin(), r.excluded.end(), u2)) {
            continue;
        }
        if (count == 0) {
            r.excellent.push_back(u2);
        } else if (count == worst) {
            r.bad.push_back(u2);
        } else {
            r.good.push_back(u2);
        }
    }
    for (const auto& t : r.non_extendable) {
        if (std::binary_search(r.excluded.begin(), r.excluded.end(), t[0])) {
            continue;
        }
        auto lo = std::min(t[1], t[2]);
        auto hi = std::max(t[1], t[2]);
        auto& sets = r.problematic[t[0]];
        if (std::find(sets.begin(), sets.end(), std::pair{lo, hi}) == sets.end()) {
            sets.emplace_back(lo, hi);
        }
    }

    // permutations valid next to two already-packed neighbours whose constraints are a and b
    auto valid_for = [&](const Perm& a, const Perm& b) {
        std::vector<Perm> out;
        for (const auto& p : all) {
            if (avoids(p, a) && avoids(p, b)) {
                out.push_back(p);
            }
        }
        return out;
    };
    auto escapes = [&](const std::vector<Perm>& forbidden) {
        for (const auto& a : all) {
            for (const auto& b : all) {
                bool any = false;
                for (const auto& p : valid_for(a, b)) {
                    if (std::find(forbidden.begin(), forbidden.end(), p) == forbidden.end()) {
                        any = true;
                        break;
                    }
                }
                if (!any) {
                    return false;
                }
            }
        }
        return true;
    };
    r.exclusion_always_possible = escapes(r.excluded);
    r.avoidance_always_possible = escapes(r.avoided);
    r.two_choices_always = true;
    for (const auto& a : all) {
        for (const auto& b : all) {
            if (valid_for(a, b).size() < 2) {
                r.two_choices_always = false;
            }
        }
    }
    r.avoided_bad_cases_extend = true;
    for (const auto& t : r.non_extendable) {
        if (std::binary_search(r.bad.begin(), r.bad.end(), t[0]) &&
            std::find(r.avoided.begin(), r.avoided.end(), t[1]) == r.avoided.end() &&
            std::find(r.avoided.begin(), r.avoided.end(), t[2]) == r.avoided.end()) {
            r.avoided_bad_cases_extend = false;
        }
    }
    const int w = static_cast<int>(worst_choices.size());
    for (int mask = 0; mask < (1 << w); ++mask) {
        if (__builtin_popcount(mask) != 4) {
            continue;
        }
        std::vector<Perm> subset;
        for (int i = 0; i < w; ++i) {
            if (mask >> i & 1) {
                subset.push_back(worst_choices[i]);
            }
        }
        if (escapes(subset)) {
            r.admissible_exclusions.push_back(subset);
        }
    }
    return r;
}

ExtensionOutcome extend_packing_two_vertices(const Cover& cover, const Packing& partial, Vertex u, Vertex v)
{
    const Graph& g = cover.base();
    const int delta = max_degree(g);
    if (min_degree(g) != delta || delta < 4) {
        throw PreconditionError("extend_packing_two_vertices: base graph must be regular of degree at least 4");
    }
    const int m = delta - 1;
    const int k = 2 * m;
    if (cover.uniform_fold() != k) {
        throw PreconditionError("extend_packing_two_vertices: fold must be 2*Delta-2");
    }
    const int uv = g.edge_id(u, v);
    if (uv < 0) {
        throw PreconditionError("extend_packing_two_vertices: u and v are not adjacent");
    }
    if (partial.k != k || partial.n() != g.n()) {
        throw PreconditionError("extend_packing_two_vertices: partial packing has the wrong shape");
    }
    for (int w = 0; w < g.n(); ++w) {
        if (partial.colours(w) == (w == u || w == v)) {
            throw PreconditionError("extend_packing_two_vertices: partial packing must colour exactly G - {u, v}");
        }
    }
    if (auto bad = packing_violation(cover, partial, true)) {
        throw PreconditionError("extend_packing_two_vertices: partial packing invalid: " + *bad);
    }

    auto availability = [&](Vertex x) {
        BipartiteGraph bg(k, k);
        std::vector<std::vector<bool>> ok(k, std::vector<bool>(k, true));
        for (const auto& nb : g.neighbours(x)) {
            if (!partial.colours(nb.vertex)) {
                continue;
            }
            const auto& mates = cover.mate_map(nb.vertex, nb.edge);
            for (int i = 0; i < k; ++i) {
                int s = mates[partial.colourings[i][nb.vertex]];
                if (s >= 0) {
                    ok[i][s] = false;
                }
            }
        }
        for (int i = 0; i < k; ++i) {
            for (int s = 0; s < k; ++s) {
                if (ok[i][s]) {
                    bg.add_edge(i, s);
                }
            }
        }
        return bg;
    };
    BipartiteGraph gu = availability(u);
    BipartiteGraph gv = availability(v);

    // Rigid structures of G_v in either orientation, as (index, slot of v) spokes.
    std::vector<std::vector<std::pair<int, int>>> spokes;
    for (const auto& s : find_robust_structures(gv, m)) {
        spokes.push_back(s.spokes);
    }
    for (const auto& s : find_robust_structures(gv.transposed(), m)) {
        std::vector<std::pair<int, int>> flipped;
        for (auto [x, i] : s.spokes) {
            flipped.emplace_back(i, x);
        }
        spokes.push_back(flipped);
    }
    ExtensionOutcome out;
    out.structures = static_cast<int>(spokes.size());

    // A spoke (i, x) enters M exactly when c_i(u) is the slot of u matched to x.
    auto u_slot = [&](int x) { return cover.mate(v, x, uv); };
    auto choose_constraints = [&](int per_structure) {
        std::set<std::pair<int, int>> chosen;
        for (const auto& sp : spokes) {
            bool harmless = false;
            int hits = 0;
            for (auto [i, x] : sp) {
                if (u_slot(x) < 0) {
                    harmless = true;
                } else if (chosen.count({i, u_slot(x)})) {
                    ++hits;
                }
            }
            if (harmless) {
                continue;
            }
            for (auto [i, x] : sp) {
                if (hits >= per_structure) {
                    break;
                }
                if (chosen.insert({i, u_slot(x)}).second) {
                    ++hits;
                }
            }
        }
        return chosen;
    };

    std::optional<std::vector<int>> cu;
    HallCertificate last;
    for (int per_structure : {2, 1}) {
        auto constraints = choose_constraints(per_structure);
        BipartiteGraph restricted = gu;
        for (auto [i, y] : constraints) {
            restricted.remove_edge(i, y);
        }
        last = saturating_matching(restricted);
        if (last.saturated) {
            cu = last.matching;
            out.constraints = static_cast<int>(constraints.size());
            break;
        }
        if (spokes.empty()) {
            break;
        }
    }
    if (!cu) {
        out.failure = "no perfect matching between indices and available slots of u";
        out.certificate = last;
        return out;
    }
    BipartiteGraph rest = gv;
    for (int i = 0; i < k; ++i) {
        int x = cover.mate(u, (*cu)[i], uv);
        if (x >= 0) {
            rest.remove_edge(i, x);
        }
    }
    auto cert_v = saturating_matching(rest);
    if (!cert_v.saturated) {
        out.failure = "no perfect matching between indices and available slots of v after fixing u";
        out.certificate = cert_v;
        return out;
    }
    Packing full = partial;
    full.set(u, *cu);
    full.set(v, cert_v.matching);
    out.packing = std::move(full);
    return out;
}

}  // namespace listpack
