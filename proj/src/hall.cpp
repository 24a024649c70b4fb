#include "listpack/hall.hpp"

#include "listpack/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace listpack {

BipartiteGraph::BipartiteGraph(int size_a, int size_b)
{
    if (size_a < 0 || size_b < 0) {
        throw std::invalid_argument("bipartite graph: negative side size");
    }
    adj_a_.resize(size_a);
    adj_b_.resize(size_b);
}

BipartiteGraph BipartiteGraph::complete(int size_a, int size_b)
{
    BipartiteGraph bg(size_a, size_b);
    for (int a = 0; a < size_a; ++a) {
        for (int b = 0; b < size_b; ++b) {
            bg.adj_a_[a].push_back(b);
            bg.adj_b_[b].push_back(a);
        }
    }
    return bg;
}

int BipartiteGraph::edge_count() const
{
    int total = 0;
    for (const auto& l : adj_a_) {
        total += static_cast<int>(l.size());
    }
    return total;
}

void BipartiteGraph::add_edge(int a, int b)
{
    if (a < 0 || a >= size_a() || b < 0 || b >= size_b()) {
        throw std::invalid_argument("bipartite graph: edge endpoint out of range");
    }
    auto& la = adj_a_[a];
    auto it = std::lower_bound(la.begin(), la.end(), b);
    if (it != la.end() && *it == b) {
        throw std::invalid_argument("bipartite graph: duplicate edge");
    }
    la.insert(it, b);
    auto& lb = adj_b_[b];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
}

void BipartiteGraph::remove_edge(int a, int b)
{
    auto& la = adj_a_.at(a);
    auto it = std::lower_bound(la.begin(), la.end(), b);
    if (it == la.end() || *it != b) {
        return;
    }
    la.erase(it);
    auto& lb = adj_b_.at(b);
    lb.erase(std::lower_bound(lb.begin(), lb.end(), a));
}

bool BipartiteGraph::has_edge(int a, int b) const
{
    const auto& la = adj_a_.at(a);
    return std::binary_search(la.begin(), la.end(), b);
}

int BipartiteGraph::min_degree() const
{
    int best = -1;
    for (const auto& l : adj_a_) {
        best = best < 0 ? static_cast<int>(l.size()) : std::min(best, static_cast<int>(l.size()));
    }
    for (const auto& l : adj_b_) {
        best = best < 0 ? static_cast<int>(l.size()) : std::min(best, static_cast<int>(l.size()));
    }
    return std::max(best, 0);
}

BipartiteGraph BipartiteGraph::transposed() const
{
    BipartiteGraph t;
    t.adj_a_ = adj_b_;
    t.adj_b_ = adj_a_;
    return t;
}

std::vector<int> BipartiteGraph::neighbourhood(const std::vector<int>& a_subset) const
{
    std::vector<bool> hit(size_b(), false);
    for (int a : a_subset) {
        for (int b : adj_a_.at(a)) {
            hit[b] = true;
        }
    }
    std::vector<int> out;
    for (int b = 0; b < size_b(); ++b) {
        if (hit[b]) {
            out.push_back(b);
        }
    }
    return out;
}

namespace {

std::vector<int> match_b_of(const BipartiteGraph& bg, const std::vector<int>& match_a)
{
    std::vector<int> match_b(bg.size_b(), -1);
    for (int a = 0; a < bg.size_a(); ++a) {
        if (match_a[a] >= 0) {
            match_b[match_a[a]] = a;
        }
    }
    return match_b;
}

bool complete_between(const BipartiteGraph& bg, const std::vector<int>& as, const std::vector<int>& bs)
{
    for (int a : as) {
        for (int b : bs) {
            if (!bg.has_edge(a, b)) {
                return false;
            }
        }
    }
    return true;
}

bool empty_between(const BipartiteGraph& bg, const std::vector<int>& as, const std::vector<int>& bs)
{
    for (int a : as) {
        for (int b : bs) {
            if (bg.has_edge(a, b)) {
                return false;
            }
        }
    }
    return true;
}

std::string sizes(const BlockPartition& p)
{
    return "|A1|=" + std::to_string(p.a1.size()) + " |N(A1)|=" + std::to_string(p.b1.size());
}

void require_square(const BipartiteGraph& bg, int side, int min_deg, const char* what)
{
    if (bg.size_a() != side || bg.size_b() != side) {
        throw PreconditionError(std::string(what) + ": both sides must have " + std::to_string(side) + " vertices");
    }
    if (bg.min_degree() < min_deg) {
        throw PreconditionError(std::string(what) + ": minimum degree " + std::to_string(bg.min_degree()) +
                                " is below " + std::to_string(min_deg));
    }
}

bool is_violator(const BlockPartition& p)
{
    return p.b1.size() < p.a1.size();
}

}  // namespace

std::vector<int> maximum_matching(const BipartiteGraph& bg)
{
    std::vector<int> match_a(bg.size_a(), -1);
    std::vector<int> match_b(bg.size_b(), -1);
    std::vector<int> seen(bg.size_b(), -1);
    std::function<bool(int, int)> augment = [&](int a, int stamp) {
        for (int b : bg.adj_a(a)) {
            if (seen[b] == stamp) {
                continue;
            }
            seen[b] = stamp;
            if (match_b[b] < 0 || augment(match_b[b], stamp)) {
                match_a[a] = b;
                match_b[b] = a;
                return true;
            }
        }
        return false;
    };
    for (int a = 0; a < bg.size_a(); ++a) {
        augment(a, a);
    }
    return match_a;
}

HallCertificate saturating_matching(const BipartiteGraph& bg)
{
    HallCertificate cert;
    auto match_a = maximum_matching(bg);
    if (std::find(match_a.begin(), match_a.end(), -1) == match_a.end()) {
        cert.saturated = true;
        cert.matching = std::move(match_a);
        return cert;
    }
    auto match_b = match_b_of(bg, match_a);
    std::vector<bool> reach_a(bg.size_a(), false);
    std::vector<bool> reach_b(bg.size_b(), false);
    std::queue<int> q;
    for (int a = 0; a < bg.size_a(); ++a) {
        if (match_a[a] < 0) {
            reach_a[a] = true;
            q.push(a);
        }
    }
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : bg.adj_a(a)) {
            if (reach_b[b]) {
                continue;
            }
            reach_b[b] = true;
            int next = match_b[b];
            if (next >= 0 && !reach_a[next]) {
                reach_a[next] = true;
                q.push(next);
            }
        }
    }
    for (int a = 0; a < bg.size_a(); ++a) {
        if (reach_a[a]) {
            cert.violator.push_back(a);
        }
    }
    for (int b = 0; b < bg.size_b(); ++b) {
        if (reach_b[b]) {
            cert.neighbourhood.push_back(b);
        }
    }
    return cert;
}

bool verify_certificate(const BipartiteGraph& bg, const HallCertificate& cert)
{
    if (cert.saturated) {
        if (static_cast<int>(cert.matching.size()) != bg.size_a()) {
            return false;
        }
        std::vector<bool> used(bg.size_b(), false);
        for (int a = 0; a < bg.size_a(); ++a) {
            int b = cert.matching[a];
            if (b < 0 || b >= bg.size_b() || used[b] || !bg.has_edge(a, b)) {
                return false;
            }
            used[b] = true;
        }
        return true;
    }
    std::set<int> distinct(cert.violator.begin(), cert.violator.end());
    if (distinct.size() != cert.violator.size()) {
        return false;
    }
    for (int a : cert.violator) {
        if (a < 0 || a >= bg.size_a()) {
            return false;
        }
    }
    return bg.neighbourhood(cert.violator).size() < cert.violator.size();
}

BlockPartition blocks_of(const BipartiteGraph& bg, const std::vector<int>& a1)
{
    BlockPartition p;
    p.a1 = a1;
    std::sort(p.a1.begin(), p.a1.end());
    p.b1 = bg.neighbourhood(p.a1);
    for (int a = 0; a < bg.size_a(); ++a) {
        if (!std::binary_search(p.a1.begin(), p.a1.end(), a)) {
            p.a2.push_back(a);
        }
    }
    for (int b = 0; b < bg.size_b(); ++b) {
        if (!std::binary_search(p.b1.begin(), p.b1.end(), b)) {
            p.b2.push_back(b);
        }
    }
    return p;
}

Deficiency classify_violator_odd(const BipartiteGraph& bg, int m, const std::vector<int>& a1)
{
    Deficiency d;
    d.hall_holds = false;
    d.kind = 0;
    d.blocks = blocks_of(bg, a1);
    const auto& p = d.blocks;
    if (!is_violator(p)) {
        d.mismatch = "not a violator: " + sizes(p);
    } else if (static_cast<int>(p.a1.size()) != m + 1 || static_cast<int>(p.b1.size()) != m) {
        d.mismatch = "violator sizes " + sizes(p) + " differ from m+1, m";
    } else if (!complete_between(bg, p.a1, p.b1)) {
        d.mismatch = "G[A1,B1] is not complete";
    } else if (!complete_between(bg, p.a2, p.b2)) {
        d.mismatch = "G[A2,B2] is not complete";
    } else if (!empty_between(bg, p.a1, p.b2)) {
        d.mismatch = "G[A1,B2] is not empty";
    }
    return d;
}

Deficiency classify_deficiency_odd(const BipartiteGraph& bg, int m)
{
    if (m < 1) {
        throw PreconditionError("classify_deficiency_odd: m must be at least 1");
    }
    require_square(bg, 2 * m + 1, m, "classify_deficiency_odd");
    auto cert = saturating_matching(bg);
    if (cert.saturated) {
        return {};
    }
    return classify_violator_odd(bg, m, cert.violator);
}

Deficiency classify_violator_even(const BipartiteGraph& bg, int m, const std::vector<int>& a1)
{
    Deficiency d;
    d.hall_holds = false;
    d.blocks = blocks_of(bg, a1);
    const auto& p = d.blocks;
    const auto na = static_cast<int>(p.a1.size());
    const auto nb = static_cast<int>(p.b1.size());
    if (!is_violator(p)) {
        d.mismatch = "not a violator: " + sizes(p);
        return d;
    }
    if (na == m && nb == m - 1) {
        d.kind = 1;
    } else if (na == m + 1 && nb == m - 1) {
        d.kind = 2;
    } else if (na == m + 1 && nb == m) {
        d.kind = 3;
    } else {
        d.mismatch = "violator sizes " + sizes(p) + " match none of the three cases";
        return d;
    }
    if ((d.kind == 1 || d.kind == 2) && !complete_between(bg, p.a1, p.b1)) {
        d.mismatch = "case " + std::to_string(d.kind) + ": G[A1,B1] is not complete";
    } else if ((d.kind == 2 || d.kind == 3) && !complete_between(bg, p.a2, p.b2)) {
        d.mismatch = "case " + std::to_string(d.kind) + ": G[A2,B2] is not complete";
    } else if (!empty_between(bg, p.a1, p.b2)) {
        d.mismatch = "G[A1,B2] is not empty";
    }
    return d;
}

Deficiency classify_deficiency_even(const BipartiteGraph& bg, int m)
{
    if (m < 2) {
        throw PreconditionError("classify_deficiency_even: m must be at least 2");
    }
    require_square(bg, 2 * m, m - 1, "classify_deficiency_even");
    auto cert = saturating_matching(bg);
    if (cert.saturated) {
        return {};
    }
    return classify_violator_even(bg, m, cert.violator);
}

std::vector<RobustStructure> find_robust_structures(const BipartiteGraph& bg, int m)
{
    std::vector<RobustStructure> out;
    if (m < 1) {
        return out;
    }
    std::set<std::vector<int>> cores;
    for (int a = 0; a < bg.size_a(); ++a) {
        if (bg.degree_a(a) != m) {
            continue;
        }
        for (int skip : bg.adj_a(a)) {
            std::vector<int> core;
            for (int b : bg.adj_a(a)) {
                if (b != skip) {
                    core.push_back(b);
                }
            }
            cores.insert(core);
        }
    }
    std::set<std::vector<int>> seen;
    for (const auto& core : cores) {
        // vertices of degree m containing the core, with their one extra neighbour
        std::vector<std::pair<int, int>> members;
        for (int a = 0; a < bg.size_a(); ++a) {
            if (bg.degree_a(a) != m) {
                continue;
            }
            const auto& adj = bg.adj_a(a);
            if (!std::includes(adj.begin(), adj.end(), core.begin(), core.end())) {
                continue;
            }
            int extra = -1;
            for (int b : adj) {
                if (!std::binary_search(core.begin(), core.end(), b)) {
                    extra = b;
                }
            }
            members.emplace_back(a, extra);
        }
        if (static_cast<int>(members.size()) < m) {
            continue;
        }
        std::vector<int> pick;
        std::function<void(size_t)> choose = [&](size_t from) {
            if (static_cast<int>(pick.size()) == m) {
                std::set<int> extras;
                for (int i : pick) {
                    extras.insert(members[i].second);
                }
                if (static_cast<int>(extras.size()) != m) {
                    return;
                }
                std::vector<int> a1;
                for (int i : pick) {
                    a1.push_back(members[i].first);
                }
                if (!seen.insert(a1).second) {
                    return;
                }
                RobustStructure s;
                s.blocks.a1 = a1;
                s.blocks.b1 = core;
                for (int a = 0; a < bg.size_a(); ++a) {
                    if (!std::binary_search(a1.begin(), a1.end(), a)) {
                        s.blocks.a2.push_back(a);
                    }
                }
                for (int b = 0; b < bg.size_b(); ++b) {
                    if (!std::binary_search(core.begin(), core.end(), b)) {
                        s.blocks.b2.push_back(b);
                    }
                }
                for (int i : pick) {
                    s.spokes.push_back(members[i]);
                }
                out.push_back(std::move(s));
                return;
            }
            for (size_t i = from; i < members.size(); ++i) {
                pick.push_back(static_cast<int>(i));
                choose(i + 1);
                pick.pop_back();
            }
        };
        choose(0);
    }
    return out;
}

bool check_robust_hall(const BipartiteGraph& bg, int m, const BlockPartition& blocks,
                       const std::vector<std::pair<int, int>>& removed)
{
    std::vector<std::string> problems;
    if (m < 3) {
        problems.push_back("m must be at least 3");
    }
    if (bg.size_a() != 2 * m || bg.size_b() != 2 * m) {
        problems.push_back("sides must both have 2m vertices");
    }
    if (bg.min_degree() < m) {
        problems.push_back("minimum degree is below m");
    }
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    auto is_partition = [](std::vector<int> x, std::vector<int> y, int size) {
        x.insert(x.end(), y.begin(), y.end());
        std::sort(x.begin(), x.end());
        if (static_cast<int>(x.size()) != size) {
            return false;
        }
        for (int i = 0; i < size; ++i) {
            if (x[i] != i) {
                return false;
            }
        }
        return true;
    };
    if (!is_partition(blocks.a1, blocks.a2, bg.size_a())) {
        problems.push_back("A1, A2 do not partition A");
    }
    if (!is_partition(blocks.b1, blocks.b2, bg.size_b())) {
        problems.push_back("B1, B2 do not partition B");
    }
    if (static_cast<int>(blocks.a1.size()) != m) {
        problems.push_back("|A1| differs from m");
    }
    if (static_cast<int>(blocks.b1.size()) != m - 1) {
        problems.push_back("|B1| differs from m-1");
    }
    if (problems.empty()) {
        if (!complete_between(bg, blocks.a1, blocks.b1)) {
            problems.push_back("G[A1,B1] is not complete");
        }
        const auto b2 = sorted(blocks.b2);
        std::set<int> partners;
        bool one_each = true;
        for (int a : blocks.a1) {
            int count = 0;
            for (int b : bg.adj_a(a)) {
                if (std::binary_search(b2.begin(), b2.end(), b)) {
                    ++count;
                    partners.insert(b);
                }
            }
            one_each = one_each && count == 1;
        }
        if (!one_each || static_cast<int>(partners.size()) != m ||
            static_cast<int>(b2.size()) != m + 1) {
            problems.push_back("G[A1,B2] is not m disjoint edges plus an isolated vertex");
        }
        std::set<int> used_a;
        std::set<int> used_b;
        int spokes_removed = 0;
        const auto a1 = sorted(blocks.a1);
        for (auto [a, b] : removed) {
            if (a < 0 || a >= bg.size_a() || b < 0 || b >= bg.size_b() || !bg.has_edge(a, b)) {
                problems.push_back("removed set contains a non-edge");
                break;
            }
            if (!used_a.insert(a).second || !used_b.insert(b).second) {
                problems.push_back("removed set is not a matching");
                break;
            }
            if (std::binary_search(a1.begin(), a1.end(), a) && std::binary_search(b2.begin(), b2.end(), b)) {
                ++spokes_removed;
            }
        }
        if (spokes_removed > m - 2) {
            problems.push_back("removed set contains " + std::to_string(spokes_removed) +
                               " edges of G[A1,B2], more than m-2");
        }
    }
    if (!problems.empty()) {
        std::string msg = "check_robust_hall preconditions:";
        for (const auto& p : problems) {
            msg += " " + p + ";";
        }
        throw PreconditionError(msg);
    }
    BipartiteGraph rest = bg;
    for (auto [a, b] : removed) {
        rest.remove_edge(a, b);
    }
    return saturating_matching(rest).saturated;
}

}  // namespace listpack
