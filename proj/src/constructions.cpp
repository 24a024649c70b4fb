#include "listpack/constructions.hpp"
#include "listpack/fractional.hpp"
#include "listpack/packing.hpp"

#include <algorithm>

namespace listpack {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::NoPacking:
        return "no_packing";
    case Verdict::NoFractionalPacking:
        return "no_fractional_packing";
    case Verdict::PackingExists:
        return "packing_exists";
    case Verdict::FractionalExists:
        return "fractional_exists";
    }
    return "unknown";
}

Cover Witness::as_cover() const
{
    if (cover) {
        return *cover;
    }
    return cover_from_lists(graph, *lists);
}

Witness even_cycle_bad_lists(int n)
{
    if (n < 4 || n % 2 != 0) {
        throw PreconditionError("even_cycle_bad_lists: n must be even and >= 4");
    }
    std::vector<std::vector<int>> lists(n, {1, 2});
    lists[n - 2] = {1, 3};
    lists[n - 1] = {2, 3};
    Witness w;
    w.name = "even-cycle-" + std::to_string(n);
    w.graph = cycle_graph(n);
    w.lists = ListAssignment(std::move(lists));
    w.expected = Verdict::NoPacking;
    w.description = "2-lists on an even cycle whose cover contains an odd cycle";
    return w;
}

Witness twisted_cycle_cover(int n)
{
    if (n < 3) {
        throw PreconditionError("twisted_cycle_cover: n >= 3 required");
    }
    Graph g = cycle_graph(n);
    Cover c = identity_cover(g, 3);
    c.set_matching(g.edge_id(0, n - 1), std::vector<int>{0, 2, 1});
    Witness w;
    w.name = "twisted-cycle-" + std::to_string(n);
    w.graph = g;
    w.cover = c;
    w.expected = Verdict::NoPacking;
    w.description = "3-fold cover of a cycle with odd monodromy";
    return w;
}

int degeneracy_gap_layers(int d)
{
    return 3 * (d - 1) * (d - 1) + 1;
}

Witness degeneracy_gap(int d)
{
    if (d < 2) {
        throw PreconditionError("degeneracy_gap: d >= 2 required");
    }
    const int width = d + 1;
    const int layers = degeneracy_gap_layers(d);
    std::vector<std::pair<int, int>> shifts;  // (remove, add)
    for (int round = 0; round < d - 1; ++round) {
        for (int j = 2; j <= d; ++j) {
            shifts.emplace_back(1, d + 2);
            shifts.emplace_back(j, 1);
            shifts.emplace_back(d + 2, j);
        }
    }
    auto id = [&](int layer, int i) { return layer * width + i; };  // layer 0-based here
    const int n = layers * width + 1;
    const int apex = n - 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> lists(n);
    std::vector<int> base(width);
    for (int c = 1; c <= width; ++c) {
        base[c - 1] = c;
    }
    for (int i = 0; i < width; ++i) {
        lists[id(0, i)] = base;
        for (int j = i + 1; j < width; ++j) {
            edges.emplace_back(id(0, i), id(0, j));
        }
    }
    std::vector<int> current = base;
    for (int layer = 1; layer < layers; ++layer) {
        auto [out, in] = shifts[layer - 1];
        auto it = std::find(current.begin(), current.end(), out);
        if (it == current.end() || std::count(current.begin(), current.end(), in) != 0) {
            throw std::logic_error("degeneracy_gap: shift does not apply");
        }
        *it = in;
        std::sort(current.begin(), current.end());
        for (int i = 0; i < width; ++i) {
            lists[id(layer, i)] = current;
            for (int j = 0; j < width; ++j) {
                if (j != i) {
                    edges.emplace_back(id(layer - 1, j), id(layer, i));
                }
            }
        }
    }
    lists[apex] = base;
    for (int p = 0; p <= d - 1; ++p) {
        edges.emplace_back(id(3 * p * (d - 1), 0), apex);
    }
    Witness w;
    w.name = "degeneracy-gap-" + std::to_string(d);
    w.graph = Graph(n, edges);
    w.lists = ListAssignment(std::move(lists));
    w.expected = Verdict::NoFractionalPacking;
    w.description = "degeneracy " + std::to_string(d) + " graph with " + std::to_string(width) +
                    "-lists and no fractional packing";
    return w;
}

std::vector<Rational> degeneracy_gap_dual(int d)
{
    const Witness w = degeneracy_gap(d);
    const Cover cover = w.as_cover();
    const auto offset = slot_offsets(cover);
    const int width = d + 1;
    const int layers = degeneracy_gap_layers(d);
    const int n = w.graph.n();
    std::vector<Rational> z(offset[n], 0);
    auto mark = [&](Vertex v, int colour, const Rational& weight) {
        const auto& l = w.lists->list(v);
        z[offset[v] + (std::find(l.begin(), l.end(), colour) - l.begin())] += weight;
    };
    // layer m weighs 2^(layers-1-m): the first layer with a surplus outweighs every later deficit
    Rational weight = 1;
    Rational total = 1;
    for (int layer = layers - 1; layer >= 1; --layer) {
        const auto& prev = w.lists->list((layer - 1) * width);
        const auto& cur = w.lists->list(layer * width);
        int incoming = 0;
        for (int c : cur) {
            if (!std::binary_search(prev.begin(), prev.end(), c)) {
                incoming = c;
            }
        }
        for (int i = 0; i < width; ++i) {
            mark(layer * width + i, incoming, weight);
        }
        total += weight;
        weight *= 2;
    }
    mark(0, d + 1, 1);
    mark(n - 1, d + 1, 1);
    const Rational shift = total / n;  // the constant term, spread over the n slots of a transversal
    for (auto& q : z) {
        q = shift - q;
    }
    return z;
}

Witness necklace_witness()
{
    Witness w;
    w.name = "necklace";
    w.graph = diamond_necklace_graph();
    w.lists = ListAssignment({{1, 3, 4}, {1, 2, 4}, {2, 3, 4}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 4}, {1, 2, 4}});
    w.expected = Verdict::NoFractionalPacking;
    w.description = "cubic graph with flexible 3-lists and no fractional packing";
    return w;
}

Witness latin_square_witness(int n)
{
    if (n < 2) {
        throw PreconditionError("latin_square_witness: n >= 2 required");
    }
    std::vector<std::vector<int>> lists(n * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            std::vector<int> l;
            const int skip = c == 0 ? 1 : r == 0 ? 2 : 0;
            const int top = skip ? n + 1 : n;
            for (int x = 1; x <= top; ++x) {
                if (x != skip) {
                    l.push_back(x);
                }
            }
            lists[r * n + c] = std::move(l);
        }
    }
    Witness w;
    w.name = "latin-square-" + std::to_string(n);
    w.graph = latin_square_graph(n);
    w.lists = ListAssignment(std::move(lists));
    w.expected = Verdict::NoFractionalPacking;
    w.description = "n-lists on the rook's graph K_n x K_n with no fractional packing";
    return w;
}

std::vector<Witness> degree_list_witnesses()
{
    Witness a;
    a.name = "degree-lists-diamond";
    a.graph = diamond_graph();
    a.lists = ListAssignment({{1, 2}, {1, 3}, {1, 2, 3}, {1, 2, 3}});
    a.expected = Verdict::NoFractionalPacking;
    a.degree_demand = true;
    a.description = "diamond with degree-sized lists";

    Witness b;
    b.name = "degree-lists-k5-minus-edge";
    b.graph = complete_minus_edge_graph(5);
    b.lists = ListAssignment({{1, 2, 3}, {1, 2, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}});
    b.expected = Verdict::NoFractionalPacking;
    b.degree_demand = true;
    b.description = "K5 minus an edge with degree-sized lists";
    return {a, b};
}

std::vector<Witness> all_witnesses()
{
    std::vector<Witness> out;
    for (int n = 4; n <= 8; n += 2) {
        out.push_back(even_cycle_bad_lists(n));
    }
    for (int n = 3; n <= 8; ++n) {
        out.push_back(twisted_cycle_cover(n));
    }
    out.push_back(degeneracy_gap(2));
    out.push_back(necklace_witness());
    for (int n = 2; n <= 4; ++n) {
        out.push_back(latin_square_witness(n));
    }
    for (auto& w : degree_list_witnesses()) {
        out.push_back(std::move(w));
    }
    return out;
}

ListSearchResult search_unpackable_lists(const Graph& g, int k, int palette_max, std::uint64_t budget)
{
    ListSearchResult r;
    for_each_canonical_list_assignment(g, k, palette_max, [&](const ListAssignment& lists) {
        if (r.examined == budget) {
            r.status = ListSearchResult::Status::Budget;
            return false;
        }
        ++r.examined;
        if (!find_packing(cover_from_lists(g, lists))) {
            r.status = ListSearchResult::Status::Found;
            r.witness = lists;
            return false;
        }
        return true;
    });
    return r;
}

}  // namespace listpack
