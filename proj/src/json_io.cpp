#include "listpack/json_io.hpp"

namespace listpack {

namespace {

void expect_schema(const Json& j, const char* schema, bool required)
{
    if (!j.is_object()) {
        throw SchemaError(std::string("expected an object for ") + schema);
    }
    auto it = j.find("schema");
    if (it == j.end()) {
        if (required) {
            throw SchemaError(std::string("missing \"schema\": \"") + schema + "\"");
        }
        return;
    }
    if (!it->is_string() || it->get<std::string>() != schema) {
        throw SchemaError(std::string("schema mismatch: expected ") + schema + ", got " + it->dump());
    }
}

const Json& field(const Json& j, const char* name)
{
    auto it = j.find(name);
    if (it == j.end()) {
        throw SchemaError(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

int as_int(const Json& j, const std::string& what)
{
    if (!j.is_number_integer()) {
        throw SchemaError(what + ": expected an integer, got " + j.dump());
    }
    return j.get<int>();
}

std::pair<int, int> parse_edge_key(const std::string& key)
{
    auto dash = key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == key.size()) {
        throw SchemaError("matching key '" + key + "' is not of the form \"u-v\"");
    }
    try {
        size_t used = 0;
        int u = std::stoi(key.substr(0, dash), &used);
        if (used != dash) {
            throw SchemaError("bad vertex in key '" + key + "'");
        }
        int v = std::stoi(key.substr(dash + 1), &used);
        if (used != key.size() - dash - 1) {
            throw SchemaError("bad vertex in key '" + key + "'");
        }
        return {u, v};
    } catch (const std::logic_error&) {
        throw SchemaError("bad vertex in key '" + key + "'");
    }
}

Json rationals(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& q : v) {
        out.push_back(to_string(q));
    }
    return out;
}

Json one_based(const std::vector<int>& slots)
{
    Json out = Json::array();
    for (int s : slots) {
        out.push_back(s >= 0 ? Json(s + 1) : Json(nullptr));
    }
    return out;
}

}  // namespace

Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    return {{"schema", kGraphSchema}, {"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j)
{
    expect_schema(j, kGraphSchema, false);
    const int n = as_int(field(j, "n"), "n");
    if (n < 0) {
        throw SchemaError("n must be non-negative");
    }
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) {
        throw SchemaError("edges: expected an array");
    }
    std::vector<std::pair<int, int>> e;
    for (const auto& pair : edges) {
        if (!pair.is_array() || pair.size() != 2) {
            throw SchemaError("edge " + pair.dump() + " is not a pair");
        }
        e.emplace_back(as_int(pair[0], "edge endpoint"), as_int(pair[1], "edge endpoint"));
    }
    try {
        return Graph(n, e);
    } catch (const std::invalid_argument& ex) {
        throw SchemaError(ex.what());
    }
}

Json to_json(const Graph& g, const ListAssignment& lists)
{
    return {{"schema", kListsSchema}, {"graph", to_json(g)}, {"lists", lists.lists()}};
}

ListAssignment lists_from_json(const Json& j, const Graph& g)
{
    const Json& raw = field(j, "lists");
    if (!raw.is_array() || static_cast<int>(raw.size()) != g.n()) {
        throw SchemaError("lists: expected one list per vertex");
    }
    std::vector<std::vector<int>> lists;
    for (const auto& l : raw) {
        if (!l.is_array()) {
            throw SchemaError("lists: expected arrays of colours");
        }
        std::vector<int> colours;
        for (const auto& c : l) {
            colours.push_back(as_int(c, "colour"));
        }
        lists.push_back(std::move(colours));
    }
    try {
        return ListAssignment(std::move(lists));
    } catch (const std::invalid_argument& ex) {
        throw SchemaError(ex.what());
    }
}

Json to_json(const Cover& cover)
{
    const Graph& g = cover.base();
    Json matchings = Json::object();
    for (int id = 0; id < g.m(); ++id) {
        Json pairs = Json::array();
        for (auto [a, b] : cover.matching_pairs(id)) {
            pairs.push_back({a + 1, b + 1});
        }
        matchings[std::to_string(g.edge(id).u) + "-" + std::to_string(g.edge(id).v)] = pairs;
    }
    Json fold = cover.uniform_fold() ? Json(*cover.uniform_fold()) : Json(cover.folds());
    return {{"schema", kCoverSchema}, {"graph", to_json(g)}, {"fold", fold}, {"matchings", matchings}};
}

RawCover raw_cover_from_json(const Json& j)
{
    expect_schema(j, kCoverSchema, true);
    RawCover raw;
    raw.base = graph_from_json(field(j, "graph"));
    const Json& fold = field(j, "fold");
    if (fold.is_number_integer()) {
        raw.fold.assign(raw.base.n(), fold.get<int>());
    } else if (fold.is_array() && static_cast<int>(fold.size()) == raw.base.n()) {
        for (const auto& f : fold) {
            raw.fold.push_back(as_int(f, "fold"));
        }
    } else {
        throw SchemaError("fold: expected an integer or one integer per vertex");
    }
    for (int f : raw.fold) {
        if (f < 0 || f > 63) {
            throw SchemaError("fold out of range 0..63");
        }
    }
    auto matchings = j.find("matchings");
    if (matchings != j.end()) {
        if (!matchings->is_object()) {
            throw SchemaError("matchings: expected an object keyed by \"u-v\"");
        }
        for (const auto& [key, pairs] : matchings->items()) {
            auto uv = parse_edge_key(key);
            if (!pairs.is_array()) {
                throw SchemaError("matchings[" + key + "]: expected an array of slot pairs");
            }
            auto& out = raw.matchings[uv];
            for (const auto& p : pairs) {
                if (!p.is_array() || p.size() != 2) {
                    throw SchemaError("matchings[" + key + "]: " + p.dump() + " is not a slot pair");
                }
                out.emplace_back(as_int(p[0], "slot") - 1, as_int(p[1], "slot") - 1);
            }
        }
    }
    return raw;
}

Cover cover_from_json(const Json& j)
{
    RawCover raw = raw_cover_from_json(j);
    auto violations = validate(raw);
    if (!violations.empty()) {
        std::string msg = "not a correspondence cover:";
        for (const auto& v : violations) {
            msg += "\n  axiom " + std::to_string(v.axiom) + ": " + v.message;
        }
        throw SchemaError(msg);
    }
    return cover_from_raw(raw);
}

Json to_json(const Packing& p)
{
    Json colourings = Json::array();
    for (const auto& c : p.colourings) {
        colourings.push_back(one_based(c));
    }
    return {{"schema", kPackingSchema}, {"k", p.k}, {"colourings", colourings}};
}

Packing packing_from_json(const Json& j)
{
    expect_schema(j, kPackingSchema, true);
    Packing p;
    p.k = as_int(field(j, "k"), "k");
    const Json& cs = field(j, "colourings");
    if (!cs.is_array() || static_cast<int>(cs.size()) != p.k) {
        throw SchemaError("colourings: expected k arrays");
    }
    for (const auto& c : cs) {
        if (!c.is_array()) {
            throw SchemaError("colourings: expected arrays of slots");
        }
        std::vector<int> slots;
        for (const auto& s : c) {
            slots.push_back(s.is_null() ? -1 : as_int(s, "slot") - 1);
        }
        p.colourings.push_back(std::move(slots));
    }
    return p;
}

Json to_json(const Cover& cover, const FractionalResult& r)
{
    Json out = {{"schema", kFractionalSchema},
                {"feasible", r.feasible},
                {"method", r.method},
                {"fold", cover.uniform_fold().value_or(0)},
                {"columns", r.columns},
                {"pivots", r.pivots}};
    if (r.feasible) {
        Json support = Json::array();
        for (const auto& wt : r.support) {
            support.push_back({{"weight", to_string(wt.weight)}, {"transversal", one_based(wt.choice)}});
        }
        out["support"] = support;
    } else {
        // dual rows in (vertex, slot) order
        Json dual = Json::array();
        const auto offset = slot_offsets(cover);
        for (Vertex v = 0; v < cover.base().n(); ++v) {
            Json row = Json::array();
            for (int s = 0; s < cover.fold(v); ++s) {
                row.push_back(to_string(r.dual.at(offset[v] + s)));
            }
            dual.push_back(row);
        }
        out["dual"] = dual;
    }
    return out;
}

Json to_json(const GeneralFractionalResult& r)
{
    Json out = {{"schema", kGeneralFractionalSchema}, {"feasible", r.feasible}, {"columns", r.columns}};
    if (r.feasible) {
        Json support = Json::array();
        for (const auto& [colouring, weight] : r.support) {
            support.push_back({{"weight", to_string(weight)}, {"colours", colouring}});
        }
        out["support"] = support;
        Json marginals = Json::array();
        for (const auto& row : r.marginals) {
            marginals.push_back(rationals(row));
        }
        out["marginals"] = marginals;
    } else {
        out["dual"] = rationals(r.dual);
    }
    return out;
}

Json to_json(const MarginalTable& table)
{
    Json rows = Json::array();
    for (const auto& row : table) {
        rows.push_back(rationals(row));
    }
    return {{"schema", kMarginalsSchema}, {"marginals", rows}};
}

Json to_json(const HallCertificate& cert)
{
    Json out = {{"schema", kHallSchema}, {"saturated", cert.saturated}};
    if (cert.saturated) {
        out["matching"] = cert.matching;
    } else {
        out["violator"] = cert.violator;
        out["neighbourhood"] = cert.neighbourhood;
    }
    return out;
}

Instance instance_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string()) {
        throw SchemaError("instance: expected a document with a \"schema\" field");
    }
    const auto schema = j["schema"].get<std::string>();
    Instance inst;
    if (schema == kListsSchema) {
        inst.graph = graph_from_json(field(j, "graph"));
        inst.lists = lists_from_json(j, inst.graph);
        inst.cover = cover_from_lists(inst.graph, *inst.lists);
    } else if (schema == kCoverSchema) {
        inst.cover = cover_from_json(j);
        inst.graph = inst.cover.base();
    } else {
        throw SchemaError("instance: unsupported schema " + schema);
    }
    return inst;
}

Json to_json(const Witness& w)
{
    Json out = w.lists ? to_json(w.graph, *w.lists) : to_json(*w.cover);
    out["name"] = w.name;
    out["expected"] = to_string(w.expected);
    out["degree_demand"] = w.degree_demand;
    out["description"] = w.description;
    return out;
}

}  // namespace listpack
