#pragma once

#include "listpack/constructions.hpp"
#include "listpack/cover.hpp"
#include "listpack/fractional.hpp"
#include "listpack/hall.hpp"
#include "listpack/packing.hpp"
#include "listpack/samplers.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace listpack {

using Json = nlohmann::json;

/// Malformed or mistyped document.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Schema tags. Vertex ids are 0-based; slots are written 1..fold(v); rationals as "p/q".
inline constexpr const char* kGraphSchema = "listpack.graph/1";
inline constexpr const char* kListsSchema = "listpack.lists/1";
inline constexpr const char* kCoverSchema = "listpack.cover/1";
inline constexpr const char* kPackingSchema = "listpack.packing/1";
inline constexpr const char* kFractionalSchema = "listpack.fractional/1";
inline constexpr const char* kGeneralFractionalSchema = "listpack.degree-fractional/1";
inline constexpr const char* kMarginalsSchema = "listpack.marginals/1";
inline constexpr const char* kHallSchema = "listpack.hall/1";
inline constexpr const char* kVerdictSchema = "listpack.verdict/1";

/// {"schema", "n", "edges": [[u, v], ...]}
Json to_json(const Graph& g);
/// Accepts the schema tag or none; rejects loops, duplicates and out-of-range ids.
Graph graph_from_json(const Json& j);

/// {"schema", "graph", "lists": [[colour, ...], ...]}
Json to_json(const Graph& g, const ListAssignment& lists);
ListAssignment lists_from_json(const Json& j, const Graph& g);

/// {"schema", "graph", "fold": k or [k_v], "matchings": {"u-v": [[slot_u, slot_v], ...]}}
Json to_json(const Cover& cover);
RawCover raw_cover_from_json(const Json& j);
/// Throws SchemaError naming each violated cover axiom.
Cover cover_from_json(const Json& j);

/// {"schema", "k", "colourings": [[slot per vertex], ...]}, null for uncoloured vertices.
Json to_json(const Packing& p);
Packing packing_from_json(const Json& j);

/// {"schema", "feasible", "method", "support": [{"weight", "transversal"}], "dual": [...]}
Json to_json(const Cover& cover, const FractionalResult& r);
Json to_json(const GeneralFractionalResult& r);
/// {"schema", "marginals": [["p/q", ...], ...]}
Json to_json(const MarginalTable& table);
/// {"schema", "saturated", "matching" | "violator" + "neighbourhood"}
Json to_json(const HallCertificate& cert);

/// Graph plus either a list assignment or a cover, with the cover the solvers run on.
struct Instance {
    Graph graph;
    std::optional<ListAssignment> lists;
    Cover cover;
};

/// Reads a lists or cover document (dispatching on "schema").
Instance instance_from_json(const Json& j);
Json to_json(const Witness& w);

}  // namespace listpack
