#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clusteraut/exchange_graph.hpp"
#include "clusteraut/surface.hpp"

namespace clusteraut {

using Json = nlohmann::ordered_json;

/// {"n": int, "m": int, "rows": [[int, ...], ...]}
Json to_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const Json& j);

/// {"matrix": {...}, "variables": ["x1", ...]}
Json to_json(const Seed& s);
Seed seed_from_json(const Json& j);

/// {"seeds": [...], "adjacency": [[[vertex, position], ...], ...]}, all
/// indices 0-based.
Json to_json(const ExchangeGraph& e);
ExchangeGraph graph_from_json(const Json& j);

/// {"arcs": [{"id": int, "boundary": bool}], "triangles": [[int, int, int], ...]}
Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json integer_matrix_to_json(const std::vector<std::vector<Entry>>& a);
std::vector<std::vector<Entry>> integer_matrix_from_json(const Json& j);

/// Parse text as JSON, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace clusteraut
