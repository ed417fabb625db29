#include "clusteraut/json_io.hpp"

#include "clusteraut/errors.hpp"

namespace clusteraut {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& ex) {
    throw ParseError(std::string(what) + ": " + ex.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json integer_matrix_to_json(const std::vector<std::vector<Entry>>& a) { return Json(a); }

std::vector<std::vector<Entry>> integer_matrix_from_json(const Json& j) {
  return guarded("integer matrix", [&] {
    if (!j.is_array()) throw ParseError("integer matrix must be an array of rows");
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError("integer matrix row must be an array");
      for (const auto& x : row)
        if (!x.is_number_integer()) throw ParseError("matrix entries must be integers");
    }
    return j.get<std::vector<std::vector<Entry>>>();
  });
}

Json to_json(const ExchangeMatrix& b) {
  Json j;
  j["n"] = b.exchangeable();
  j["m"] = b.frozen();
  j["rows"] = integer_matrix_to_json(b.rows());
  return j;
}

ExchangeMatrix matrix_from_json(const Json& j) {
  return guarded("quiver", [&] {
    const auto& n = field(j, "n");
    const auto& m = field(j, "m");
    if (!n.is_number_unsigned() || !m.is_number_unsigned()) throw ParseError("n and m must be non-negative integers");
    return ExchangeMatrix(n.get<std::size_t>(), m.get<std::size_t>(), integer_matrix_from_json(field(j, "rows")));
  });
}

Json to_json(const Seed& s) {
  Json j;
  j["matrix"] = to_json(s.matrix());
  j["variables"] = Json::array();
  for (const auto& v : s.cluster()) j["variables"].push_back(v.to_string());
  return j;
}

Seed seed_from_json(const Json& j) {
  return guarded("seed", [&] {
    auto b = matrix_from_json(field(j, "matrix"));
    std::vector<LaurentPolynomial> cluster;
    for (const auto& v : field(j, "variables")) {
      if (!v.is_string()) throw ParseError("cluster variables must be strings");
      cluster.push_back(LaurentPolynomial::parse(v.get<std::string>(), b.vertices()));
    }
    return Seed(std::move(b), std::move(cluster));
  });
}

Json to_json(const ExchangeGraph& e) {
  Json j;
  j["seeds"] = Json::array();
  for (const auto& s : e.seeds()) j["seeds"].push_back(to_json(s));
  j["adjacency"] = Json::array();
  for (const auto& nbrs : e.adjacency()) {
    Json row = Json::array();
    for (const auto& nb : nbrs) row.push_back({nb.vertex, nb.position});
    j["adjacency"].push_back(std::move(row));
  }
  return j;
}

ExchangeGraph graph_from_json(const Json& j) {
  return guarded("exchange graph", [&] {
    std::vector<Seed> seeds;
    for (const auto& s : field(j, "seeds")) seeds.push_back(seed_from_json(s));
    std::vector<std::vector<Neighbor>> adjacency;
    for (const auto& row : field(j, "adjacency")) {
      adjacency.emplace_back();
      for (const auto& nb : row) {
        auto pair = nb.get<std::vector<std::size_t>>();
        if (pair.size() != 2) throw ParseError("adjacency entries are [vertex, position] pairs");
        adjacency.back().push_back({pair[0], pair[1]});
      }
    }
    return ExchangeGraph::assemble(std::move(seeds), std::move(adjacency));
  });
}

Json to_json(const Triangulation& t) {
  Json j;
  j["arcs"] = Json::array();
  for (const auto& a : t.arcs) j["arcs"].push_back({{"id", a.id}, {"boundary", a.boundary}});
  j["triangles"] = Json::array();
  for (const auto& tri : t.triangles) j["triangles"].push_back({tri[0], tri[1], tri[2]});
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  return guarded("triangulation", [&] {
    Triangulation t;
    for (const auto& a : field(j, "arcs")) {
      const auto& id = field(a, "id");
      const auto& boundary = field(a, "boundary");
      if (!id.is_number_integer() || !boundary.is_boolean()) throw ParseError("arc needs an integer id and a boolean flag");
      t.arcs.push_back({id.get<int>(), boundary.get<bool>()});
    }
    for (const auto& tri : field(j, "triangles")) {
      auto sides = tri.get<std::vector<int>>();
      if (sides.size() != 3) throw ParseError("triangles have three sides");
      t.triangles.push_back({sides[0], sides[1], sides[2]});
    }
    t.validate();
    return t;
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw ParseError(std::string("malformed JSON: ") + ex.what());
  }
}

}  // namespace clusteraut
