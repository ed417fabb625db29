#include "clusteraut/surface.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "clusteraut/errors.hpp"

namespace clusteraut {

void Triangulation::validate() const {
  std::map<int, bool> boundary;
  for (const auto& a : arcs)
    if (!boundary.emplace(a.id, a.boundary).second) throw InvalidIncidence("duplicate arc id " + std::to_string(a.id));
  std::map<int, int> uses;
  for (const auto& t : triangles) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw SelfFoldedUnsupported("triangle uses arc " + std::to_string(t[0] == t[1] || t[0] == t[2] ? t[0] : t[1]) +
                                  " twice");
    for (auto id : t) {
      if (!boundary.count(id)) throw InvalidIncidence("triangle refers to unknown arc " + std::to_string(id));
      ++uses[id];
    }
  }
  for (const auto& [id, on_boundary] : boundary) {
    int expected = on_boundary ? 1 : 2;
    if (uses[id] != expected)
      throw InvalidIncidence("arc " + std::to_string(id) + " lies on " + std::to_string(uses[id]) +
                             " triangle sides, expected " + std::to_string(expected));
  }
}

Triangulation polygon_fan(std::size_t corners) {
  if (corners < 4) throw std::invalid_argument("polygon fan needs at least 4 corners");
  const int c = static_cast<int>(corners);
  auto diagonal = [](int k) { return k - 1; };
  auto side = [c](int k) { return c - 2 + k; };
  Triangulation t;
  for (int k = 2; k <= c - 2; ++k) t.arcs.push_back({diagonal(k), false});
  for (int k = 0; k < c; ++k) t.arcs.push_back({side(k), true});
  for (int k = 1; k + 1 < c; ++k) {
    int first = k == 1 ? side(0) : diagonal(k);
    int last = k + 1 == c - 1 ? side(c - 1) : diagonal(k + 1);
    t.triangles.push_back({first, side(k), last});
  }
  return t;
}

SurfaceQuiver triangulation_to_ice_quiver(const Triangulation& t) {
  t.validate();
  std::vector<int> internal;
  std::vector<int> outer;
  for (const auto& a : t.arcs) (a.boundary ? outer : internal).push_back(a.id);
  std::sort(internal.begin(), internal.end());
  std::sort(outer.begin(), outer.end());
  SurfaceQuiver out{ExchangeMatrix::principal({{0}}), internal};
  out.vertex_arcs.insert(out.vertex_arcs.end(), outer.begin(), outer.end());

  std::map<int, std::size_t> vertex;
  for (std::size_t v = 0; v < out.vertex_arcs.size(); ++v) vertex[out.vertex_arcs[v]] = v;
  const auto n = internal.size();
  const auto total = out.vertex_arcs.size();
  std::vector<std::vector<Entry>> signed_arrows(total, std::vector<Entry>(total, 0));
  for (const auto& tri : t.triangles) {
    for (std::size_t s = 0; s < 3; ++s) {
      auto from = vertex[tri[s]];
      auto to = vertex[tri[(s + 1) % 3]];
      ++signed_arrows[from][to];
      --signed_arrows[to][from];
    }
  }
  std::vector<std::vector<Entry>> rows(total);
  for (std::size_t j = 0; j < total; ++j) rows[j].assign(signed_arrows[j].begin(), signed_arrows[j].begin() + static_cast<std::ptrdiff_t>(n));
  out.matrix = ExchangeMatrix(n, total - n, std::move(rows));
  return out;
}

bool is_four_gon(const Triangulation& t) {
  auto internal = std::count_if(t.arcs.begin(), t.arcs.end(), [](const Arc& a) { return !a.boundary; });
  return internal == 1 && t.arcs.size() == 5 && t.triangles.size() == 2;
}

SurfaceGluingReport surface_gluing_check(const Triangulation& t) {
  auto q = triangulation_to_ice_quiver(t);
  SurfaceGluingReport r;
  r.four_gon = is_four_gon(t);
  r.analysis = classify(q.matrix);
  for (const auto& cls : r.analysis.strict_classes) {
    if (cls.size() < 2) continue;
    std::vector<int> arcs;
    for (auto v : cls) arcs.push_back(q.vertex_arcs[v]);
    r.glued_arcs.push_back(std::move(arcs));
  }
  r.holds = r.four_gon ? !r.analysis.gluing_free : r.analysis.prime_gluing_free;
  return r;
}

SurfaceComparison compare_surface_aut_groups(const Triangulation& t, std::size_t cap) {
  if (is_four_gon(t)) throw std::invalid_argument("the 4-gon is excluded from the comparison");
  auto q = triangulation_to_ice_quiver(t);
  auto boundary_graph = ExchangeGraph::enumerate(q.matrix, cap);
  auto graph = ExchangeGraph::enumerate(q.matrix.principal_part(), cap);
  auto boundary_group = find_cluster_automorphisms(boundary_graph);
  auto group = find_cluster_automorphisms(graph);

  SurfaceComparison r;
  r.boundary_order = boundary_group.order();
  r.order = group.order();
  r.boundary_direct_order = direct_subgroup(boundary_group).order();
  r.direct_order = direct_subgroup(group).order();
  r.map = check_specialization_map(boundary_group, boundary_graph, group, graph);
  r.holds = r.boundary_order == r.order && r.boundary_direct_order == r.direct_order && r.map.injective &&
            r.map.homomorphism && r.map.surjective;
  return r;
}

}  // namespace clusteraut
