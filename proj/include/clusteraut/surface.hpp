#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "clusteraut/cluster_aut.hpp"
#include "clusteraut/gluing.hpp"

namespace clusteraut {

struct Arc {
  int id = 0;
  bool boundary = false;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A combinatorial ideal triangulation. Each triangle lists its three sides
/// in clockwise order.
struct Triangulation {
  std::vector<Arc> arcs;
  std::vector<std::array<int, 3>> triangles;

  /// Throws SelfFoldedUnsupported when a triangle repeats an arc and
  /// InvalidIncidence for unknown or duplicate ids, or an internal arc not in
  /// exactly two triangle sides (boundary arcs: exactly one).
  void validate() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// Fan triangulation of a convex polygon with `corners` >= 4 marked points
/// 0..corners-1 in clockwise order: triangles (0, k, k+1), diagonals from 0.
/// Diagonal (0, k) has id k-1; boundary edge (k, k+1) has id corners-2+k.
Triangulation polygon_fan(std::size_t corners);

struct SurfaceQuiver {
  ExchangeMatrix matrix;
  /// Arc id of each quiver vertex: internal arcs by id, then boundary arcs by id.
  std::vector<int> vertex_arcs;
};

/// For consecutive sides a, b of a triangle (b after a clockwise) add a -> b;
/// opposite arrows cancel and arrows between boundary arcs are dropped.
SurfaceQuiver triangulation_to_ice_quiver(const Triangulation& t);

/// One internal arc, four boundary arcs, two triangles.
bool is_four_gon(const Triangulation& t);

struct SurfaceGluingReport {
  bool four_gon = false;
  GluingAnalysis analysis;
  /// Strict classes with more than one member, as arc ids.
  std::vector<std::vector<int>> glued_arcs;
  /// Prime gluing free away from the 4-gon; for the 4-gon, not gluing free.
  bool holds = false;
};

SurfaceGluingReport surface_gluing_check(const Triangulation& t);

struct SurfaceComparison {
  std::size_t boundary_order = 0;
  std::size_t order = 0;
  std::size_t boundary_direct_order = 0;
  std::size_t direct_order = 0;
  SpecializationMapReport map;
  bool holds = false;
};

/// Aut of the algebra with boundary coefficients against Aut of its
/// coefficient-free part. Not for the 4-gon (std::invalid_argument); throws
/// CapExceeded on infinite type.
SurfaceComparison compare_surface_aut_groups(const Triangulation& t, std::size_t cap = ExchangeGraph::default_cap);

}  // namespace clusteraut
