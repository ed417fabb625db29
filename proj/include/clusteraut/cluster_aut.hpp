#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusteraut/exchange_graph.hpp"
#include "clusteraut/gluing.hpp"
#include "clusteraut/perm_group.hpp"

namespace clusteraut {

/// A cluster automorphism, determined by where it sends the root seed.
///
/// sigma maps the vertices of the root quiver onto those of the quiver at
/// target_vertex (direct) or of its opposite (opposite): root variable at
/// position i goes to the variable at position sigma.map[i] of the target,
/// frozen vertex n+f goes to frozen vertex sigma.map[n+f].
struct ClusterAutomorphism {
  std::size_t target_vertex = 0;
  QuiverIso sigma;
  /// Exchange graph vertex u -> vertex carrying the image of cluster(u).
  Permutation vertex_perm;
  /// Over all variable ids of the graph, frozen ones included.
  Permutation variable_perm;

  Direction direction() const { return sigma.direction; }
  int sign() const { return sigma.direction == Direction::direct ? 1 : -1; }
};

/// Extend sigma at `target` to the whole exchange graph by walking both
/// copies in parallel. Returns nothing if the walk is inconsistent or some
/// seed pair fails the quiver correspondence.
std::optional<ClusterAutomorphism> propagate(const ExchangeGraph& e, std::size_t target, const QuiverIso& sigma);

/// A group of cluster automorphisms. The underlying permutation group acts
/// on variable ids and carries the direct/opposite sign; elements() is
/// aligned with group().elements().
class ClusterAutomorphismGroup {
 public:
  explicit ClusterAutomorphismGroup(std::vector<ClusterAutomorphism> elements);

  std::size_t order() const { return elements_.size(); }
  const PermutationGroup& group() const { return group_; }
  const std::vector<ClusterAutomorphism>& elements() const { return elements_; }
  const ClusterAutomorphism& element(std::size_t a) const { return elements_.at(a); }
  std::optional<std::size_t> index_of(const ClusterAutomorphism& f) const { return group_.index_of(f.variable_perm); }

 private:
  static PermutationGroup build(std::vector<ClusterAutomorphism>& elements);

  std::vector<ClusterAutomorphism> elements_;
  PermutationGroup group_;
};

/// Every (vertex, sigma) candidate from the root, propagated and kept when
/// consistent. Throws std::logic_error if the result is not a group.
ClusterAutomorphismGroup find_cluster_automorphisms(const ExchangeGraph& e);

/// Kernel of the sign map. Throws std::logic_error unless its index is 1 or
/// 2 and it is normal.
ClusterAutomorphismGroup direct_subgroup(const ClusterAutomorphismGroup& g);

/// Orbits of the action on exchange graph vertices, as a class id per vertex.
std::vector<std::size_t> vertex_orbits(const ClusterAutomorphismGroup& g, std::size_t vertices);

struct EmbeddingReport {
  /// At least two exchangeable vertices.
  bool precondition = false;
  bool gluing_free = false;
  std::string explanation;
  std::size_t cluster_order = 0;
  std::size_t graph_order = 0;
  /// Every vertex_perm is a graph automorphism.
  bool into_graph_group = false;
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
  /// Not gluing free: injectivity of f -> (vertex_perm, permutations of the
  /// strict classes).
  bool combined_injective = false;
  /// The map is an injective homomorphism into the graph group (or into the
  /// graph group times the class permutations when not gluing free).
  bool holds() const;
};

EmbeddingReport embed_into_graph_group(const ClusterAutomorphismGroup& g, const ExchangeGraph& e);

/// Image of one automorphism under the projection to the gluing-free algebra.
struct GluingFreeImage {
  ClusterAutomorphism image;
  /// Permutation of the strict classes (sigma'').
  Permutation class_perm;
  /// Per class k: member l goes to member class_perms[k][l] of class
  /// class_perm[k]. Members are numbered in ascending vertex order.
  std::vector<Permutation> class_perms;
  /// sigma restricted to the frozen vertices, as frozen indices 0..m-1.
  Permutation frozen_perm;
};

/// The gluing-free algebra of e's initial matrix, with its exchange graph
/// and the vertex correspondence.
struct GluingFreeContext {
  GluingFreeContext(const ExchangeGraph& e);
  GluingAnalysis analysis;
  GluingFreeQuiver gf;
  ExchangeGraph graph;
  GraphCorrespondence correspondence;
};

/// Throws MismatchError if the projected map is not an automorphism of the
/// gluing-free algebra.
GluingFreeImage project_to_gluing_free(const ClusterAutomorphism& f, const ExchangeGraph& e, const GluingFreeContext& ctx);

struct ProjectionReport {
  std::size_t order = 0;
  std::size_t gluing_free_order = 0;
  /// Product of t_k! over the strict classes.
  std::size_t class_group_order = 1;
  /// f -> (image, frozen_perm) is an injective homomorphism.
  bool injective = false;
  bool homomorphism = false;
  /// f -> (image, sigma_1, ..., sigma_s) multiplies componentwise.
  bool direct_product_homomorphism = false;
  /// Image size equals |Aut(gf)| * prod t_k!.
  bool surjective = false;
  /// Aut(gf) elements reached by some f.
  std::size_t gluing_free_image_size = 0;
};

ProjectionReport check_gluing_free_projection(const ClusterAutomorphismGroup& g, const ExchangeGraph& e);

/// Restrict an automorphism of an algebra with coefficients to its
/// coefficient-free principal part. f belongs to e and `corr` is
/// specialization_iso(e, principal).
/// Throws MismatchError if the result is not an automorphism.
ClusterAutomorphism specialize_automorphism(const ClusterAutomorphism& f, const ExchangeGraph& e,
                                            const ExchangeGraph& principal, const GraphCorrespondence& corr);

struct SpecializationMapReport {
  std::size_t order = 0;
  std::size_t principal_order = 0;
  bool injective = false;
  bool homomorphism = false;
  bool surjective = false;
  std::size_t direct_order = 0;
  std::size_t principal_direct_order = 0;
};

/// S_A over a whole group; g must be the automorphism group of e.
SpecializationMapReport check_specialization_map(const ClusterAutomorphismGroup& g, const ExchangeGraph& e,
                                                 const ClusterAutomorphismGroup& principal_group,
                                                 const ExchangeGraph& principal);

struct PrincipalReport {
  std::size_t graph_size = 0;
  std::size_t group_order = 0;
  std::size_t quiver_group_order = 0;
  /// Vertices whose quiver is isomorphic (resp. anti-isomorphic) to the
  /// principal-coefficient quiver.
  std::vector<std::size_t> iso_vertices;
  std::vector<std::size_t> anti_iso_vertices;
  bool all_direct_at_root = false;
  /// f -> sigma on exchangeable vertices is an isomorphism onto Aut(Q).
  bool matches_quiver_group = false;
  bool holds() const;
};

/// Needs n >= 2 and a finite-type principal part.
PrincipalReport check_principal_coefficients(const ExchangeMatrix& b, std::size_t cap = ExchangeGraph::default_cap);

}  // namespace clusteraut
