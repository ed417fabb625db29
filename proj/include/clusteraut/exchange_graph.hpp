#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusteraut/perm_group.hpp"
#include "clusteraut/seed.hpp"

namespace clusteraut {

/// Id of a cluster variable in an exchange graph's registry. Exchangeable
/// variables come first, numbered by first occurrence (vertex, then
/// position), so x_1..x_n are 0..n-1. The m frozen variables follow.
using VarId = std::size_t;

/// The vertex reached by mutating at a position, and the position the new
/// variable occupies there.
struct Neighbor {
  std::size_t vertex = 0;
  std::size_t position = 0;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct GraphEdge {
  std::size_t u = 0;
  std::size_t position_u = 0;
  std::size_t v = 0;
  std::size_t position_v = 0;
};

/// All seeds of a finite-type cluster algebra with their mutation edges.
/// Vertex 0 is the initial seed; vertices are numbered in breadth-first
/// order, exploring positions in increasing order.
class ExchangeGraph {
 public:
  static constexpr std::size_t default_cap = 100000;

  /// Breadth-first closure under mutation, deduplicating by the unordered
  /// set of exchangeable variables. Throws CapExceeded once more than `cap`
  /// seeds are found and MismatchError if two seeds with equal clusters
  /// disagree on their matrices.
  static ExchangeGraph enumerate(const ExchangeMatrix& b, std::size_t cap = default_cap);

  /// Rebuild from explicit seeds and adjacency (JSON import). Every edge is
  /// rechecked by mutation; throws MismatchError on inconsistent data.
  static ExchangeGraph assemble(std::vector<Seed> seeds, std::vector<std::vector<Neighbor>> adjacency);

  std::size_t size() const { return seeds_.size(); }
  std::size_t rank() const { return initial_matrix().exchangeable(); }
  std::size_t frozen() const { return initial_matrix().frozen(); }
  std::size_t root() const { return 0; }
  const ExchangeMatrix& initial_matrix() const { return seeds_.front().matrix(); }

  const Seed& seed(std::size_t v) const { return seeds_.at(v); }
  const std::vector<Seed>& seeds() const { return seeds_; }
  /// Variable ids by position.
  const std::vector<VarId>& cluster(std::size_t v) const { return clusters_.at(v); }
  Neighbor neighbor(std::size_t v, std::size_t position) const { return adjacency_.at(v).at(position); }
  const std::vector<std::vector<Neighbor>>& adjacency() const { return adjacency_; }
  /// Unlabeled adjacency lists.
  std::vector<std::vector<std::size_t>> simple_adjacency() const;
  /// Each edge once, with u < v.
  std::vector<GraphEdge> edges() const;
  std::optional<std::size_t> position_of(std::size_t v, VarId var) const;
  /// Mutation word from the root along the breadth-first tree.
  const AdmissibleWord& word_to(std::size_t v) const { return words_.at(v); }
  /// Sorted exchangeable variable ids.
  std::vector<VarId> cluster_key(std::size_t v) const;
  std::optional<std::size_t> find_vertex(const std::vector<VarId>& key) const;

  std::size_t exchangeable_variable_count() const { return variables_.size(); }
  std::size_t variable_count() const { return variables_.size() + frozen(); }
  bool is_frozen_variable(VarId id) const { return id >= variables_.size(); }
  /// Frozen vertex index (0-based among frozen vertices) -> variable id.
  VarId frozen_variable_id(std::size_t f) const { return variables_.size() + f; }
  LaurentPolynomial variable(VarId id) const;
  std::optional<VarId> find_variable(const LaurentPolynomial& p) const;
  /// (vertex, position) pairs where an exchangeable variable occurs.
  const std::vector<std::pair<std::size_t, std::size_t>>& occurrences(VarId id) const {
    return occurrences_.at(id);
  }

  /// Regularity, connectivity and the one-variable-difference rule on
  /// every edge.
  bool check_structure() const;

  friend bool operator==(const ExchangeGraph& a, const ExchangeGraph& b) {
    return a.seeds_ == b.seeds_ && a.adjacency_ == b.adjacency_;
  }

 private:
  ExchangeGraph() = default;
  void index();

  std::vector<Seed> seeds_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::vector<VarId>> clusters_;
  std::vector<AdmissibleWord> words_;
  std::vector<LaurentPolynomial> variables_;
  std::map<LaurentPolynomial, VarId> variable_index_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occurrences_;
  std::map<std::vector<VarId>, std::size_t> vertex_index_;
};

/// Vertex and variable correspondence between two exchange graphs with the
/// same principal part, found by walking both from their roots with the
/// same mutation positions.
struct GraphCorrespondence {
  std::vector<std::size_t> vertex_map;
  /// Exchangeable variable ids of `from` -> exchangeable variable ids of `to`.
  std::vector<VarId> variable_map;
};

/// Throws MismatchError when the walk is inconsistent or not a bijection.
GraphCorrespondence match_by_mutation(const ExchangeGraph& from, const ExchangeGraph& to);

/// The isomorphism E_Q -> E_{Q^ex}. On top of match_by_mutation, checks that
/// setting every frozen variable to 1 in each exchangeable variable of
/// `full` yields the matched variable of `principal`, and that edges map to
/// edges. Throws MismatchError on failure.
GraphCorrespondence specialization_iso(const ExchangeGraph& full, const ExchangeGraph& principal);

/// Automorphism group of an undirected simple graph, by colour refinement
/// and backtracking.
PermutationGroup graph_automorphism_group(const std::vector<std::vector<std::size_t>>& adjacency);
PermutationGroup graph_automorphism_group(const ExchangeGraph& e);

/// Edge scan: does `perm` preserve adjacency in both directions?
bool preserves_adjacency(const std::vector<std::vector<std::size_t>>& adjacency, const Permutation& perm);

struct DotOptions {
  bool cluster_labels = false;
  bool position_labels = false;
  /// Optional colour class per vertex (e.g. automorphism orbits).
  std::vector<std::size_t> vertex_classes;
};

std::string to_dot(const ExchangeGraph& e, const DotOptions& options = {});

}  // namespace clusteraut
