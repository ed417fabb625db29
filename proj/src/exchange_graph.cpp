#include "clusteraut/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "clusteraut/errors.hpp"

namespace clusteraut {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

}  // namespace

ExchangeGraph ExchangeGraph::enumerate(const ExchangeMatrix& b, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("enumerate: cap must be positive");
  const auto n = b.exchangeable();

  std::map<LaurentPolynomial, VarId> ids;
  auto intern = [&ids](const LaurentPolynomial& p) { return ids.try_emplace(p, ids.size()).first->second; };
  auto key_of = [&](const Seed& s) {
    std::vector<VarId> key;
    for (const auto& v : s.cluster()) key.push_back(intern(v));
    std::sort(key.begin(), key.end());
    return key;
  };

  std::vector<Seed> seeds{Seed::initial(b)};
  std::vector<std::vector<Neighbor>> adjacency(1, std::vector<Neighbor>(n, Neighbor{kUnset, kUnset}));
  std::map<std::vector<VarId>, std::size_t> vertices{{key_of(seeds[0]), 0}};

  for (std::size_t v = 0; v < seeds.size(); ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (adjacency[v][i].vertex != kUnset) continue;
      Seed next = seeds[v].mutate(i);
      auto key = key_of(next);
      auto found = vertices.find(key);
      std::size_t w = 0;
      std::size_t position = i;
      if (found != vertices.end()) {
        w = found->second;
        auto fresh = intern(next.cluster()[i]);
        const auto& there = seeds[w].cluster();
        auto it = std::find_if(there.begin(), there.end(), [&](const auto& p) { return intern(p) == fresh; });
        position = static_cast<std::size_t>(it - there.begin());
      } else {
        if (seeds.size() >= cap)
          throw CapExceeded("more than " + std::to_string(cap) + " seeds; the algebra appears to be of infinite type");
        w = seeds.size();
        seeds.push_back(std::move(next));
        adjacency.emplace_back(n, Neighbor{kUnset, kUnset});
        vertices.emplace(std::move(key), w);
      }
      if (adjacency[w][position].vertex != kUnset && !(adjacency[w][position] == Neighbor{v, i}))
        throw MismatchError("mutation is not an involution on the exchange graph");
      adjacency[v][i] = {w, position};
      adjacency[w][position] = {v, i};
    }
  }
  return assemble(std::move(seeds), std::move(adjacency));
}

ExchangeGraph ExchangeGraph::assemble(std::vector<Seed> seeds, std::vector<std::vector<Neighbor>> adjacency) {
  if (seeds.empty()) throw MismatchError("exchange graph without vertices");
  if (adjacency.size() != seeds.size()) throw MismatchError("adjacency size differs from vertex count");
  if (!(seeds.front() == Seed::initial(seeds.front().matrix())))
    throw MismatchError("vertex 0 must carry the initial cluster");
  ExchangeGraph g;
  g.seeds_ = std::move(seeds);
  g.adjacency_ = std::move(adjacency);
  g.index();
  return g;
}

void ExchangeGraph::index() {
  const auto n = rank();
  for (const auto& s : seeds_) {
    if (s.rank() != n || s.matrix().frozen() != frozen()) throw MismatchError("seed shape differs from the root");
    std::vector<VarId> cluster;
    for (const auto& p : s.cluster()) {
      auto [it, inserted] = variable_index_.try_emplace(p, variables_.size());
      if (inserted) variables_.push_back(p);
      cluster.push_back(it->second);
    }
    clusters_.push_back(std::move(cluster));
  }
  occurrences_.assign(variables_.size(), {});
  for (std::size_t v = 0; v < size(); ++v) {
    for (std::size_t i = 0; i < n; ++i) occurrences_[clusters_[v][i]].emplace_back(v, i);
    if (!vertex_index_.emplace(cluster_key(v), v).second)
      throw MismatchError("two vertices carry the same cluster");
  }

  for (std::size_t v = 0; v < size(); ++v) {
    if (adjacency_[v].size() != n) throw MismatchError("vertex " + std::to_string(v) + " is not " + std::to_string(n) + "-regular");
    for (std::size_t i = 0; i < n; ++i) {
      auto [w, position] = adjacency_[v][i];
      if (w >= size() || position >= n || !(adjacency_[w][position] == Neighbor{v, i}))
        throw MismatchError("adjacency is not symmetric at vertex " + std::to_string(v));
      // Mutating the stored seed must reproduce the neighbour up to a
      // permutation of positions that fixes the exchanged slot.
      Seed next = seeds_[v].mutate(i);
      Permutation perm(n);
      for (std::size_t p = 0; p < n; ++p) {
        auto id = find_variable(next.cluster()[p]);
        auto at = id ? position_of(w, *id) : std::nullopt;
        if (!at) throw MismatchError("neighbour of vertex " + std::to_string(v) + " does not match its mutation");
        perm[p] = *at;
      }
      if (perm[i] != position || !is_permutation(perm) ||
          !(next.matrix().permute_exchangeable(perm) == seeds_[w].matrix()))
        throw MismatchError("seeds with equal clusters disagree at vertex " + std::to_string(w));
    }
  }

  words_.assign(size(), {});
  std::vector<bool> seen(size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      auto w = adjacency_[v][i].vertex;
      if (seen[w]) continue;
      seen[w] = true;
      words_[w] = words_[v];
      words_[w].push_back(i);
      queue.push_back(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw MismatchError("exchange graph is not connected");
}

std::vector<std::vector<std::size_t>> ExchangeGraph::simple_adjacency() const {
  std::vector<std::vector<std::size_t>> out(size());
  for (std::size_t v = 0; v < size(); ++v)
    for (const auto& nb : adjacency_[v]) out[v].push_back(nb.vertex);
  return out;
}

std::vector<GraphEdge> ExchangeGraph::edges() const {
  std::vector<GraphEdge> out;
  for (std::size_t v = 0; v < size(); ++v)
    for (std::size_t i = 0; i < rank(); ++i)
      if (v < adjacency_[v][i].vertex) out.push_back({v, i, adjacency_[v][i].vertex, adjacency_[v][i].position});
  return out;
}

std::optional<std::size_t> ExchangeGraph::position_of(std::size_t v, VarId var) const {
  const auto& c = clusters_.at(v);
  auto it = std::find(c.begin(), c.end(), var);
  if (it == c.end()) return std::nullopt;
  return static_cast<std::size_t>(it - c.begin());
}

std::vector<VarId> ExchangeGraph::cluster_key(std::size_t v) const {
  auto key = clusters_.at(v);
  std::sort(key.begin(), key.end());
  return key;
}

std::optional<std::size_t> ExchangeGraph::find_vertex(const std::vector<VarId>& key) const {
  auto it = vertex_index_.find(key);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

LaurentPolynomial ExchangeGraph::variable(VarId id) const {
  if (id < variables_.size()) return variables_[id];
  if (id >= variable_count()) throw std::out_of_range("variable id out of range");
  return LaurentPolynomial::variable(initial_matrix().vertices(), rank() + (id - variables_.size()));
}

std::optional<VarId> ExchangeGraph::find_variable(const LaurentPolynomial& p) const {
  auto it = variable_index_.find(p);
  if (it != variable_index_.end()) return it->second;
  for (std::size_t f = 0; f < frozen(); ++f)
    if (p == variable(frozen_variable_id(f))) return frozen_variable_id(f);
  return std::nullopt;
}

bool ExchangeGraph::check_structure() const {
  const auto n = rank();
  std::vector<bool> seen(size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (adjacency_[v].size() != n) return false;
    for (const auto& nb : adjacency_[v]) {
      auto a = cluster_key(v);
      auto b = cluster_key(nb.vertex);
      std::vector<VarId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.size() + 1 != n) return false;
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = true;
        ++reached;
        queue.push_back(nb.vertex);
      }
    }
    std::vector<std::size_t> distinct;
    for (const auto& nb : adjacency_[v]) distinct.push_back(nb.vertex);
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) return false;
  }
  return reached == size();
}

GraphCorrespondence match_by_mutation(const ExchangeGraph& from, const ExchangeGraph& to) {
  if (from.rank() != to.rank()) throw MismatchError("exchange graphs have different rank");
  const auto n = from.rank();
  GraphCorrespondence out;
  out.vertex_map.assign(from.size(), kUnset);
  out.variable_map.assign(from.exchangeable_variable_count(), kUnset);
  std::vector<std::size_t> vertex_inverse(to.size(), kUnset);
  std::vector<VarId> variable_inverse(to.exchangeable_variable_count(), kUnset);

  auto bind_var = [&](VarId a, VarId b) {
    if (out.variable_map[a] == kUnset && variable_inverse[b] == kUnset) {
      out.variable_map[a] = b;
      variable_inverse[b] = a;
    } else if (out.variable_map[a] != b || variable_inverse[b] != a) {
      throw MismatchError("cluster variable correspondence is inconsistent");
    }
  };
  std::deque<std::size_t> queue;
  auto bind_vertex = [&](std::size_t u, std::size_t w) {
    if (out.vertex_map[u] == kUnset && vertex_inverse[w] == kUnset) {
      out.vertex_map[u] = w;
      vertex_inverse[w] = u;
      queue.push_back(u);
    } else if (out.vertex_map[u] != w || vertex_inverse[w] != u) {
      throw MismatchError("vertex correspondence is inconsistent");
    }
  };

  for (std::size_t i = 0; i < n; ++i) bind_var(from.cluster(0)[i], to.cluster(0)[i]);
  bind_vertex(0, 0);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    auto w = out.vertex_map[u];
    for (std::size_t i = 0; i < n; ++i) {
      auto image = out.variable_map[from.cluster(u)[i]];
      auto q = image == kUnset ? std::nullopt : to.position_of(w, image);
      if (!q) throw MismatchError("cluster of vertex " + std::to_string(u) + " does not map into its image");
      auto [u2, p2] = from.neighbor(u, i);
      auto [w2, q2] = to.neighbor(w, *q);
      bind_var(from.cluster(u2)[p2], to.cluster(w2)[q2]);
      bind_vertex(u2, w2);
    }
  }
  if (from.size() != to.size() || from.exchangeable_variable_count() != to.exchangeable_variable_count())
    throw MismatchError("exchange graphs have different sizes");
  return out;
}

GraphCorrespondence specialization_iso(const ExchangeGraph& full, const ExchangeGraph& principal) {
  if (!(full.initial_matrix().principal_part() == principal.initial_matrix()))
    throw MismatchError("second graph is not the principal part of the first");
  auto corr = match_by_mutation(full, principal);
  const auto n = full.rank();
  for (VarId id = 0; id < full.exchangeable_variable_count(); ++id) {
    if (!(full.variable(id).specialize_tail(n) == principal.variable(corr.variable_map[id])))
      throw MismatchError("specializing " + full.variable(id).to_string() + " does not give " +
                          principal.variable(corr.variable_map[id]).to_string());
  }
  auto adjacency = principal.simple_adjacency();
  for (const auto& e : full.edges()) {
    const auto& nbrs = adjacency[corr.vertex_map[e.u]];
    if (std::find(nbrs.begin(), nbrs.end(), corr.vertex_map[e.v]) == nbrs.end())
      throw MismatchError("specialization does not preserve an edge");
  }
  return corr;
}

namespace {

std::vector<std::size_t> refine_colours(const std::vector<std::vector<std::size_t>>& adjacency) {
  const auto n = adjacency.size();
  std::vector<std::size_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = adjacency[v].size();
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sigs(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> around;
      for (auto w : adjacency[v]) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sigs[v] = {colour[v], std::move(around)};
      ids.emplace(sigs[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = ids[sigs[v]];
    if (ids.size() == classes) return colour;
    classes = ids.size();
  }
}

class GraphAutSearch {
 public:
  explicit GraphAutSearch(const std::vector<std::vector<std::size_t>>& adjacency)
      : adjacency_(adjacency), n_(adjacency.size()), colour_(refine_colours(adjacency)) {
    adjacent_.assign(n_, std::vector<char>(n_, 0));
    for (std::size_t v = 0; v < n_; ++v)
      for (auto w : adjacency[v]) adjacent_[v][w] = 1;
    parent_.assign(n_, kUnset);
    std::vector<bool> seen(n_, false);
    for (std::size_t s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      std::deque<std::size_t> queue{s};
      seen[s] = true;
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (auto w : adjacency[v]) {
          if (seen[w]) continue;
          seen[w] = true;
          parent_[w] = v;
          queue.push_back(w);
        }
      }
    }
    map_.assign(n_, kUnset);
    used_.assign(n_, false);
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(std::size_t depth) {
    if (depth == n_) {
      found_.push_back(map_);
      return;
    }
    auto v = order_[depth];
    auto try_candidate = [&](std::size_t w) {
      if (used_[w] || colour_[w] != colour_[v]) return;
      for (std::size_t d = 0; d < depth; ++d) {
        auto u = order_[d];
        if (adjacent_[u][v] != adjacent_[map_[u]][w]) return;
      }
      map_[v] = w;
      used_[w] = true;
      extend(depth + 1);
      used_[w] = false;
      map_[v] = kUnset;
    };
    if (parent_[v] != kUnset) {
      for (auto w : adjacency_[map_[parent_[v]]]) try_candidate(w);
    } else {
      for (std::size_t w = 0; w < n_; ++w) try_candidate(w);
    }
  }

  const std::vector<std::vector<std::size_t>>& adjacency_;
  std::size_t n_;
  std::vector<std::size_t> colour_;
  std::vector<std::vector<char>> adjacent_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> parent_;
  Permutation map_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

PermutationGroup graph_automorphism_group(const std::vector<std::vector<std::size_t>>& adjacency) {
  if (adjacency.empty()) throw std::invalid_argument("graph without vertices");
  return PermutationGroup(GraphAutSearch(adjacency).run());
}

PermutationGroup graph_automorphism_group(const ExchangeGraph& e) {
  return graph_automorphism_group(e.simple_adjacency());
}

bool preserves_adjacency(const std::vector<std::vector<std::size_t>>& adjacency, const Permutation& perm) {
  if (perm.size() != adjacency.size() || !is_permutation(perm)) return false;
  std::vector<std::vector<std::size_t>> sorted = adjacency;
  for (auto& nbrs : sorted) std::sort(nbrs.begin(), nbrs.end());
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    std::vector<std::size_t> mapped;
    for (auto w : adjacency[v]) mapped.push_back(perm[w]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != sorted[perm[v]]) return false;
  }
  return true;
}

std::string to_dot(const ExchangeGraph& e, const DotOptions& options) {
  std::ostringstream out;
  out << "graph exchange_graph {\n";
  out << "  node [shape=ellipse];\n";
  for (std::size_t v = 0; v < e.size(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (options.cluster_labels) {
      for (auto id : e.cluster(v)) out << "\\n" << e.variable(id).to_string();
    }
    out << "\"";
    if (v < options.vertex_classes.size())
      out << ", style=filled, colorscheme=set312, fillcolor=" << (options.vertex_classes[v] % 12 + 1);
    out << "];\n";
  }
  for (const auto& edge : e.edges()) {
    out << "  " << edge.u << " -- " << edge.v;
    if (options.position_labels) out << " [label=\"" << edge.position_u + 1 << "/" << edge.position_v + 1 << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace clusteraut
