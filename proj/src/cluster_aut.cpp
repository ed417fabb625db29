#include "clusteraut/cluster_aut.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "clusteraut/errors.hpp"

namespace clusteraut {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

class BijectionBuilder {
 public:
  explicit BijectionBuilder(std::size_t n) : forward_(n, kUnset), backward_(n, kUnset) {}

  /// False on a clash. Sets `fresh` when the pair is new.
  bool bind(std::size_t a, std::size_t b, bool* fresh = nullptr) {
    if (fresh) *fresh = false;
    if (forward_[a] == kUnset && backward_[b] == kUnset) {
      forward_[a] = b;
      backward_[b] = a;
      if (fresh) *fresh = true;
      return true;
    }
    return forward_[a] == b && backward_[b] == a;
  }
  std::size_t at(std::size_t a) const { return forward_[a]; }
  bool complete() const { return std::find(forward_.begin(), forward_.end(), kUnset) == forward_.end(); }
  Permutation take() { return std::move(forward_); }

 private:
  Permutation forward_;
  Permutation backward_;
};

/// Re-express a root-to-target vertex map of graph `e` in another graph
/// reached by the same mutations, given its vertex and variable maps.
Permutation translate_exchangeable(const ClusterAutomorphism& f, const ExchangeGraph& e, const ExchangeGraph& other,
                                   const GraphCorrespondence& corr) {
  const auto n = e.rank();
  auto target = corr.vertex_map[f.target_vertex];
  Permutation out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto var = corr.variable_map[e.cluster(f.target_vertex)[f.sigma.map[i]]];
    auto position = other.position_of(target, var);
    if (!position) throw MismatchError("correspondence does not carry the target cluster");
    out[i] = *position;
  }
  return out;
}

std::size_t factorial(std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

std::optional<ClusterAutomorphism> propagate(const ExchangeGraph& e, std::size_t target, const QuiverIso& sigma) {
  const auto n = e.rank();
  const auto m = e.frozen();
  if (target >= e.size() || sigma.map.size() != n + m || !is_permutation(sigma.map)) return std::nullopt;
  const Entry s = sigma.direction == Direction::direct ? 1 : -1;
  const auto exchangeable_vars = e.exchangeable_variable_count();

  BijectionBuilder vars(e.variable_count());
  BijectionBuilder vertices(e.size());
  for (std::size_t f = 0; f < m; ++f) {
    if (sigma.map[n + f] < n) return std::nullopt;
    vars.bind(e.frozen_variable_id(f), e.frozen_variable_id(sigma.map[n + f] - n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma.map[i] >= n || !vars.bind(e.cluster(0)[i], e.cluster(target)[sigma.map[i]])) return std::nullopt;
  }
  vertices.bind(0, target);

  std::deque<std::size_t> queue{0};
  std::vector<std::size_t> p(n + m);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    auto w = vertices.at(u);
    for (std::size_t i = 0; i < n; ++i) {
      auto image = vars.at(e.cluster(u)[i]);
      auto position = image == kUnset ? std::nullopt : e.position_of(w, image);
      if (!position) return std::nullopt;
      p[i] = *position;
    }
    for (std::size_t f = 0; f < m; ++f) p[n + f] = n + (vars.at(e.frozen_variable_id(f)) - exchangeable_vars);

    const auto& bu = e.seed(u).matrix();
    const auto& bw = e.seed(w).matrix();
    for (std::size_t j = 0; j < n + m; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (bw(p[j], p[i]) != s * bu(j, i)) return std::nullopt;

    for (std::size_t i = 0; i < n; ++i) {
      auto [u2, p2] = e.neighbor(u, i);
      auto [w2, q2] = e.neighbor(w, p[i]);
      if (!vars.bind(e.cluster(u2)[p2], e.cluster(w2)[q2])) return std::nullopt;
      bool fresh = false;
      if (!vertices.bind(u2, w2, &fresh)) return std::nullopt;
      if (fresh) queue.push_back(u2);
    }
  }
  if (!vertices.complete() || !vars.complete()) return std::nullopt;
  return ClusterAutomorphism{target, sigma, vertices.take(), vars.take()};
}

PermutationGroup ClusterAutomorphismGroup::build(std::vector<ClusterAutomorphism>& elements) {
  std::sort(elements.begin(), elements.end(),
            [](const auto& a, const auto& b) { return a.variable_perm < b.variable_perm; });
  std::vector<Permutation> perms;
  std::vector<int> signs;
  for (const auto& f : elements) {
    perms.push_back(f.variable_perm);
    signs.push_back(f.sign());
  }
  return PermutationGroup(std::move(perms), std::move(signs));
}

ClusterAutomorphismGroup::ClusterAutomorphismGroup(std::vector<ClusterAutomorphism> elements)
    : elements_(std::move(elements)), group_(build(elements_)) {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) {
      if (compose(elements_[a].vertex_perm, elements_[b].vertex_perm) != elements_[group_.multiply(a, b)].vertex_perm)
        throw std::logic_error("vertex action is not compatible with composition");
    }
  }
}

ClusterAutomorphismGroup find_cluster_automorphisms(const ExchangeGraph& e) {
  const auto& root = e.initial_matrix();
  std::map<Permutation, ClusterAutomorphism> found;
  for (std::size_t v = 0; v < e.size(); ++v) {
    for (auto direction : {Direction::direct, Direction::opposite}) {
      for (const auto& sigma : quiver_isomorphisms(root, e.seed(v).matrix(), direction)) {
        if (auto f = propagate(e, v, sigma)) found.try_emplace(f->variable_perm, std::move(*f));
      }
    }
  }
  std::vector<ClusterAutomorphism> elements;
  for (auto& [perm, f] : found) elements.push_back(std::move(f));
  return ClusterAutomorphismGroup(std::move(elements));
}

ClusterAutomorphismGroup direct_subgroup(const ClusterAutomorphismGroup& g) {
  std::vector<ClusterAutomorphism> kept;
  std::vector<std::size_t> members;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (g.element(a).sign() != 1) continue;
    kept.push_back(g.element(a));
    members.push_back(a);
  }
  if (kept.size() != g.order() && 2 * kept.size() != g.order())
    throw std::logic_error("direct automorphisms have index other than 1 or 2");
  if (!g.group().is_normal_subgroup(members)) throw std::logic_error("direct automorphisms are not normal");
  return ClusterAutomorphismGroup(std::move(kept));
}

std::vector<std::size_t> vertex_orbits(const ClusterAutomorphismGroup& g, std::size_t vertices) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& f : g.elements())
    for (std::size_t v = 0; v < vertices && v < f.vertex_perm.size(); ++v) {
      auto a = find(v);
      auto b = find(f.vertex_perm[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::size_t> ids;
  std::vector<std::size_t> out(vertices);
  for (std::size_t v = 0; v < vertices; ++v) out[v] = ids.try_emplace(find(v), ids.size()).first->second;
  return out;
}

bool EmbeddingReport::holds() const {
  return precondition && into_graph_group && homomorphism && (gluing_free ? injective : combined_injective);
}

EmbeddingReport embed_into_graph_group(const ClusterAutomorphismGroup& g, const ExchangeGraph& e) {
  const auto n = e.rank();
  EmbeddingReport r;
  auto graph = graph_automorphism_group(e);
  r.cluster_order = g.order();
  r.graph_order = graph.order();
  r.precondition = n >= 2;
  r.gluing_free = classify(e.initial_matrix()).gluing_free;

  r.into_graph_group = std::all_of(g.elements().begin(), g.elements().end(),
                                   [&](const auto& f) { return graph.contains(f.vertex_perm); });
  r.homomorphism = true;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.element(g.group().multiply(a, b)).vertex_perm !=
          compose(g.element(a).vertex_perm, g.element(b).vertex_perm))
        r.homomorphism = false;

  std::set<Permutation> images;
  std::set<std::pair<Permutation, Permutation>> combined;
  for (const auto& f : g.elements()) {
    images.insert(f.vertex_perm);
    combined.emplace(f.vertex_perm, Permutation(f.sigma.map.begin() + static_cast<std::ptrdiff_t>(n), f.sigma.map.end()));
  }
  r.injective = images.size() == g.order();
  r.surjective = r.injective && g.order() == graph.order();
  r.combined_injective = combined.size() == g.order();

  if (!r.precondition) {
    r.explanation = "single exchangeable vertex: the vertex action of " + std::to_string(g.order()) +
                    " cluster automorphisms lands in a graph group of order " + std::to_string(graph.order()) +
                    " with " + std::to_string(images.size()) + " distinct images";
  } else if (r.gluing_free) {
    r.explanation = "gluing free: the vertex action embeds Aut(A) into Aut(E)";
  } else {
    r.explanation = "not gluing free: the vertex action together with the strict-class permutations is injective";
    if (!r.combined_injective) r.explanation = "not gluing free: the combined map is not injective";
  }
  return r;
}

GluingFreeContext::GluingFreeContext(const ExchangeGraph& e)
    : analysis(classify(e.initial_matrix())),
      gf(gluing_free_quiver(e.initial_matrix())),
      graph(ExchangeGraph::enumerate(gf.matrix)),
      correspondence(match_by_mutation(e, graph)) {}

GluingFreeImage project_to_gluing_free(const ClusterAutomorphism& f, const ExchangeGraph& e, const GluingFreeContext& ctx) {
  const auto n = e.rank();
  const auto m = e.frozen();
  const auto& classes = ctx.analysis.strict_classes;
  const auto s = classes.size();

  GluingFreeImage out;
  QuiverIso sigma{translate_exchangeable(f, e, ctx.graph, ctx.correspondence), f.sigma.direction};
  for (std::size_t fr = 0; fr < m; ++fr) out.frozen_perm.push_back(f.sigma.map[n + fr] - n);
  out.class_perm.resize(s);
  out.class_perms.resize(s);
  for (std::size_t k = 0; k < s; ++k) {
    auto k2 = ctx.gf.class_map[out.frozen_perm[classes[k].front() - n]];
    out.class_perm[k] = k2;
    sigma.map.push_back(n + k2);
    for (auto j : classes[k]) {
      auto image = f.sigma.map[j];
      if (ctx.gf.class_map[image - n] != k2) throw MismatchError("automorphism splits a strict class");
      auto it = std::find(classes[k2].begin(), classes[k2].end(), image);
      out.class_perms[k].push_back(static_cast<std::size_t>(it - classes[k2].begin()));
    }
  }
  auto image = propagate(ctx.graph, ctx.correspondence.vertex_map[f.target_vertex], sigma);
  if (!image) throw MismatchError("projection is not an automorphism of the gluing-free algebra");
  out.image = std::move(*image);
  return out;
}

ProjectionReport check_gluing_free_projection(const ClusterAutomorphismGroup& g, const ExchangeGraph& e) {
  GluingFreeContext ctx(e);
  auto gf_group = find_cluster_automorphisms(ctx.graph);
  ProjectionReport r;
  r.order = g.order();
  r.gluing_free_order = gf_group.order();
  for (const auto& cls : ctx.analysis.strict_classes) r.class_group_order *= factorial(cls.size());

  std::vector<GluingFreeImage> images;
  for (const auto& f : g.elements()) {
    images.push_back(project_to_gluing_free(f, e, ctx));
    if (!gf_group.index_of(images.back().image)) throw MismatchError("projected element is missing from Aut of the gluing-free algebra");
  }

  std::set<std::pair<Permutation, Permutation>> distinct;
  std::set<Permutation> gf_images;
  for (const auto& img : images) {
    distinct.emplace(img.image.variable_perm, img.frozen_perm);
    gf_images.insert(img.image.variable_perm);
  }
  r.injective = distinct.size() == g.order();
  r.gluing_free_image_size = gf_images.size();
  r.homomorphism = true;
  r.direct_product_homomorphism = true;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto& ab = images[g.group().multiply(a, b)];
      const auto& ia = images[a];
      const auto& ib = images[b];
      bool gf_part = ab.image.variable_perm == compose(ia.image.variable_perm, ib.image.variable_perm);
      if (!gf_part || ab.frozen_perm != compose(ia.frozen_perm, ib.frozen_perm)) r.homomorphism = false;
      bool classes_ok = true;
      for (std::size_t k = 0; k < ab.class_perms.size(); ++k)
        if (ab.class_perms[k] != compose(ia.class_perms[k], ib.class_perms[k])) classes_ok = false;
      if (!gf_part || !classes_ok) r.direct_product_homomorphism = false;
    }
  }
  r.surjective = r.injective && g.order() == r.gluing_free_order * r.class_group_order;
  return r;
}

ClusterAutomorphism specialize_automorphism(const ClusterAutomorphism& f, const ExchangeGraph& e,
                                            const ExchangeGraph& principal, const GraphCorrespondence& corr) {
  QuiverIso sigma{translate_exchangeable(f, e, principal, corr), f.sigma.direction};
  auto image = propagate(principal, corr.vertex_map[f.target_vertex], sigma);
  if (!image) throw MismatchError("specialized map is not a cluster automorphism of the principal part");
  return std::move(*image);
}

SpecializationMapReport check_specialization_map(const ClusterAutomorphismGroup& g, const ExchangeGraph& e,
                                                 const ClusterAutomorphismGroup& principal_group,
                                                 const ExchangeGraph& principal) {
  auto corr = specialization_iso(e, principal);
  SpecializationMapReport r;
  r.order = g.order();
  r.principal_order = principal_group.order();
  std::vector<std::size_t> images;
  for (const auto& f : g.elements()) {
    auto index = principal_group.index_of(specialize_automorphism(f, e, principal, corr));
    if (!index) throw MismatchError("specialized element is missing from the principal-part group");
    images.push_back(*index);
    if (f.sign() == 1) ++r.direct_order;
  }
  for (const auto& f : principal_group.elements())
    if (f.sign() == 1) ++r.principal_direct_order;
  r.injective = std::set<std::size_t>(images.begin(), images.end()).size() == g.order();
  r.surjective = r.injective && g.order() == principal_group.order();
  r.homomorphism = true;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (images[g.group().multiply(a, b)] != principal_group.group().multiply(images[a], images[b]))
        r.homomorphism = false;
  return r;
}

bool PrincipalReport::holds() const {
  return iso_vertices == std::vector<std::size_t>{0} && anti_iso_vertices.empty() && all_direct_at_root &&
         matches_quiver_group;
}

PrincipalReport check_principal_coefficients(const ExchangeMatrix& b, std::size_t cap) {
  if (b.frozen() != 0) throw InvalidMatrix("principal coefficients need a square exchange matrix");
  if (b.exchangeable() < 2) throw InvalidMatrix("principal coefficients check needs at least two exchangeable vertices");
  const auto n = b.exchangeable();
  auto pr = ExchangeMatrix::with_principal_coefficients(b);
  auto e = ExchangeGraph::enumerate(pr, cap);
  auto g = find_cluster_automorphisms(e);

  PrincipalReport r;
  r.graph_size = e.size();
  r.group_order = g.order();
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (!quiver_isomorphisms(pr, e.seed(v).matrix(), Direction::direct).empty()) r.iso_vertices.push_back(v);
    if (!quiver_isomorphisms(pr, e.seed(v).matrix(), Direction::opposite).empty()) r.anti_iso_vertices.push_back(v);
  }
  r.all_direct_at_root = std::all_of(g.elements().begin(), g.elements().end(),
                                     [](const auto& f) { return f.sign() == 1 && f.target_vertex == 0; });

  auto quiver_group = quiver_automorphism_group(IceQuiver(b));
  r.quiver_group_order = quiver_group.order();
  std::vector<std::size_t> images;
  bool inside = true;
  for (const auto& f : g.elements()) {
    auto index = quiver_group.index_of(Permutation(f.sigma.map.begin(), f.sigma.map.begin() + static_cast<std::ptrdiff_t>(n)));
    if (!index) {
      inside = false;
      break;
    }
    images.push_back(*index);
  }
  bool hom = inside;
  for (std::size_t a = 0; hom && a < g.order(); ++a)
    for (std::size_t c = 0; c < g.order(); ++c)
      if (images[g.group().multiply(a, c)] != quiver_group.multiply(images[a], images[c])) hom = false;
  r.matches_quiver_group = hom && std::set<std::size_t>(images.begin(), images.end()).size() == g.order() &&
                           g.order() == quiver_group.order();
  return r;
}

}  // namespace clusteraut
