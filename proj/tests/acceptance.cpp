// One PASS/FAIL line per acceptance criterion. All comparisons are exact.

#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clusteraut/cluster_aut.hpp"
#include "clusteraut/surface.hpp"
#include "fixtures.hpp"

using namespace clusteraut;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename T, typename U>
  void equal(const T& got, const U& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream out;
    out << what << ": got " << got << ", want " << want;
    failures_.push_back(out.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::size_t glued_class_count(const GluingAnalysis& a) {
  std::size_t count = 0;
  for (const auto& c : a.strict_classes) count += c.size() > 1;
  return count;
}

bool group_laws_hold(const ClusterAutomorphismGroup& g) {
  const auto& group = g.group();
  if (!group.has_signs()) return false;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (group.sign(a) != g.element(a).sign()) return false;
    for (std::size_t b = 0; b < g.order(); ++b) {
      auto ab = group.multiply(a, b);
      if (group.sign(ab) != group.sign(a) * group.sign(b)) return false;
      if (!group.contains(compose(g.element(a).variable_perm, g.element(b).variable_perm))) return false;
    }
  }
  return true;
}

std::vector<AdmissibleWord> words_up_to(std::size_t n, std::size_t length) {
  std::vector<AdmissibleWord> out{{}};
  std::vector<AdmissibleWord> frontier{{}};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<AdmissibleWord> next;
    for (const auto& w : frontier)
      for (std::size_t k = 0; k < n; ++k) {
        if (!w.empty() && w.back() == k) continue;
        auto x = w;
        x.push_back(k);
        next.push_back(std::move(x));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

void a3_exchange_graph(Criterion& c) {
  auto e = ExchangeGraph::enumerate(fixtures::a3());
  c.equal(e.size(), 14u, "vertices");
  c.expect(e.check_structure(), "3-regular and connected");
  auto g = graph_automorphism_group(e);
  c.equal(g.order(), 12u, "|Aut(E)|");
  c.equal(identify_group(g).name, std::string("D6"), "Aut(E)");
}

void a3_cluster_automorphisms(Criterion& c) {
  auto e = ExchangeGraph::enumerate(fixtures::a3());
  auto g = find_cluster_automorphisms(e);
  c.equal(g.order(), 12u, "|Aut(A)|");
  c.equal(identify_group(g.group()).name, std::string("D6"), "Aut(A)");
  c.equal(direct_subgroup(g).order(), 6u, "|Aut+(A)|");
  auto r = embed_into_graph_group(g, e);
  c.expect(r.holds() && r.injective && r.surjective, "Aut(A) -> Aut(E) is a bijective homomorphism");
}

void a3_with_frozen(Criterion& c) {
  auto e1 = ExchangeGraph::enumerate(fixtures::a3_one_frozen());
  auto g1 = find_cluster_automorphisms(e1);
  c.equal(g1.order(), 4u, "|Aut(A_Q-bar')|");
  c.equal(identify_group(g1.group()).name, std::string("K4"), "Aut(A_Q-bar')");
  auto r = embed_into_graph_group(g1, e1);
  c.expect(r.holds() && !r.surjective && r.graph_order == 12, "proper subgroup of the order 12 graph group");

  auto e2 = ExchangeGraph::enumerate(fixtures::a3_two_frozen());
  auto g2 = find_cluster_automorphisms(e2);
  c.equal(g2.order(), 8u, "|Aut(A_Q')|");
  c.equal(identify_group(g2.group()).name, std::string("S2^3"), "Aut(A_Q')");
}

void four_gon(Criterion& c) {
  auto e = ExchangeGraph::enumerate(fixtures::four_gon());
  c.equal(e.size(), 2u, "vertices");
  c.equal(graph_automorphism_group(e).order(), 2u, "|Aut(E)|");
  auto g = find_cluster_automorphisms(e);
  c.equal(g.order(), 16u, "|Aut(A)|");
  c.equal(identify_group(g.group()).describe(), std::string("S2^4"), "Aut(A)");
  c.expect(!embed_into_graph_group(g, e).precondition, "n = 1 embedding precondition fails");
}

void universal_a2(Criterion& c) {
  c.expect(classify(fixtures::universal_a2()).prime_gluing_free, "B' is prime gluing free");
  auto g1 = find_cluster_automorphisms(ExchangeGraph::enumerate(fixtures::universal_a2()));
  c.equal(g1.order(), 10u, "|Aut(A_Q')|");
  c.equal(identify_group(g1.group()).name, std::string("D5"), "Aut(A_Q')");
  auto g2 = find_cluster_automorphisms(ExchangeGraph::enumerate(fixtures::universal_a2_changed()));
  c.equal(g2.order(), 1u, "|Aut(A_Q'')|");
  auto s = check_specialization(fixtures::universal_a2(), fixtures::universal_a2_changed(), fixtures::universal_change());
  c.expect(s.holds, "coefficient specialization B' -> B''");
  c.equal(s.checked, 5u, "seeds checked");
}

void twin_sources(Criterion& c) {
  auto q = fixtures::twin_sources();
  auto glued = fixtures::twin_sources_glued();
  AdmissibleWord w{1, 0};
  c.expect(!quiver_isomorphisms(glued, apply_word(glued, w), Direction::opposite).empty(), "mu1 mu2 (Q-bar) ~ Q-bar^op");
  c.expect(quiver_isomorphisms(q, apply_word(q, w), Direction::direct).empty(), "mu1 mu2 (Q) not ~ Q");
  c.expect(quiver_isomorphisms(q, apply_word(q, w), Direction::opposite).empty(), "mu1 mu2 (Q) not ~ Q^op");
  auto e = ExchangeGraph::enumerate(q);
  auto p = check_gluing_free_projection(find_cluster_automorphisms(e), e);
  c.expect(p.injective && p.homomorphism, "projection is an injective homomorphism");
  c.expect(!p.surjective, "projection is not onto");
}

void principal_coefficients(Criterion& c) {
  auto r = check_principal_coefficients(fixtures::two_sources());
  c.equal(r.group_order, 2u, "|Aut(A^pr)|");
  c.equal(r.quiver_group_order, 2u, "|Aut(Q)|");
  c.expect(r.matches_quiver_group, "Aut(A^pr) = Aut(Q)");
  c.expect(r.iso_vertices == std::vector<std::size_t>{0}, "only the root carries Q^pr");
  c.expect(r.anti_iso_vertices.empty(), "no seed carries (Q^pr)^op");
}

void surfaces(Criterion& c) {
  for (std::size_t corners = 5; corners <= 7; ++corners) {
    auto name = std::to_string(corners) + "-gon ";
    auto s = compare_surface_aut_groups(polygon_fan(corners));
    c.equal(s.boundary_direct_order, s.direct_order, name + "|Aut+|");
    c.equal(s.boundary_order, s.order, name + "|Aut|");
    c.expect(s.map.injective && s.map.surjective && s.map.homomorphism, name + "specialization is a bijection");
  }
  auto square = surface_gluing_check(polygon_fan(4));
  c.equal(glued_class_count(square.analysis), 2u, "4-gon strict classes");
}

void property_suites(Criterion& c) {
  std::mt19937 rng(20240901);
  std::size_t involution_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + rng() % 5;
    auto b = fixtures::random_matrix(rng, n, rng() % 4, 3);
    auto k = rng() % n;
    involution_failures += !(mutate_matrix(mutate_matrix(b, k), k) == b);
  }
  c.equal(involution_failures, 0u, "mutation involution failures");

  std::vector<ExchangeMatrix> matrices{fixtures::a2(),
                                       fixtures::a3(),
                                       fixtures::a4(),
                                       fixtures::a3_one_frozen(),
                                       fixtures::a3_two_frozen(),
                                       fixtures::four_gon(),
                                       fixtures::universal_a2(),
                                       fixtures::universal_a2_changed(),
                                       fixtures::twin_sources(),
                                       fixtures::twin_sources_glued(),
                                       ExchangeMatrix::with_principal_coefficients(fixtures::two_sources())};
  for (std::size_t corners = 5; corners <= 7; ++corners)
    matrices.push_back(triangulation_to_ice_quiver(polygon_fan(corners)).matrix);

  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& b = matrices[i];
    auto tag = "matrix " + std::to_string(i) + ": ";
    try {
      auto e = ExchangeGraph::enumerate(b);
      c.expect(e.check_structure(), tag + "regular, connected, one variable per edge");
      std::set<std::vector<VarId>> keys;
      for (std::size_t v = 0; v < e.size(); ++v) keys.insert(e.cluster_key(v));
      c.equal(keys.size(), e.size(), tag + "distinct clusters");
      auto g = find_cluster_automorphisms(e);
      c.expect(group_laws_hold(g), tag + "closure and sign homomorphism");
    } catch (const std::exception& ex) {
      c.expect(false, tag + ex.what());
    }
    std::size_t commute_failures = 0;
    for (const auto& w : words_up_to(b.exchangeable(), 6)) commute_failures += !verify_pgf_commutes(b, w);
    c.equal(commute_failures, 0u, tag + "pgf commutation failures");
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> criteria{
      {"A3 exchange graph", a3_exchange_graph},
      {"A3 cluster automorphisms", a3_cluster_automorphisms},
      {"A3 with frozen vertices", a3_with_frozen},
      {"4-gon", four_gon},
      {"universal A2 coefficients", universal_a2},
      {"gluing-free projection not onto", twin_sources},
      {"principal coefficients", principal_coefficients},
      {"polygon surfaces", surfaces},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    bool ok = c.failures().empty();
    failed += !ok;
    std::printf("%s %zu %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name);
    for (const auto& f : c.failures()) std::printf("    %s\n", f.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
