#include <doctest.h>

#include <random>
#include <set>

#include "clusteraut/errors.hpp"
#include "clusteraut/exchange_graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clusteraut;

namespace {

LaurentPolynomial P(const char* text, std::size_t vars) { return LaurentPolynomial::parse(text, vars); }

std::set<LaurentPolynomial> as_set(const std::vector<LaurentPolynomial>& c) { return {c.begin(), c.end()}; }

}  // namespace

TEST_CASE("exchange relation with a frozen vertex at the middle") {
  auto s = Seed::initial(fixtures::a3_one_frozen()).mutate(1);
  CHECK(s.cluster()[1] == *exact_div(P("x1 + x3 * x4", 4), P("x2", 4)));
  CHECK(s.cluster()[0] == P("x1", 4));
  CHECK(s.matrix() == mutate_matrix(fixtures::a3_one_frozen(), 1));
}

TEST_CASE("coefficient monomials") {
  auto cm = coefficient_monomials(fixtures::universal_a2(), 0);
  CHECK(cm.plus == std::vector<Entry>{1, 0, 0, 0, 1});
  CHECK(cm.minus == std::vector<Entry>{0, 0, 1, 0, 0});
  CHECK_THROWS_AS(coefficient_monomials(fixtures::universal_a2(), 2), FrozenIndex);
  auto bin = exchange_binomial(Seed::initial(fixtures::a3()), 1);
  CHECK(bin.plus == P("x1", 3));
  CHECK(bin.minus == P("x3", 3));
}

TEST_CASE("seed validation") {
  auto b = fixtures::a2();
  CHECK_THROWS_AS(Seed(b, {P("x1", 2)}), InvalidMatrix);
  CHECK_THROWS_AS(Seed(b, {P("x1", 2), P("x1", 2)}), InvalidMatrix);
  CHECK_THROWS_AS(Seed::initial(b).mutate(2), IndexOutOfRange);
  CHECK_THROWS_AS(Seed::initial(fixtures::four_gon()).mutate(1), FrozenIndex);
}

TEST_CASE("property: seed mutation is an involution") {
  std::mt19937 rng(13);
  for (const auto& b : {fixtures::a3(), fixtures::a3_two_frozen(), fixtures::universal_a2(), fixtures::d4()}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto s = Seed::initial(b);
      for (int step = 0; step < 6; ++step) s = s.mutate(rng() % b.exchangeable());
      auto k = rng() % b.exchangeable();
      CHECK(s.mutate(k).mutate(k) == s);
    }
  }
}

TEST_CASE("finite type exchange graph sizes") {
  struct Case {
    ExchangeMatrix b;
    std::size_t seeds;
    std::size_t variables;
  };
  for (const auto& c : {Case{fixtures::a2(), 5, 5}, Case{fixtures::a3(), 14, 9}, Case{fixtures::a4(), 42, 14},
                        Case{fixtures::d4(), 50, 16}, Case{fixtures::four_gon(), 2, 2},
                        Case{fixtures::universal_a2(), 5, 5}, Case{fixtures::a3_two_frozen(), 14, 9}}) {
    auto e = ExchangeGraph::enumerate(c.b);
    CHECK(e.size() == c.seeds);
    CHECK(e.exchangeable_variable_count() == c.variables);
    CHECK(e.check_structure());
    CHECK(e.edges().size() * 2 == e.size() * e.rank());
  }
}

TEST_CASE("infinite type hits the cap") {
  CHECK_THROWS_AS(ExchangeGraph::enumerate(fixtures::kronecker(), 50), CapExceeded);
}

TEST_CASE("property: every vertex is reached by its recorded word") {
  for (const auto& b : {fixtures::a4(), fixtures::d4(), fixtures::a3_one_frozen()}) {
    auto e = ExchangeGraph::enumerate(b);
    std::set<std::vector<VarId>> keys;
    for (std::size_t v = 0; v < e.size(); ++v) {
      auto s = apply_word(Seed::initial(b), e.word_to(v));
      CHECK(as_set(s.cluster()) == as_set(e.seed(v).cluster()));
      CHECK(e.find_vertex(e.cluster_key(v)) == v);
      keys.insert(e.cluster_key(v));
      for (std::size_t i = 0; i < e.rank(); ++i) {
        auto nb = e.neighbor(v, i);
        CHECK(e.neighbor(nb.vertex, nb.position) == Neighbor{v, i});
        CHECK(e.seed(nb.vertex).cluster()[nb.position] == e.seed(v).mutate(i).cluster()[i]);
      }
    }
    CHECK(keys.size() == e.size());
  }
}

TEST_CASE("assemble rejects tampered adjacency") {
  auto e = ExchangeGraph::enumerate(fixtures::a3());
  auto adjacency = e.adjacency();
  std::swap(adjacency[0][0], adjacency[0][1]);
  CHECK_THROWS_AS(ExchangeGraph::assemble(e.seeds(), adjacency), MismatchError);
  CHECK(ExchangeGraph::assemble(e.seeds(), e.adjacency()) == e);
}

TEST_CASE("specialization isomorphism of exchange graphs") {
  for (const auto& b : {fixtures::a3_two_frozen(), fixtures::universal_a2(), fixtures::four_gon()}) {
    auto full = ExchangeGraph::enumerate(b);
    auto principal = ExchangeGraph::enumerate(b.principal_part());
    auto corr = specialization_iso(full, principal);
    std::set<std::size_t> image(corr.vertex_map.begin(), corr.vertex_map.end());
    CHECK(image.size() == principal.size());
  }
  auto other = ExchangeGraph::enumerate(fixtures::a2());
  CHECK_THROWS_AS(specialization_iso(ExchangeGraph::enumerate(fixtures::a3_one_frozen()), other), MismatchError);
}

TEST_CASE("graph automorphisms against brute force") {
  auto cycle = [](std::size_t n) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
      adj[v].push_back((v + 1) % n);
      adj[(v + 1) % n].push_back(v);
    }
    return adj;
  };
  std::vector<std::vector<std::size_t>> petersen(10);
  for (std::size_t v = 0; v < 5; ++v) {
    auto link = [&](std::size_t a, std::size_t b) {
      petersen[a].push_back(b);
      petersen[b].push_back(a);
    };
    link(v, (v + 1) % 5);
    link(v, v + 5);
    link(v + 5, (v + 2) % 5 + 5);
  }
  std::vector<std::vector<std::size_t>> cube(8);
  for (std::size_t v = 0; v < 8; ++v)
    for (std::size_t bit : {1u, 2u, 4u}) cube[v].push_back(v ^ bit);

  std::mt19937 rng(17);
  std::vector<std::vector<std::vector<std::size_t>>> graphs{cycle(5), cycle(6), petersen, cube,
                                                             ExchangeGraph::enumerate(fixtures::a2()).simple_adjacency()};
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = 3 + rng() % 5;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 2) {
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
    graphs.push_back(adj);
  }
  for (const auto& g : graphs) {
    auto group = graph_automorphism_group(g);
    CHECK(group.order() == oracles::brute_force_graph_automorphisms(g));
    for (const auto& p : group.elements()) CHECK(preserves_adjacency(g, p));
  }
}

TEST_CASE("A3 exchange graph has a dihedral automorphism group of order 12") {
  auto e = ExchangeGraph::enumerate(fixtures::a3());
  auto g = graph_automorphism_group(e);
  CHECK(g.order() == 12);
  CHECK(identify_group(g).name == "D6");
  CHECK_FALSE(preserves_adjacency(e.simple_adjacency(), [] {
    Permutation p(14);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::swap(p[0], p[1]);
    return p;
  }()));
}

TEST_CASE("DOT export") {
  auto e = ExchangeGraph::enumerate(fixtures::a3());
  auto plain = to_dot(e);
  CHECK(oracles::plausible_dot(plain));
  auto labelled = to_dot(e, {true, true, std::vector<std::size_t>(e.size(), 1)});
  CHECK(oracles::plausible_dot(labelled));
  CHECK(labelled.find("x1") != std::string::npos);
  CHECK_FALSE(oracles::plausible_dot("graph g {\n  0 -- 1;\n}\n"));
}
