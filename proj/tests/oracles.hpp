#pragma once

// Brute-force reference implementations used to check the library by a
// different route. Everything here is exhaustive and only meant for small
// inputs.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusteraut/exchange_graph.hpp"
#include "clusteraut/laurent.hpp"
#include "clusteraut/quiver.hpp"

namespace oracles {

using namespace clusteraut;

/// p(images): each x_i replaced by images[i]. Negative exponents are
/// cleared by one exact division at the end; nothing when that fails.
inline std::optional<LaurentPolynomial> substitute(const LaurentPolynomial& p, const std::vector<LaurentPolynomial>& images) {
  const auto vars = p.variables();
  const auto out_vars = images.front().variables();
  std::vector<int> lowest(vars, 0);
  for (const auto& [m, c] : p.terms())
    for (std::size_t v = 0; v < vars; ++v) lowest[v] = std::min(lowest[v], m[v]);
  auto numerator = LaurentPolynomial(out_vars);
  for (const auto& [m, c] : p.terms()) {
    auto term = LaurentPolynomial::constant(out_vars, c);
    for (std::size_t v = 0; v < vars; ++v) term = term * images[v].pow(static_cast<unsigned>(m[v] - lowest[v]));
    numerator += term;
  }
  auto denominator = LaurentPolynomial::constant(out_vars, 1);
  for (std::size_t v = 0; v < vars; ++v) denominator = denominator * images[v].pow(static_cast<unsigned>(-lowest[v]));
  return exact_div(numerator, denominator);
}

/// A cluster automorphism given by the images of x_1..x_{n+m}.
using Substitution = std::vector<LaurentPolynomial>;

inline Substitution compose(const Substitution& f, const Substitution& g) {
  Substitution out;
  for (const auto& p : g) {
    auto image = substitute(p, f);
    if (!image) throw std::logic_error("composition is not Laurent");
    out.push_back(std::move(*image));
  }
  return out;
}

/// All cluster automorphisms of a finite exchange graph, found without
/// looking at quivers: send the initial cluster bijectively onto some
/// cluster and the frozen variables onto themselves in any order, substitute
/// into every cluster variable and keep the maps that permute the cluster
/// variables and the clusters.
inline std::vector<Substitution> brute_force_automorphisms(const ExchangeGraph& e) {
  const auto n = e.rank();
  const auto m = e.frozen();
  const auto vars = n + m;
  std::set<std::set<LaurentPolynomial>> clusters;
  std::set<LaurentPolynomial> all;
  for (std::size_t v = 0; v < e.size(); ++v) {
    std::set<LaurentPolynomial> c(e.seed(v).cluster().begin(), e.seed(v).cluster().end());
    all.insert(c.begin(), c.end());
    clusters.insert(std::move(c));
  }
  std::vector<LaurentPolynomial> ordered(all.begin(), all.end());

  std::vector<Substitution> found;
  std::vector<std::size_t> frozen(m);
  std::iota(frozen.begin(), frozen.end(), std::size_t{0});
  for (std::size_t v = 0; v < e.size(); ++v) {
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    do {
      std::sort(frozen.begin(), frozen.end());
      do {
        Substitution images;
        for (std::size_t i = 0; i < n; ++i) images.push_back(e.seed(v).cluster()[pos[i]]);
        for (std::size_t f = 0; f < m; ++f) images.push_back(LaurentPolynomial::variable(vars, n + frozen[f]));
        std::map<LaurentPolynomial, LaurentPolynomial> image_of;
        bool ok = true;
        for (const auto& x : ordered) {
          auto y = substitute(x, images);
          if (!y || !all.count(*y)) {
            ok = false;
            break;
          }
          image_of.emplace(x, std::move(*y));
        }
        if (!ok) continue;
        std::set<LaurentPolynomial> targets;
        for (const auto& [x, y] : image_of) targets.insert(y);
        if (targets.size() != all.size()) continue;
        for (const auto& c : clusters) {
          std::set<LaurentPolynomial> mapped;
          for (const auto& x : c) mapped.insert(image_of.at(x));
          if (!clusters.count(mapped)) {
            ok = false;
            break;
          }
        }
        if (ok) found.push_back(std::move(images));
      } while (std::next_permutation(frozen.begin(), frozen.end()));
    } while (std::next_permutation(pos.begin(), pos.end()));
  }
  return found;
}

/// Images of x_1..x_{n+m} under an automorphism found by the library.
template <typename Automorphism>
Substitution images_of(const Automorphism& f, const ExchangeGraph& e) {
  const auto n = e.rank();
  const auto vars = e.initial_matrix().vertices();
  Substitution out;
  for (std::size_t j = 0; j < vars; ++j)
    out.push_back(j < n ? e.variable(e.cluster(f.target_vertex)[f.sigma.map[j]])
                        : LaurentPolynomial::variable(vars, f.sigma.map[j]));
  return out;
}

/// All vertex bijections (exchangeable to exchangeable) that carry the
/// arrows of q1 onto q2, or onto q2 reversed.
inline std::vector<Permutation> brute_force_isos(const IceQuiver& q1, const IceQuiver& q2, Direction d) {
  std::vector<Permutation> out;
  if (q1.exchangeable() != q2.exchangeable() || q1.frozen() != q2.frozen()) return out;
  const auto n = q1.exchangeable();
  const auto total = q1.vertices();
  Permutation p(total);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = p[i] < n;
    for (std::size_t a = 0; a < total && ok; ++a)
      for (std::size_t b = 0; b < total && ok; ++b) {
        auto there = d == Direction::direct ? q2.arrows(p[a], p[b]) : q2.arrows(p[b], p[a]);
        bool counted = !(q1.is_frozen(a) && q1.is_frozen(b));
        if (counted && q1.arrows(a, b) != there) ok = false;
      }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Every vertex permutation preserving adjacency; up to about 10 vertices.
inline std::size_t brute_force_graph_automorphisms(const std::vector<std::vector<std::size_t>>& adjacency) {
  const auto n = adjacency.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : adjacency[v]) adj[v][w] = true;
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) ok = adj[a][b] == adj[p[a]][p[b]];
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Leibniz expansion over all permutations.
inline long long leibniz_determinant(const std::vector<std::vector<Entry>>& a) {
  const auto n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  long long total = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Accepts the subset of DOT that to_dot emits: a graph header, node and
/// edge statements with optional attribute lists, balanced quotes and a
/// closing brace. Edges must name declared nodes.
inline bool plausible_dot(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += ch;
    }
  }
  if (!line.empty()) lines.push_back(line);
  if (lines.size() < 2 || lines.front().rfind("graph ", 0) != 0 || lines.front().back() != '{' || lines.back() != "}")
    return false;
  std::set<std::string> nodes;
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    auto s = lines[i];
    auto start = s.find_first_not_of(' ');
    if (start == std::string::npos || s.back() != ';') return false;
    s = s.substr(start, s.size() - start - 1);
    if (std::count(s.begin(), s.end(), '"') % 2 != 0) return false;
    auto bracket = s.find(" [");
    std::string head = s.substr(0, bracket);
    if (bracket != std::string::npos && s.back() != ']') return false;
    if (head == "node") continue;
    auto dash = head.find(" -- ");
    if (dash == std::string::npos) {
      if (head.empty() || !std::all_of(head.begin(), head.end(), ::isdigit)) return false;
      nodes.insert(head);
    } else if (!nodes.count(head.substr(0, dash)) || !nodes.count(head.substr(dash + 4))) {
      return false;
    }
  }
  return true;
}

}  // namespace oracles
