#include "clusteraut/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace clusteraut {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("compose: degree mismatch");
  Permutation h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

Permutation invert(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

PermutationGroup::PermutationGroup(std::vector<Permutation> elements,
                                   std::optional<std::vector<int>> signs) {
  if (elements.empty()) throw std::logic_error("group: empty element list");
  if (signs && signs->size() != elements.size())
    throw std::logic_error("group: sign list length differs from element list");

  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return elements[a] < elements[b]; });

  degree_ = elements.front().size();
  elements_.reserve(elements.size());
  if (signs) signs_.emplace();
  for (auto idx : order) {
    if (elements[idx].size() != degree_) throw std::logic_error("group: mixed degrees");
    if (!is_permutation(elements[idx])) throw std::logic_error("group: element is not a permutation");
    if (!elements_.empty() && elements_.back() == elements[idx])
      throw std::logic_error("group: duplicate element");
    elements_.push_back(std::move(elements[idx]));
    if (signs) {
      int s = (*signs)[idx];
      if (s != 1 && s != -1) throw std::logic_error("group: sign must be +1 or -1");
      signs_->push_back(s);
    }
  }
  for (std::size_t a = 0; a < elements_.size(); ++a) index_.emplace(elements_[a], a);

  auto id = index_.find(identity_permutation(degree_));
  if (id == index_.end()) throw std::logic_error("group: identity missing");
  identity_ = id->second;

  const std::size_t n = elements_.size();
  table_.assign(n, std::vector<std::size_t>(n));
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index_.find(compose(elements_[a], elements_[b]));
      if (it == index_.end()) throw std::logic_error("group: not closed under composition");
      table_[a][b] = it->second;
      if (it->second == identity_) inverse_[a] = b;
      if (signs_ && (*signs_)[it->second] != (*signs_)[a] * (*signs_)[b])
        throw std::logic_error("group: sign map is not a homomorphism");
    }
    if (inverse_[a] == n) throw std::logic_error("group: missing inverse");
  }
}

std::size_t PermutationGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = table_[x][a]) ++k;
  return k;
}

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

PermutationGroup PermutationGroup::sign_kernel() const {
  std::vector<Permutation> kept;
  std::vector<int> kept_signs;
  for (std::size_t a = 0; a < order(); ++a) {
    if (signs_ && (*signs_)[a] != 1) continue;
    kept.push_back(elements_[a]);
    kept_signs.push_back(1);
  }
  if (!signs_) return PermutationGroup(std::move(kept));
  return PermutationGroup(std::move(kept), std::move(kept_signs));
}

bool PermutationGroup::is_normal_subgroup(const std::vector<std::size_t>& members) const {
  std::vector<bool> in(order(), false);
  for (auto m : members) in.at(m) = true;
  if (!in[identity_]) return false;
  for (auto a : members)
    for (auto b : members)
      if (!in[table_[a][b]]) return false;
  for (std::size_t g = 0; g < order(); ++g)
    for (auto h : members)
      if (!in[table_[table_[g][h]][inverse_[g]]]) return false;
  return true;
}

std::vector<std::size_t> PermutationGroup::generating_set() const {
  std::vector<std::size_t> gens;
  std::vector<bool> reached(order(), false);
  reached[identity_] = true;
  std::vector<std::size_t> members{identity_};
  for (std::size_t a = 0; a < order(); ++a) {
    if (reached[a]) continue;
    gens.push_back(a);
    for (std::size_t next = 0; next < members.size(); ++next) {
      for (auto g : gens) {
        auto x = table_[members[next]][g];
        if (!reached[x]) {
          reached[x] = true;
          members.push_back(x);
        }
      }
    }
  }
  return gens;
}

namespace {

bool is_dihedral(const PermutationGroup& g, std::size_t half) {
  for (std::size_t r = 0; r < g.order(); ++r) {
    if (g.element_order(r) != half) continue;
    std::vector<bool> in_rotations(g.order(), false);
    for (std::size_t x = g.identity(), k = 0; k < half; ++k, x = g.multiply(x, r)) in_rotations[x] = true;
    for (std::size_t s = 0; s < g.order(); ++s) {
      if (in_rotations[s] || g.element_order(s) != 2) continue;
      if (g.multiply(g.multiply(s, r), s) == g.inverse(r)) return true;
    }
  }
  return false;
}

}  // namespace

GroupIdentity identify_group(const PermutationGroup& group) {
  GroupIdentity id;
  id.order = group.order();
  id.abelian = group.is_abelian();
  for (std::size_t a = 0; a < group.order(); ++a) ++id.element_orders[group.element_order(a)];

  const std::size_t n = group.order();
  if (n == 1) {
    id.name = "trivial";
    return id;
  }
  bool elementary = id.element_orders.size() == 2 && id.element_orders.count(2) == 1;
  if (elementary) {
    std::size_t k = 0;
    for (std::size_t x = n; x > 1; x /= 2) ++k;
    id.name = k == 1 ? "Z2" : k == 2 ? "K4" : "S2^" + std::to_string(k);
    return id;
  }
  if (n % 2 == 0 && n >= 6 && is_dihedral(group, n / 2)) {
    id.name = "D" + std::to_string(n / 2);
  }
  return id;
}

std::string GroupIdentity::describe() const {
  if (!name.empty()) return name;
  std::ostringstream out;
  out << "order=" << order << " abelian=" << (abelian ? "yes" : "no") << " element_orders={";
  bool first = true;
  for (auto [o, c] : element_orders) {
    out << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace clusteraut
