#include "clusteraut/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "clusteraut/errors.hpp"

namespace clusteraut {

namespace {

bool principal_connected(std::size_t n, const std::vector<std::vector<Entry>>& rows) {
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < n; ++w) {
      if (!seen[w] && rows[v][w] != 0) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(std::size_t n, std::size_t m, std::vector<std::vector<Entry>> rows)
    : n_(n), m_(m), rows_(std::move(rows)) {
  if (n_ == 0) throw InvalidMatrix("exchange matrix needs at least one exchangeable vertex");
  if (rows_.size() != n_ + m_)
    throw InvalidMatrix("expected " + std::to_string(n_ + m_) + " rows, got " + std::to_string(rows_.size()));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].size() != n_)
      throw InvalidMatrix("row " + std::to_string(r + 1) + " has " + std::to_string(rows_[r].size()) +
                          " entries, expected " + std::to_string(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows_[i][i] != 0) throw InvalidMatrix("nonzero diagonal entry at " + std::to_string(i + 1));
    for (std::size_t j = i + 1; j < n_; ++j)
      if (rows_[i][j] != -rows_[j][i])
        throw InvalidMatrix("principal part is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
  }
  for (std::size_t r = n_; r < n_ + m_; ++r)
    if (std::all_of(rows_[r].begin(), rows_[r].end(), [](Entry e) { return e == 0; }))
      throw InvalidMatrix("frozen vertex " + std::to_string(r + 1) + " is isolated");
  if (!principal_connected(n_, rows_)) throw InvalidMatrix("principal part is not connected");
}

ExchangeMatrix ExchangeMatrix::principal(std::vector<std::vector<Entry>> rows) {
  auto n = rows.size();
  return ExchangeMatrix(n, 0, std::move(rows));
}

ExchangeMatrix ExchangeMatrix::with_principal_coefficients(const ExchangeMatrix& b) {
  if (b.frozen() != 0) throw InvalidMatrix("principal coefficients need a coefficient-free matrix");
  auto rows = b.rows_;
  for (std::size_t i = 0; i < b.n_; ++i) {
    std::vector<Entry> r(b.n_, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return ExchangeMatrix(b.n_, b.n_, std::move(rows));
}

ExchangeMatrix ExchangeMatrix::principal_part() const {
  return ExchangeMatrix(Trusted{}, n_, 0, {rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(n_)});
}

ExchangeMatrix ExchangeMatrix::with_frozen_rows(std::vector<std::vector<Entry>> frozen_rows) const {
  std::vector<std::vector<Entry>> rows(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(n_));
  auto m = frozen_rows.size();
  for (auto& r : frozen_rows) rows.push_back(std::move(r));
  return ExchangeMatrix(n_, m, std::move(rows));
}

ExchangeMatrix ExchangeMatrix::negated() const {
  auto rows = rows_;
  for (auto& r : rows)
    for (auto& e : r) e = -e;
  return ExchangeMatrix(Trusted{}, n_, m_, std::move(rows));
}

ExchangeMatrix ExchangeMatrix::permute_exchangeable(const Permutation& perm) const {
  if (perm.size() != n_ || !is_permutation(perm)) throw InvalidMatrix("bad column permutation");
  std::vector<std::vector<Entry>> rows(n_ + m_, std::vector<Entry>(n_, 0));
  for (std::size_t j = 0; j < n_ + m_; ++j) {
    auto to_row = j < n_ ? perm[j] : j;
    for (std::size_t i = 0; i < n_; ++i) rows[to_row][perm[i]] = rows_[j][i];
  }
  return ExchangeMatrix(Trusted{}, n_, m_, std::move(rows));
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  const auto n = b.exchangeable();
  const auto total = b.vertices();
  if (k >= total) throw IndexOutOfRange("mutation index " + std::to_string(k + 1) + " out of range");
  if (k >= n) throw FrozenIndex("cannot mutate at frozen vertex " + std::to_string(k + 1));

  auto rows = b.rows();
  for (std::size_t j = 0; j < total; ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      if (j == k || c == k) {
        rows[j][c] = -b(j, c);
      } else {
        Entry bjk = b(j, k);
        Entry bkc = b(k, c);
        rows[j][c] = b(j, c) + (std::llabs(bjk) * bkc + bjk * std::llabs(bkc)) / 2;
      }
    }
  }
  return ExchangeMatrix(ExchangeMatrix::Trusted{}, n, b.frozen(), std::move(rows));
}

IceQuiver::IceQuiver(std::size_t n, std::size_t m)
    : n_(n), m_(m), count_(n + m, std::vector<Entry>(n + m, 0)) {}

IceQuiver::IceQuiver(const ExchangeMatrix& b) : IceQuiver(b.exchangeable(), b.frozen()) {
  for (std::size_t j = 0; j < b.vertices(); ++j) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (b(j, i) > 0) count_[j][i] = b(j, i);
      if (b(j, i) < 0) count_[i][j] = -b(j, i);
    }
  }
}

IceQuiver IceQuiver::from_arrows(std::size_t n, std::size_t m,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  IceQuiver q(n, m);
  for (auto [s, t] : arrows) q.add_arrows(s, t, 1);
  return q;
}

void IceQuiver::add_arrows(std::size_t from, std::size_t to, Entry k) {
  if (from >= vertices() || to >= vertices()) throw IndexOutOfRange("arrow endpoint out of range");
  count_[from][to] += k;
}

ExchangeMatrix IceQuiver::to_matrix() const {
  const auto total = vertices();
  for (std::size_t a = 0; a < total; ++a) {
    if (count_[a][a] != 0) throw InvalidMatrix("loop at vertex " + std::to_string(a + 1));
    for (std::size_t b = a + 1; b < total; ++b) {
      if (count_[a][b] > 0 && count_[b][a] > 0)
        throw InvalidMatrix("2-cycle between " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
      if (a >= n_ && b >= n_ && (count_[a][b] != 0 || count_[b][a] != 0))
        throw InvalidMatrix("arrow between frozen vertices " + std::to_string(a + 1) + " and " +
                            std::to_string(b + 1));
    }
  }
  std::vector<std::vector<Entry>> rows(total, std::vector<Entry>(n_, 0));
  for (std::size_t j = 0; j < total; ++j)
    for (std::size_t i = 0; i < n_; ++i) rows[j][i] = count_[j][i] - count_[i][j];
  return ExchangeMatrix(n_, m_, std::move(rows));
}

IceQuiver IceQuiver::opposite() const {
  IceQuiver q(n_, m_);
  for (std::size_t a = 0; a < vertices(); ++a)
    for (std::size_t b = 0; b < vertices(); ++b) q.count_[b][a] = count_[a][b];
  return q;
}

IceQuiver mutate_quiver(const IceQuiver& q, std::size_t k) {
  const auto total = q.vertices();
  if (k >= total) throw IndexOutOfRange("mutation index " + std::to_string(k + 1) + " out of range");
  if (q.is_frozen(k)) throw FrozenIndex("cannot mutate at frozen vertex " + std::to_string(k + 1));

  IceQuiver out(q.exchangeable(), q.frozen());
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) out.add_arrows(a, b, q.arrows(a, b));

  // one new arrow j -> l per path j -> k -> l
  for (std::size_t j = 0; j < total; ++j) {
    if (j == k || q.arrows(j, k) == 0) continue;
    for (std::size_t l = 0; l < total; ++l)
      if (l != k && l != j) out.add_arrows(j, l, q.arrows(j, k) * q.arrows(k, l));
  }
  for (std::size_t j = 0; j < total; ++j) {
    out.add_arrows(j, k, q.arrows(k, j) - q.arrows(j, k));
    out.add_arrows(k, j, q.arrows(j, k) - q.arrows(k, j));
  }
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = a + 1; b < total; ++b) {
      auto cycles = std::min(out.arrows(a, b), out.arrows(b, a));
      out.add_arrows(a, b, -cycles);
      out.add_arrows(b, a, -cycles);
      if (q.is_frozen(a) && q.is_frozen(b)) {
        out.add_arrows(a, b, -out.arrows(a, b));
        out.add_arrows(b, a, -out.arrows(b, a));
      }
    }
  }
  return out;
}

namespace {

struct VertexSignature {
  bool frozen;
  std::vector<Entry> out;
  std::vector<Entry> in;
  friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
};

VertexSignature signature(const IceQuiver& q, std::size_t v) {
  VertexSignature s{q.is_frozen(v), {}, {}};
  for (std::size_t w = 0; w < q.vertices(); ++w) {
    if (q.arrows(v, w) != 0) s.out.push_back(q.arrows(v, w));
    if (q.arrows(w, v) != 0) s.in.push_back(q.arrows(w, v));
  }
  std::sort(s.out.begin(), s.out.end());
  std::sort(s.in.begin(), s.in.end());
  return s;
}

// Vertices in an order where each one (after the first of its component) is
// adjacent to an earlier one, so the adjacency test prunes early.
std::vector<std::size_t> search_order(const IceQuiver& q) {
  const auto total = q.vertices();
  std::vector<std::size_t> order;
  std::vector<bool> seen(total, false);
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (std::size_t w = 0; w < total; ++w) {
        if (!seen[w] && (q.arrows(v, w) != 0 || q.arrows(w, v) != 0)) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

class IsoSearch {
 public:
  IsoSearch(const IceQuiver& from, const IceQuiver& to) : from_(from), to_(to) {
    const auto total = from.vertices();
    order_ = search_order(from);
    candidates_.resize(total);
    std::vector<VertexSignature> to_sigs;
    for (std::size_t w = 0; w < total; ++w) to_sigs.push_back(signature(to, w));
    for (std::size_t v = 0; v < total; ++v) {
      auto sv = signature(from, v);
      for (std::size_t w = 0; w < total; ++w)
        if (sv == to_sigs[w]) candidates_[v].push_back(w);
    }
    map_.assign(total, total);
    used_.assign(total, false);
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      found_.push_back(map_);
      return;
    }
    auto v = order_[depth];
    for (auto w : candidates_[v]) {
      if (used_[w] || !consistent(depth, v, w)) continue;
      map_[v] = w;
      used_[w] = true;
      extend(depth + 1);
      used_[w] = false;
      map_[v] = from_.vertices();
    }
  }

  bool consistent(std::size_t depth, std::size_t v, std::size_t w) const {
    for (std::size_t d = 0; d < depth; ++d) {
      auto u = order_[d];
      auto x = map_[u];
      if (from_.arrows(u, v) != to_.arrows(x, w) || from_.arrows(v, u) != to_.arrows(w, x)) return false;
    }
    return true;
  }

  const IceQuiver& from_;
  const IceQuiver& to_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> candidates_;
  Permutation map_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<QuiverIso> quiver_isomorphisms(const IceQuiver& q1, const IceQuiver& q2, Direction direction) {
  if (q1.exchangeable() != q2.exchangeable() || q1.frozen() != q2.frozen()) return {};
  auto target = direction == Direction::direct ? q2 : q2.opposite();
  auto maps = IsoSearch(q1, target).run();
  std::sort(maps.begin(), maps.end());
  std::vector<QuiverIso> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back({std::move(m), direction});
  return out;
}

std::vector<QuiverIso> quiver_isomorphisms(const ExchangeMatrix& b1, const ExchangeMatrix& b2,
                                           Direction direction) {
  return quiver_isomorphisms(IceQuiver(b1), IceQuiver(b2), direction);
}

bool is_quiver_iso(const IceQuiver& q1, const IceQuiver& q2, const QuiverIso& iso) {
  const auto total = q1.vertices();
  if (q2.exchangeable() != q1.exchangeable() || q2.frozen() != q1.frozen()) return false;
  if (iso.map.size() != total || !is_permutation(iso.map)) return false;
  for (std::size_t v = 0; v < total; ++v)
    if (q1.is_frozen(v) != q2.is_frozen(iso.map[v])) return false;
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = 0; b < total; ++b) {
      auto expected = iso.direction == Direction::direct ? q2.arrows(iso.map[a], iso.map[b])
                                                         : q2.arrows(iso.map[b], iso.map[a]);
      if (q1.arrows(a, b) != expected) return false;
    }
  }
  return true;
}

PermutationGroup quiver_automorphism_group(const IceQuiver& q) {
  std::vector<Permutation> elements;
  for (auto& iso : quiver_isomorphisms(q, q, Direction::direct)) elements.push_back(iso.map);
  return PermutationGroup(std::move(elements));
}

}  // namespace clusteraut
