#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "clusteraut/perm_group.hpp"

namespace clusteraut {

using Entry = std::int64_t;

/// Extended exchange matrix of an ice quiver: n + m rows, n columns.
///
/// Rows 0..n-1 and the columns are the exchangeable vertices, rows n..n+m-1
/// are the frozen ones. entry(j, i) > 0 counts arrows j -> i, entry(j, i) < 0
/// counts arrows i -> j. Construction validates that the principal block is
/// skew-symmetric, that every frozen row is nonzero and that the principal
/// part is connected; violations throw InvalidMatrix.
class ExchangeMatrix {
 public:
  ExchangeMatrix(std::size_t n, std::size_t m, std::vector<std::vector<Entry>> rows);

  /// Square coefficient-free matrix.
  static ExchangeMatrix principal(std::vector<std::vector<Entry>> rows);
  /// (B; I_n) for a square skew-symmetric B.
  static ExchangeMatrix with_principal_coefficients(const ExchangeMatrix& b);

  std::size_t exchangeable() const { return n_; }
  std::size_t frozen() const { return m_; }
  std::size_t vertices() const { return n_ + m_; }
  Entry operator()(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }

  /// Top n x n block as a coefficient-free matrix.
  ExchangeMatrix principal_part() const;
  /// Same principal block with the given frozen rows.
  ExchangeMatrix with_frozen_rows(std::vector<std::vector<Entry>> frozen_rows) const;
  /// Every entry negated: the matrix of the opposite quiver.
  ExchangeMatrix negated() const;
  /// Rows and columns renumbered: exchangeable vertex i moves to column
  /// perm[i]; frozen rows keep their order.
  ExchangeMatrix permute_exchangeable(const Permutation& perm) const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  struct Trusted {};
  ExchangeMatrix(Trusted, std::size_t n, std::size_t m, std::vector<std::vector<Entry>> rows)
      : n_(n), m_(m), rows_(std::move(rows)) {}
  friend ExchangeMatrix mutate_matrix(const ExchangeMatrix&, std::size_t);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

/// Matrix mutation at exchangeable column k, applied to all n + m rows.
/// Throws IndexOutOfRange for k >= n + m and FrozenIndex for n <= k < n + m.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

/// An ice quiver as an arrow-multiplicity table over all n + m vertices.
/// Vertices 0..n-1 are exchangeable, n..n+m-1 frozen.
class IceQuiver {
 public:
  IceQuiver(std::size_t n, std::size_t m);
  explicit IceQuiver(const ExchangeMatrix& b);
  /// Build from a list of arrows (source, target); repeated pairs add multiplicity.
  static IceQuiver from_arrows(std::size_t n, std::size_t m,
                               const std::vector<std::pair<std::size_t, std::size_t>>& arrows);

  std::size_t exchangeable() const { return n_; }
  std::size_t frozen() const { return m_; }
  std::size_t vertices() const { return n_ + m_; }
  bool is_frozen(std::size_t v) const { return v >= n_; }
  /// Number of arrows from -> to.
  Entry arrows(std::size_t from, std::size_t to) const { return count_[from][to]; }
  void add_arrows(std::size_t from, std::size_t to, Entry k);

  /// Validates through ExchangeMatrix; throws InvalidMatrix on 2-cycles,
  /// loops, frozen-frozen arrows or disconnected input.
  ExchangeMatrix to_matrix() const;
  IceQuiver opposite() const;

  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Entry>> count_;
};

/// Quiver mutation by the path rule: add j -> l for each path j -> k -> l,
/// reverse the arrows at k, cancel 2-cycles, drop frozen-frozen arrows.
IceQuiver mutate_quiver(const IceQuiver& q, std::size_t k);

enum class Direction { direct, opposite };

/// A vertex bijection between two ice quivers. For direct maps the number of
/// arrows j -> i equals the number sigma(j) -> sigma(i) in the target; for
/// opposite maps it equals sigma(i) -> sigma(j).
struct QuiverIso {
  Permutation map;
  Direction direction = Direction::direct;

  friend bool operator==(const QuiverIso&, const QuiverIso&) = default;
};

/// All isomorphisms (or anti-isomorphisms) q1 -> q2, exchangeable to
/// exchangeable and frozen to frozen, in lexicographic order of `map`.
std::vector<QuiverIso> quiver_isomorphisms(const IceQuiver& q1, const IceQuiver& q2, Direction direction);
std::vector<QuiverIso> quiver_isomorphisms(const ExchangeMatrix& b1, const ExchangeMatrix& b2,
                                           Direction direction);

/// Recounts every arrow multiplicity under `iso`.
bool is_quiver_iso(const IceQuiver& q1, const IceQuiver& q2, const QuiverIso& iso);

/// Direct automorphisms of q acting on its n + m vertices.
PermutationGroup quiver_automorphism_group(const IceQuiver& q);

}  // namespace clusteraut
