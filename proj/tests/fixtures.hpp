#pragma once

#include <random>
#include <vector>

#include "clusteraut/quiver.hpp"

namespace fixtures {

using clusteraut::Entry;
using clusteraut::ExchangeMatrix;

// 1 -> 2
inline ExchangeMatrix a2() { return ExchangeMatrix::principal({{0, 1}, {-1, 0}}); }

// 1 -> 2 -> 3
inline ExchangeMatrix a3() { return ExchangeMatrix::principal({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); }

inline ExchangeMatrix a4() {
  return ExchangeMatrix::principal({{0, 1, 0, 0}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, -1, 0}});
}

// D4 with 2 as the branch vertex.
inline ExchangeMatrix d4() {
  return ExchangeMatrix::principal({{0, 1, 0, 0}, {-1, 0, -1, -1}, {0, 1, 0, 0}, {0, 1, 0, 0}});
}

// Kronecker quiver, infinite type.
inline ExchangeMatrix kronecker() { return ExchangeMatrix::principal({{0, 2}, {-2, 0}}); }

// A3 with frozen 4 and 2 -> 4.
inline ExchangeMatrix a3_one_frozen() {
  return ExchangeMatrix(3, 1, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {0, -1, 0}});
}

// A3 with frozen 4, 5 and 2 -> 4, 2 -> 5.
inline ExchangeMatrix a3_two_frozen() {
  return ExchangeMatrix(3, 2, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {0, -1, 0}, {0, -1, 0}});
}

// One diagonal of a square: 2 -> 1, 4 -> 1, 1 -> 3, 1 -> 5.
inline ExchangeMatrix four_gon() { return ExchangeMatrix(1, 4, {{0}, {1}, {-1}, {1}, {-1}}); }

// FZ-universal coefficients of type A2.
inline ExchangeMatrix universal_a2() {
  return ExchangeMatrix(2, 5, {{0, 1}, {-1, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, -1}});
}

inline std::vector<std::vector<Entry>> universal_change() {
  return {{2, 1, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 0, 3, 2, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}};
}

// A^t applied to the frozen rows of universal_a2().
inline ExchangeMatrix universal_a2_changed() {
  return ExchangeMatrix(2, 5, {{0, 1}, {-1, 0}, {2, 1}, {1, 1}, {-3, -1}, {-2, -1}, {1, -1}});
}

// 3 -> 1 -> 2 with 4 -> 2, 5 -> 2; 3, 4, 5 frozen.
inline ExchangeMatrix twin_sources() { return ExchangeMatrix(2, 3, {{0, 1}, {-1, 0}, {1, 0}, {0, 1}, {0, 1}}); }
inline ExchangeMatrix twin_sources_glued() { return ExchangeMatrix(2, 2, {{0, 1}, {-1, 0}, {1, 0}, {0, 1}}); }

// 1 -> 3 <- 2
inline ExchangeMatrix two_sources() { return ExchangeMatrix::principal({{0, 0, 1}, {0, 0, 1}, {-1, -1, 0}}); }

/// Random matrix with a connected skew-symmetric principal part and nonzero
/// frozen rows.
inline ExchangeMatrix random_matrix(std::mt19937& rng, std::size_t n, std::size_t m, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  while (true) {
    std::vector<std::vector<Entry>> rows(n + m, std::vector<Entry>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        rows[i][j] = entry(rng);
        rows[j][i] = -rows[i][j];
      }
    for (std::size_t f = n; f < n + m; ++f)
      for (std::size_t i = 0; i < n; ++i) rows[f][i] = entry(rng);
    try {
      return ExchangeMatrix(n, m, std::move(rows));
    } catch (const std::exception&) {
    }
  }
}

}  // namespace fixtures
