#pragma once

#include <cstddef>
#include <vector>

#include "clusteraut/laurent.hpp"
#include "clusteraut/quiver.hpp"

namespace clusteraut {

/// Sequence of exchangeable positions, applied left to right.
using AdmissibleWord = std::vector<std::size_t>;

/// An exchange matrix together with its cluster. Position i of the cluster
/// sits at column i of the matrix. Frozen variables are the fixed
/// indeterminates x_{n+1}, ..., x_{n+m} and are not stored.
class Seed {
 public:
  Seed(ExchangeMatrix matrix, std::vector<LaurentPolynomial> cluster);

  /// Every vertex j carries the single indeterminate x_{j+1}.
  static Seed initial(const ExchangeMatrix& b);

  const ExchangeMatrix& matrix() const { return matrix_; }
  const std::vector<LaurentPolynomial>& cluster() const { return cluster_; }
  std::size_t rank() const { return matrix_.exchangeable(); }
  /// Variable at vertex j: cluster()[j] for exchangeable j, x_{j+1} for frozen j.
  LaurentPolynomial variable(std::size_t j) const;

  /// The exchange relation at position i:
  ///   x_i * x_i' = prod_{b_ji > 0} v_j^{b_ji} + prod_{b_ji < 0} v_j^{-b_ji}
  /// with j over all n + m rows. Throws LaurentViolation if the division is
  /// not exact.
  Seed mutate(std::size_t i) const;

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  ExchangeMatrix matrix_;
  std::vector<LaurentPolynomial> cluster_;
};

Seed apply_word(const Seed& s, const AdmissibleWord& w);
ExchangeMatrix apply_word(const ExchangeMatrix& b, const AdmissibleWord& w);

/// Coefficients of the exchange relation at position i, as exponent vectors
/// over the m frozen variables: plus[f] = max(b_{n+f,i}, 0),
/// minus[f] = max(-b_{n+f,i}, 0).
struct CoefficientMonomials {
  std::vector<Entry> plus;
  std::vector<Entry> minus;
  friend bool operator==(const CoefficientMonomials&, const CoefficientMonomials&) = default;
};

CoefficientMonomials coefficient_monomials(const ExchangeMatrix& b, std::size_t i);

/// The two monomials of the exchange binomial at position i as Laurent
/// polynomials in the seed's variables.
struct ExchangeBinomial {
  LaurentPolynomial plus;
  LaurentPolynomial minus;
};

ExchangeBinomial exchange_binomial(const Seed& s, std::size_t i);

}  // namespace clusteraut
