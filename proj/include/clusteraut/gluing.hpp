#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "clusteraut/seed.hpp"

namespace clusteraut {

/// A positive rational in lowest terms.
struct Ratio {
  Entry num = 1;
  Entry den = 1;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// The ratio n with b_ji = n * b_ki for every exchangeable i, if one exists
/// and is positive. j and k are frozen vertex indices; throws
/// std::invalid_argument otherwise.
std::optional<Ratio> are_glueable(const ExchangeMatrix& b, std::size_t j, std::size_t k);

/// Frozen vertices are referred to by their vertex index (n .. n+m-1).
struct GluingAnalysis {
  /// Classes of equal frozen rows, each sorted, ordered by first member.
  std::vector<std::vector<std::size_t>> strict_classes;
  /// Classes of positively proportional frozen rows.
  std::vector<std::vector<std::size_t>> glue_classes;
  /// ratios[k][l] relates glue_classes[k][l] to glue_classes[k][0].
  std::vector<std::vector<Ratio>> ratios;
  /// gcd of each frozen row, indexed by frozen position 0..m-1.
  std::vector<Entry> gcds;
  bool gluing_free = true;
  bool strictly_gluing_free = true;
  bool prime = true;
  bool prime_gluing_free = true;
};

GluingAnalysis classify(const ExchangeMatrix& b);

struct PrimeGluingFree {
  ExchangeMatrix matrix;
  /// Per frozen vertex of the input (0..m-1): the exponent of x_j in the
  /// image of its class representative, i.e. the row gcd.
  std::vector<Entry> exponents;
  /// Per frozen vertex of the input: the frozen index (0..s-1) of its class
  /// in `matrix`.
  std::vector<std::size_t> class_map;
  /// The m_pgf x m exponent matrix of the coefficient specialization onto
  /// the input algebra.
  std::vector<std::vector<Entry>> specialization() const;
};

/// Collapse each glue class to one primitive row. Representatives are the
/// smallest members, kept in ascending order.
PrimeGluingFree prime_gluing_free_quiver(const ExchangeMatrix& b);

struct GluingFreeQuiver {
  ExchangeMatrix matrix;
  /// Vertex index of the kept representative of each strict class.
  std::vector<std::size_t> kept;
  /// Per frozen vertex of the input: the frozen index of its class.
  std::vector<std::size_t> class_map;
  std::vector<std::vector<Entry>> specialization() const;
};

/// Drop every member of a strict class except the smallest.
GluingFreeQuiver gluing_free_quiver(const ExchangeMatrix& b);

/// Exact determinant of a square integer matrix by fraction-free
/// elimination.
mpz_class determinant(const std::vector<std::vector<Entry>>& a);

struct SpecializationScope {
  /// Unset: every seed (the exchange graph must be finite). Set: every
  /// admissible word of at most this length.
  std::optional<std::size_t> depth;
  std::size_t cap = 100000;
};

struct SpecializationReport {
  bool holds = false;
  /// Seeds visited, or words without repeated letters under a depth bound.
  std::size_t checked = 0;
  /// A word at which the row condition fails.
  std::optional<AdmissibleWord> counterexample;
  /// Monomial comparison of both sides of every exchange coefficient, over
  /// words of length at most 2.
  bool monomials_agree = false;
  /// Present when A is square.
  std::optional<mpz_class> det;
};

/// Does x'_{n+j} -> prod_k x''_{n+k}^{a_jk} specialize the coefficients of
/// `from` to those of `to` at every seed in scope? Checked through the row
/// condition A^t * frozen(mu_w from) = frozen(mu_w to). Throws ShapeMismatch
/// on differing principal parts or a badly shaped A.
SpecializationReport check_specialization(const ExchangeMatrix& from, const ExchangeMatrix& to,
                                          const std::vector<std::vector<Entry>>& a,
                                          const SpecializationScope& scope = {});

/// Same principal block and the same multiset of frozen rows.
bool equal_up_to_frozen_order(const ExchangeMatrix& a, const ExchangeMatrix& b);

/// pgf(mu_w B) == mu_w(pgf B) and the same for the gluing-free quiver, both
/// up to frozen-row order.
bool verify_pgf_commutes(const ExchangeMatrix& b, const AdmissibleWord& w);

}  // namespace clusteraut
