#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clusteraut {

/// Exponent vector, one (possibly negative) entry per variable.
using Monomial = std::vector<int>;

/// Sparse Laurent polynomial in a fixed number of variables x1..xN with
/// arbitrary-precision integer coefficients. Zero coefficients are never
/// stored, so structural equality is value equality.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t variables = 0) : vars_(variables) {}

  static LaurentPolynomial constant(std::size_t variables, const mpz_class& c);
  /// The single indeterminate x_{index+1}.
  static LaurentPolynomial variable(std::size_t variables, std::size_t index);
  static LaurentPolynomial monomial(Monomial exponents, const mpz_class& c = 1);

  std::size_t variables() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  /// Coefficient of the given monomial (zero when absent).
  mpz_class coefficient(const Monomial& m) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial pow(unsigned e) const;
  /// Multiply by the monomial x^shift.
  LaurentPolynomial shifted(const Monomial& shift) const;

  /// Substitute 1 for every variable with index >= keep and drop them.
  LaurentPolynomial specialize_tail(std::size_t keep) const;

  /// Canonical text: terms in decreasing lexicographic monomial order,
  /// "c * x1^e1 * x3^e3" joined by " + "; "0" for the zero polynomial.
  std::string to_string() const;
  /// Inverse of to_string. Accepts exactly the canonical grammar plus
  /// arbitrary term order. Throws ParseError.
  static LaurentPolynomial parse(std::string_view text, std::size_t variables);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void add_term(const Monomial& m, const mpz_class& c);

  std::size_t vars_ = 0;
  std::map<Monomial, mpz_class> terms_;
};

/// Exact quotient p / q in the Laurent ring, or nullopt when q does not
/// divide p. Both operands are shifted to ordinary polynomials and divided
/// by lexicographic long division; the remainder must vanish.
/// Throws std::invalid_argument when q is zero.
std::optional<LaurentPolynomial> exact_div(const LaurentPolynomial& p, const LaurentPolynomial& q);

}  // namespace clusteraut
