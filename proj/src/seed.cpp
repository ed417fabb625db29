#include "clusteraut/seed.hpp"

#include <set>
#include <string>

#include "clusteraut/errors.hpp"

namespace clusteraut {

Seed::Seed(ExchangeMatrix matrix, std::vector<LaurentPolynomial> cluster)
    : matrix_(std::move(matrix)), cluster_(std::move(cluster)) {
  if (cluster_.size() != matrix_.exchangeable())
    throw InvalidMatrix("cluster size " + std::to_string(cluster_.size()) + " does not match rank " +
                        std::to_string(matrix_.exchangeable()));
  std::set<LaurentPolynomial> distinct;
  for (const auto& v : cluster_) {
    if (v.variables() != matrix_.vertices()) throw InvalidMatrix("cluster variable has wrong variable count");
    if (!distinct.insert(v).second) throw InvalidMatrix("cluster variables are not distinct");
  }
}

Seed Seed::initial(const ExchangeMatrix& b) {
  std::vector<LaurentPolynomial> cluster;
  for (std::size_t i = 0; i < b.exchangeable(); ++i) cluster.push_back(LaurentPolynomial::variable(b.vertices(), i));
  return Seed(b, std::move(cluster));
}

LaurentPolynomial Seed::variable(std::size_t j) const {
  if (j < rank()) return cluster_[j];
  return LaurentPolynomial::variable(matrix_.vertices(), j);
}

ExchangeBinomial exchange_binomial(const Seed& s, std::size_t i) {
  const auto& b = s.matrix();
  if (i >= b.vertices()) throw IndexOutOfRange("position " + std::to_string(i + 1) + " out of range");
  if (i >= b.exchangeable()) throw FrozenIndex("cannot mutate at frozen vertex " + std::to_string(i + 1));
  auto plus = LaurentPolynomial::constant(b.vertices(), 1);
  auto minus = plus;
  for (std::size_t j = 0; j < b.vertices(); ++j) {
    auto e = b(j, i);
    if (e > 0) plus = plus * s.variable(j).pow(static_cast<unsigned>(e));
    if (e < 0) minus = minus * s.variable(j).pow(static_cast<unsigned>(-e));
  }
  return {std::move(plus), std::move(minus)};
}

Seed Seed::mutate(std::size_t i) const {
  auto [plus, minus] = exchange_binomial(*this, i);
  auto next = exact_div(plus + minus, cluster_[i]);
  if (!next)
    throw LaurentViolation("exchange relation at position " + std::to_string(i + 1) + " is not divisible by " +
                           cluster_[i].to_string());
  auto cluster = cluster_;
  cluster[i] = std::move(*next);
  return Seed(mutate_matrix(matrix_, i), std::move(cluster));
}

Seed apply_word(const Seed& s, const AdmissibleWord& w) {
  Seed current = s;
  for (auto i : w) current = current.mutate(i);
  return current;
}

ExchangeMatrix apply_word(const ExchangeMatrix& b, const AdmissibleWord& w) {
  ExchangeMatrix current = b;
  for (auto i : w) current = mutate_matrix(current, i);
  return current;
}

CoefficientMonomials coefficient_monomials(const ExchangeMatrix& b, std::size_t i) {
  if (i >= b.vertices()) throw IndexOutOfRange("position " + std::to_string(i + 1) + " out of range");
  if (i >= b.exchangeable()) throw FrozenIndex("frozen position " + std::to_string(i + 1));
  CoefficientMonomials out{std::vector<Entry>(b.frozen(), 0), std::vector<Entry>(b.frozen(), 0)};
  for (std::size_t f = 0; f < b.frozen(); ++f) {
    auto e = b(b.exchangeable() + f, i);
    if (e > 0) out.plus[f] = e;
    if (e < 0) out.minus[f] = -e;
  }
  return out;
}

}  // namespace clusteraut
