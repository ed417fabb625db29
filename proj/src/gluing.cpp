#include "clusteraut/gluing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "clusteraut/errors.hpp"
#include "clusteraut/exchange_graph.hpp"

namespace clusteraut {

namespace {

using Rows = std::vector<std::vector<Entry>>;

Entry row_gcd(const std::vector<Entry>& row) {
  Entry g = 0;
  for (auto e : row) g = std::gcd(g, e < 0 ? -e : e);
  return g;
}

Rows frozen_rows(const ExchangeMatrix& b) {
  return Rows(b.rows().begin() + static_cast<std::ptrdiff_t>(b.exchangeable()), b.rows().end());
}

Rows spec_matrix(std::size_t classes, const std::vector<std::size_t>& class_map, const std::vector<Entry>& exponents) {
  Rows a(classes, std::vector<Entry>(class_map.size(), 0));
  for (std::size_t f = 0; f < class_map.size(); ++f) a[class_map[f]][f] = exponents[f];
  return a;
}

}  // namespace

std::optional<Ratio> are_glueable(const ExchangeMatrix& b, std::size_t j, std::size_t k) {
  const auto n = b.exchangeable();
  if (j < n || k < n || j >= b.vertices() || k >= b.vertices() || j == k)
    throw std::invalid_argument("are_glueable needs two distinct frozen vertices");
  // Rows are nonzero, so the first nonzero entry of row k fixes the ratio.
  std::size_t pivot = 0;
  while (b(k, pivot) == 0) ++pivot;
  Entry num = b(j, pivot);
  Entry den = b(k, pivot);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num <= 0) return std::nullopt;
  auto g = std::gcd(num, den);
  num /= g;
  den /= g;
  for (std::size_t i = 0; i < n; ++i)
    if (b(j, i) * den != num * b(k, i)) return std::nullopt;
  return Ratio{num, den};
}

GluingAnalysis classify(const ExchangeMatrix& b) {
  const auto n = b.exchangeable();
  GluingAnalysis out;
  for (std::size_t j = n; j < b.vertices(); ++j) {
    out.gcds.push_back(row_gcd(b.row(j)));
    if (out.gcds.back() != 1) out.prime = false;

    bool placed = false;
    for (std::size_t k = 0; k < out.glue_classes.size() && !placed; ++k) {
      if (auto r = are_glueable(b, j, out.glue_classes[k].front())) {
        out.glue_classes[k].push_back(j);
        out.ratios[k].push_back(*r);
        placed = true;
      }
    }
    if (!placed) {
      out.glue_classes.push_back({j});
      out.ratios.push_back({Ratio{}});
    }

    placed = false;
    for (auto& cls : out.strict_classes) {
      if (b.row(cls.front()) == b.row(j)) {
        cls.push_back(j);
        placed = true;
        break;
      }
    }
    if (!placed) out.strict_classes.push_back({j});
  }
  auto singletons = [](const auto& classes) {
    return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; });
  };
  out.gluing_free = singletons(out.strict_classes);
  out.strictly_gluing_free = singletons(out.glue_classes);
  out.prime_gluing_free = out.prime && out.strictly_gluing_free;
  return out;
}

std::vector<std::vector<Entry>> PrimeGluingFree::specialization() const {
  return spec_matrix(matrix.frozen(), class_map, exponents);
}

PrimeGluingFree prime_gluing_free_quiver(const ExchangeMatrix& b) {
  const auto n = b.exchangeable();
  auto analysis = classify(b);
  Rows rows(b.rows().begin(), b.rows().begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> class_map(b.frozen());
  for (std::size_t k = 0; k < analysis.glue_classes.size(); ++k) {
    auto rep = analysis.glue_classes[k].front();
    auto row = b.row(rep);
    auto g = analysis.gcds[rep - n];
    for (auto& e : row) e /= g;
    rows.push_back(std::move(row));
    for (auto j : analysis.glue_classes[k]) class_map[j - n] = k;
  }
  return {ExchangeMatrix(n, analysis.glue_classes.size(), std::move(rows)), analysis.gcds, std::move(class_map)};
}

std::vector<std::vector<Entry>> GluingFreeQuiver::specialization() const {
  return spec_matrix(matrix.frozen(), class_map, std::vector<Entry>(class_map.size(), 1));
}

GluingFreeQuiver gluing_free_quiver(const ExchangeMatrix& b) {
  const auto n = b.exchangeable();
  auto analysis = classify(b);
  Rows rows(b.rows().begin(), b.rows().begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> kept;
  std::vector<std::size_t> class_map(b.frozen());
  for (std::size_t k = 0; k < analysis.strict_classes.size(); ++k) {
    kept.push_back(analysis.strict_classes[k].front());
    rows.push_back(b.row(kept.back()));
    for (auto j : analysis.strict_classes[k]) class_map[j - n] = k;
  }
  return {ExchangeMatrix(n, kept.size(), std::move(rows)), std::move(kept), std::move(class_map)};
}

mpz_class determinant(const std::vector<std::vector<Entry>>& a) {
  const auto n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw ShapeMismatch("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = static_cast<long>(a[r][c]);
  mpz_class sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]);
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

SpecializationReport check_specialization(const ExchangeMatrix& from, const ExchangeMatrix& to,
                                          const std::vector<std::vector<Entry>>& a,
                                          const SpecializationScope& scope) {
  const auto n = from.exchangeable();
  if (!(from.principal_part() == to.principal_part()))
    throw ShapeMismatch("specialization needs equal principal parts");
  if (a.size() != from.frozen() || std::any_of(a.begin(), a.end(), [&](const auto& r) { return r.size() != to.frozen(); }))
    throw ShapeMismatch("specialization matrix must be " + std::to_string(from.frozen()) + " x " +
                        std::to_string(to.frozen()));

  SpecializationReport report;
  if (a.size() == to.frozen()) report.det = determinant(a);

  auto rows_hold = [&](const ExchangeMatrix& b1, const ExchangeMatrix& b2) {
    for (std::size_t k = 0; k < b2.frozen(); ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        Entry sum = 0;
        for (std::size_t j = 0; j < b1.frozen(); ++j) sum += a[j][k] * b1(n + j, i);
        if (sum != b2(n + k, i)) return false;
      }
    }
    return true;
  };
  auto images = [&] {
    std::vector<LaurentPolynomial> out;
    for (const auto& row : a) out.push_back(LaurentPolynomial::monomial(std::vector<int>(row.begin(), row.end())));
    return out;
  }();
  auto monomials_hold = [&](const ExchangeMatrix& b1, const ExchangeMatrix& b2) {
    auto phi = [&](const std::vector<Entry>& exps) {
      auto p = LaurentPolynomial::constant(to.frozen(), 1);
      for (std::size_t j = 0; j < exps.size(); ++j) p = p * images[j].pow(static_cast<unsigned>(exps[j]));
      return p;
    };
    auto as_monomial = [](const std::vector<Entry>& exps) {
      return LaurentPolynomial::monomial(std::vector<int>(exps.begin(), exps.end()));
    };
    for (std::size_t i = 0; i < n; ++i) {
      auto p1 = coefficient_monomials(b1, i);
      auto p2 = coefficient_monomials(b2, i);
      if (!(phi(p1.plus) == as_monomial(p2.plus)) || !(phi(p1.minus) == as_monomial(p2.minus))) return false;
    }
    return true;
  };

  report.holds = true;
  report.monomials_agree = true;
  auto visit = [&](const ExchangeMatrix& b1, const ExchangeMatrix& b2, const AdmissibleWord& word) {
    ++report.checked;
    if (report.holds && !rows_hold(b1, b2)) {
      report.holds = false;
      report.counterexample = word;
    }
    if (word.size() <= 2 && !monomials_hold(b1, b2)) report.monomials_agree = false;
  };

  if (!scope.depth) {
    // One visit per seed of the source algebra, reached along its
    // breadth-first tree.
    auto e = ExchangeGraph::enumerate(from, scope.cap);
    for (std::size_t v = 0; v < e.size(); ++v)
      visit(e.seed(v).matrix(), apply_word(to, e.word_to(v)), e.word_to(v));
    return report;
  }

  struct Item {
    ExchangeMatrix b1;
    ExchangeMatrix b2;
    AdmissibleWord word;
  };
  std::deque<Item> queue{{from, to, {}}};
  while (!queue.empty()) {
    auto item = std::move(queue.front());
    queue.pop_front();
    visit(item.b1, item.b2, item.word);
    if (item.word.size() >= *scope.depth) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!item.word.empty() && item.word.back() == i) continue;
      auto word = item.word;
      word.push_back(i);
      queue.push_back({mutate_matrix(item.b1, i), mutate_matrix(item.b2, i), std::move(word)});
    }
  }
  return report;
}

bool equal_up_to_frozen_order(const ExchangeMatrix& a, const ExchangeMatrix& b) {
  if (!(a.principal_part() == b.principal_part()) || a.frozen() != b.frozen()) return false;
  auto ra = frozen_rows(a);
  auto rb = frozen_rows(b);
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

bool verify_pgf_commutes(const ExchangeMatrix& b, const AdmissibleWord& w) {
  auto mutated = apply_word(b, w);
  return equal_up_to_frozen_order(prime_gluing_free_quiver(mutated).matrix,
                                  apply_word(prime_gluing_free_quiver(b).matrix, w)) &&
         equal_up_to_frozen_order(gluing_free_quiver(mutated).matrix, apply_word(gluing_free_quiver(b).matrix, w));
}

}  // namespace clusteraut
