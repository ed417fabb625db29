#include "clusteraut/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "clusteraut/errors.hpp"

namespace clusteraut {

LaurentPolynomial LaurentPolynomial::constant(std::size_t variables, const mpz_class& c) {
  LaurentPolynomial p(variables);
  p.add_term(Monomial(variables, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw std::out_of_range("variable index out of range");
  Monomial m(variables, 0);
  m[index] = 1;
  return monomial(std::move(m));
}

LaurentPolynomial LaurentPolynomial::monomial(Monomial exponents, const mpz_class& c) {
  LaurentPolynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

mpz_class LaurentPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPolynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  if (other.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("variable count mismatch");
  LaurentPolynomial out(a.vars_);
  Monomial m(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = constant(vars_, 1);
  LaurentPolynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(const Monomial& shift) const {
  if (shift.size() != vars_) throw std::invalid_argument("variable count mismatch");
  LaurentPolynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    for (std::size_t v = 0; v < vars_; ++v) s[v] += shift[v];
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::specialize_tail(std::size_t keep) const {
  if (keep > vars_) throw std::invalid_argument("specialize_tail: keep exceeds variable count");
  LaurentPolynomial out(keep);
  for (const auto& [m, c] : terms_) out.add_term(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(keep)), c);
  return out;
}

bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
  return a.terms_ < b.terms_;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    bool constant_term = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    std::string factors;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!factors.empty()) factors += " * ";
      factors += "x" + std::to_string(v + 1);
      if (m[v] != 1) factors += "^" + std::to_string(m[v]);
    }
    if (constant_term) {
      out += c.get_str();
    } else if (c == 1) {
      out += factors;
    } else if (c == -1) {
      out += "-" + factors;
    } else {
      out += c.get_str() + " * " + factors;
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + sep.size();
  }
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return value;
}

bool is_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

void parse_factor(std::string_view f, Monomial& m, std::string_view context) {
  if (f.size() < 2 || f.front() != 'x') throw ParseError("bad factor '" + std::string(f) + "'");
  auto caret = f.find('^');
  auto index = parse_int(f.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), context);
  int exponent = caret == std::string_view::npos ? 1 : parse_int(f.substr(caret + 1), context);
  if (index < 1 || static_cast<std::size_t>(index) > m.size())
    throw ParseError("variable index out of range in '" + std::string(context) + "'");
  m[static_cast<std::size_t>(index - 1)] += exponent;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text, std::size_t variables) {
  LaurentPolynomial out(variables);
  if (text == "0") return out;
  for (auto term : split(text, " + ")) {
    auto factors = split(term, " * ");
    mpz_class coeff = 1;
    Monomial m(variables, 0);
    std::size_t first = 0;
    if (is_integer(factors[0])) {
      if (coeff.set_str(std::string(factors[0]), 10) != 0) throw ParseError("bad coefficient in '" + std::string(term) + "'");
      first = 1;
    } else if (!factors[0].empty() && factors[0].front() == '-') {
      coeff = -1;
      factors[0].remove_prefix(1);
    }
    for (std::size_t k = first; k < factors.size(); ++k) parse_factor(factors[k], m, term);
    out.add_term(m, coeff);
  }
  return out;
}

std::optional<LaurentPolynomial> exact_div(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (p.variables() != q.variables()) throw std::invalid_argument("variable count mismatch");
  const auto vars = p.variables();
  if (p.is_zero()) return LaurentPolynomial(vars);

  auto lowest = [vars](const LaurentPolynomial& f) {
    Monomial low = f.terms().begin()->first;
    for (const auto& [m, c] : f.terms())
      for (std::size_t v = 0; v < vars; ++v) low[v] = std::min(low[v], m[v]);
    return low;
  };
  auto negate = [](Monomial m) {
    for (auto& e : m) e = -e;
    return m;
  };
  Monomial low_p = lowest(p);
  Monomial low_q = lowest(q);

  auto remainder = p.shifted(negate(low_p));
  const auto divisor = q.shifted(negate(low_q));
  const auto& [lead_q, lead_coeff] = *divisor.terms().rbegin();

  LaurentPolynomial quotient(vars);
  while (!remainder.is_zero()) {
    const auto& [lead_r, coeff_r] = *remainder.terms().rbegin();
    Monomial step(vars);
    for (std::size_t v = 0; v < vars; ++v) {
      step[v] = lead_r[v] - lead_q[v];
      if (step[v] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(coeff_r.get_mpz_t(), lead_coeff.get_mpz_t())) return std::nullopt;
    auto term = LaurentPolynomial::monomial(std::move(step), coeff_r / lead_coeff);
    remainder -= term * divisor;
    quotient += term;
  }
  Monomial back(vars);
  for (std::size_t v = 0; v < vars; ++v) back[v] = low_p[v] - low_q[v];
  return quotient.shifted(back);
}

}  // namespace clusteraut
