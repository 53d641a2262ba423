#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blowup/monomial.hpp"
#include "blowup/rational.hpp"

namespace blowup {

struct Term {
  Monomial monomial;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q. Terms are kept sorted by degrevlex, largest first,
/// with no zero coefficients, so equal polynomials have equal term vectors.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  explicit Polynomial(const Monomial& m, Rational c = 1) : nvars_(m.size()) {
    if (c != 0) terms_.push_back({m, std::move(c)});
  }
  Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.monomial.size() != nvars_) fail_input("term length does not match the variable count");
    canonicalize();
  }

  static Polynomial constant(std::size_t nvars, Rational c) { return Polynomial(Monomial(nvars), std::move(c)); }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    return Polynomial(Monomial::variable(nvars, i));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  /// Leading term for degrevlex.
  const Term& leading_term() const { return terms_.front(); }

  std::uint64_t total_degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  /// Lowest total degree among the terms (order at the origin).
  std::uint64_t low_degree() const noexcept {
    std::uint64_t d = ~0ull;
    for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
    return d;
  }
  bool is_homogeneous() const noexcept {
    return terms_.empty() || total_degree() == low_degree();
  }
  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coefficient;
    return 0;
  }
  Rational constant_term() const { return coefficient(Monomial(nvars_)); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return combine(f, g, 1); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return combine(f, g, -1); }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    check_same(f, g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.nvars_);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) acc[a.monomial * b.monomial] += a.coefficient * b.coefficient;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) out.push_back({m, std::move(c)});
    Polynomial r(f.nvars_);
    r.terms_ = std::move(out);
    r.sort_terms();
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& f) {
    if (c == 0) return Polynomial(f.nvars_);
    Polynomial r = f;
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }
  /// Multiply by a monomial (no reordering needed: degrevlex is multiplicative).
  Polynomial times(const Monomial& m, const Rational& c = 1) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
    return r;
  }
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(nvars_, 1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return r;
  }

  /// Scale so the leading coefficient is 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return Rational(1) / terms_.front().coefficient * *this;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
  }

  static void check_same(const Polynomial& f, const Polynomial& g) {
    if (f.nvars_ != g.nvars_) fail_input("polynomials live in different variable sets");
  }

 private:
  static Polynomial combine(const Polynomial& f, const Polynomial& g, int sign) {
    check_same(f, g);
    Polynomial r(f.nvars_);
    r.terms_.reserve(f.size() + g.size());
    const OrderGreater gt{MonomialOrder::degrevlex()};
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size() || (i < f.size() && gt(f.terms_[i].monomial, g.terms_[j].monomial))) {
        r.terms_.push_back(f.terms_[i++]);
      } else if (i == f.size() || gt(g.terms_[j].monomial, f.terms_[i].monomial)) {
        Term t = g.terms_[j++];
        if (sign < 0) t.coefficient = -t.coefficient;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c = f.terms_[i].coefficient;
        if (sign > 0) c += g.terms_[j].coefficient;
        else c -= g.terms_[j].coefficient;
        if (c != 0) r.terms_.push_back({f.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    const OrderGreater gt{MonomialOrder::degrevlex()};
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) { return gt(a.monomial, b.monomial); });
  }

  void canonicalize() {
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial)
        out.back().coefficient += t.coefficient;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Ring map: variable i goes to images[i]. All images must share one variable set.
inline Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, std::size_t target_nvars) {
  if (images.size() != f.nvars()) fail_input("substitution needs one image per variable");
  Polynomial r(target_nvars);
  for (const auto& t : f.terms()) {
    Polynomial p = Polynomial::constant(target_nvars, t.coefficient);
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (t.monomial[i]) p *= images[i].pow(t.monomial[i]);
    r += p;
  }
  return r;
}

inline std::string to_string(const Monomial& m, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const Polynomial& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coefficient;
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    if (c < 0) c = -c;
    const bool one = t.monomial.is_one();
    if (c != 1 || one) s += c.get_str() + (one ? "" : "*");
    if (!one) s += to_string(t.monomial, names);
    first = false;
  }
  return s;
}

}  // namespace blowup
