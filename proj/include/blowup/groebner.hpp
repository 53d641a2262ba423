#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "blowup/monomial_ideal.hpp"
#include "blowup/polynomial.hpp"

namespace blowup {

namespace detail {

using OrderedTerms = std::vector<Term>;  // sorted by some MonomialOrder, largest first

inline OrderedTerms ordered_terms(const Polynomial& f, const MonomialOrder& ord) {
  OrderedTerms t = f.terms();
  if (ord != MonomialOrder::degrevlex()) {
    const OrderGreater gt{ord};
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return gt(a.monomial, b.monomial); });
  }
  return t;
}

/// Working polynomial during reduction, kept ordered by the term order.
using Accumulator = std::map<Monomial, Rational, OrderGreater>;

inline void axpy(Accumulator& acc, const Rational& c, const Monomial& shift, const OrderedTerms& g) {
  for (const auto& t : g) {
    auto [it, inserted] = acc.try_emplace(t.monomial * shift, 0);
    it->second -= c * t.coefficient;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` in Q[x_1..x_n].
/// Buchberger with normal selection by sugar and the Gebauer-Moeller criteria.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t nvars, MonomialOrder ord, const std::vector<Polynomial>& gens)
      : nvars_(nvars), ord_(ord) {
    for (const auto& g : gens)
      if (g.nvars() != nvars) fail_input("generator does not match the ring's variables");
    compute(gens);
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return ord_; }
  bool reduced() const noexcept { return true; }
  /// Basis elements, monic with respect to the basis order.
  std::vector<Polynomial> elements() const {
    std::vector<Polynomial> out;
    for (const auto& e : basis_) out.emplace_back(nvars_, e);
    return out;
  }
  const std::vector<detail::OrderedTerms>& ordered_elements() const noexcept { return basis_; }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : basis_) out.push_back(e.front().monomial);
    return out;
  }
  MonomialIdeal leading_ideal() const { return MonomialIdeal(nvars_, leading_monomials()); }

  bool is_unit() const { return basis_.size() == 1 && basis_[0].front().monomial.is_one(); }
  bool is_zero() const { return basis_.empty(); }

  Polynomial normal_form(const Polynomial& f) const {
    if (f.nvars() != nvars_) fail_input("polynomial does not match the ring's variables");
    return Polynomial(nvars_, reduce(detail::ordered_terms(f, ord_)));
  }
  bool member(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Krull dimension of Q[x]/I: largest set of variables independent modulo the leading ideal.
  std::size_t krull_dimension() const {
    if (is_unit()) return 0;
    const auto lms = leading_monomials();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << nvars_); ++mask) {
      const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
      if (size <= best) continue;
      bool independent = true;
      for (const auto& m : lms) {
        bool inside = true;
        for (std::size_t i = 0; i < nvars_; ++i)
          if (m[i] && !(mask >> i & 1u)) inside = false;
        if (inside) {
          independent = false;
          break;
        }
      }
      if (independent) best = size;
    }
    return best;
  }

 private:
  struct Entry {
    detail::OrderedTerms p;
    std::uint64_t sugar;
    bool active = true;
    const Monomial& lm() const { return p.front().monomial; }
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
  };

  detail::OrderedTerms reduce(const detail::OrderedTerms& f) const {
    detail::Accumulator acc{OrderGreater{ord_}};
    for (const auto& t : f) acc.emplace(t.monomial, t.coefficient);
    detail::OrderedTerms out;
    while (!acc.empty()) {
      auto top = acc.begin();
      const detail::OrderedTerms* g = nullptr;
      for (const auto& b : basis_)
        if (b.front().monomial.divides(top->first)) {
          g = &b;
          break;
        }
      if (!g) {
        out.push_back({top->first, top->second});
        acc.erase(top);
        continue;
      }
      const Rational c = top->second;  // basis elements are monic
      detail::axpy(acc, c, top->first / g->front().monomial, *g);
    }
    return out;
  }

  // Full reduction by the currently active working entries.
  detail::OrderedTerms reduce_by(const detail::OrderedTerms& f, const std::vector<Entry>& g) const {
    detail::Accumulator acc{OrderGreater{ord_}};
    for (const auto& t : f) acc.emplace(t.monomial, t.coefficient);
    detail::OrderedTerms out;
    while (!acc.empty()) {
      auto top = acc.begin();
      const Entry* r = nullptr;
      for (const auto& e : g)
        if (e.active && e.lm().divides(top->first)) {
          r = &e;
          break;
        }
      if (!r) {
        out.push_back({top->first, top->second});
        acc.erase(top);
        continue;
      }
      const Rational c = top->second;
      detail::axpy(acc, c, top->first / r->lm(), r->p);
    }
    return out;
  }

  static void make_monic(detail::OrderedTerms& p) {
    if (p.empty() || p.front().coefficient == 1) return;
    const Rational inv = Rational(1) / p.front().coefficient;
    for (auto& t : p) t.coefficient *= inv;
  }

  detail::OrderedTerms spoly(const Entry& f, const Entry& g, const Monomial& l) const {
    detail::Accumulator acc{OrderGreater{ord_}};
    const Monomial sf = l / f.lm();
    for (const auto& t : f.p) acc.emplace(t.monomial * sf, t.coefficient);
    detail::axpy(acc, Rational(1), l / g.lm(), g.p);
    detail::OrderedTerms out;
    for (auto& [m, c] : acc) out.push_back({m, c});
    return out;
  }

  void update(std::vector<Entry>& g, std::vector<Pair>& pairs, std::size_t h) const {
    const Monomial& lh = g[h].lm();
    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < h; ++k)
      if (g[k].active) cand.push_back(k);
    auto lcm_with = [&](std::size_t k) { return lcm(lh, g[k].lm()); };
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const std::size_t k = cand[a];
      const Monomial l = lcm_with(k);
      bool keep = coprime(lh, g[k].lm());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
          if (lcm_with(cand[b]).divides(l)) keep = false;
        for (std::size_t k2 : kept)
          if (keep && lcm_with(k2).divides(l)) keep = false;
      }
      if (keep) kept.push_back(k);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      const bool drop = lh.divides(p.lcm) && lcm(g[p.i].lm(), lh) != p.lcm && lcm(lh, g[p.j].lm()) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (std::size_t k : kept) {
      if (coprime(lh, g[k].lm())) continue;
      const Monomial l = lcm_with(k);
      const std::uint64_t s = std::max(g[h].sugar + l.degree() - lh.degree(),
                                       g[k].sugar + l.degree() - g[k].lm().degree());
      next.push_back({k, h, l, s});
    }
    pairs = std::move(next);
    for (std::size_t k = 0; k < h; ++k)
      if (g[k].active && lh.divides(g[k].lm())) g[k].active = false;
  }

  void compute(const std::vector<Polynomial>& gens) {
    std::vector<Entry> g;
    std::vector<Pair> pairs;
    std::vector<Polynomial> input;
    for (const auto& f : gens)
      if (!f.is_zero()) input.push_back(f);
    std::sort(input.begin(), input.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.total_degree() < b.total_degree(); });
    for (const auto& f : input) {
      auto h = reduce_by(detail::ordered_terms(f, ord_), g);
      if (h.empty()) continue;
      make_monic(h);
      g.push_back({std::move(h), f.total_degree()});
      update(g, pairs, g.size() - 1);
    }
    const OrderGreater gt{ord_};
    while (!pairs.empty()) {
      auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return gt(b.lcm, a.lcm);
      });
      Pair p = std::move(*it);
      *it = std::move(pairs.back());
      pairs.pop_back();
      auto h = reduce_by(spoly(g[p.i], g[p.j], p.lcm), g);
      if (h.empty()) continue;
      make_monic(h);
      g.push_back({std::move(h), p.sugar});
      update(g, pairs, g.size() - 1);
      if (g.back().lm().is_one()) break;
    }
    std::vector<Entry> minimal;
    for (auto& e : g)
      if (e.active) minimal.push_back(std::move(e));
    if (std::any_of(minimal.begin(), minimal.end(), [](const Entry& e) { return e.lm().is_one(); })) {
      basis_ = {{Term{Monomial(nvars_), 1}}};
      return;
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Entry& a, const Entry& b) { return gt(a.lm(), b.lm()); });
    // Interreduce tails; leading monomials are already pairwise non-divisible.
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      minimal[k].active = false;
      detail::OrderedTerms tail(minimal[k].p.begin() + 1, minimal[k].p.end());
      auto r = reduce_by(tail, minimal);
      detail::OrderedTerms full{minimal[k].p.front()};
      full.insert(full.end(), r.begin(), r.end());
      minimal[k].p = std::move(full);
      minimal[k].active = true;
    }
    for (auto& e : minimal) basis_.push_back(std::move(e.p));
  }

  std::size_t nvars_ = 0;
  MonomialOrder ord_;
  std::vector<detail::OrderedTerms> basis_;
};

namespace gb {

/// Polynomial moved into a ring with `nvars` variables; variable i goes to map[i].
inline Polynomial remap(const Polynomial& f, std::size_t nvars, const std::vector<std::size_t>& map) {
  std::vector<Term> t;
  for (const auto& term : f.terms()) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < f.nvars(); ++i) m[map[i]] += term.monomial[i];
    t.push_back({m, term.coefficient});
  }
  return Polynomial(nvars, std::move(t));
}

/// Generators of I ∩ Q[kept variables], where `drop` marks variables to remove.
/// The result lives in the same variable set (dropped variables simply absent).
inline std::vector<Polynomial> eliminate(std::size_t nvars, const std::vector<Polynomial>& gens,
                                         const std::vector<bool>& drop) {
  if (drop.size() != nvars) fail_input("elimination mask has the wrong length");
  std::vector<std::size_t> to, from(nvars);
  std::size_t k = 0;
  for (std::size_t i = 0; i < nvars; ++i)
    if (drop[i]) from[k++] = i;
  const std::size_t block = k;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!drop[i]) from[k++] = i;
  to.assign(nvars, 0);
  for (std::size_t j = 0; j < nvars; ++j) to[from[j]] = j;
  if (block == 0) return GroebnerBasis(nvars, MonomialOrder::degrevlex(), gens).elements();
  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.push_back(remap(g, nvars, to));
  GroebnerBasis basis(nvars, MonomialOrder::elimination(block), moved);
  std::vector<Polynomial> out;
  for (const auto& e : basis.elements()) {
    bool free = true;
    for (const auto& t : e.terms())
      for (std::size_t j = 0; j < block; ++j)
        if (t.monomial[j]) free = false;
    if (free) out.push_back(remap(e, nvars, from));
  }
  return out;
}

/// Generators of (A) ∩ (B) via t*A + (1-t)*B and elimination of t.
inline std::vector<Polynomial> intersect(std::size_t nvars, const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b) {
  std::vector<std::size_t> up(nvars);
  for (std::size_t i = 0; i < nvars; ++i) up[i] = i + 1;
  const Polynomial t = Polynomial::variable(nvars + 1, 0);
  const Polynomial one_minus_t = Polynomial::constant(nvars + 1, 1) - t;
  std::vector<Polynomial> mixed;
  for (const auto& f : a) mixed.push_back(t * remap(f, nvars + 1, up));
  for (const auto& f : b) mixed.push_back(one_minus_t * remap(f, nvars + 1, up));
  std::vector<bool> drop(nvars + 1, false);
  drop[0] = true;
  std::vector<std::size_t> down(nvars + 1, 0);
  for (std::size_t i = 0; i < nvars; ++i) down[i + 1] = i;
  std::vector<Polynomial> out;
  for (const auto& e : eliminate(nvars + 1, mixed, drop)) {
    // e is free of t; project back
    std::vector<Term> terms;
    for (const auto& term : e.terms()) {
      Monomial m(nvars);
      for (std::size_t i = 0; i < nvars; ++i) m[i] = term.monomial[i + 1];
      terms.push_back({m, term.coefficient});
    }
    out.emplace_back(nvars, std::move(terms));
  }
  return out;
}

/// q with q*f = h; f must divide h exactly.
inline Polynomial divide_exact(Polynomial h, const Polynomial& f) {
  Polynomial q(h.nvars());
  const Term& lf = f.leading_term();
  while (!h.is_zero()) {
    const Term& lh = h.leading_term();
    if (!lf.monomial.divides(lh.monomial)) fail_hypothesis("inexact polynomial division");
    Polynomial t(lh.monomial / lf.monomial, lh.coefficient / lf.coefficient);
    q += t;
    h -= t * f;
  }
  return q;
}

/// Generators of (A) : f.
inline std::vector<Polynomial> colon(std::size_t nvars, const std::vector<Polynomial>& a, const Polynomial& f) {
  if (f.is_zero()) return {Polynomial::constant(nvars, 1)};
  std::vector<Polynomial> out;
  for (const auto& h : intersect(nvars, a, {f})) out.push_back(divide_exact(h, f));
  return out;
}

/// Generators of (A) : (B).
inline std::vector<Polynomial> colon(std::size_t nvars, const std::vector<Polynomial>& a,
                                     const std::vector<Polynomial>& b) {
  std::vector<Polynomial> acc{Polynomial::constant(nvars, 1)};
  bool first = true;
  for (const auto& f : b) {
    if (f.is_zero()) continue;
    auto c = colon(nvars, a, f);
    acc = first ? std::move(c) : intersect(nvars, acc, c);
    first = false;
  }
  return acc;
}

}  // namespace gb
}  // namespace blowup
