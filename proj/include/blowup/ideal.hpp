#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "blowup/groebner.hpp"
#include "blowup/monomial_ideal.hpp"
#include "blowup/ring.hpp"
#include "blowup/semigroup.hpp"

namespace blowup {

/// Finite generator list over a ring model. Derived data (monomial form,
/// Groebner basis, colength) is computed lazily and shared between copies.
class Ideal {
 public:
  enum class Backend { monomial, semigroup, groebner, semigroup_linear };

  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_) fail_input("ideal without a ring");
    for (auto& g : gens) {
      if (g.nvars() != ring_->nvars()) fail_input("generator does not match the ring's variables");
      if (g.is_zero()) continue;
      if (ring_->is_semigroup())
        for (const auto& t : g.terms())
          if (!ring_->numerical_semigroup()->contains(t.monomial[0]))
            fail_input("t^" + std::to_string(t.monomial[0]) + " is not in the semigroup ring");
      bool seen = false;
      for (const auto& h : gens_) seen = seen || h == g;
      if (!seen) gens_.push_back(std::move(g));
    }
    monomial_ = std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
  }

  static Ideal zero(Ring r) { return Ideal(std::move(r), {}); }
  static Ideal unit(Ring r) {
    const auto n = r->nvars();
    return Ideal(std::move(r), {Polynomial::constant(n, 1)});
  }
  static Ideal maximal(Ring r) {
    std::vector<Polynomial> g;
    if (r->is_semigroup()) {
      for (unsigned a : r->numerical_semigroup()->generators()) g.emplace_back(Monomial{a});
    } else {
      for (std::size_t i = 0; i < r->nvars(); ++i) g.push_back(r->variable(i));
    }
    return Ideal(std::move(r), std::move(g));
  }
  static Ideal from_monomials(Ring r, const std::vector<Monomial>& ms) {
    std::vector<Polynomial> g;
    for (const auto& m : ms) g.emplace_back(m);
    return Ideal(std::move(r), std::move(g));
  }
  static Ideal from(Ring r, const MonomialIdeal& m) { return from_monomials(std::move(r), m.generators()); }
  static Ideal from(Ring r, const SemigroupIdeal& s) {
    std::vector<Polynomial> g;
    for (unsigned e : s.generators()) g.emplace_back(Monomial{e});
    return Ideal(std::move(r), std::move(g));
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_monomial() const noexcept { return monomial_; }

  Backend backend() const noexcept {
    if (ring_->is_semigroup()) return monomial_ ? Backend::semigroup : Backend::semigroup_linear;
    if (ring_->is_polynomial() && monomial_) return Backend::monomial;
    return Backend::groebner;
  }

  const MonomialIdeal& monomial_form() const {
    if (backend() != Backend::monomial) fail_hypothesis("ideal has no monomial-backend form");
    std::call_once(cache_->mono_once, [&] {
      std::vector<Monomial> ms;
      for (const auto& g : gens_) ms.push_back(g.leading_term().monomial);
      cache_->mono = MonomialIdeal(nvars(), std::move(ms));
    });
    return cache_->mono;
  }

  const SemigroupIdeal& semigroup_form() const {
    if (backend() != Backend::semigroup) fail_hypothesis("ideal has no semigroup-backend form");
    std::call_once(cache_->semi_once, [&] {
      std::vector<unsigned> es;
      for (const auto& g : gens_) es.push_back(g.leading_term().monomial[0]);
      cache_->semi = SemigroupIdeal(ring_->numerical_semigroup(), std::move(es));
    });
    return cache_->semi;
  }

  /// Degrevlex Groebner basis of the generators together with the ring relations.
  const GroebnerBasis& basis() const {
    if (ring_->is_semigroup()) fail_hypothesis("Groebner bases are not available in the semigroup model");
    std::call_once(cache_->gb_once, [&] {
      std::vector<Polynomial> all = gens_;
      all.insert(all.end(), ring_->relations().begin(), ring_->relations().end());
      cache_->gb = GroebnerBasis(nvars(), MonomialOrder::degrevlex(), all);
    });
    return cache_->gb;
  }

  /// Stable textual identity, used for cache keys.
  const std::string& key() const {
    std::call_once(cache_->key_once, [&] {
      std::string k = std::to_string(reinterpret_cast<std::uintptr_t>(ring_.get())) + "|";
      std::vector<std::string> parts;
      for (const auto& g : gens_) parts.push_back(blowup::to_string(g, ring_->variables()));
      std::sort(parts.begin(), parts.end());
      for (const auto& p : parts) k += p + ";";
      cache_->key = std::move(k);
    });
    return cache_->key;
  }

  std::string to_string() const {
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + blowup::to_string(gens_[i], ring_->variables());
    return s + ")";
  }

  // Lazily computed facts, filled in by the free functions below.
  struct Cache {
    std::once_flag mono_once, semi_once, gb_once, key_once;
    MonomialIdeal mono;
    SemigroupIdeal semi;
    GroebnerBasis gb;
    std::string key;
    std::mutex facts;
    std::optional<bool> m_primary;
    std::optional<std::uint64_t> colength;
  };
  Cache& cache() const { return *cache_; }

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
  bool monomial_ = true;
  std::shared_ptr<Cache> cache_;
};

inline void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) fail_input("ideals live in different rings");
}

namespace detail {

inline Polynomial univariate_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    // a mod b by leading-term elimination (one variable, degrevlex = degree order)
    while (!a.is_zero() && a.total_degree() >= b.total_degree()) {
      const Term& la = a.leading_term();
      const Term& lb = b.leading_term();
      a -= b.times(la.monomial / lb.monomial, la.coefficient / lb.coefficient);
    }
    std::swap(a, b);
  }
  return a.monic();
}

/// x_i nilpotent modulo a zero-dimensional Groebner basis of codimension `dim`.
inline bool nilpotent(const GroebnerBasis& gb, std::size_t i, std::uint64_t dim) {
  const Polynomial x = Polynomial::variable(gb.nvars(), i);
  Polynomial h = gb.normal_form(x);
  for (std::uint64_t k = 1; k < dim + 1 && !h.is_zero(); ++k) h = gb.normal_form(h * x);
  return h.is_zero();
}

}  // namespace detail

/// Proper, finite colength, and radical equal to the maximal ideal at the origin.
inline bool is_m_primary(const Ideal& I) {
  auto& c = I.cache();
  {
    std::lock_guard lock(c.facts);
    if (c.m_primary) return *c.m_primary;
  }
  bool v = false;
  switch (I.backend()) {
    case Ideal::Backend::monomial: v = I.monomial_form().is_m_primary(); break;
    case Ideal::Backend::semigroup: v = I.semigroup_form().is_m_primary(); break;
    case Ideal::Backend::semigroup_linear: {
      // Q[S] -> Q[t] is finite and bijective on points, so V(I) = roots of the gcd.
      Polynomial g(1);
      bool in_m = true;
      for (const auto& f : I.generators()) {
        in_m = in_m && f.constant_term() == 0;
        g = detail::univariate_gcd(g, f);
      }
      v = in_m && !I.is_zero() && g.is_monomial();
      break;
    }
    case Ideal::Backend::groebner: {
      const auto& gb = I.basis();
      if (gb.is_unit() || !gb.leading_ideal().is_m_primary()) break;
      const std::uint64_t dim = gb.leading_ideal().colength();
      v = true;
      for (std::size_t i = 0; i < I.nvars() && v; ++i) v = detail::nilpotent(gb, i, dim);
      break;
    }
  }
  std::lock_guard lock(I.cache().facts);
  c.m_primary = v;
  return v;
}

/// Vector-space dimension of R/I; requires an m-primary (or unit) ideal.
inline std::uint64_t colength(const Ideal& I) {
  auto& c = I.cache();
  {
    std::lock_guard lock(c.facts);
    if (c.colength) return *c.colength;
  }
  std::uint64_t v = 0;
  switch (I.backend()) {
    case Ideal::Backend::monomial:
      if (!I.monomial_form().is_unit() && !is_m_primary(I)) fail_hypothesis("colength: ideal is not m-primary");
      v = I.monomial_form().colength();
      break;
    case Ideal::Backend::semigroup:
      if (I.is_zero()) fail_hypothesis("colength: ideal is not m-primary");
      v = I.semigroup_form().colength();
      break;
    case Ideal::Backend::semigroup_linear:
      fail_hypothesis("colength of a non-monomial semigroup ideal is not supported");
    case Ideal::Backend::groebner:
      if (I.basis().is_unit()) {
        v = 0;
        break;
      }
      if (!is_m_primary(I)) fail_hypothesis("colength: ideal is not m-primary");
      v = I.basis().leading_ideal().colength();
      break;
  }
  std::lock_guard lock(c.facts);
  c.colength = v;
  return v;
}

/// f in I (global membership; equals local membership when I is m-primary).
inline bool member(const Polynomial& f, const Ideal& I) {
  if (f.nvars() != I.nvars()) fail_input("polynomial does not match the ring's variables");
  if (f.is_zero()) return true;
  switch (I.backend()) {
    case Ideal::Backend::monomial:
      return std::all_of(f.terms().begin(), f.terms().end(),
                         [&](const Term& t) { return I.monomial_form().contains(t.monomial); });
    case Ideal::Backend::semigroup:
      return std::all_of(f.terms().begin(), f.terms().end(),
                         [&](const Term& t) { return I.semigroup_form().contains(t.monomial[0]); });
    case Ideal::Backend::groebner: return I.basis().member(f);
    case Ideal::Backend::semigroup_linear: break;
  }
  fail_hypothesis("membership in a non-monomial semigroup ideal is not supported");
}

}  // namespace blowup
