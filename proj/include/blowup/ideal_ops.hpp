#pragma once

#include <set>
#include <string>
#include <vector>

#include "blowup/frame.hpp"
#include "blowup/ideal.hpp"

namespace blowup {

namespace detail {

inline std::vector<Polynomial> with_relations(const Ideal& I) {
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), I.ring()->relations().begin(), I.ring()->relations().end());
  return g;
}

/// Drop generators that vanish in the ring (reduce to zero modulo the relations).
inline Ideal in_ring(const Ring& r, const std::vector<Polynomial>& gens) {
  if (r->relations().empty()) return Ideal(r, gens);
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial h = r->relation_basis().normal_form(g);
    if (!h.is_zero()) out.push_back(std::move(g));
  }
  return Ideal(r, std::move(out));
}

/// Products of generators; monomial lists are trimmed by divisibility.
inline std::vector<Polynomial> generator_products(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g;
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<Monomial> ms;
    for (const auto& x : a.generators())
      for (const auto& y : b.generators()) ms.push_back(x.leading_term().monomial * y.leading_term().monomial);
    const MonomialIdeal trimmed(a.nvars(), std::move(ms));
    for (const auto& m : trimmed.generators()) g.emplace_back(m);
    return g;
  }
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  return g;
}

}  // namespace detail

inline Ideal operator+(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.backend() == Ideal::Backend::monomial && b.backend() == Ideal::Backend::monomial)
    return Ideal::from(a.ring(), a.monomial_form() + b.monomial_form());
  if (a.backend() == Ideal::Backend::semigroup && b.backend() == Ideal::Backend::semigroup)
    return Ideal::from(a.ring(), a.semigroup_form() + b.semigroup_form());
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

inline Ideal product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.backend() == Ideal::Backend::monomial && b.backend() == Ideal::Backend::monomial)
    return Ideal::from(a.ring(), a.monomial_form() * b.monomial_form());
  if (a.backend() == Ideal::Backend::semigroup && b.backend() == Ideal::Backend::semigroup)
    return Ideal::from(a.ring(), a.semigroup_form() * b.semigroup_form());
  return detail::in_ring(a.ring(), detail::generator_products(a, b));
}

inline Ideal power(const Ideal& I, unsigned n) {
  Ideal r = Ideal::unit(I.ring());
  for (unsigned k = 0; k < n; ++k) r = product(r, I);
  return r;
}

/// True when every generator of b lies in a.
inline bool contains(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.backend() == Ideal::Backend::monomial && b.backend() == Ideal::Backend::monomial)
    return a.monomial_form().contains(b.monomial_form());
  if (a.backend() == Ideal::Backend::semigroup && b.backend() == Ideal::Backend::semigroup)
    return a.semigroup_form().contains(b.semigroup_form());
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Polynomial& f) { return member(f, a); });
}

inline bool equals(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.backend() == Ideal::Backend::monomial && b.backend() == Ideal::Backend::monomial)
    return a.monomial_form() == b.monomial_form();
  if (a.backend() == Ideal::Backend::semigroup && b.backend() == Ideal::Backend::semigroup)
    return a.semigroup_form() == b.semigroup_form();
  if (a.ring()->is_semigroup()) {
    if (a.backend() == Ideal::Backend::semigroup || b.backend() == Ideal::Backend::semigroup) {
      // one side monomial: compare inside its frame when it is m-primary
      const Ideal& mono = a.backend() == Ideal::Backend::semigroup ? a : b;
      const Ideal& other = a.backend() == Ideal::Backend::semigroup ? b : a;
      if (!contains(mono, other)) return false;
      QuotientFrame f(mono);
      return f.ideal_span(other.generators()).rank() == f.dimension();
    }
    fail_hypothesis("equality of two non-monomial semigroup ideals is not supported");
  }
  return a.basis().elements() == b.basis().elements();
}

/// a : b. Monomial and semigroup backends work combinatorially; an m-primary
/// a uses linear algebra on R/a; anything else goes through Groebner bases.
inline Ideal colon(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (b.is_zero()) return Ideal::unit(a.ring());
  if (a.backend() == Ideal::Backend::monomial && b.backend() == Ideal::Backend::monomial)
    return Ideal::from(a.ring(), colon(a.monomial_form(), b.monomial_form()));
  if (a.backend() == Ideal::Backend::semigroup && b.backend() == Ideal::Backend::semigroup)
    return Ideal::from(a.ring(), colon(a.semigroup_form(), b.semigroup_form()));
  if (a.backend() != Ideal::Backend::semigroup_linear && is_m_primary(a)) {
    QuotientFrame f(a);
    return f.to_ideal(f.colon(Echelon{}, b.generators()));
  }
  if (a.ring()->is_semigroup()) fail_hypothesis("colon of non-monomial semigroup ideals is not supported");
  return detail::in_ring(a.ring(), gb::colon(a.nvars(), detail::with_relations(a), b.generators()));
}

inline Ideal colon(const Ideal& a, const Polynomial& f) { return colon(a, Ideal(a.ring(), {f})); }

inline Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.backend() == Ideal::Backend::monomial && b.backend() == Ideal::Backend::monomial)
    return Ideal::from(a.ring(), intersect(a.monomial_form(), b.monomial_form()));
  if (a.backend() == Ideal::Backend::semigroup && b.backend() == Ideal::Backend::semigroup)
    return Ideal::from(a.ring(), intersect(a.semigroup_form(), b.semigroup_form()));
  if (a.ring()->is_semigroup()) fail_hypothesis("intersection of non-monomial semigroup ideals is not supported");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  return detail::in_ring(a.ring(),
                         gb::intersect(a.nvars(), detail::with_relations(a), detail::with_relations(b)));
}

struct MinimalGenerators {
  std::vector<Polynomial> generators;
  std::size_t nu = 0;
  bool exact = true;  // false: "minimality heuristic"
};

/// A minimal generating set and ν(I). Monomial backends drop divisible
/// generators; otherwise generators independent modulo m·I are kept, which
/// is exact locally for m-primary I.
inline MinimalGenerators minimal_generators(const Ideal& I) {
  MinimalGenerators out;
  switch (I.backend()) {
    case Ideal::Backend::monomial:
      for (const auto& m : I.monomial_form().generators()) out.generators.emplace_back(m);
      break;
    case Ideal::Backend::semigroup:
      for (unsigned e : I.semigroup_form().generators()) out.generators.emplace_back(Monomial{e});
      break;
    case Ideal::Backend::semigroup_linear:
      out.generators = I.generators();
      out.exact = false;
      break;
    case Ideal::Backend::groebner:
      if (is_m_primary(I)) {
        QuotientFrame f(product(Ideal::maximal(I.ring()), I), false);
        Echelon e;
        for (const auto& g : I.generators())
          if (e.insert(f.coords(g))) out.generators.push_back(g);
      } else {
        // drop generators already in the ideal of the others
        std::vector<Polynomial> gens = I.generators();
        for (std::size_t k = gens.size(); k-- > 0;) {
          std::vector<Polynomial> rest = gens;
          rest.erase(rest.begin() + static_cast<long>(k));
          if (!rest.empty() && member(gens[k], Ideal(I.ring(), rest))) gens = std::move(rest);
        }
        out.generators = std::move(gens);
        out.exact = false;
      }
      break;
  }
  out.nu = out.generators.size();
  return out;
}

inline GroebnerBasis groebner_basis(const Ideal& I, MonomialOrder ord = MonomialOrder::degrevlex()) {
  if (I.ring()->is_semigroup()) fail_hypothesis("Groebner bases are not available in the semigroup model");
  if (ord == MonomialOrder::degrevlex()) return I.basis();
  return GroebnerBasis(I.nvars(), ord, detail::with_relations(I));
}

/// I ∩ Q[variables not in drop], in the polynomial model.
inline Ideal eliminate(const Ideal& I, const std::set<std::string>& drop) {
  if (!I.ring()->is_polynomial()) fail_hypothesis("elimination needs the polynomial model");
  const auto& vars = I.ring()->variables();
  std::vector<bool> mask(vars.size(), false);
  for (const auto& d : drop) {
    auto it = std::find(vars.begin(), vars.end(), d);
    if (it == vars.end()) fail_input("cannot eliminate absent variable " + d);
    mask[static_cast<std::size_t>(it - vars.begin())] = true;
  }
  if (drop.empty()) return I;
  return Ideal(I.ring(), gb::eliminate(I.nvars(), I.generators(), mask));
}

}  // namespace blowup
