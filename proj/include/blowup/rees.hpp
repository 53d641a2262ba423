#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "blowup/reduction.hpp"

namespace blowup {

/// R(I) = S / 𝒥 with S = k[x, T_1..T_ν]; the base variables have T-degree 0.
struct ReesPresentation {
  Ideal base;
  std::vector<Polynomial> f;  // T_i maps to f_i t
  Ring S;
  Ideal defining;             // 𝒥
  Ideal linear_part;          // ℒ: generators of T-degree <= 1
  std::vector<unsigned> t_degrees;  // per generator of 𝒥
};

namespace detail {

inline unsigned t_degree(const Polynomial& g, std::size_t first_T) {
  unsigned deg = 0;
  for (const auto& term : g.terms()) {
    unsigned d = 0;
    for (std::size_t i = first_T; i < g.nvars(); ++i) d += term.monomial[i];
    deg = std::max(deg, d);
  }
  return deg;
}

/// Copy f into a ring with `target` variables, shifting nothing.
inline Polynomial widen(const Polynomial& f, std::size_t target) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(target);
    for (std::size_t i = 0; i < f.nvars(); ++i) m[i] = t.monomial[i];
    terms.push_back({m, t.coefficient});
  }
  return Polynomial(target, std::move(terms));
}

inline Polynomial narrow(const Polynomial& f, std::size_t target) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(target);
    for (std::size_t i = 0; i < target; ++i) m[i] = t.monomial[i];
    terms.push_back({m, t.coefficient});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace detail

/// 𝒥 = (T_i - f_i t, relations) ∩ k[x, T], by elimination of t.
inline ReesPresentation rees_presentation(const Ideal& I) {
  const Ring& R = I.ring();
  if (R->is_semigroup()) fail_hypothesis("Rees presentation: needs the polynomial or quotient model");
  if (I.is_zero()) fail_hypothesis("Rees presentation: zero ideal");
  const std::size_t n = R->nvars();
  const std::vector<Polynomial> f = I.generators();
  const std::size_t nu = f.size();
  std::vector<std::string> names = R->variables();
  for (std::size_t i = 1; i <= nu; ++i) {
    std::string T = "T" + std::to_string(i);
    if (std::find(names.begin(), names.end(), T) != names.end()) fail_input("Rees presentation: variable " + T + " is taken");
    names.push_back(std::move(T));
  }
  const std::size_t N = n + nu + 1;  // last variable is t

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nu; ++i) {
    const Polynomial T = Polynomial::variable(N, n + i);
    gens.push_back(T - detail::widen(f[i], N) * Polynomial::variable(N, N - 1));
  }
  for (const auto& rel : R->relations()) gens.push_back(detail::widen(rel, N));
  std::vector<bool> drop(N, false);
  drop[N - 1] = true;

  ReesPresentation p{I, f, RingSpec::polynomial(names), Ideal::zero(R), Ideal::zero(R), {}};
  std::vector<Polynomial> J, L;
  for (const auto& g : gb::eliminate(N, gens, drop)) {
    Polynomial h = detail::narrow(g, n + nu);
    const unsigned deg = detail::t_degree(h, n);
    p.t_degrees.push_back(deg);
    if (deg <= 1) L.push_back(h);
    J.push_back(std::move(h));
  }
  p.defining = Ideal(p.S, std::move(J));
  p.linear_part = Ideal(p.S, std::move(L));
  return p;
}

/// 𝒥 = ℒ.
inline bool linear_type_test(const ReesPresentation& p) { return contains(p.linear_part, p.defining); }
inline bool linear_type_test(const Ideal& I) { return linear_type_test(rees_presentation(I)); }

struct LinearTypeReport {
  unsigned r = 0;
  bool linear_type = false;
  bool implication_holds = true;  // r = 0 implies linear type
  bool independent = false;       // r = 0 iff ν(I) = d, so a zero is independent of J
};

inline LinearTypeReport lintype_from_rednum(Context& ctx, const Ideal& I) {
  if (!I.ring()->is_polynomial()) fail_hypothesis("linear type from r: needs a polynomial ring");
  if (!is_m_primary(I)) fail_hypothesis("linear type from r: ideal is not m-primary");
  LinearTypeReport rep;
  const auto red = find_minimal_reduction(ctx, I, CyclicModule::whole(I.ring()));
  rep.r = red.r;
  rep.independent = (rep.r == 0) == (minimal_generators(I).nu == I.ring()->dimension());
  rep.linear_type = linear_type_test(I);
  rep.implication_holds = rep.r != 0 || rep.linear_type;
  return rep;
}

}  // namespace blowup
