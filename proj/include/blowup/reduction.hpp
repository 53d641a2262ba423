#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "blowup/context.hpp"
#include "blowup/frame.hpp"

namespace blowup {

struct ReductionResult {
  Ideal J;
  Ideal I;
  CyclicModule M;
  unsigned r = 0;        // r_J(I, M)
  unsigned witness = 0;  // first n with J I^n M = I^{n+1} M, equal to r
  bool minimal = false;  // ν(J) = dim M
  std::vector<std::string> notes;
};

namespace detail {

inline bool combinatorial(const Ideal& a) {
  return a.backend() == Ideal::Backend::monomial || a.backend() == Ideal::Backend::semigroup;
}

inline std::vector<Polynomial> products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

}  // namespace detail

/// Horizon used when the caller gives none.
inline unsigned default_horizon(const Context& ctx, std::size_t d, std::size_t nu, std::optional<unsigned> r = {}) {
  if (ctx.options.horizon) return ctx.options.horizon;
  const auto base = static_cast<unsigned>(2 * (d + nu));
  if (r) return std::max(base, 2 * *r + 10);
  return std::max(25u, base);
}

/// J I^n M = I^{n+1} M, locally at m. Needs J ⊆ I.
///
/// Combinatorial ideals are compared directly. Otherwise Nakayama: the
/// generators of I^{n+1} must lie in the span of the products f*h
/// (f in J, h in I^n) modulo Q = m I^{n+1} + K.
inline bool reduction_holds(Context& ctx, const Ideal& J, const Ideal& I, const CyclicModule& M, unsigned n) {
  const Ideal& In = ctx.power(I, n);
  const Ideal& In1 = ctx.power(I, n + 1);
  const Ideal& K = M.defining_ideal();
  if (detail::combinatorial(J) && detail::combinatorial(I) && (K.is_zero() || detail::combinatorial(K)))
    return equals(M.apply(product(J, In)), ctx.power(I, M, n + 1));

  QuotientFrame frame(M.apply(product(Ideal::maximal(I.ring()), In1)), false);
  Echelon target;
  for (const auto& g : In1.generators()) target.insert(frame.coords(g));
  const auto rows = detail::products(J.generators(), In.generators());
  std::vector<SparseVector> coords;
  coords.reserve(rows.size());
  for (const auto& p : rows) coords.push_back(frame.coords(p));

  ModEchelon mod;
  for (const auto& c : coords) {
    mod.insert(c);
    if (mod.rank() == target.rank()) break;
  }
  if (mod.ok() && mod.rank() == target.rank()) return true;
  Echelon span;
  for (const auto& c : coords) {
    span.insert(c);
    if (span.rank() == target.rank()) return true;
  }
  return false;
}

/// r_J(I, M): the least n with J I^n M = I^{n+1} M.
inline ReductionResult reduction_number(Context& ctx, const Ideal& J, const Ideal& I, const CyclicModule& M,
                                        unsigned horizon = 0) {
  check_same_ring(J, I);
  if (J.is_zero() || !contains(I, J)) fail_hypothesis("reduction: J is not contained in I");
  if (horizon == 0) horizon = default_horizon(ctx, M.dimension(), minimal_generators(I).nu);
  for (unsigned n = 0; n <= horizon; ++n) {
    if (!reduction_holds(ctx, J, I, M, n)) continue;
    if (!reduction_holds(ctx, J, I, M, n + 1))
      throw std::logic_error("reduction equality did not persist from n to n+1");
    ReductionResult res{J, I, M, n, n, minimal_generators(J).nu == M.dimension(), {}};
    res.notes.push_back("local-transfer: m-primary");
    return res;
  }
  fail_horizon("J is not a reduction of I up to horizon " + std::to_string(horizon));
}

/// Monomial reduction by the pure powers in I, when they form one. A monomial
/// x^e lies in the integral closure of (x_i^{a_i}) iff sum e_i / a_i >= 1.
inline std::optional<Ideal> pure_power_reduction(const Ideal& I) {
  if (I.backend() != Ideal::Backend::monomial) return std::nullopt;
  const auto& gens = I.monomial_form().generators();
  const std::size_t n = I.nvars();
  std::vector<std::uint32_t> a(n, 0);
  for (const auto& m : gens)
    if (m.support_size() == 1)
      for (std::size_t i = 0; i < n; ++i)
        if (m[i]) a[i] = a[i] ? std::min(a[i], m[i]) : m[i];
  if (std::find(a.begin(), a.end(), 0u) != a.end()) return std::nullopt;
  Integer L = 1;
  for (auto v : a) mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), v);
  for (const auto& m : gens) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += Integer(m[i]) * (L / a[i]);
    if (s < L) return std::nullopt;
  }
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < n; ++i) ms.push_back(Monomial::variable(n, i, a[i]));
  return Ideal::from_monomials(I.ring(), ms);
}

/// d seeded random combinations of the minimal generators, retried up to the retry cap.
inline ReductionResult find_minimal_reduction(Context& ctx, const Ideal& I, const CyclicModule& M,
                                              std::optional<std::uint64_t> seed = {}) {
  if (!is_m_primary(I)) fail_hypothesis("find_minimal_reduction: ideal is not m-primary");
  const std::uint64_t s0 = seed.value_or(ctx.options.seed);
  const std::string key = "generic|" + I.key() + "|" + M.defining_ideal().key() + "|" + std::to_string(s0) + "|" +
                          std::to_string(ctx.options.coefficient_bound) + "|" + std::to_string(ctx.options.retry_cap);
  if (auto it = ctx.objects.find(key); it != ctx.objects.end()) return std::any_cast<ReductionResult>(it->second);
  const std::size_t d = M.dimension();
  if (d == 0) fail_hypothesis("find_minimal_reduction: module has dimension 0");
  const auto gens = minimal_generators(I).generators;
  std::mt19937_64 rng(s0);
  const unsigned bound = std::max(1u, ctx.options.coefficient_bound);
  std::string failures;
  for (unsigned attempt = 0; attempt < std::max(1u, ctx.options.retry_cap); ++attempt) {
    std::vector<Polynomial> xs;
    for (std::size_t k = 0; k < d; ++k) {
      Polynomial f(I.nvars());
      for (const auto& g : gens) f = f + Rational(static_cast<long>(1 + rng() % bound)) * g;
      xs.push_back(std::move(f));
    }
    Ideal J(I.ring(), xs);
    try {
      ReductionResult res = reduction_number(ctx, J, I, M);
      res.minimal = true;
      res.notes.push_back("generic reduction, attempt " + std::to_string(attempt + 1));
      ctx.objects.emplace(key, res);
      return res;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::horizon) throw;
      failures += " " + J.to_string();
    }
  }
  fail_horizon("no generic reduction found within the retry cap; candidates:" + failures);
}

/// The reduction used by default: pure powers for monomial ideals, the
/// smallest power of t in a semigroup ring, a generic one otherwise.
inline ReductionResult preferred_reduction(Context& ctx, const Ideal& I, const CyclicModule& M) {
  const std::string key = "preferred|" + I.key() + "|" + M.defining_ideal().key();
  if (auto it = ctx.objects.find(key); it != ctx.objects.end()) return std::any_cast<ReductionResult>(it->second);
  auto remember = [&](ReductionResult res) {
    ctx.objects.emplace(key, res);
    return res;
  };
  if (M.is_whole()) {
    if (auto J = pure_power_reduction(I)) {
      ReductionResult res = reduction_number(ctx, *J, I, M);
      res.notes.push_back("monomial reduction by pure powers");
      return remember(std::move(res));
    }
  }
  if (I.backend() == Ideal::Backend::semigroup && M.dimension() == 1) {
    const auto& e = I.semigroup_form().generators();
    Ideal J = Ideal::from_monomials(I.ring(), {Monomial{*std::min_element(e.begin(), e.end())}});
    ReductionResult res = reduction_number(ctx, J, I, M);
    res.notes.push_back("monomial reduction by the smallest power of t");
    return remember(std::move(res));
  }
  return remember(find_minimal_reduction(ctx, I, M));
}

/// x is a nonzerodivisor on M, locally at m.
inline bool is_m_regular(const Polynomial& x, const CyclicModule& M) {
  if (x.is_zero()) return false;
  const Ring& r = M.ring();
  if (x.constant_term() != 0) return true;  // a unit locally
  if (M.dimension() == 0) return false;      // x acts nilpotently on a module of finite length
  const Ideal& K = M.defining_ideal();
  if (K.is_zero() && !r->is_quotient()) return true;  // domain
  if (K.backend() == Ideal::Backend::monomial && x.is_monomial())
    return equals(colon(K, x), K);
  if (r->is_semigroup()) fail_hypothesis("regularity test for this semigroup module is not supported");
  // (K : x) / K vanishes locally iff its annihilator K : (K : x) leaves m
  const Ideal A = colon(K, x);
  const Ideal ann = colon(K, A);
  return std::any_of(ann.generators().begin(), ann.generators().end(),
                     [](const Polynomial& g) { return g.constant_term() != 0; });
}

struct SequenceCheck {
  bool ok = false;
  std::string how;
};

/// Do the generators of J form an M-sequence? For a Cohen-Macaulay M and a
/// verified reduction with ν(J) = dim M they form a system of parameters,
/// hence a regular sequence in any order. Otherwise test each step.
inline SequenceCheck check_m_sequence(const ReductionResult& red) {
  const auto& xs = red.J.generators();
  if (red.M.cohen_macaulay() && xs.size() == red.M.dimension())
    return {true, "system of parameters of a Cohen-Macaulay module"};
  CyclicModule cur = red.M;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!is_m_regular(xs[i], cur)) return {false, "generator " + std::to_string(i + 1) + " is a zerodivisor"};
    cur = cur.quotient_by({xs[i]});
  }
  return {true, "stepwise regularity check"};
}

}  // namespace blowup
