#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blowup/regularity.hpp"

namespace blowup {

struct FreeCheck {
  std::uint64_t length_I_mod_I2 = 0;  // λ(I/I²)
  std::uint64_t nu_times_colength = 0;  // ν(I)·λ(R/I)
  bool equal = false;
};

struct UlrichReport {
  Ideal ideal;
  std::optional<Ideal> J;
  unsigned r = 0;
  FreeCheck free_check;
  bool ulrich = false;
  std::string reason;  // for a negative verdict
  bool is_parameter = false;
  std::size_t nu = 0;
  std::uint64_t colength = 0;
};

namespace detail {

inline void require_ulrich_setting(const Ideal& I) {
  if (!is_m_primary(I)) fail_hypothesis("Ulrich test: ideal is not m-primary");
  if (!I.ring()->flags().cohen_macaulay) fail_hypothesis("Ulrich test: ring is not Cohen-Macaulay");
  if (I.ring()->dimension() == 0) fail_hypothesis("Ulrich test: ring has dimension 0");
}

}  // namespace detail

/// Ulrich: some parameter reduction J has r_J(I) <= 1 and I/I² is free over R/I.
/// Freeness is the length equality λ(I/I²) = ν(I)·λ(R/I) over the Artinian R/I.
inline UlrichReport is_ulrich(Context& ctx, const Ideal& I, const std::optional<Ideal>& J = std::nullopt) {
  detail::require_ulrich_setting(I);
  const CyclicModule M = CyclicModule::whole(I.ring());
  const std::size_t d = I.ring()->dimension();
  UlrichReport rep;
  rep.ideal = I;
  rep.nu = detail::nu(I);
  rep.colength = colength(I);
  rep.is_parameter = rep.nu == d;

  const std::uint64_t c2 = colength(ctx.power(I, 2));
  rep.free_check = {c2 - rep.colength, rep.nu * rep.colength, c2 - rep.colength == rep.nu * rep.colength};

  // every power of an Ulrich ideal is Ratliff-Rush closed
  const RRResult rr = ratliff_rush(ctx, I, M, 1);
  if (!equals(rr.closure, I)) {
    rep.reason = "I is not Ratliff-Rush closed";
    return rep;
  }
  ReductionResult red = J ? reduction_number(ctx, *J, I, M) : find_minimal_reduction(ctx, I, M);
  if (minimal_generators(red.J).nu != d) fail_hypothesis("Ulrich test: J is not a parameter ideal");
  rep.J = red.J;
  rep.r = red.r;
  if (rep.r > 1) rep.reason = "r_J = " + std::to_string(rep.r) + " > 1";
  else if (!rep.free_check.equal) rep.reason = "I/I^2 is not free: length " + std::to_string(rep.free_check.length_I_mod_I2) +
                                              " versus " + std::to_string(rep.free_check.nu_times_colength);
  rep.ulrich = rep.reason.empty();
  return rep;
}

struct UlrichRegularity {
  unsigned value = 0;
  bool parameter = false;
};

/// reg = 0 for parameter ideals and 1 otherwise, cross-checked against the routes.
inline UlrichRegularity ulrich_regularity(Context& ctx, const Ideal& I) {
  const UlrichReport u = is_ulrich(ctx, I);
  if (!u.ulrich) fail_hypothesis("ulrich_regularity: not an Ulrich ideal (" + u.reason + ")");
  UlrichRegularity out{u.is_parameter ? 0u : 1u, u.is_parameter};
  const RegularityReport rep = regularity(ctx, I, CyclicModule::whole(I.ring()));
  if (*rep.reg != out.value) throw std::logic_error("Ulrich regularity disagrees with the regularity routes");
  return out;
}

struct UlrichClosedForm {
  std::vector<Integer> e;  // e_0 .. e_d
  long rho = 0;
  std::function<Rational(long)> P;
};

/// P(n) = λ[(ν-d+1) C(n+d-1, d) - (ν-d) C(n+d-2, d-1)].
inline UlrichClosedForm ulrich_hilbert_closed_form(unsigned d, unsigned lambda, unsigned nu) {
  if (d < 1 || lambda < 1) fail_input("Ulrich closed form: needs d >= 1 and λ >= 1");
  if (nu < d) fail_hypothesis("Ulrich closed form: ν < d");
  UlrichClosedForm f;
  f.e.assign(d + 1, Integer(0));
  f.e[0] = Integer(lambda) * (nu - d + 1);
  f.e[1] = Integer(lambda) * (nu - d);
  f.rho = nu == d ? -static_cast<long>(d) : 1 - static_cast<long>(d);
  f.P = [e = f.e](long n) { return hilbert_polynomial_value(e, n); };
  return f;
}

/// Gorenstein case, ν = d + 1: P(n) = (λ/d!)(2n+d-2)(n+d-2)!/(n-1)! for n >= 2 - d.
inline Rational ulrich_gorenstein_form(unsigned d, unsigned lambda, long n) {
  if (d < 1) fail_input("Gorenstein closed form: needs d >= 1");
  if (n < 2 - static_cast<long>(d)) fail_hypothesis("Gorenstein closed form: n < 2 - d lies outside its range");
  Rational v = Rational(lambda) * (2 * n + static_cast<long>(d) - 2);
  for (long k = n; k <= n + static_cast<long>(d) - 2; ++k) v *= k;  // (n+d-2)!/(n-1)!
  Integer fact = 1;
  for (unsigned k = 2; k <= d; ++k) fact *= k;
  return v / Rational(fact);
}

struct GenItohReport {
  unsigned r_J = 0;
  long rho = 0;
  bool a = false;  // r_J <= 2
  bool b = false;  // H = P for all n >= 1
  bool c = false;  // H = P at n = 1, 2
  std::optional<bool> grade_gate;  // r_J <= 2: all powers closed, i.e. s* = 1
  bool constant() const { return a == b && b == c; }
};

/// The three equivalent assertions for a Ratliff-Rush closed m-primary ideal of
/// a two-dimensional Cohen-Macaulay ring, evaluated independently.
inline GenItohReport genitoh_check(Context& ctx, const Ideal& I, const std::optional<Ideal>& J = std::nullopt) {
  if (I.ring()->dimension() != 2 || !I.ring()->flags().cohen_macaulay)
    fail_hypothesis("genItoh check: needs a two-dimensional Cohen-Macaulay ring");
  const CyclicModule M = CyclicModule::whole(I.ring());
  if (!equals(ratliff_rush(ctx, I, M, 1).closure, I)) fail_hypothesis("genItoh check: I is not Ratliff-Rush closed");
  const ReductionResult red = J ? reduction_number(ctx, *J, I, M) : find_minimal_reduction(ctx, I, M);
  GenItohReport g;
  g.r_J = red.r;
  g.a = red.r <= 2;
  const HilbertSummary h = fit_hilbert_polynomial(ctx, I, M);
  g.rho = h.rho;
  g.b = h.rho <= 0;
  g.c = true;
  for (long n : {1L, 2L})
    if (Rational(static_cast<unsigned long>(hilbert_function(ctx, I, n))) != hilbert_polynomial_value(h.e, n)) g.c = false;
  if (g.a) g.grade_gate = sstar(ctx, I, M).value == 1;
  return g;
}

}  // namespace blowup
