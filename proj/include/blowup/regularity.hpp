#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/hilbert.hpp"

namespace blowup {

/// Value of one characterization of reg R(I, M) = reg G(I, M).
struct RouteValue {
  unsigned value = 0;
  Status status = Status::certified;
  unsigned horizon = 0;
  std::vector<std::string> notes;
};

struct RouteOutcome {
  std::string name;
  bool applicable = false;
  RouteValue result;
  std::string reason;  // why the route was skipped
};

struct RegularityReport {
  Ideal ideal;
  CyclicModule M;
  std::optional<unsigned> reg;
  std::vector<RouteOutcome> routes;
  bool consistent = true;
  unsigned r_J = 0;
  std::string reduction;  // the reduction used by the routes
};

namespace detail {

inline Status weakest(Status a, Status b) {
  return a == Status::certified && b == Status::certified ? Status::certified : Status::horizon_verified;
}

inline void require_dim2_ring(const Ideal& I, const char* route) {
  const Ring& r = I.ring();
  if (r->dimension() != 2) fail_hypothesis(std::string(route) + ": ring dimension is not 2");
  if (!r->flags().cohen_macaulay && !r->flags().buchsbaum)
    fail_hypothesis(std::string(route) + ": ring is neither Cohen-Macaulay nor asserted Buchsbaum");
}

}  // namespace detail

/// reg R(I) = max{r_J(I), s*(I)} for a non-parameter m-primary ideal of a
/// two-dimensional Cohen-Macaulay (or asserted Buchsbaum) ring.
inline RouteValue reg_via_max_formula(Context& ctx, const ReductionResult& red) {
  const Ideal& I = red.I;
  detail::require_dim2_ring(I, "max formula");
  if (!red.M.is_whole()) fail_hypothesis("max formula: stated for M = R only");
  if (!is_m_primary(I)) fail_hypothesis("max formula: ideal is not m-primary");
  if (detail::nu(I) <= 2) fail_hypothesis("max formula: I is a parameter ideal");
  if (!red.minimal) fail_hypothesis("max formula: J is not a minimal reduction");
  const SStarResult s = sstar(ctx, I, red.M);
  RouteValue out{std::max(red.r, s.value), s.status, s.horizon, {}};
  out.notes.push_back("r_J = " + std::to_string(red.r) + ", s* = " + std::to_string(s.value));
  return out;
}

/// reg R(I, M) = r_J(I, M) when r = 0, or when the r-th power is Ratliff-Rush
/// closed over M_j = M / (x_1..x_{j-1}) M for j < s, J generated by an
/// M-superficial sequence.
inline RouteValue reg_via_mafigene(Context& ctx, const ReductionResult& red) {
  const CyclicModule& M = red.M;
  const std::size_t s = M.dimension();
  if (!M.cohen_macaulay()) fail_hypothesis("r_J route: module is not Cohen-Macaulay");
  if (s == 0) fail_hypothesis("r_J route: module has dimension 0");
  if (red.J.size() != s) fail_hypothesis("r_J route: J is not generated by dim M elements");
  if (red.r == 0) return {0, Status::certified, 0, {"r_J = 0"}};
  if (s == 1) {
    if (!is_m_regular(red.J.generators()[0], M)) fail_hypothesis("r_J route: the reduction is a zerodivisor");
    return {red.r, Status::certified, 0, {"dimension one: no Ratliff-Rush hypothesis"}};
  }
  if (s > 2) fail_hypothesis("r_J route: superficial sequences are certified only for dim M <= 2");
  // x1 is superficial from the first propagation level on; x2 generates a
  // reduction of I on the one-dimensional M_2 and is regular there.
  if (!check_m_sequence(red).ok) fail_hypothesis("r_J route: J is not an M-sequence");
  const RRResult rr = ratliff_rush(ctx, red.I, M, red.r);
  if (!equals(rr.closure, ctx.power(red.I, M, red.r)))
    fail_hypothesis("r_J route: the closure of I^" + std::to_string(red.r) + " over M_1 differs from I^" +
                    std::to_string(red.r) + " M_1 (j = 1)");
  const unsigned h = default_horizon(ctx, s, detail::nu(red.I), red.r);
  if (!first_prop_level(ctx, red, h))
    fail_hypothesis("r_J route: superficial sequence not certified up to " + std::to_string(h) + " (j = 1)");
  RouteValue out{red.r, rr.status, rr.horizon, {}};
  out.notes.push_back("closure of I^r M equals I^r M (" + to_string(rr.status, rr.horizon) + ")");
  return out;
}

/// reg = min{l >= r_J : displayed colon equalities hold for all n >= l + 1},
/// with the propagation level certifying every n past it.
inline RouteValue reg_via_colon_criterion(Context& ctx, const ReductionResult& red, unsigned horizon = 0) {
  const auto seq = check_m_sequence(red);
  if (!seq.ok) fail_hypothesis("colon criterion: " + seq.how);
  detail::require_sequence_length(red);
  if (red.J.size() == 1) return {red.r, Status::certified, 0, {"one generator: the conditions reduce to regularity"}};
  if (horizon == 0) horizon = default_horizon(ctx, red.M.dimension(), detail::nu(red.I), red.r);
  RouteValue out;
  out.horizon = horizon;
  unsigned top;
  if (auto ell = first_prop_level(ctx, red, horizon)) {
    top = *ell;
    out.status = Status::certified;
    out.notes.push_back("propagation condition at " + std::to_string(*ell));
  } else {
    // every displayed equality on [l + 1, horizon] checked, nothing beyond
    top = horizon;
    out.status = Status::horizon_verified;
  }
  unsigned ell = top;
  while (ell > red.r && displayed_condition(ctx, red, ell)) --ell;
  if (out.status != Status::certified) {
    const unsigned w = std::max(1u, ctx.options.confirmation);
    if (ell + w > horizon) fail_horizon("colon criterion: no certificate and no stable window below " +
                                        std::to_string(horizon));
  }
  out.value = ell;
  return out;
}

/// reg R(I) = max{r_J(I), ρ(I) + 1} when grade G(I)_+ = 0, i.e. s* > 1.
inline RouteValue reg_via_postulation(Context& ctx, const ReductionResult& red) {
  const Ideal& I = red.I;
  if (I.ring()->dimension() != 2 || !I.ring()->flags().cohen_macaulay)
    fail_hypothesis("postulation route: needs a two-dimensional Cohen-Macaulay ring");
  if (!red.M.is_whole()) fail_hypothesis("postulation route: stated for M = R only");
  const SStarResult s = sstar(ctx, I, red.M);
  if (s.value <= 1) fail_hypothesis("postulation route: s* = 1, so grade G(I)_+ >= 1");
  const HilbertSummary h = fit_hilbert_polynomial(ctx, I, red.M);
  const long v = std::max<long>(red.r, h.rho + 1);
  RouteValue out{static_cast<unsigned>(v), detail::weakest(s.status, h.status), std::max(s.horizon, h.window), {}};
  out.notes.push_back("ρ = " + std::to_string(h.rho) + ", s* = " + std::to_string(s.value));
  return out;
}

/// Every applicable route, with agreement asserted. A disagreement is
/// reported, never resolved.
inline RegularityReport regularity(Context& ctx, const Ideal& I, const CyclicModule& M) {
  check_same_ring(I, M.defining_ideal());
  if (!is_m_primary(I)) fail_hypothesis("regularity: ideal is not m-primary");
  RegularityReport rep{I, M, std::nullopt, {}, true, 0, ""};
  const ReductionResult red = certificate_reduction(ctx, I, M);
  rep.r_J = red.r;
  rep.reduction = red.J.to_string();

  auto attempt = [&](const std::string& name, auto&& fn) {
    RouteOutcome o{name, false, {}, ""};
    try {
      o.result = fn();
      o.applicable = true;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::input) throw;
      o.reason = e.what();
    }
    rep.routes.push_back(std::move(o));
  };
  attempt("max-formula", [&] { return reg_via_max_formula(ctx, red); });
  attempt("mafigene", [&] { return reg_via_mafigene(ctx, red); });
  attempt("colon-criterion", [&] { return reg_via_colon_criterion(ctx, red); });
  attempt("postulation", [&] { return reg_via_postulation(ctx, red); });

  for (const auto& o : rep.routes) {
    if (!o.applicable) continue;
    if (!rep.reg) rep.reg = o.result.value;
    else if (*rep.reg != o.result.value) rep.consistent = false;
    if (o.result.value < red.r) throw std::logic_error("route " + o.name + " reports reg below r_J");
  }
  if (!rep.reg) fail_hypothesis("regularity: no route applies to " + I.to_string() + " over " + M.describe());
  if (!rep.consistent) {
    std::ostringstream msg;
    msg << "regularity routes disagree for " << I.to_string() << " with J = " << rep.reduction << ":";
    for (const auto& o : rep.routes)
      if (o.applicable) msg << " " << o.name << "=" << o.result.value;
    fail_hypothesis(msg.str());
  }
  return rep;
}

/// Best status among agreeing routes.
inline Status report_status(const RegularityReport& rep) {
  for (const auto& o : rep.routes)
    if (o.applicable && o.result.status == Status::certified) return Status::certified;
  return Status::horizon_verified;
}

inline unsigned report_horizon(const RegularityReport& rep) {
  unsigned h = 0;
  for (const auto& o : rep.routes)
    if (o.applicable) h = std::max(h, o.result.horizon);
  return h;
}

struct RTTProbe {
  unsigned r_J = 0;
  unsigned sstar = 0;
  unsigned reg_max = 0;    // max{r_J, s*}
  unsigned min_colon = 0;  // min{n >= r_J : I^{m+1} : I = I^m for all m >= n}
  bool sstar_at_most_r_plus_1 = false;
  bool cm_and_rth_power_closed = false;
  bool values_agree = false;
  std::string evidence;  // for s* <= r_J + 1
  Status status = Status::horizon_verified;
  unsigned horizon = 0;
};

/// Evidence harness for the min-colon formula in a two-dimensional ring.
inline RTTProbe rtt_probe(Context& ctx, const ReductionResult& red, unsigned horizon = 0) {
  const Ideal& I = red.I;
  detail::require_dim2_ring(I, "rtt probe");
  if (!red.M.is_whole()) fail_hypothesis("rtt probe: stated for M = R only");
  if (detail::nu(I) <= 2) fail_hypothesis("rtt probe: I is a parameter ideal");
  RTTProbe p;
  const SStarResult s = sstar(ctx, I, red.M, horizon);
  p.r_J = red.r;
  p.sstar = s.value;
  p.status = s.status;
  p.horizon = s.horizon;
  p.reg_max = std::max(red.r, s.value);
  // failures of the colon condition at m >= r_J push the minimum up
  p.min_colon = red.r;
  for (unsigned m : s.failure_witnesses)
    if (m >= p.min_colon) p.min_colon = m + 1;
  p.values_agree = p.min_colon == p.reg_max;
  p.sstar_at_most_r_plus_1 = s.value <= red.r + 1;
  if (I.ring()->flags().cohen_macaulay && red.r >= 1) {
    const RRResult rr = ratliff_rush(ctx, I, red.M, red.r);
    p.cm_and_rth_power_closed = equals(rr.closure, ctx.power(I, red.r));
  }
  if (s.value == red.r + 1) p.evidence = "equality attained";
  else if (s.value <= red.r) p.evidence = "s* <= r_J";
  else p.evidence = "counterexample candidate: s* > r_J + 1";
  return p;
}

/// r_J across `samples` generic reductions with consecutive seeds.
inline std::vector<unsigned> independence_probe(Context& ctx, const Ideal& I, const CyclicModule& M,
                                                unsigned samples = 5) {
  std::vector<unsigned> rs;
  for (unsigned k = 0; k < samples; ++k) rs.push_back(find_minimal_reduction(ctx, I, M, ctx.options.seed + k).r);
  return rs;
}

struct SectionComparison {
  unsigned r_M = 0;
  unsigned r_section = 0;
  std::optional<unsigned> reg_M;
  unsigned reg_section = 0;
  bool agree = false;
  std::string label = "conclusion-level evidence; the initial-form hypothesis is not checked";
};

/// Compare r and reg on M and on M / xM for a regular x outside I.
inline SectionComparison section_compare(Context& ctx, const Ideal& I, const Polynomial& x, const CyclicModule& M) {
  if (M.dimension() != 2 || !M.cohen_macaulay())
    fail_hypothesis("section comparison: needs a two-dimensional Cohen-Macaulay module");
  if (member(x, I)) fail_hypothesis("section comparison: x lies in I");
  if (!is_m_regular(x, M)) fail_hypothesis("section comparison: x is a zerodivisor on M");
  SectionComparison out;
  out.r_M = find_minimal_reduction(ctx, I, M).r;
  try {
    out.reg_M = regularity(ctx, I, M).reg;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::input) throw;
  }
  const CyclicModule section = M.quotient_by({x});
  const ReductionResult red = find_minimal_reduction(ctx, I, section);
  out.r_section = red.r;
  out.reg_section = reg_via_mafigene(ctx, red).value;
  out.agree = out.r_M == out.r_section && out.reg_section == out.r_section && (!out.reg_M || *out.reg_M == out.r_M);
  return out;
}

}  // namespace blowup
