#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup/criteria.hpp"

namespace blowup {

enum class Status { certified, horizon_verified };

inline std::string to_string(Status s, unsigned horizon) {
  return s == Status::certified ? "certified" : "horizon-verified(" + std::to_string(horizon) + ")";
}

/// A bound B with I^{n+1}M : I = I^n M for every n >= B, and its justification.
struct SStarBound {
  unsigned value = 1;
  std::string reason;
};

struct RRResult {
  Ideal input;
  CyclicModule M;
  unsigned n = 1;
  Ideal closure;  // represents the closure of I^n relative to M, plus K
  unsigned stabilization_index = 0;
  Status status = Status::horizon_verified;
  unsigned horizon = 0;
  std::vector<std::string> notes;
};

struct SStarResult {
  unsigned value = 1;
  std::string method;  // "colon-chain" or "superficial-element"
  Status status = Status::horizon_verified;
  unsigned horizon = 0;
  std::vector<unsigned> failure_witnesses;  // n with I^{n+1}M : I != I^n M, so the closure of I^n is strictly larger
  std::vector<std::string> notes;
};

namespace detail {

inline void require_closure_hypotheses(const Ideal& I, const CyclicModule& M) {
  check_same_ring(I, M.defining_ideal());
  if (!is_m_primary(I)) fail_hypothesis("Ratliff-Rush closure: ideal is not m-primary");
  if (M.dimension() == 0) fail_hypothesis("Ratliff-Rush closure: I M = M fails only for modules of positive dimension");
  if (!std::any_of(I.generators().begin(), I.generators().end(),
                   [&](const Polynomial& g) { return is_m_regular(g, M); }))
    fail_hypothesis("Ratliff-Rush closure: no generator of I is M-regular");
}

inline std::size_t nu(const Ideal& I) { return minimal_generators(I).nu; }

}  // namespace detail

/// Frames above this dimension are not attempted for certificates.
inline constexpr std::uint64_t certificate_frame_limit = 20000;

/// Reduction whose first generator is used for propagation certificates and
/// as the superficial element. Monomial generators are rarely superficial, so
/// in dimension >= 2 a generic reduction is preferred while its frames stay small.
inline ReductionResult certificate_reduction(Context& ctx, const Ideal& I, const CyclicModule& M) {
  ReductionResult red = preferred_reduction(ctx, I, M);
  if (M.dimension() < 2 || !detail::combinatorial(red.J)) return red;
  if (colength(ctx.power(I, M, red.r + 2)) > certificate_frame_limit) return red;
  return find_minimal_reduction(ctx, I, M);
}

/// A proven bound past which every power is Ratliff-Rush closed relative to M.
inline std::optional<SStarBound> sstar_bound(Context& ctx, const Ideal& I, const CyclicModule& M) {
  const bool ring_cm = M.ring()->flags().cohen_macaulay;
  const std::size_t d = M.dimension();
  if (d == 0) return std::nullopt;
  if (M.is_whole() && ring_cm && detail::nu(I) == d)
    return SStarBound{1, "parameter ideal: the associated graded ring is a polynomial ring"};
  const ReductionResult red = preferred_reduction(ctx, I, M);
  if (M.is_whole() && ring_cm && red.r <= 1)
    return SStarBound{1, "reduction number at most 1: the associated graded ring is Cohen-Macaulay"};
  if (d == 1 && M.cohen_macaulay())
    return SStarBound{std::max(1u, red.r), "principal regular reduction: I^{n+1}M = x I^n M for n >= r_J"};
  if (d == 2 && M.is_whole() && ring_cm) {
    const ReductionResult cert = certificate_reduction(ctx, I, M);
    if (!check_m_sequence(cert).ok) return std::nullopt;
    const unsigned horizon = default_horizon(ctx, d, detail::nu(I), cert.r);
    if (auto ell = first_prop_level(ctx, cert, horizon))
      return SStarBound{std::max(1u, *ell), "s* <= reg <= first propagation level " + std::to_string(*ell)};
  }
  return std::nullopt;
}

/// Default horizon for closure computations, using r_J when it is cheap to get.
inline unsigned closure_horizon(Context& ctx, const Ideal& I, const CyclicModule& M) {
  return default_horizon(ctx, M.dimension(), detail::nu(I), preferred_reduction(ctx, I, M).r);
}

/// Colon-chain value (I^{n+j} M :_M I^j) as an ideal containing K, with its colength.
inline Ideal chain_term(Context& ctx, const Ideal& I, const CyclicModule& M, unsigned n, unsigned j) {
  const Ideal& big = ctx.power(I, M, n + j);
  if (detail::combinatorial(big) && detail::combinatorial(I)) return colon(big, ctx.power(I, j));
  QuotientFrame frame(big);
  Echelon A;
  for (unsigned k = 0; k < j; ++k) A = frame.colon(A, I.generators());
  return frame.to_ideal(A);
}

/// Ratliff-Rush closure of I^n relative to M: the stable value of the
/// increasing chain I^{n+j} M :_M I^j. The value is exact once n + j reaches
/// a proven s* bound; otherwise it is accepted after `confirmation` equal steps.
inline RRResult ratliff_rush(Context& ctx, const Ideal& I, const CyclicModule& M, unsigned n = 1,
                             unsigned horizon = 0) {
  detail::require_closure_hypotheses(I, M);
  if (n == 0) n = 1;
  if (horizon == 0) horizon = closure_horizon(ctx, I, M);
  RRResult res{I, M, n, ctx.power(I, M, n), 0, Status::horizon_verified, horizon, {"local-transfer: m-primary"}};

  if (auto bound = sstar_bound(ctx, I, M)) {
    const unsigned j = bound->value > n ? bound->value - n : 1;
    res.closure = chain_term(ctx, I, M, n, j);
    res.stabilization_index = j;
    res.status = Status::certified;
    res.notes.push_back(bound->reason);
    // locate the first j reaching the final value, for reporting
    const std::uint64_t target = colength(res.closure);
    for (unsigned k = 1; k < j; ++k)
      if (colength(chain_term(ctx, I, M, n, k)) == target) {
        res.stabilization_index = k;
        break;
      }
    return res;
  }

  const unsigned w = std::max(1u, ctx.options.confirmation);
  std::uint64_t last = 0;
  unsigned repeats = 0;
  for (unsigned j = 1; j <= horizon; ++j) {
    Ideal term = chain_term(ctx, I, M, n, j);
    const std::uint64_t c = colength(term);
    if (j > 1 && c == last) {
      if (++repeats >= w) {
        res.closure = std::move(term);
        return res;
      }
    } else {
      repeats = 0;
      res.stabilization_index = j;
    }
    last = c;
    res.closure = std::move(term);
  }
  fail_horizon("Ratliff-Rush chain still growing at horizon " + std::to_string(horizon));
}

/// s*(I, M) = min{m >= 1 : I^{n+1}M : I = I^n M for all n >= m}.
inline SStarResult sstar(Context& ctx, const Ideal& I, const CyclicModule& M, unsigned horizon = 0) {
  detail::require_closure_hypotheses(I, M);
  if (horizon == 0) horizon = closure_horizon(ctx, I, M);
  SStarResult res;
  res.method = "colon-chain";
  res.horizon = horizon;
  unsigned top = horizon;
  if (auto bound = sstar_bound(ctx, I, M)) {
    top = bound->value - 1;
    res.status = Status::certified;
    res.notes.push_back(bound->reason);
  }
  for (unsigned n = 1; n <= top; ++n)
    if (!ratliff_rush_condition(ctx, I, M, n)) res.failure_witnesses.push_back(n);
  res.value = res.failure_witnesses.empty() ? 1 : res.failure_witnesses.back() + 1;
  if (res.status != Status::certified) {
    const unsigned w = std::max(1u, ctx.options.confirmation);
    if (res.value + w > horizon + 1) fail_horizon("s*: no stable window below horizon " + std::to_string(horizon));
  }
  return res;
}

/// s* through an M-superficial, M-regular element x of I:
/// min{m >= 1 : I^{n+1}M : x = I^n M for all n >= m}. The first generator of
/// the certificate reduction is used; it is certified superficial from the
/// first propagation level (dimension 2) or from r_J (dimension 1).
inline SStarResult sstar_superficial(Context& ctx, const Ideal& I, const CyclicModule& M, unsigned horizon = 0) {
  detail::require_closure_hypotheses(I, M);
  if (horizon == 0) horizon = closure_horizon(ctx, I, M);
  const ReductionResult red = certificate_reduction(ctx, I, M);
  const Polynomial x = red.J.generators()[0];
  if (!is_m_regular(x, M)) fail_hypothesis("s*: the chosen superficial element is not M-regular");
  SStarResult res;
  res.method = "superficial-element";
  res.horizon = horizon;
  unsigned top = horizon;
  const bool seq = check_m_sequence(red).ok && red.J.size() == M.dimension();
  std::optional<unsigned> certified_from;
  if (seq && red.J.size() == 1) certified_from = red.r;
  if (seq && red.J.size() == 2) certified_from = first_prop_level(ctx, red, default_horizon(ctx, 2, detail::nu(I), red.r));
  if (certified_from) {
    top = *certified_from;  // I^{n+1}M : x = I^n M holds for n >= this level
    res.status = Status::certified;
    res.notes.push_back("superficial element certified from level " + std::to_string(*certified_from));
  }
  // a failure at n means I^{n+1}M : x is strictly larger than I^n M, and it lies in the closure of I^n M
  for (unsigned n = 1; n <= top; ++n)
    if (!superficial_condition(ctx, x, I, M, n + 1)) res.failure_witnesses.push_back(n);
  res.value = res.failure_witnesses.empty() ? 1 : res.failure_witnesses.back() + 1;
  if (res.status != Status::certified) {
    const unsigned w = std::max(1u, ctx.options.confirmation);
    if (res.value + w > horizon + 1) fail_horizon("s*: no stable window below horizon " + std::to_string(horizon));
  }
  return res;
}

struct SuperficialCheck {
  bool superficial = false;
  unsigned from = 0;  // least n0 with I^n M : x = I^{n-1} M on [n0, horizon]
  unsigned horizon = 0;
};

/// Window check of I^n M :_M x = I^{n-1} M for n up to the horizon.
inline SuperficialCheck check_superficial(Context& ctx, const Polynomial& x, const Ideal& I, const CyclicModule& M,
                                          unsigned horizon = 0) {
  if (!member(x, I)) fail_hypothesis("check_superficial: x is not in I");
  if (horizon == 0) horizon = default_horizon(ctx, M.dimension(), detail::nu(I));
  SuperficialCheck out{false, horizon + 1, horizon};
  for (unsigned n = horizon; n >= 1; --n) {
    if (!superficial_condition(ctx, x, I, M, n)) break;
    out.from = n;
  }
  const unsigned w = std::max(1u, ctx.options.confirmation);
  out.superficial = out.from + w <= horizon + 1;
  return out;
}

}  // namespace blowup
