#pragma once

#include <optional>
#include <vector>

#include "blowup/reduction.hpp"

namespace blowup {

/// big : (by) == small, given small ⊆ big : (by). `big` must be m-primary
/// unless everything is combinatorial.
inline bool colon_equals(const Ideal& big, const std::vector<Polynomial>& by, const Ideal& small) {
  const Ideal B(big.ring(), by);
  if (detail::combinatorial(big) && detail::combinatorial(B) && detail::combinatorial(small))
    return equals(colon(big, B), small);
  const std::uint64_t hi = colength(big), lo = colength(small);
  if (lo > hi) throw std::logic_error("colon_equals: the smaller ideal is not contained in the larger");
  QuotientFrame frame(big);
  const auto floor = static_cast<std::size_t>(hi - lo);
  return frame.kernel_dimension(by, floor) == floor;
}

namespace detail {

inline void require_sequence_length(const ReductionResult& red) {
  if (red.J.size() > 2)
    fail_hypothesis("colon conditions are implemented for reductions with at most two generators");
}

}  // namespace detail

/// Propagation condition at level ell for J = (x1[, x2]) an M-sequence:
/// (x1) M ∩ I^{ell+1} M = x1 I^ell M, equivalently (I^{ell+1} + K) : x1 = I^ell + K.
/// For one generator it reduces to x1 being M-regular.
inline bool prop_condition(Context& ctx, const ReductionResult& red, unsigned ell) {
  detail::require_sequence_length(red);
  if (red.J.size() == 1) return true;
  return colon_equals(ctx.power(red.I, red.M, ell + 1), {red.J.generators()[0]}, ctx.power(red.I, red.M, ell));
}

/// Filter-regular colon equalities at n for J = (x1[, x2]) an M-sequence:
/// [x1 I^n M :_M x2] ∩ I^n M = x1 I^{n-1} M, equivalently (I^n + K) : J = I^{n-1} + K.
inline bool displayed_condition(Context& ctx, const ReductionResult& red, unsigned n) {
  detail::require_sequence_length(red);
  if (red.J.size() == 1 || n == 0) return true;
  return colon_equals(ctx.power(red.I, red.M, n), red.J.generators(), ctx.power(red.I, red.M, n - 1));
}

/// The least ell >= r_J at which the propagation condition holds, or nothing
/// up to the horizon. Memoized per context.
inline std::optional<unsigned> first_prop_level(Context& ctx, const ReductionResult& red, unsigned horizon) {
  const std::string key = "prop|" + red.I.key() + "|" + red.M.defining_ideal().key() + "|" + red.J.key();
  if (auto it = ctx.memo.find(key); it != ctx.memo.end() && (it->second >= 0 || -it->second >= horizon))
    return it->second >= 0 ? std::optional<unsigned>(static_cast<unsigned>(it->second)) : std::nullopt;
  for (unsigned ell = red.r; ell <= horizon; ++ell)
    if (prop_condition(ctx, red, ell)) {
      ctx.memo[key] = ell;
      return ell;
    }
  ctx.memo[key] = -static_cast<long>(horizon);
  return std::nullopt;
}

/// I^n M : x == I^{n-1} M.
inline bool superficial_condition(Context& ctx, const Polynomial& x, const Ideal& I, const CyclicModule& M,
                                  unsigned n) {
  return colon_equals(ctx.power(I, M, n), {x}, ctx.power(I, M, n - 1));
}

/// I^{n+1} M : I == I^n M.
inline bool ratliff_rush_condition(Context& ctx, const Ideal& I, const CyclicModule& M, unsigned n) {
  return colon_equals(ctx.power(I, M, n + 1), I.generators(), ctx.power(I, M, n));
}

}  // namespace blowup
