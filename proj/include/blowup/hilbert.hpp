#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blowup/closure.hpp"

namespace blowup {

struct HilbertSummary {
  Ideal ideal;
  CyclicModule M;
  std::size_t d = 0;
  std::map<long, std::uint64_t> values;  // n -> λ(M / I^n M) on 1..window
  std::vector<Integer> e;                // e_0 .. e_d
  long rho = 0;
  Status status = Status::horizon_verified;
  unsigned window = 0;
  unsigned verified_points = 0;  // window points below the fit region that agree with P
  std::vector<std::string> notes;
};

/// (-1)^i e_i C(n+d-i-1, d-i) summed over i, at any integer n.
inline Rational hilbert_polynomial_value(const std::vector<Integer>& e, long n) {
  const std::size_t d = e.size() - 1;
  Rational sum = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    const Rational term = Rational(e[i]) * binomial_poly(n + static_cast<long>(d - i) - 1, static_cast<unsigned>(d - i));
    sum += (i % 2) ? -term : term;
  }
  return sum;
}

/// H(n) = λ(M / I^n M), zero for n <= 0.
inline std::uint64_t hilbert_function(Context& ctx, const Ideal& I, long n,
                                      const std::optional<CyclicModule>& M = std::nullopt) {
  if (!is_m_primary(I)) fail_hypothesis("Hilbert-Samuel function: ideal is not m-primary");
  if (n <= 0) return 0;
  const CyclicModule mod = M.value_or(CyclicModule::whole(I.ring()));
  return colength(ctx.power(I, mod, static_cast<unsigned>(n)));
}

inline unsigned default_window(Context& ctx, const Ideal& I, const CyclicModule& M) {
  if (ctx.options.window) return ctx.options.window;
  const auto d = static_cast<unsigned>(M.dimension());
  return std::max(d + 3, 2 * preferred_reduction(ctx, I, M).r + 4);
}

namespace detail {

/// Solve a small square system over Q; the matrix is invertible by construction.
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("singular binomial system");
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const Rational f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) b[c] /= A[c][c];
  return b;
}

/// Largest n <= top with H(n) != P(n). H vanishes for n <= 0 and P has at
/// most d roots, so the scan ends within d + 1 steps below zero.
inline long largest_disagreement(const std::map<long, std::uint64_t>& H, const std::vector<Integer>& e, long top) {
  for (long n = top;; --n) {
    const Rational h = n <= 0 ? Rational(0) : Rational(static_cast<unsigned long>(H.at(n)));
    if (h != hilbert_polynomial_value(e, n)) return n;
  }
}

}  // namespace detail

/// Fit P_I on the top d+1 window points in the binomial basis and locate ρ.
/// Two further agreeing points below the fit region are required.
inline HilbertSummary fit_hilbert_polynomial(Context& ctx, const Ideal& I, const CyclicModule& M,
                                             unsigned window = 0) {
  check_same_ring(I, M.defining_ideal());
  if (!is_m_primary(I)) fail_hypothesis("Hilbert fit: ideal is not m-primary");
  const std::size_t d = M.dimension();
  if (d == 0) fail_hypothesis("Hilbert fit: module has dimension 0");
  if (window == 0) window = default_window(ctx, I, M);
  if (window < d + 3) fail_input("Hilbert fit: window must be at least d + 3 = " + std::to_string(d + 3));

  HilbertSummary s{I, M, d, {}, {}, 0, Status::horizon_verified, window, 0, {}};
  for (long n = 1; n <= static_cast<long>(window); ++n) s.values[n] = hilbert_function(ctx, I, n, M);

  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (long n = static_cast<long>(window - d); n <= static_cast<long>(window); ++n) {
    std::vector<Rational> row;
    for (std::size_t i = 0; i <= d; ++i) {
      const Rational c = binomial_poly(n + static_cast<long>(d - i) - 1, static_cast<unsigned>(d - i));
      row.push_back(i % 2 ? -c : c);
    }
    A.push_back(std::move(row));
    b.emplace_back(static_cast<unsigned long>(s.values[n]));
  }
  for (const auto& q : detail::solve(std::move(A), std::move(b))) {
    if (!is_integer(q)) fail_horizon("Hilbert fit: non-integer coefficient " + to_string(q) + "; enlarge the window");
    s.e.push_back(q.get_num());
  }
  if (s.e[0] <= 0) fail_horizon("Hilbert fit: non-positive multiplicity; enlarge the window");

  s.rho = detail::largest_disagreement(s.values, s.e, static_cast<long>(window));
  const long fit_floor = static_cast<long>(window - d);
  s.verified_points = s.rho < fit_floor ? static_cast<unsigned>(fit_floor - std::max(s.rho, 0L) - 1) : 0;
  if (s.rho >= fit_floor || s.verified_points < 2)
    fail_horizon("Hilbert fit: fewer than two agreeing points below the fit region at window " +
                 std::to_string(window) + "; enlarge the window");

  // Exact postulation numbers: r_J = ρ + d when grade G_+ >= d - 1 (vacuous for d = 1).
  std::optional<long> exact;
  const ReductionResult red = preferred_reduction(ctx, I, M);
  if (d == 1 && M.cohen_macaulay()) {
    exact = static_cast<long>(red.r) - 1;
    s.notes.push_back("dimension one: ρ = r_J - 1");
  } else if (d == 2 && M.is_whole() && M.cohen_macaulay()) {
    if (auto bound = sstar_bound(ctx, I, M); bound && sstar(ctx, I, M).value == 1) {
      exact = static_cast<long>(red.r) - 2;
      s.notes.push_back("all powers Ratliff-Rush closed: ρ = r_J - 2");
    }
  }
  if (exact) {
    if (*exact < fit_floor && *exact != s.rho)
      throw std::logic_error("postulation number from the fit disagrees with r_J - d");
    if (*exact == s.rho) s.status = Status::certified;
  }
  return s;
}

inline HilbertSummary fit_hilbert_polynomial(Context& ctx, const Ideal& I, unsigned window = 0) {
  return fit_hilbert_polynomial(ctx, I, CyclicModule::whole(I.ring()), window);
}

struct Postulation {
  long rho = 0;
  Status status = Status::horizon_verified;
  unsigned window = 0;
};

inline Postulation postulation_number(Context& ctx, const Ideal& I, const CyclicModule& M, unsigned window = 0) {
  const HilbertSummary s = fit_hilbert_polynomial(ctx, I, M, window);
  return {s.rho, s.status, s.window};
}

struct MarleyReport {
  unsigned r = 0;
  long rho = 0;
  std::size_t d = 0;
  bool holds = false;
  std::string grade_reason;
};

/// r(I) = ρ(I) + d under grade G(I)_+ >= d - 1.
inline MarleyReport marley_check(Context& ctx, const Ideal& I, const CyclicModule& M) {
  const std::size_t d = M.dimension();
  MarleyReport out;
  out.d = d;
  if (d == 1) {
    out.grade_reason = "dimension one: no grade condition";
  } else if (d == 2) {
    const SStarResult s = sstar(ctx, I, M);
    if (s.value != 1) fail_hypothesis("Marley relation: s* = " + std::to_string(s.value) + ", so grade G(I)_+ = 0");
    out.grade_reason = "s* = 1 (" + to_string(s.status, s.horizon) + "), so grade G(I)_+ >= 1";
  } else {
    fail_hypothesis("Marley relation: grade G(I)_+ >= d - 1 cannot be verified in dimension " + std::to_string(d));
  }
  if (!M.cohen_macaulay()) fail_hypothesis("Marley relation: module is not Cohen-Macaulay");
  out.r = preferred_reduction(ctx, I, M).r;
  out.rho = fit_hilbert_polynomial(ctx, I, M).rho;
  out.holds = static_cast<long>(out.r) == out.rho + static_cast<long>(d);
  return out;
}

}  // namespace blowup
