#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include "blowup/errors.hpp"

namespace blowup {

/// Exponent vector with inline storage. Unused slots stay zero so equality
/// and hashing can look at the whole array.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  static constexpr std::size_t kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : size_(checked_size(nvars)) {}
  Monomial(std::initializer_list<Exponent> e) : size_(checked_size(e.size())) {
    std::copy(e.begin(), e.end(), e_.begin());
  }
  explicit Monomial(std::span<const Exponent> e) : size_(checked_size(e.size())) {
    std::copy(e.begin(), e.end(), e_.begin());
  }

  static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1) {
    Monomial m(nvars);
    m.e_[i] = power;
    return m;
  }

  std::size_t size() const noexcept { return size_; }
  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  Exponent& operator[](std::size_t i) noexcept { return e_[i]; }
  std::span<const Exponent> exponents() const noexcept { return {e_.data(), size_}; }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += e_[i];
    return d;
  }
  bool is_one() const noexcept {
    for (std::size_t i = 0; i < size_; ++i)
      if (e_[i] != 0) return false;
    return true;
  }
  /// this | other
  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < size_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  /// Number of variables with a positive exponent.
  std::size_t support_size() const noexcept {
    std::size_t s = 0;
    for (std::size_t i = 0; i < size_; ++i) s += e_[i] != 0;
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    same_size(a, b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  /// Exact quotient; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    same_size(a, b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  /// a / gcd(a, b), the part of a not covered by b.
  friend Monomial monomial_colon(const Monomial& a, const Monomial& b) {
    same_size(a, b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] - b.e_[i] : 0;
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    same_size(a, b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    same_size(a, b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }
  Monomial pow(Exponent k) const {
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i) r.e_[i] = e_[i] * k;
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent vectors; only for container keys.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    for (std::size_t i = 0; i < a.size_; ++i)
      if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ size_;
    for (std::size_t i = 0; i < size_; ++i) {
      h ^= e_[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  static void same_size(const Monomial& a, const Monomial& b) {
    if (a.size_ != b.size_) fail_input("monomial length mismatch");
  }

 private:
  static std::uint8_t checked_size(std::size_t n) {
    if (n > kMaxVars) fail_input("at most 16 variables are supported");
    return static_cast<std::uint8_t>(n);
  }

  std::array<Exponent, kMaxVars> e_{};
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Term orders. `elimination` compares the first `block` variables by degrevlex
/// and breaks ties by degrevlex on the rest.
struct MonomialOrder {
  enum class Kind { degrevlex, lex, elimination };
  Kind kind = Kind::degrevlex;
  std::size_t block = 0;

  static constexpr MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static constexpr MonomialOrder lex() { return {Kind::lex, 0}; }
  static constexpr MonomialOrder elimination(std::size_t block) { return {Kind::elimination, block}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                            std::size_t hi) noexcept {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  Monomial::same_size(a, b);
  const std::size_t n = a.size();
  switch (ord.kind) {
    case MonomialOrder::Kind::degrevlex:
      return detail::degrevlex_range(a, b, 0, n);
    case MonomialOrder::Kind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::elimination: {
      const std::size_t k = std::min(ord.block, n);
      if (auto c = detail::degrevlex_range(a, b, 0, k); c != 0) return c;
      return detail::degrevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

/// Strict "a comes before b" when sorting terms from largest to smallest.
struct OrderGreater {
  MonomialOrder ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return order_compare(a, b, ord) > 0; }
};

}  // namespace blowup
