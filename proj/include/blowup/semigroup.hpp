#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "blowup/errors.hpp"

namespace blowup {

/// Numerical semigroup S generated by positive integers with gcd 1. Membership
/// is tabulated up to the conductor c (every e >= c lies in S).
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<unsigned> gens) {
    if (gens.empty()) fail_input("semigroup needs at least one generator");
    unsigned g = 0;
    for (unsigned a : gens) {
      if (a == 0) fail_input("semigroup generators must be positive");
      g = std::gcd(g, a);
    }
    if (g != 1) fail_input("semigroup generators must have gcd 1");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Frobenius number < (min-1)(max-1), a safe table bound.
    const unsigned bound = (gens.front() - 1) * (gens.back() - 1) + gens.back() + 1;
    in_.assign(bound, false);
    in_[0] = true;
    for (unsigned e = 1; e < bound; ++e)
      for (unsigned a : gens)
        if (a <= e && in_[e - a]) {
          in_[e] = true;
          break;
        }
    conductor_ = bound;
    while (conductor_ > 0 && in_[conductor_ - 1]) --conductor_;
    for (unsigned a : gens) {
      bool redundant = false;
      for (unsigned b : minimal_)
        if (a > b && contains(a - b)) redundant = true;
      if (!redundant) minimal_.push_back(a);
    }
    input_ = std::move(gens);
  }

  bool contains(long e) const {
    if (e < 0) return false;
    if (static_cast<std::size_t>(e) >= in_.size()) return true;
    return in_[e];
  }
  unsigned conductor() const noexcept { return conductor_; }
  /// Minimal generating set of S (the embedding data).
  const std::vector<unsigned>& generators() const noexcept { return minimal_; }
  const std::vector<unsigned>& declared_generators() const noexcept { return input_; }
  unsigned multiplicity() const noexcept { return minimal_.front(); }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.minimal_ == b.minimal_;
  }

 private:
  std::vector<bool> in_;
  std::vector<unsigned> minimal_, input_;
  unsigned conductor_ = 0;
};

/// Monomial ideal of Q[S], stored as minimal exponent generators.
class SemigroupIdeal {
 public:
  SemigroupIdeal() = default;
  SemigroupIdeal(std::shared_ptr<const NumericalSemigroup> s, std::vector<unsigned> gens)
      : s_(std::move(s)), gens_(std::move(gens)) {
    for (unsigned e : gens_)
      if (!s_->contains(e)) fail_input("t^" + std::to_string(e) + " is not in the semigroup ring");
    minimalize();
  }
  static SemigroupIdeal unit(std::shared_ptr<const NumericalSemigroup> s) { return {std::move(s), {0}}; }
  static SemigroupIdeal maximal(std::shared_ptr<const NumericalSemigroup> s) {
    auto g = s->generators();
    return {std::move(s), g};
  }

  const std::vector<unsigned>& generators() const noexcept { return gens_; }
  const std::shared_ptr<const NumericalSemigroup>& semigroup() const noexcept { return s_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return !gens_.empty() && gens_.front() == 0; }
  bool is_m_primary() const noexcept { return !is_zero() && !is_unit(); }

  bool contains(long e) const {
    if (!s_->contains(e)) return false;
    for (unsigned g : gens_)
      if (static_cast<long>(g) <= e && s_->contains(e - g)) return true;
    return false;
  }
  bool contains(const SemigroupIdeal& j) const {
    return std::all_of(j.gens_.begin(), j.gens_.end(), [&](unsigned e) { return contains(e); });
  }

  /// Every exponent at or above this lies in the ideal (m-primary case).
  unsigned saturation_bound() const { return gens_.front() + s_->conductor(); }

  /// #{ s in S : t^s not in I }
  std::uint64_t colength() const {
    if (is_unit()) return 0;
    if (is_zero()) fail_hypothesis("colength of the zero ideal");
    std::uint64_t n = 0;
    for (unsigned e = 0; e < saturation_bound(); ++e) n += s_->contains(e) && !contains(e);
    return n;
  }
  std::vector<unsigned> standard_exponents() const {
    std::vector<unsigned> out;
    if (is_zero()) fail_hypothesis("standard monomials of the zero ideal");
    for (unsigned e = 0; e < saturation_bound(); ++e)
      if (s_->contains(e) && !contains(e)) out.push_back(e);
    return out;
  }

  friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) { return a.gens_ == b.gens_; }

  friend SemigroupIdeal operator+(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    auto g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return {a.s_, std::move(g)};
  }
  friend SemigroupIdeal operator*(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    std::vector<unsigned> g;
    for (unsigned x : a.gens_)
      for (unsigned y : b.gens_) g.push_back(x + y);
    return {a.s_, std::move(g)};
  }
  SemigroupIdeal pow(unsigned n) const {
    SemigroupIdeal r = unit(s_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// a : b = { s in S : s + b subset a }
  friend SemigroupIdeal colon(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    if (b.is_zero()) return unit(a.s_);
    if (a.is_zero()) return a;
    auto member = [&](unsigned s) {
      return a.s_->contains(s) &&
             std::all_of(b.gens_.begin(), b.gens_.end(), [&](unsigned e) { return a.contains(s + e); });
    };
    return from_predicate(a.s_, a.saturation_bound(), member);
  }
  friend SemigroupIdeal intersect(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    if (a.is_zero() || b.is_zero()) return {a.s_, {}};
    const unsigned bound = std::max(a.saturation_bound(), b.saturation_bound());
    return from_predicate(a.s_, bound, [&](unsigned s) { return a.contains(s) && b.contains(s); });
  }

 private:
  // Builds the ideal whose members are the s with pred(s); pred must hold for all s >= bound in S.
  template <class Pred>
  static SemigroupIdeal from_predicate(const std::shared_ptr<const NumericalSemigroup>& s, unsigned bound,
                                       Pred pred) {
    const unsigned top = bound + s->generators().back() + 1;
    std::vector<unsigned> g;
    for (unsigned e = 0; e < top; ++e) {
      if (!(e >= bound ? s->contains(e) : pred(e))) continue;
      bool minimal = true;
      for (unsigned a : s->generators())
        if (a <= e && (e - a >= bound ? s->contains(e - a) : pred(e - a))) minimal = false;
      if (minimal) g.push_back(e);
    }
    return {s, std::move(g)};
  }

  void minimalize() {
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    std::vector<unsigned> out;
    for (unsigned e : gens_) {
      bool redundant = false;
      for (unsigned g : out)
        if (s_->contains(static_cast<long>(e) - g)) redundant = true;
      if (!redundant) out.push_back(e);
    }
    gens_ = std::move(out);
  }

  std::shared_ptr<const NumericalSemigroup> s_;
  std::vector<unsigned> gens_;
};

}  // namespace blowup
