#pragma once

#include <optional>
#include <string>

#include "blowup/ideal_ops.hpp"

namespace blowup {

/// M = R/K. K = 0 encodes M = R. I^n M is represented by I^n + K and
/// I^n M :_M J by (I^n + K) : J.
class CyclicModule {
 public:
  /// `cm` overrides the automatic Cohen-Macaulay detection.
  explicit CyclicModule(Ideal K, std::optional<bool> cm = std::nullopt) : K_(std::move(K)) {
    const Ring& r = K_.ring();
    if (K_.is_zero()) {
      dim_ = r->dimension();
    } else if (r->is_semigroup()) {
      dim_ = 0;  // a nonzero ideal of a one-dimensional domain
    } else {
      if (K_.basis().is_unit()) fail_input("cyclic module over the unit ideal is zero");
      dim_ = K_.basis().krull_dimension();
    }
    if (cm) {
      cm_ = *cm;
      asserted_ = true;
    } else if (K_.is_zero()) {
      cm_ = r->flags().cohen_macaulay;
    } else if (dim_ == 0) {
      cm_ = true;
    } else {
      // complete intersection inside a Cohen-Macaulay ring
      cm_ = r->flags().cohen_macaulay && minimal_generators(K_).nu + dim_ == r->dimension();
    }
  }

  static CyclicModule whole(const Ring& r) { return CyclicModule(Ideal::zero(r)); }

  const Ring& ring() const noexcept { return K_.ring(); }
  const Ideal& defining_ideal() const noexcept { return K_; }
  bool is_whole() const noexcept { return K_.is_zero(); }
  bool cohen_macaulay() const noexcept { return cm_; }
  bool cm_asserted() const noexcept { return asserted_; }
  std::size_t dimension() const noexcept { return dim_; }

  /// The ideal A + K representing A·M.
  Ideal apply(const Ideal& A) const { return K_.is_zero() ? A : A + K_; }

  /// M / (xs) M.
  CyclicModule quotient_by(const std::vector<Polynomial>& xs) const {
    std::vector<Polynomial> g = K_.generators();
    g.insert(g.end(), xs.begin(), xs.end());
    return CyclicModule(Ideal(ring(), std::move(g)));
  }

  std::string describe() const { return is_whole() ? "R" : "R/" + K_.to_string(); }

 private:
  Ideal K_;
  std::size_t dim_ = 0;
  bool cm_ = false;
  bool asserted_ = false;
};

}  // namespace blowup
