#pragma once

#include <any>
#include <cstdint>
#include <string>
#include <deque>
#include <unordered_map>

#include "blowup/module.hpp"

namespace blowup {

struct Options {
  unsigned horizon = 0;        // 0: derive from the input
  std::uint64_t seed = 0;
  unsigned window = 0;         // Hilbert fit window, 0: derive
  unsigned coefficient_bound = 100;
  unsigned confirmation = 3;   // consecutive equal chain terms required
  unsigned retry_cap = 8;
};

/// Session state: options plus a power cache. Single writer; use one
/// Context per thread.
class Context {
 public:
  Context() = default;
  explicit Context(Options o) : options(o) {}

  Options options;
  /// Small integer facts shared between routes, keyed by ideal identities.
  std::unordered_map<std::string, long> memo;
  /// Larger derived objects (reductions), same keying.
  std::unordered_map<std::string, std::any> objects;

  const Ideal& power(const Ideal& I, unsigned n) {
    auto& row = powers_[I.key()];
    if (row.empty()) row.push_back(Ideal::unit(I.ring()));
    while (row.size() <= n) row.push_back(product(row.back(), I));
    return row[n];
  }

  /// I^n M, i.e. I^n + K.
  const Ideal& power(const Ideal& I, const CyclicModule& M, unsigned n) {
    if (M.is_whole()) return power(I, n);
    auto& row = module_powers_[I.key() + "#" + M.defining_ideal().key()];
    while (row.size() <= n) row.push_back(M.apply(power(I, static_cast<unsigned>(row.size()))));
    return row[n];
  }

  void clear() {
    powers_.clear();
    module_powers_.clear();
    memo.clear();
    objects.clear();
  }

 private:
  // deque: references stay valid while rows grow
  std::unordered_map<std::string, std::deque<Ideal>> powers_;
  std::unordered_map<std::string, std::deque<Ideal>> module_powers_;
};

}  // namespace blowup
