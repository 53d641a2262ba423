#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "blowup/monomial.hpp"

namespace blowup {

/// Monomial ideal of Q[x_1..x_n] held as its minimal generators (sorted).
/// Two variables get linear-time staircase routines; more variables use
/// slicing along the last variable.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.size() != nvars_) fail_input("monomial generator has the wrong number of variables");
    minimalize();
  }

  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }
  static MonomialIdeal maximal(std::size_t nvars) {
    std::vector<Monomial> g;
    for (std::size_t i = 0; i < nvars; ++i) g.push_back(Monomial::variable(nvars, i));
    return MonomialIdeal(nvars, std::move(g));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const {
    if (nvars_ == 2) {
      // gens sorted by x ascending, y descending: the last gen with x <= m.x has the smallest y.
      auto it = std::upper_bound(gens_.begin(), gens_.end(), m[0],
                                 [](std::uint32_t a, const Monomial& g) { return a < g[0]; });
      return it != gens_.begin() && std::prev(it)->operator[](1) <= m[1];
    }
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }
  bool contains(const MonomialIdeal& J) const {
    for (const auto& g : J.gens_)
      if (!contains(g)) return false;
    return true;
  }

  std::optional<std::uint32_t> pure_power(std::size_t i) const {
    for (const auto& g : gens_)
      if (g.support_size() <= 1 && g[i] > 0) return g[i];
    return std::nullopt;
  }

  /// Proper and containing a power of every variable.
  bool is_m_primary() const {
    if (is_unit() || is_zero()) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (!pure_power(i)) return false;
    return true;
  }

  std::uint64_t colength() const {
    if (is_unit()) return 0;
    if (!is_m_primary()) fail_hypothesis("colength of an ideal that is not m-primary");
    return colength_rec(gens_, nvars_);
  }

  /// Largest degree of a standard monomial, -1 for the unit ideal.
  long long max_standard_degree() const {
    if (is_unit()) return -1;
    if (!is_m_primary()) fail_hypothesis("staircase bound of an ideal that is not m-primary");
    return maxdeg_rec(gens_, nvars_);
  }

  std::vector<Monomial> standard_monomials() const {
    std::vector<Monomial> out;
    if (is_unit()) return out;
    if (!is_m_primary()) fail_hypothesis("standard monomials of an ideal that is not m-primary");
    Monomial prefix(nvars_);
    enumerate_rec(gens_, nvars_, prefix, out);
    return out;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

  friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
    check(a, b);
    std::vector<Monomial> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return MonomialIdeal(a.nvars_, std::move(g));
  }
  friend MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
    check(a, b);
    std::vector<Monomial> g;
    g.reserve(a.gens_.size() * b.gens_.size());
    for (const auto& x : a.gens_)
      for (const auto& y : b.gens_) g.push_back(x * y);
    return MonomialIdeal(a.nvars_, std::move(g));
  }
  MonomialIdeal pow(unsigned n) const {
    MonomialIdeal r = unit(nvars_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }
  MonomialIdeal times(const Monomial& m) const {
    std::vector<Monomial> g;
    g.reserve(gens_.size());
    for (const auto& x : gens_) g.push_back(x * m);
    return MonomialIdeal(nvars_, std::move(g));
  }

  friend MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
    std::vector<Monomial> g;
    g.reserve(a.gens_.size());
    for (const auto& x : a.gens_) g.push_back(monomial_colon(x, m));
    return MonomialIdeal(a.nvars_, std::move(g));
  }
  /// a : b. The zero ideal as divisor gives the unit ideal.
  friend MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
    check(a, b);
    MonomialIdeal r = unit(a.nvars_);
    bool first = true;
    for (const auto& m : b.gens_) {
      MonomialIdeal c = colon(a, m);
      r = first ? std::move(c) : intersect(r, c);
      first = false;
    }
    return r;
  }
  friend MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check(a, b);
    if (a.is_zero() || b.is_zero()) return MonomialIdeal(a.nvars_);
    if (a.nvars_ == 2) return intersect2(a, b);
    std::vector<Monomial> g;
    g.reserve(a.gens_.size() * b.gens_.size());
    for (const auto& x : a.gens_)
      for (const auto& y : b.gens_) g.push_back(lcm(x, y));
    return MonomialIdeal(a.nvars_, std::move(g));
  }

 private:
  static void check(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars_ != b.nvars_) fail_input("monomial ideals live in different rings");
  }

  static std::vector<Monomial> minimal(std::vector<Monomial> g, std::size_t n) {
    if (g.empty()) return g;
    if (n == 2) {
      std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
      });
      std::vector<Monomial> out;
      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      for (const auto& m : g)
        if (m[1] < best) {
          best = m[1];
          out.push_back(m);
        }
      return out;
    }
    std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
      auto da = a.degree(), db = b.degree();
      return da != db ? da < db : a < b;
    });
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Monomial> out;
    for (const auto& m : g) {
      bool redundant = false;
      for (const auto& k : out)
        if (k.divides(m)) {
          redundant = true;
          break;
        }
      if (!redundant) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void minimalize() { gens_ = minimal(std::move(gens_), nvars_); }

  // Staircase profile: f(a) = min{ b : x^a y^b in I }, a step function read off the sorted gens.
  static MonomialIdeal intersect2(const MonomialIdeal& a, const MonomialIdeal& b) {
    constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint32_t> xs;
    for (const auto& g : a.gens_) xs.push_back(g[0]);
    for (const auto& g : b.gens_) xs.push_back(g[0]);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::size_t ia = 0, ib = 0;
    std::uint64_t fa = inf, fb = inf;
    std::vector<Monomial> out;
    for (auto x : xs) {
      while (ia < a.gens_.size() && a.gens_[ia][0] <= x) fa = a.gens_[ia++][1];
      while (ib < b.gens_.size() && b.gens_[ib][0] <= x) fb = b.gens_[ib++][1];
      const std::uint64_t f = std::max(fa, fb);
      if (f != inf) out.push_back(Monomial{x, static_cast<std::uint32_t>(f)});
    }
    return MonomialIdeal(2, std::move(out));
  }

  // Generators restricted to the first k variables with last exponent <= level, projected.
  static std::vector<Monomial> slice(const std::vector<Monomial>& g, std::size_t k, std::uint32_t level) {
    std::vector<Monomial> out;
    for (const auto& m : g)
      if (m[k - 1] <= level) {
        Monomial p(k - 1);
        for (std::size_t i = 0; i + 1 < k; ++i) p[i] = m[i];
        out.push_back(p);
      }
    return minimal(std::move(out), k - 1);
  }

  static std::vector<std::uint32_t> levels(const std::vector<Monomial>& g, std::size_t k) {
    std::vector<std::uint32_t> v;
    for (const auto& m : g) v.push_back(m[k - 1]);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  static bool has_one(const std::vector<Monomial>& g) { return g.size() == 1 && g[0].is_one(); }

  static std::uint64_t colength_rec(const std::vector<Monomial>& g, std::size_t k) {
    if (has_one(g)) return 0;
    if (k == 1) return g.front()[0];
    if (k == 2) {
      // sorted by x ascending: sum over x-intervals of the current y height
      std::vector<Monomial> s = minimal(g, 2);
      std::uint64_t total = 0;
      for (std::size_t i = 0; i + 1 < s.size(); ++i)
        total += static_cast<std::uint64_t>(s[i + 1][0] - s[i][0]) * s[i][1];
      return total;
    }
    const auto lv = levels(g, k);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i + 1 < lv.size(); ++i)
      total += static_cast<std::uint64_t>(lv[i + 1] - lv[i]) * colength_rec(slice(g, k, lv[i]), k - 1);
    return total;
  }

  static long long maxdeg_rec(const std::vector<Monomial>& g, std::size_t k) {
    if (has_one(g)) return -1;
    if (k == 1) return static_cast<long long>(g.front()[0]) - 1;
    const auto lv = levels(g, k);
    long long best = -1;
    for (std::size_t i = 0; i + 1 < lv.size(); ++i) {
      const long long inner = maxdeg_rec(slice(g, k, lv[i]), k - 1);
      if (inner >= 0) best = std::max(best, inner + static_cast<long long>(lv[i + 1]) - 1);
    }
    return best;
  }

  static void enumerate_rec(const std::vector<Monomial>& g, std::size_t k, Monomial& prefix,
                            std::vector<Monomial>& out) {
    if (has_one(g)) return;
    if (k == 1) {
      for (std::uint32_t a = 0; a < g.front()[0]; ++a) {
        prefix[0] = a;
        out.push_back(prefix);
      }
      prefix[0] = 0;
      return;
    }
    const auto lv = levels(g, k);
    for (std::size_t i = 0; i + 1 < lv.size(); ++i) {
      const auto s = slice(g, k, lv[i]);
      for (std::uint32_t e = lv[i]; e < lv[i + 1]; ++e) {
        prefix[k - 1] = e;
        enumerate_rec(s, k - 1, prefix, out);
      }
    }
    prefix[k - 1] = 0;
  }

  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

}  // namespace blowup
