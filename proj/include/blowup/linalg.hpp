#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup {

/// Sparse vector: (index, value) pairs, indices strictly increasing, values nonzero.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// Row echelon form over Q, built incrementally. Each stored row is scaled so
/// its pivot (smallest index) has coefficient 1.
class Echelon {
 public:
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Remainder of v after eliminating every pivot column. Because the remainder
  /// vanishes on the pivot set it is independent of how v is written, which
  /// makes it a linear projection along the span.
  SparseVector reduce(const SparseVector& v) const {
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [i, c] : v) acc.emplace_hint(acc.end(), i, c);
    auto it = acc.begin();
    while (it != acc.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const std::uint32_t pivot = it->first;
      const Rational c = it->second;
      for (const auto& [j, a] : row->second) {
        auto [pos, inserted] = acc.try_emplace(j, 0);
        pos->second -= c * a;
        if (pos->second == 0) acc.erase(pos);
      }
      it = acc.upper_bound(pivot);
    }
    return SparseVector(acc.begin(), acc.end());
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    insert_reduced(std::move(r));
    return true;
  }

  /// Inserts a vector that is already reduced and nonzero.
  void insert_reduced(SparseVector r) {
    const Rational inv = Rational(1) / r.front().second;
    for (auto& e : r) e.second *= inv;
    const std::uint32_t pivot = r.front().first;
    rows_.emplace(pivot, std::move(r));
  }

  const std::map<std::uint32_t, SparseVector>& rows() const noexcept { return rows_; }

 private:
  std::map<std::uint32_t, SparseVector> rows_;
};

/// Basis of {c : sum_i c_i * images[i] = 0}. Indices of `images` must stay
/// below 2^30; the returned vectors are indexed by image position.
inline std::vector<SparseVector> kernel(const std::vector<SparseVector>& images) {
  constexpr std::uint32_t offset = 1u << 30;
  Echelon e;
  std::vector<SparseVector> out;
  for (std::uint32_t i = 0; i < images.size(); ++i) {
    SparseVector v = images[i];
    v.emplace_back(offset + i, 1);
    SparseVector r = e.reduce(v);
    if (r.front().first < offset) {
      e.insert_reduced(std::move(r));
    } else {
      for (auto& [j, c] : r) j -= offset;
      out.push_back(std::move(r));
    }
  }
  return out;
}

/// Row echelon form over F_p, p = 2^61 - 1. Used for one-sided certificates:
/// the rank of an integral matrix mod p never exceeds its rank over Q.
class ModEchelon {
 public:
  static constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(t & prime) + static_cast<std::uint64_t>(t >> 61);
    return r >= prime ? r - prime : r;
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + prime - b; }
  static std::uint64_t inverse(std::uint64_t a) {
    std::uint64_t r = 1, e = prime - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t reduce_integer(const Integer& z) {
    Integer m = z % Integer(static_cast<unsigned long>(prime));
    if (m < 0) m += static_cast<unsigned long>(prime);
    return m.get_ui();
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  /// False once a denominator vanished mod p; the rank is then meaningless.
  bool ok() const noexcept { return ok_; }

  bool insert(const SparseVector& v) {
    std::map<std::uint32_t, std::uint64_t> acc;
    for (const auto& [i, c] : v) {
      const std::uint64_t d = reduce_integer(c.get_den());
      if (d == 0) {
        ok_ = false;
        return false;
      }
      const std::uint64_t x = mul(reduce_integer(c.get_num()), inverse(d));
      if (x) acc.emplace_hint(acc.end(), i, x);
    }
    auto it = acc.begin();
    while (it != acc.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const std::uint32_t pivot = it->first;
      const std::uint64_t c = it->second;
      for (const auto& [j, a] : row->second) {
        auto [pos, inserted] = acc.try_emplace(j, 0);
        pos->second = sub(pos->second, mul(c, a));
        if (pos->second == 0) acc.erase(pos);
      }
      it = acc.upper_bound(pivot);
    }
    if (acc.empty()) return false;
    const std::uint64_t inv = inverse(acc.begin()->second);
    std::vector<std::pair<std::uint32_t, std::uint64_t>> row;
    row.reserve(acc.size());
    for (const auto& [j, a] : acc) row.emplace_back(j, mul(a, inv));
    rows_.emplace(row.front().first, std::move(row));
    return true;
  }

 private:
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint64_t>>> rows_;
  bool ok_ = true;
};

inline SparseVector scaled(const SparseVector& v, const Rational& c) {
  SparseVector r;
  if (c == 0) return r;
  r.reserve(v.size());
  for (const auto& [i, a] : v) r.emplace_back(i, a * c);
  return r;
}

inline SparseVector add(const SparseVector& a, const SparseVector& b) {
  SparseVector r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      Rational c = a[i].second + b[j].second;
      if (c != 0) r.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace blowup
