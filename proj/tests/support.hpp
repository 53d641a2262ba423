#pragma once

#include <random>
#include <string>
#include <vector>

#include "blowup/parse.hpp"
#include "blowup/ring.hpp"

namespace blowup::testing {

inline Ring qxy() {
  static Ring r = RingSpec::polynomial({"x", "y"});
  return r;
}
inline Ring qxyz() {
  static Ring r = RingSpec::polynomial({"x", "y", "z"});
  return r;
}

inline Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r->variables()); }

inline std::vector<Polynomial> Ps(const Ring& r, const std::string& s) { return parse_polynomials(s, r->variables()); }

/// Seeded random exponent vectors; plain modulo keeps the stream platform-independent.
inline std::uint32_t draw(std::mt19937_64& g, std::uint32_t lo, std::uint32_t hi) {
  return lo + static_cast<std::uint32_t>(g() % (hi - lo + 1));
}

inline Monomial random_monomial(std::mt19937_64& g, std::size_t n, std::uint32_t max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = draw(g, 0, max_exp);
  return m;
}

/// Random m-primary monomial generator list: pure powers plus a few mixed monomials.
inline std::vector<Monomial> random_m_primary(std::mt19937_64& g, std::size_t n, std::uint32_t max_exp,
                                              std::size_t extra) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i, draw(g, 1, max_exp)));
  for (std::size_t k = 0; k < extra; ++k) {
    Monomial m = random_monomial(g, n, max_exp);
    if (!m.is_one()) gens.push_back(m);
  }
  return gens;
}

}  // namespace blowup::testing
