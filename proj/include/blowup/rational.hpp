#pragma once

#include <gmpxx.h>

#include <string>

namespace blowup {

// GMP keeps every mpq_class canonical: lowest terms, positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// a(a-1)...(a-k+1)/k!, the binomial coefficient C(a, k) read as a polynomial in a.
/// Defined for every rational a, so Hilbert-Samuel polynomials can be evaluated at negative n.
inline Rational binomial_poly(const Rational& a, unsigned k) {
  Rational num = 1;
  Integer fact = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= a - i;
    fact *= i + 1;
  }
  return num / Rational(fact);
}

inline Rational binomial_poly(long a, unsigned k) { return binomial_poly(Rational(a), k); }

}  // namespace blowup
