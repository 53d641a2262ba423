#include <gtest/gtest.h>

#include <random>

#include "blowup/ulrich.hpp"
#include "support.hpp"

using namespace blowup;
using namespace blowup::testing;

namespace {

using Names = std::vector<std::string>;

Ideal mono(const Ring& r, const std::string& s) { return Ideal(r, Ps(r, s)); }

Ring e8() {
  static Ring r = RingSpec::quotient({"x", "y", "z"}, parse_polynomials("x^3+y^5+z^2", Names{"x", "y", "z"}),
                                     RingFlags{true, true, false});
  return r;
}

Ring triple_point() {
  // a = b = c = 2
  static Ring r = RingSpec::quotient(
      {"x", "y", "z", "t"},
      parse_polynomials("x*y - t^4, x*z - t^4 + z*t^2, y*z - y*t^2 + z*t^2", Names{"x", "y", "z", "t"}),
      RingFlags{true, false, false});
  return r;
}

Ring quadric() {
  static Ring r = RingSpec::quotient({"a", "b", "c"}, parse_polynomials("a^2+b^2+c^2", Names{"a", "b", "c"}),
                                     RingFlags{true, true, false});
  return r;
}

}  // namespace

TEST(Ulrich, Verdicts) {
  Context ctx;
  const Ring s = RingSpec::semigroup({4, 6, 7});
  EXPECT_TRUE(is_ulrich(ctx, mono(s, "t^4, t^6")).ulrich);
  const auto t = is_ulrich(ctx, mono(RingSpec::semigroup({3, 10, 11}), "t^9, t^10, t^14"));
  EXPECT_FALSE(t.ulrich);
  EXPECT_EQ(t.reason, "I is not Ratliff-Rush closed");
  EXPECT_FALSE(is_ulrich(ctx, mono(qxy(), "x^4, x^3*y, x*y^3, y^4")).ulrich);

  // every power closed, still not Ulrich
  const Ideal six = mono(qxy(), "x^6, x^4*y^2, x^3*y^3, x^2*y^4, x*y^5, y^6");
  EXPECT_FALSE(is_ulrich(ctx, six).ulrich);
  EXPECT_EQ(sstar(ctx, six, CyclicModule::whole(qxy())).value, 1u);

  const auto m = is_ulrich(ctx, mono(qxy(), "x, y"));
  EXPECT_TRUE(m.ulrich);
  EXPECT_TRUE(m.is_parameter);
}

TEST(Ulrich, E8) {
  Context ctx;
  const Ideal I = mono(e8(), "x, y^2, z");
  const auto u = is_ulrich(ctx, I);
  EXPECT_TRUE(u.ulrich);
  EXPECT_EQ(u.nu, 3u);
  EXPECT_EQ(u.colength, 2u);
  EXPECT_EQ(u.r, 1u);
  const auto reg = ulrich_regularity(ctx, I);
  EXPECT_EQ(reg.value, 1u);
  EXPECT_FALSE(reg.parameter);
  for (long n = 1; n <= 4; ++n) EXPECT_EQ(hilbert_function(ctx, I, n), static_cast<std::uint64_t>(2 * n * n));
  EXPECT_FALSE(member(P(e8(), "x^3 + z^2"), ctx.power(I, 5)));
}

TEST(Ulrich, TriplePoint) {
  Context ctx;
  for (long ell : {1L, 2L}) {
    const Ideal I = mono(triple_point(), "x, y, z, t^" + std::to_string(ell));
    const auto u = is_ulrich(ctx, I);
    EXPECT_TRUE(u.ulrich) << ell;
    EXPECT_EQ(u.colength, static_cast<std::uint64_t>(ell));
    EXPECT_EQ(u.nu, 4u);
    const auto s = fit_hilbert_polynomial(ctx, I);
    EXPECT_EQ(s.e[0], 3 * ell);
    EXPECT_EQ(s.e[1], 2 * ell);
    EXPECT_EQ(s.rho, -1);
    for (long n = 1; n <= 3; ++n) EXPECT_EQ(2 * static_cast<long>(s.values.at(n)), ell * n * (3 * n - 1));
  }
}

TEST(Ulrich, DiagonalQuadric) {
  Context ctx;
  const Ideal I = mono(quadric(), "a, b, c");
  const auto u = is_ulrich(ctx, I);
  EXPECT_TRUE(u.ulrich);
  EXPECT_EQ(u.colength, 1u);
  for (long n = 1; n <= 3; ++n)
    EXPECT_EQ(Rational(static_cast<unsigned long>(hilbert_function(ctx, I, n))), ulrich_gorenstein_form(2, 1, n));
}

TEST(ClosedForm, Examples) {
  const auto a = ulrich_hilbert_closed_form(1, 2, 2);
  for (long n = 1; n <= 6; ++n) EXPECT_EQ(a.P(n), Rational(4 * n - 2));
  EXPECT_EQ(a.rho, 0);
  const auto b = ulrich_hilbert_closed_form(2, 2, 3);
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(b.P(n), Rational(2 * n * n));
  EXPECT_EQ(b.rho, -1);
  for (long ell = 1; ell <= 3; ++ell) {
    const auto c = ulrich_hilbert_closed_form(2, static_cast<unsigned>(ell), 4);
    for (long n = 0; n <= 5; ++n) EXPECT_EQ(c.P(n) * 2, Rational(ell * n * (3 * n - 1)));
  }
  EXPECT_THROW(ulrich_hilbert_closed_form(3, 1, 2), Error);

  EXPECT_EQ(ulrich_gorenstein_form(2, 2, 3), Rational(18));
  EXPECT_EQ(ulrich_gorenstein_form(3, 12, 1), Rational(12));
  EXPECT_EQ(ulrich_gorenstein_form(3, 1, -1), Rational(0));
  EXPECT_THROW(ulrich_gorenstein_form(3, 1, -2), Error);
}

TEST(ClosedForm, GorensteinAgreesOnGrid) {
  for (unsigned d = 1; d <= 5; ++d)
    for (unsigned lambda = 1; lambda <= 4; ++lambda) {
      const auto f = ulrich_hilbert_closed_form(d, lambda, d + 1);
      for (long n = 2 - static_cast<long>(d); n <= 8; ++n) EXPECT_EQ(ulrich_gorenstein_form(d, lambda, n), f.P(n));
    }
}

TEST(GenItoh, Examples) {
  Context ctx;
  const auto e = genitoh_check(ctx, mono(e8(), "x, y^2, z"));
  EXPECT_TRUE(e.a && e.b && e.c);
  EXPECT_EQ(e.r_J, 1u);
  const auto h = genitoh_check(ctx, mono(qxy(), "x^6, x^4*y^2, x^3*y^3, y^6"));
  EXPECT_EQ(h.r_J, 3u);
  EXPECT_FALSE(h.a || h.b || h.c);
  const auto m2 = genitoh_check(ctx, mono(qxy(), "x^2, x*y, y^2"));
  EXPECT_TRUE(m2.a && m2.b && m2.c);
  EXPECT_THROW(genitoh_check(ctx, mono(qxy(), "x^4, x^3*y, x*y^3, y^4")), Error);
}

TEST(UlrichProperty, CertifiedIdealsMatchClosedForm) {
  // Ulrich ideals among random monomial ideals: r <= 1, closed powers, closed-form data
  Context ctx;
  std::mt19937_64 g(5);
  unsigned found = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Ideal I = Ideal::from_monomials(qxy(), random_m_primary(g, 2, 4, 1));
    const auto u = is_ulrich(ctx, I);
    if (!u.ulrich) continue;
    ++found;
    SCOPED_TRACE(I.to_string());
    const auto s = fit_hilbert_polynomial(ctx, I);
    const auto f = ulrich_hilbert_closed_form(2, static_cast<unsigned>(u.colength), static_cast<unsigned>(u.nu));
    EXPECT_EQ(s.e, f.e);
    EXPECT_EQ(s.rho, f.rho);
    EXPECT_EQ(u.is_parameter, s.e[1] == 0);
    EXPECT_LE(s.rho, 0);
    EXPECT_EQ(sstar(ctx, I, CyclicModule::whole(qxy())).value, 1u);
    for (unsigned r : independence_probe(ctx, I, CyclicModule::whole(qxy()), 3)) EXPECT_EQ(r, u.r);
  }
  EXPECT_GT(found, 5u);
}
