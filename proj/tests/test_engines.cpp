#include <gtest/gtest.h>

#include <random>
#include <set>

#include "blowup/context.hpp"
#include "blowup/ideal_ops.hpp"
#include "support.hpp"

using namespace blowup;
using blowup::testing::P;
using blowup::testing::Ps;

namespace {

Ideal ideal(const Ring& r, const std::string& gens) { return Ideal(r, Ps(r, gens)); }

// Oracle: membership by direct divisibility against a raw generator list.
bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

// Oracle: walk the box below the pure powers and count what the generators miss.
std::uint64_t box_colength(const std::vector<Monomial>& gens, std::size_t n) {
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : gens)
    if (g.support_size() == 1)
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] && (bound[i] == 0 || g[i] < bound[i])) bound[i] = g[i];
  std::uint64_t count = 0;
  Monomial m(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      count += !divisible_by_any(m, gens);
      return;
    }
    for (std::uint32_t e = 0; e < bound[i]; ++e) {
      m[i] = e;
      rec(i + 1);
    }
    m[i] = 0;
  };
  rec(0);
  return count;
}

// Oracle: the exponent set of a semigroup ideal up to a bound.
std::set<unsigned> semigroup_set(const NumericalSemigroup& s, const std::vector<unsigned>& gens, unsigned bound) {
  std::set<unsigned> out;
  for (unsigned e = 0; e < bound; ++e)
    for (unsigned g : gens)
      if (g <= e && s.contains(e - g)) out.insert(e);
  return out;
}

Ring gb_twin(const Ring& r) { return RingSpec::quotient(r->variables(), {}); }

Ideal move_to(const Ring& r, const Ideal& I) { return Ideal(r, I.generators()); }

}  // namespace

TEST(Engines, KrullDimension) {
  EXPECT_EQ(krull_dimension(*blowup::testing::qxy()), 2u);
  EXPECT_EQ(krull_dimension(*RingSpec::semigroup({4, 6, 7})), 1u);
  const std::vector<std::string> v{"x", "y", "z", "t"};
  auto triple = RingSpec::quotient(v, parse_polynomials("x*y - t^4, x*z - t^4 + z*t^2, y*z - y*t^2 + z*t^2", v));
  EXPECT_EQ(krull_dimension(*triple), 2u);
}

TEST(Engines, ProductAndPower) {
  auto r = blowup::testing::qxy();
  EXPECT_TRUE(equals(product(ideal(r, "x, y"), ideal(r, "x, y")), ideal(r, "x^2, x*y, y^2")));
  Ideal I = ideal(r, "x^3, x*y^2, y^4");
  EXPECT_TRUE(equals(product(I, Ideal::unit(r)), I));
  EXPECT_TRUE(equals(power(I, 0), Ideal::unit(r)));
  auto cube = power(ideal(r, "x^2, y^3"), 3);
  std::set<std::string> got;
  for (const auto& g : cube.generators()) got.insert(to_string(g, r->variables()));
  EXPECT_EQ(got, (std::set<std::string>{"x^6", "x^4*y^3", "x^2*y^6", "y^9"}));
}

TEST(Engines, SemigroupProductMatchesSetArithmetic) {
  auto s = RingSpec::semigroup({4, 6, 7});
  Ideal I = ideal(s, "t^4, t^6");
  Ideal sq = product(I, I);
  EXPECT_TRUE(equals(sq, ideal(s, "t^8, t^10, t^12")));
  // oracle: sums of ideal elements below a bound versus the generated set
  const auto& S = *s->numerical_semigroup();
  std::set<unsigned> sums;
  const auto base = semigroup_set(S, {4, 6}, 60);
  for (unsigned a : base)
    for (unsigned b : base)
      if (a + b < 60) sums.insert(a + b);
  EXPECT_EQ(sums, semigroup_set(S, {8, 10, 12}, 60));
  std::vector<unsigned> gens;
  for (const auto& g : sq.generators()) gens.push_back(g.leading_term().monomial[0]);
  EXPECT_EQ(semigroup_set(S, gens, 60), sums);
}

TEST(Engines, ColonExamples) {
  auto r = blowup::testing::qxy();
  Ideal c = colon(ideal(r, "x^2, y^2"), ideal(r, "x, y"));
  EXPECT_TRUE(equals(c, ideal(r, "x^2, x*y, y^2")));
  // oracle: enumerate exponents up to the staircase bound
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      const Monomial m{a, b};
      const bool in = divisible_by_any(m * Monomial{1, 0}, {{2, 0}, {0, 2}}) &&
                      divisible_by_any(m * Monomial{0, 1}, {{2, 0}, {0, 2}});
      EXPECT_EQ(c.monomial_form().contains(m), in);
    }
  Ideal I = ideal(r, "x^4, x^3*y, x*y^3, y^4");
  EXPECT_TRUE(equals(colon(I, Ideal::unit(r)), I));
  Ideal d = colon(I, ideal(r, "x, y"));
  EXPECT_TRUE(member(P(r, "x^2*y^2"), d));
  EXPECT_TRUE(member(P(r, "x^3*y^2"), I));
  EXPECT_TRUE(member(P(r, "x^2*y^3"), I));
}

TEST(Engines, IntersectExamples) {
  auto r = blowup::testing::qxy();
  EXPECT_TRUE(equals(intersect(ideal(r, "x"), ideal(r, "y")), ideal(r, "x*y")));
  EXPECT_TRUE(equals(intersect(ideal(r, "x^2, y"), ideal(r, "x, y^2")), ideal(r, "x^2, x*y, y^2")));
  Ideal I = ideal(r, "x^3, x*y, y^5");
  EXPECT_TRUE(equals(intersect(I, I), I));
}

TEST(Engines, EqualsAndMember) {
  auto r = blowup::testing::qxy();
  EXPECT_TRUE(equals(power(ideal(r, "x, y"), 2), ideal(r, "x^2, x*y, y^2")));
  EXPECT_FALSE(equals(ideal(r, "x^2, y^2"), ideal(r, "x^2, x*y, y^2")));
  EXPECT_FALSE(member(P(r, "x^2*y^2"), ideal(r, "x^4, x^3*y, x*y^3, y^4")));
  EXPECT_TRUE(member(P(r, "x"), ideal(r, "x, y")));
}

TEST(Engines, E8Ring) {
  const std::vector<std::string> v{"x", "y", "z"};
  auto e8 = RingSpec::quotient(v, parse_polynomials("x^3 + y^5 + z^2", v), {true, true, false});
  Ideal I = ideal(e8, "x, y^2, z");
  EXPECT_EQ(colength(I), 2u);
  EXPECT_EQ(minimal_generators(I).nu, 3u);
  EXPECT_TRUE(minimal_generators(I).exact);
  EXPECT_FALSE(member(P(e8, "x^3 + z^2"), power(I, 5)));
  EXPECT_TRUE(member(P(e8, "x^3 + z^2"), power(I, 2)));  // equals -y^5 in the ring
  auto gb = groebner_basis(ideal(e8, "x, z"));
  std::set<std::string> els;
  for (const auto& e : gb.elements()) els.insert(to_string(e, v));
  EXPECT_EQ(els, (std::set<std::string>{"x", "z", "y^5"}));
  EXPECT_EQ(krull_dimension(*e8), 2u);
}

TEST(Engines, GroebnerExamples) {
  auto r = blowup::testing::qxy();
  auto gb = groebner_basis(ideal(r, "x + y, y"));
  ASSERT_EQ(gb.elements().size(), 2u);
  EXPECT_EQ(gb.elements()[0], P(r, "x"));
  EXPECT_EQ(gb.elements()[1], P(r, "y"));
  Ideal I = ideal(r, "x^2 + y, x*y, x^2 + y + x*y");
  EXPECT_EQ(groebner_basis(I).elements(), groebner_basis(Ideal(r, minimal_generators(I).generators)).elements());
}

TEST(Engines, MPrimaryAndColength) {
  auto r = blowup::testing::qxy();
  EXPECT_TRUE(is_m_primary(ideal(r, "x^2, y^3")));
  EXPECT_FALSE(is_m_primary(ideal(r, "x")));
  EXPECT_TRUE(is_m_primary(ideal(RingSpec::semigroup({4, 6, 7}), "t^4, t^6")));
  EXPECT_EQ(colength(ideal(r, "x^2, y^3")), 6u);
  EXPECT_EQ(colength(ideal(r, "x^4, x^3*y, x*y^3, y^4")), 11u);
  EXPECT_THROW(colength(ideal(r, "x")), Error);
  // non-monomial: finite colength but the radical is not the maximal ideal
  auto g = gb_twin(r);
  EXPECT_FALSE(is_m_primary(ideal(g, "x^2 - x, y^2")));
  EXPECT_TRUE(is_m_primary(ideal(g, "x^2 - y^3, y^4")));
}

TEST(Engines, MinimalGenerators) {
  auto r = blowup::testing::qxy();
  EXPECT_EQ(minimal_generators(ideal(r, "x^2, x*y, y^2, x^2*y")).nu, 3u);
  auto s = RingSpec::semigroup({4, 6, 7});
  auto mg = minimal_generators(ideal(s, "t^4, t^6, t^10"));
  EXPECT_EQ(mg.nu, 2u);
  EXPECT_EQ(mg.generators[0], P(s, "t^4"));
  EXPECT_EQ(mg.generators[1], P(s, "t^6"));
}

TEST(Engines, Eliminate) {
  auto big = RingSpec::polynomial({"x", "y", "t", "Z", "U"});
  Ideal I = ideal(big, "Z - x*t, U - y*t");
  Ideal e = eliminate(I, {"t"});
  EXPECT_TRUE(equals(e, ideal(big, "y*Z - x*U")));
  // both inclusions by membership
  EXPECT_TRUE(member(P(big, "y*Z - x*U"), I));
  for (const auto& g : e.generators()) EXPECT_TRUE(member(g, I));
  EXPECT_TRUE(eliminate(ideal(big, "Z - x*t"), {"t"}).is_zero());
  EXPECT_TRUE(equals(eliminate(I, {}), I));
  EXPECT_THROW(eliminate(I, {"w"}), Error);
}

TEST(Engines, GroebnerColonAndIntersection) {
  auto r = gb_twin(blowup::testing::qxy());
  Ideal a = ideal(r, "x^2*y - y^3, x^3");
  Ideal f = ideal(r, "x + y");
  Ideal c = colon(a, f);
  for (const auto& g : c.generators()) EXPECT_TRUE(member(g * P(r, "x + y"), a));
  EXPECT_TRUE(contains(c, a));
  Ideal i = intersect(ideal(r, "x + y"), ideal(r, "x - y"));
  EXPECT_TRUE(equals(i, ideal(r, "x^2 - y^2")));
}

TEST(EnginesProperty, CrossBackendOracle) {
  std::mt19937_64 g(2024);
  int instances = 0;
  for (int trial = 0; trial < 520; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto mono = RingSpec::polynomial(names);
    auto twin = RingSpec::quotient(names, {});
    auto make = [&](std::size_t extra) {
      return Ideal::from_monomials(mono, blowup::testing::random_m_primary(g, n, 6, extra));
    };
    Ideal A = make(2), B = make(2);
    Ideal A2 = move_to(twin, A), B2 = move_to(twin, B);
    ASSERT_EQ(A.backend(), Ideal::Backend::monomial);
    ASSERT_EQ(A2.backend(), Ideal::Backend::groebner);
    EXPECT_TRUE(equals(move_to(twin, product(A, B)), product(A2, B2)));
    EXPECT_TRUE(equals(move_to(twin, power(A, 2)), power(A2, 2)));
    EXPECT_TRUE(equals(move_to(twin, intersect(A, B)), intersect(A2, B2)));
    EXPECT_TRUE(equals(move_to(twin, colon(A, B)), colon(A2, B2)));
    EXPECT_EQ(colength(A), colength(A2));
    EXPECT_EQ(colength(A), box_colength(A.monomial_form().generators(), n));
    EXPECT_EQ(equals(A, B), equals(A2, B2));
    EXPECT_EQ(equals(A, A + B), equals(A2, A2 + B2));
    ++instances;
  }
  EXPECT_GE(instances, 500);
}

TEST(EnginesProperty, ColonAndProductLaws) {
  std::mt19937_64 g(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 2;
    auto r = n == 2 ? blowup::testing::qxy() : blowup::testing::qxyz();
    Ideal I = Ideal::from_monomials(r, blowup::testing::random_m_primary(g, n, 6, 3));
    Ideal J = Ideal::from_monomials(r, blowup::testing::random_m_primary(g, n, 4, 2));
    Ideal c = colon(I, J);
    EXPECT_TRUE(contains(I, product(c, J)));
    EXPECT_TRUE(contains(c, I));
    // additivity of length along I ⊃ I²
    const auto l1 = colength(I), l2 = colength(power(I, 2));
    EXPECT_EQ(l2, l1 + (l2 - l1));
    EXPECT_GE(l2, l1);
    const unsigned a = 1 + trial % 3, b = 1 + (trial / 3) % 3;
    EXPECT_TRUE(equals(product(power(I, a), power(I, b)), power(I, a + b)));
    // adjoining a high power of m does not change an m-primary ideal or its colons
    const long long N = I.monomial_form().max_standard_degree() + 1;
    Ideal mN = power(Ideal::maximal(r), static_cast<unsigned>(N));
    EXPECT_TRUE(equals(I + mN, I));
    EXPECT_TRUE(equals(colon(I + mN, J), c));
  }
}

TEST(EnginesProperty, SemigroupColonAgainstSets) {
  std::mt19937_64 g(5);
  const std::vector<std::vector<unsigned>> semis{{3, 10, 11}, {4, 6, 7}, {5, 7, 9}, {2, 3}};
  for (int trial = 0; trial < 100; ++trial) {
    auto s = RingSpec::semigroup(semis[trial % semis.size()]);
    const auto& S = *s->numerical_semigroup();
    std::vector<unsigned> ga, gb;
    auto pick = [&](std::vector<unsigned>& v) {
      for (int k = 0; k < 3; ++k) {
        unsigned e = blowup::testing::draw(g, 1, 20);
        if (S.contains(e)) v.push_back(e);
      }
      if (v.empty()) v.push_back(S.multiplicity());
    };
    pick(ga);
    pick(gb);
    SemigroupIdeal A(s->numerical_semigroup(), ga), B(s->numerical_semigroup(), gb);
    SemigroupIdeal C = colon(A, B);
    const unsigned bound = 80;
    const auto setA = semigroup_set(S, ga, bound + 40);
    for (unsigned e = 0; e < bound; ++e) {
      if (!S.contains(e)) continue;
      bool in = true;
      for (unsigned b : gb) in = in && setA.count(e + b);
      EXPECT_EQ(C.contains(e), in) << e;
    }
    EXPECT_EQ(colength(Ideal::from(s, A)),
              [&] {
                std::uint64_t c = 0;
                for (unsigned e = 0; e < bound; ++e) c += S.contains(e) && !setA.count(e);
                return c;
              }());
  }
}

TEST(Engines, ContextPowerCache) {
  Context ctx;
  auto r = blowup::testing::qxy();
  Ideal I = ideal(r, "x^2, x*y^3, y^5");
  const Ideal& p3 = ctx.power(I, 3);
  EXPECT_TRUE(equals(p3, power(I, 3)));
  ctx.power(I, 9);
  EXPECT_TRUE(equals(p3, power(I, 3)));
}
