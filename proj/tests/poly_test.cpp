#include <gtest/gtest.h>

#include <random>

#include "cyclorth/poly.hpp"
#include "oracles.hpp"

namespace cyclorth {
namespace {

using oracle::poly;
using oracle::rpoly;

Rational q(long num, long den = 1) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

TEST(PolyTest, CanonicalFormAndDegree) {
  EXPECT_TRUE(poly({0, 0, 0}).is_zero());
  EXPECT_EQ(poly({1, 2, 0, 0}).size(), 2u);
  EXPECT_FALSE(IntPoly{}.degree().has_value());
  EXPECT_EQ(poly({5}).degree(), 0u);
  EXPECT_EQ(poly({0, 0, 3}).degree(), 2u);
  EXPECT_THROW((void)IntPoly{}.lead(), std::domain_error);
  EXPECT_EQ(IntPoly::binomial(3, -1), poly({-1, 0, 0, 1}));
  EXPECT_EQ(poly({1, 2}).coeff(7), 0);
}

TEST(PolyTest, AddSubExamples) {
  EXPECT_EQ(poly({-1, 1}) + poly({1, 1}), poly({0, 2}));
  const IntPoly f = poly({3, -2, 7});
  EXPECT_EQ(f + IntPoly{}, f);
  EXPECT_TRUE((poly({1, 0, 1}) - poly({1, 0, 1})).is_zero());
  EXPECT_EQ(-f, poly({-3, 2, -7}));
  EXPECT_EQ(rpoly({q(1, 2)}) + rpoly({q(1, 2)}), rpoly({q(1)}));
}

TEST(PolyTest, MulExamples) {
  EXPECT_EQ(poly({-1, 1}) * poly({1, 1}), poly({-1, 0, 1}));
  const IntPoly f = poly({4, 0, -3, 1});
  EXPECT_EQ(f * poly({1}), f);
  EXPECT_EQ(poly({1, 1, 1}) * poly({-1, 1}), poly({-1, 0, 0, 1}));
  EXPECT_TRUE((f * IntPoly{}).is_zero());
}

TEST(PolyTest, DivExactExamples) {
  // (X^6 - 1) / (X + 1); the quotient below was checked by multiplying back.
  const IntPoly quotient = div_exact(IntPoly::binomial(6, -1), poly({1, 1}));
  EXPECT_EQ(quotient, poly({-1, 1, -1, 1, -1, 1}));
  EXPECT_EQ(oracle::naive_mul(quotient, poly({1, 1})), IntPoly::binomial(6, -1));

  const IntPoly f = poly({2, -1, 0, 5});
  EXPECT_EQ(div_exact(f, poly({1})), f);
  EXPECT_EQ(div_exact(poly({-1, 0, 1}), poly({-1, 1})), poly({1, 1}));
  EXPECT_TRUE(div_exact(IntPoly{}, f).is_zero());
}

TEST(PolyTest, DivExactErrors) {
  EXPECT_THROW((void)div_exact(poly({1, 1}), IntPoly{}), std::domain_error);
  EXPECT_THROW((void)div_exact(poly({1, 0, 1}), poly({-1, 1})), InexactDivision);
  EXPECT_THROW((void)div_exact(poly({1, 1}), poly({0, 2})), InexactDivision);
  EXPECT_THROW((void)div_exact(poly({1}), poly({1, 1})), InexactDivision);
}

TEST(PolyTest, DivRemExamples) {
  auto [q1, r1] = div_rem(rpoly({0, 0, 1}), rpoly({1, 0, 1}));
  EXPECT_EQ(q1, rpoly({1}));
  EXPECT_EQ(r1, rpoly({-1}));

  const RatPoly f = rpoly({q(1, 3), 2, -1});
  auto [q2, r2] = div_rem(f, f);
  EXPECT_EQ(q2, rpoly({1}));
  EXPECT_TRUE(r2.is_zero());

  const RatPoly g = rpoly({1, 1, 1});
  auto [q3, r3] = div_rem(rpoly({0, 0, 0, 1}), g);
  EXPECT_EQ(q3, rpoly({-1, 1}));
  EXPECT_EQ(r3, rpoly({1}));
  EXPECT_EQ(q3 * g + r3, rpoly({0, 0, 0, 1}));

  EXPECT_THROW((void)div_rem(f, RatPoly{}), std::domain_error);
}

TEST(PolyTest, BinomialExamples) {
  EXPECT_EQ(mul_binomial(poly({1, 1}), 2, -1), poly({-1, -1, 1, 1}));
  EXPECT_EQ(div_binomial(IntPoly::binomial(6, -1), 3, -1), poly({1, 0, 0, 1}));
  EXPECT_EQ(div_binomial(IntPoly::binomial(6, -1), 3, +1), poly({-1, 0, 0, 1}));
  EXPECT_THROW((void)div_binomial(poly({1, 0, 1}), 1, -1), InexactDivision);
  EXPECT_THROW((void)div_binomial(poly({1, 1}), 3, -1), InexactDivision);
  EXPECT_THROW((void)mul_binomial(poly({1}), 0, -1), std::domain_error);
  EXPECT_THROW((void)mul_binomial(poly({1}), 2, 0), std::domain_error);
}

TEST(PolyTest, BinomialMatchesGenericArithmetic) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 500; ++iter) {
    const IntPoly f = oracle::random_poly(rng, 20, 10);
    const std::size_t m = 1 + rng() % 9;
    const int sign = (rng() & 1) ? 1 : -1;
    const IntPoly product = mul_binomial(f, m, sign);
    ASSERT_EQ(product, oracle::naive_mul(f, IntPoly::binomial(m, sign)));
    ASSERT_EQ(div_binomial(product, m, sign), f);
    ASSERT_EQ(div_exact(product, IntPoly::binomial(m, sign)), f);
  }
}

TEST(PolyTest, InnerProductExamples) {
  EXPECT_EQ(inner_product(poly({1, 2}), poly({3, 4})), 11);
  EXPECT_EQ(inner_product(poly({1, 2}), IntPoly{}), 0);
  // n = 6, d1 = 1, d2 = 2, no shifts.
  EXPECT_EQ(inner_product(poly({1, 1, 1, 1, 1, 1}), poly({-1, 1, -1, 1, -1, 1})), 0);
  EXPECT_EQ(inner_product(rpoly({q(1, 2), 1}), rpoly({4, q(1, 3), 9})), q(7, 3));
}

TEST(PolyTest, ShiftAndCyclicReduceExamples) {
  EXPECT_EQ(shift(poly({-1, 1}), 1), poly({0, -1, 1}));
  const IntPoly f = poly({3, 1, 4});
  EXPECT_EQ(shift(f, 0), f);
  EXPECT_TRUE(shift(IntPoly{}, 5).is_zero());
  EXPECT_EQ(cyclic_reduce(IntPoly::monomial(6), 6), poly({1}));
  EXPECT_EQ(cyclic_reduce(poly({0, 1, 0, 0, 0, 0, 0, 1}), 6), poly({0, 2}));
  EXPECT_EQ(cyclic_reduce(f, 6), f);
  EXPECT_TRUE(cyclic_reduce(IntPoly::binomial(4, -1), 4).is_zero());
  EXPECT_THROW((void)cyclic_reduce(f, 0), std::domain_error);
}

TEST(PolyTest, ExtendedGcdExamples) {
  {
    const RatPoly a = rpoly({-1, 1}), b = rpoly({1, 1});
    const Bezout r = extended_gcd(a, b);
    EXPECT_EQ(r.gcd, rpoly({1}));
    EXPECT_EQ(r.s * a + r.t * b, rpoly({1}));
  }
  {
    const RatPoly f = rpoly({2, 0, 4});
    const Bezout r = extended_gcd(f, RatPoly{});
    EXPECT_EQ(r.gcd, rpoly({q(1, 2), 0, 1}));
    EXPECT_EQ(r.s, rpoly({q(1, 4)}));
    EXPECT_TRUE(r.t.is_zero());
  }
  {
    const RatPoly phi2 = rpoly({1, 1}), phi3 = rpoly({1, 1, 1});
    const Bezout r = extended_gcd(phi2, phi3);
    EXPECT_EQ(r.gcd, rpoly({1}));
    EXPECT_EQ(r.s * phi2 + r.t * phi3, rpoly({1}));
  }
  {
    // Common factor X - 1.
    const RatPoly a = rpoly({-1, 0, 1}), b = rpoly({-1, 0, 0, 1});
    const Bezout r = extended_gcd(a, b);
    EXPECT_EQ(r.gcd, rpoly({-1, 1}));
    EXPECT_EQ(r.s * a + r.t * b, r.gcd);
  }
  EXPECT_THROW((void)extended_gcd(RatPoly{}, RatPoly{}), std::domain_error);
}

TEST(PolyTest, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 1000; ++iter) {
    const IntPoly f = oracle::random_poly(rng, 17, 10);
    const IntPoly g = oracle::random_poly(rng, 17, 10);
    const IntPoly h = oracle::random_poly(rng, 17, 10);
    ASSERT_EQ(f + g, g + f);
    ASSERT_EQ((f + g) + h, f + (g + h));
    ASSERT_EQ(f * g, g * f);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ(f * g, oracle::naive_mul(f, g));
    ASSERT_TRUE((f - f).is_zero());
  }
}

TEST(PolyTest, KaratsubaMatchesSchoolbookAcrossThresholds) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    const IntPoly f = oracle::random_poly(rng, 120, 1000);
    const IntPoly g = oracle::random_poly(rng, 90, 1000);
    const IntPoly reference = mul_schoolbook(f, g);
    for (std::size_t threshold : {0u, 1u, 2u, 5u, 32u, 200u}) {
      ASSERT_EQ(mul_karatsuba(f, g, threshold), reference) << "threshold " << threshold;
    }
  }
  const RatPoly a = oracle::random_rat_poly(rng, 70, 9), b = oracle::random_rat_poly(rng, 70, 9);
  EXPECT_EQ(mul_karatsuba(a, b, 3), mul_schoolbook(a, b));
}

TEST(PolyTest, ThresholdIsConfigurable) {
  const std::size_t saved = karatsuba_threshold();
  EXPECT_EQ(saved, 32u);
  set_karatsuba_threshold(4);
  EXPECT_EQ(karatsuba_threshold(), 4u);
  std::mt19937_64 rng(5);
  const IntPoly f = oracle::random_poly(rng, 60, 50), g = oracle::random_poly(rng, 60, 50);
  EXPECT_EQ(f * g, oracle::naive_mul(f, g));
  set_karatsuba_threshold(saved);
}

TEST(PolyTest, DivExactInvertsMul) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    const IntPoly f = oracle::random_poly(rng, 25, 20);
    const IntPoly g = oracle::random_nonzero_poly(rng, 12, 20);
    ASSERT_EQ(div_exact(f * g, g), f);
  }
  for (int iter = 0; iter < 100; ++iter) {
    const RatPoly f = oracle::random_rat_poly(rng, 10, 6);
    RatPoly g = oracle::random_rat_poly(rng, 6, 6);
    if (g.is_zero()) continue;
    ASSERT_EQ(div_exact(f * g, g), f);
    const auto [quot, r] = div_rem(f, g);
    ASSERT_EQ(quot * g + r, f);
    ASSERT_TRUE(r.is_zero() || r.size() < g.size());
  }
}

TEST(PolyTest, InnerProductProperties) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 1000; ++iter) {
    const IntPoly f = oracle::random_poly(rng, 16, 10);
    const IntPoly g = oracle::random_poly(rng, 16, 10);
    const IntPoly h = oracle::random_poly(rng, 16, 10);
    ASSERT_EQ(inner_product(f, g), inner_product(g, f));
    ASSERT_EQ(inner_product(f + h, g), inner_product(f, g) + inner_product(h, g));
    if (!f.is_zero()) ASSERT_GT(inner_product(f, f), 0);
    const std::size_t l = rng() % 10;
    ASSERT_EQ(inner_product(shift(f, l), shift(g, l)), inner_product(f, g));
  }
}

TEST(PolyTest, CyclicReduceIsARingHomomorphism) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 1000; ++iter) {
    const IntPoly f = oracle::random_poly(rng, 16, 10);
    const IntPoly g = oracle::random_poly(rng, 16, 10);
    const std::size_t n = 1 + rng() % 12;
    ASSERT_EQ(cyclic_reduce(f * g, n), cyclic_reduce(cyclic_reduce(f, n) * cyclic_reduce(g, n), n));
    ASSERT_EQ(cyclic_reduce(f + g, n), cyclic_reduce(cyclic_reduce(f, n) + cyclic_reduce(g, n), n));
    const IntPoly r = cyclic_reduce(f, n);
    ASSERT_LE(r.size(), n);
    // f - r is a multiple of X^n - 1.
    ASSERT_NO_THROW((void)div_exact(f - r, IntPoly::binomial(n, -1)));
  }
}

TEST(PolyTest, ExtendedGcdBezoutOnRandomInputs) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const RatPoly common = to_rational(oracle::random_nonzero_poly(rng, 3, 4));
    const RatPoly a = common * to_rational(oracle::random_poly(rng, 6, 5));
    const RatPoly b = common * to_rational(oracle::random_poly(rng, 6, 5));
    if (a.is_zero() && b.is_zero()) continue;
    const Bezout r = extended_gcd(a, b);
    ASSERT_EQ(r.s * a + r.t * b, r.gcd);
    ASSERT_EQ(r.gcd.lead(), 1);
    ASSERT_TRUE(rem(a, r.gcd).is_zero());
    ASSERT_TRUE(rem(b, r.gcd).is_zero());
    if (!a.is_zero() && !b.is_zero()) ASSERT_TRUE(rem(r.gcd, common).is_zero());
  }
}

TEST(PolyTest, RationalConversions) {
  EXPECT_EQ(to_integer(to_rational(poly({1, -2, 3}))), poly({1, -2, 3}));
  EXPECT_THROW((void)to_integer(rpoly({q(1, 2)})), std::domain_error);
  EXPECT_EQ(parse_rational("-3"), q(-3));
  EXPECT_EQ(parse_rational("4/6"), q(2, 3));
  EXPECT_EQ(parse_rational("+1/2"), q(1, 2));
  EXPECT_THROW((void)parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW((void)parse_rational("x"), std::invalid_argument);
  EXPECT_THROW((void)parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW((void)parse_rational(""), std::invalid_argument);
}

TEST(PolyTest, Rendering) {
  EXPECT_EQ(to_string(poly({1, 0, -1, 0, 1})), "X^4 - X^2 + 1");
  EXPECT_EQ(to_string(poly({-1, -1, 0, 1, 1})), "X^4 + X^3 - X - 1");
  EXPECT_EQ(to_string(poly({0, -3})), "-3*X");
  EXPECT_EQ(to_string(IntPoly{}), "0");
  EXPECT_EQ(to_string(rpoly({q(1, 2), q(-1, 2)})), "-1/2*X + 1/2");
  EXPECT_EQ(coeff_list(poly({1, 0, -1})), "[1, 0, -1]");
  EXPECT_EQ(coeff_list(IntPoly{}), "[]");
}

TEST(PolyTest, EvaluateUsesHorner) {
  EXPECT_EQ(poly({1, 1, 1}).evaluate(Integer(2)), 7);
  EXPECT_EQ(IntPoly{}.evaluate(Integer(9)), 0);
}

}  // namespace
}  // namespace cyclorth
