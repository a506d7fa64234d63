#include <gtest/gtest.h>

#include <random>

#include "cyclorth/serialize.hpp"
#include "oracles.hpp"

namespace cyclorth {
namespace {

TEST(SerializeTest, PolynomialsRoundTrip) {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 200; ++iter) {
    const IntPoly f = oracle::random_poly(rng, 20, 1000);
    ASSERT_EQ(json::to_int_poly(json::from_poly(f)), f);
    const RatPoly g = oracle::random_rat_poly(rng, 20, 1000);
    ASSERT_EQ(json::to_rat_poly(json::from_poly(g)), g);
  }
  EXPECT_EQ(json::from_poly(oracle::poly({1, 0, -1})).dump(), R"(["1","0","-1"])");
  EXPECT_EQ(json::from_poly(IntPoly{}).dump(), "[]");
  EXPECT_THROW((void)json::to_int_poly(json::Json::parse("[1]")), std::invalid_argument);
  EXPECT_THROW((void)json::to_int_poly(json::Json::parse(R"(["1.5"])")), std::invalid_argument);
}

TEST(SerializeTest, HugeCoefficientsKeepPrecision) {
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 7, 90);
  const IntPoly f(std::vector<Integer>{big, -big});
  EXPECT_EQ(json::to_int_poly(json::Json::parse(json::from_poly(f).dump())), f);
}

TEST(SerializeTest, StatsRoundTrip) {
  const CoeffStats s = stats(phi(105), 105);
  EXPECT_EQ(json::to_stats(json::from_stats(s)), s);
  const CoeffStats zero = stats(IntPoly{}, 3);
  const json::Json j = json::from_stats(zero);
  EXPECT_TRUE(j.at("degree").is_null());
  EXPECT_EQ(json::to_stats(j), zero);
}

TEST(SerializeTest, CertificateRoundTrip) {
  VerificationCertificate cert = verify_theorem(12);
  cert.violations.push_back({2, 0, 3, 0, Integer(-17)});
  cert.pass = false;
  const json::Json doc = json::certificate_document(cert);
  EXPECT_EQ(doc.size(), 4u);
  EXPECT_EQ(doc.at("command"), "verify");
  const VerificationCertificate back = json::to_certificate(json::Json::parse(doc.dump()));
  EXPECT_EQ(back.n, cert.n);
  EXPECT_EQ(back.checks_performed, cert.checks_performed);
  EXPECT_EQ(back.pass, cert.pass);
  EXPECT_EQ(back.violations, cert.violations);
  EXPECT_EQ(back.lemma_checked, cert.lemma_checked);
  EXPECT_EQ(back.version, cert.version);
  EXPECT_EQ(back.timestamp, cert.timestamp);

  EXPECT_FALSE(json::certificate_result(cert, false).contains("timestamp"));
}

TEST(SerializeTest, GramRoundTrip) {
  for (std::uint64_t n : {1u, 2u, 6u, 12u}) {
    const GramReport g = gram_matrix(n);
    EXPECT_EQ(json::to_gram(json::Json::parse(json::from_gram(g).dump())), g);
  }
  json::Json broken = json::from_gram(gram_matrix(2));
  broken["entries"].erase(0);
  EXPECT_THROW((void)json::to_gram(broken), std::invalid_argument);
}

TEST(SerializeTest, EnvelopeHasExactlyFourKeys) {
  const json::Json env = json::envelope("phi", {{"n", 12}}, {{"x", 1}});
  ASSERT_EQ(env.size(), 4u);
  for (const char* key : {"command", "parameters", "result", "version"}) {
    EXPECT_TRUE(env.contains(key)) << key;
  }
  EXPECT_EQ(env.at("version"), version());
}

}  // namespace
}  // namespace cyclorth
