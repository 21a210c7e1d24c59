#include <gtest/gtest.h>

#include "hurwitz/prototype.hpp"
#include "hurwitz/zaremba.hpp"

using namespace hurwitz;

namespace {

Integer max_norm(const Digits& ds) {
  Integer m = 0;
  for (const auto& d : ds) m = std::max(m, d.norm());
  return m;
}

}  // namespace

TEST(Certify, SeedExamples) {
  ZarembaCertificate a = certify(GaussianInt(-3, 1), 2);
  EXPECT_EQ(a.numerator, GaussianInt(2, 3));
  EXPECT_EQ(a.digits.digits, parse_digits("-3i, -2-3i"));

  ZarembaCertificate b = certify(2, 7);
  EXPECT_EQ(b.numerator, GaussianInt(19));
  EXPECT_EQ(b.digits.digits, parse_digits("7, -4, 5"));

  ZarembaCertificate c = certify(3, 6);
  EXPECT_EQ(c.numerator, GaussianInt(107));
  EXPECT_EQ(c.digits.digits, parse_digits("7, -5, -3, 7"));

  ZarembaCertificate d = certify(GaussianInt(-2, 1), 4);
  EXPECT_EQ(d.numerator, GaussianInt(5, -6));
  EXPECT_EQ(max_norm(d.digits.digits), 13);

  ZarembaCertificate e = certify(GaussianInt(-2, 1), 5);
  EXPECT_EQ(e.numerator, GaussianInt(13, -11));
  EXPECT_EQ(e.digits.digits, parse_digits("3i, 1-3i, 2-i, -2-2i"));
  EXPECT_TRUE(all_passed(e.transcript));
}

TEST(Certify, LowerSignsAreConjugates) {
  for (unsigned long k : {2ul, 5ul, 9ul, 16ul}) {
    ZarembaCertificate up = certify(GaussianInt(-3, 1), k);
    ZarembaCertificate down = certify(GaussianInt(-3, -1), k);
    EXPECT_TRUE(all_passed(down.transcript));
    EXPECT_EQ(down.denominator(), up.denominator().conj());
  }
}

TEST(Certify, AllPassUpToModestPowers) {
  for (GaussianInt b : {GaussianInt(-3, 1), GaussianInt(-3, -1), GaussianInt(-2, 1), GaussianInt(-2, -1), GaussianInt(5)})
    for (unsigned long k = 1; k <= 20; ++k) {
      ZarembaCertificate c = certify(b, k);
      EXPECT_TRUE(all_passed(verify_certificate(c))) << to_string(b) << "^" << k;
      EXPECT_LE(max_norm(c.digits.digits), eta_sq_for(b));
    }
  for (GaussianInt b : {GaussianInt(2), GaussianInt(3)})
    for (unsigned long k = 1; k <= 40; ++k) EXPECT_TRUE(all_passed(certify(b, k).transcript)) << to_string(b) << "^" << k;
}

TEST(Certify, FoldingDoublesTheLength) {
  // 3^(2j+1) folds 3^j with x = 3, 3^(2j) with the unit fold
  for (unsigned long k = 8; k <= 40; ++k) {
    ZarembaCertificate c = certify(3, k);
    if (!c.folded_is_canonical) continue;
    size_t parent = certify(3, k / 2).digits.digits.size();
    EXPECT_EQ(c.digits.digits.size(), k % 2 ? 2 * parent + 1 : 2 * parent) << k;
  }
  // 2^(2j+3) = 8 (2^j)^2, above the listed seeds
  for (unsigned long j = 6; j <= 16; ++j) {
    ZarembaCertificate c = certify(2, 2 * j + 3);
    if (!c.folded_is_canonical) continue;
    EXPECT_EQ(c.digits.digits.size(), 2 * certify(2, j).digits.digits.size() + 1) << j;
  }
}

TEST(Certify, WindowsForMinusTwoPlusI) {
  for (unsigned long k = 4; k <= 24; ++k) {
    const Digits& d = certify(GaussianInt(-2, 1), k).digits.digits;
    for (const auto& a : d) {
      EXPECT_GE(a.norm(), 5);
      EXPECT_LE(a.norm(), 18);
    }
  }
}

TEST(Certify, UnsupportedBase) {
  EXPECT_THROW(certify(GaussianInt(7), 3), std::invalid_argument);
  EXPECT_THROW(certify(2, 0), std::invalid_argument);
  EXPECT_FALSE(supported_base(GaussianInt(-4, 1)));
  EXPECT_EQ(eta_sq_for(5), 49);
}

TEST(Verify, TamperedDigitsFail) {
  ZarembaCertificate c = certify(GaussianInt(-2, 1), 6);
  c.digits.digits[1] = -c.digits.digits[1];
  Transcript t = verify_certificate(c);
  EXPECT_FALSE(all_passed(t));
  EXPECT_FALSE(t.front().passed);  // evaluation
}

TEST(Verify, WrongNumeratorFails) {
  ZarembaCertificate c = certify(3, 5);
  c.numerator += GaussianInt(3);
  EXPECT_FALSE(all_passed(verify_certificate(c)));
}

TEST(SeedTable, ListedDigitsAgainstExpansions) {
  // three listed rows carry misprints; everything else expands digit-for-digit
  size_t mismatches = 0, rows = 0;
  for (GaussianInt b : {GaussianInt(-3, 1), GaussianInt(-3, -1), GaussianInt(-2, 1), GaussianInt(-2, -1), GaussianInt(2),
                        GaussianInt(3), GaussianInt(5)})
    for (const auto& s : seed_table(b)) {
      ++rows;
      if (hcf_expand(s.numerator, pow(b, s.power)).digits != s.digits) ++mismatches;
    }
  EXPECT_EQ(rows, 2u * 2 + 7u * 2 + 13 + 7 + 2);
  EXPECT_EQ(mismatches, 4u);
}

TEST(Remark, FoldingRealCertificatesWithTwo) {
  for (unsigned long k : {3ul, 5ul, 6ul}) {
    ZarembaCertificate c = certify(3, k);
    EXPECT_TRUE(folding_with_two_breaks(c, 2)) << k;
    EXPECT_TRUE(folding_with_two_breaks(c, -2)) << k;
  }
}

TEST(Oracle, SmallDenominators) {
  OracleResult two = brute_force_min_K(2);
  EXPECT_EQ(two.k_sq, 4);
  EXPECT_EQ(two.numerator, GaussianInt(-1));
  OracleResult five = brute_force_min_K(5);
  EXPECT_EQ(five.k_sq, 4);
  OracleResult m = brute_force_min_K(pow(GaussianInt(-2, 1), 4), kOracleNormCap, 1);
  EXPECT_LE(m.k_sq, 18);
  EXPECT_EQ(m.scanned, 624u);
  EXPECT_THROW(brute_force_min_K(GaussianInt(5000), kOracleNormCap), std::invalid_argument);
}

TEST(Oracle, ThreadCountDoesNotChangeTheAnswer) {
  GaussianInt den = pow(GaussianInt(3), 4);
  OracleResult a = brute_force_min_K(den, kOracleNormCap, 1);
  OracleResult b = brute_force_min_K(den, kOracleNormCap, 3);
  EXPECT_EQ(a.numerator, b.numerator);
  EXPECT_EQ(a.k_sq, b.k_sq);
}

TEST(Oracle, NeverWorseThanCertificates) {
  for (unsigned long k = 1; k <= 5; ++k) {
    GaussianInt b(-2, 1);
    EXPECT_LE(brute_force_min_K(pow(b, k)).k_sq, max_norm(certify(b, k).digits.digits)) << k;
  }
  for (unsigned long k = 1; k <= 6; ++k) EXPECT_LE(brute_force_min_K(pow(GaussianInt(2), k)).k_sq, max_norm(certify(2, k).digits.digits));
}
