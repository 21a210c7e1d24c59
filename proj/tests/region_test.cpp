#include <gtest/gtest.h>

#include <random>

#include "hurwitz/region.hpp"

using namespace hurwitz;

namespace {

GenCircleConstraint random_constraint(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-6, 6);
  for (;;) {
    long a = std::uniform_int_distribution<long>(0, 3)(rng);
    GaussianInt b(c(rng), c(rng));
    long cc = c(rng);
    if (a == 0 && b.is_zero()) continue;
    // keep circles real: |b|^2 > a c
    if (a > 0 && !(b.norm() > a * cc)) continue;
    return GenCircleConstraint(a, b, cc, rng() & 1 ? Sense::Negative : Sense::Positive);
  }
}

GaussianRational random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-500, 500);
  return GaussianRational(GaussianInt(c(rng), c(rng)), GaussianInt(std::uniform_int_distribution<long>(1, 97)(rng)));
}

Region four_disks_outside() {
  return Region({GenCircleConstraint::outside_disk(1, 1), GenCircleConstraint::outside_disk(-1, 1),
                 GenCircleConstraint::outside_disk(GaussianInt(0, 1), 1),
                 GenCircleConstraint::outside_disk(GaussianInt(0, -1), 1)});
}

}  // namespace

TEST(Constraint, CanonicalCoefficients) {
  GenCircleConstraint c(2, GaussianInt(0), -2, Sense::Negative);
  EXPECT_EQ(c.a(), 1);
  EXPECT_EQ(c.c(), -1);
  EXPECT_EQ(c, GenCircleConstraint::inside_disk(0, 1));
  EXPECT_THROW(GenCircleConstraint(0, GaussianInt(0), 5, Sense::Negative), std::invalid_argument);
  GenCircleConstraint line = GenCircleConstraint::re_less(Rational(1, 2));
  EXPECT_TRUE(line.is_line());
  EXPECT_TRUE(line.holds_at(Rational(0), Rational(7)));
  EXPECT_FALSE(line.holds_at(Rational(1, 2), Rational(0)));
  EXPECT_EQ(line.complemented().complemented(), line);
}

TEST(Constraint, InversionAndTranslationMoveMembership) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    GenCircleConstraint c = random_constraint(rng);
    GaussianInt t(std::uniform_int_distribution<long>(-3, 3)(rng), std::uniform_int_distribution<long>(-3, 3)(rng));
    EXPECT_EQ(c.inverted().inverted(), c);
    EXPECT_EQ(c.translated(t).translated(-t), c);
    for (int j = 0; j < 100; ++j) {
      GaussianRational z = random_point(rng);
      if (z.is_zero()) continue;
      ASSERT_EQ(c.holds_at(z), c.inverted().holds_at(z.reciprocal())) << c.to_string() << " at " << to_string(z);
      ASSERT_EQ(c.holds_at(z), c.translated(t).holds_at(z + GaussianRational(t))) << c.to_string();
    }
  }
}

TEST(Region, InvertedSquareIsOutsideFourDisks) {
  Region img = invert_region(Region::open_fundamental_domain());
  EXPECT_TRUE(regions_equal(img, four_disks_outside()));
  EXPECT_TRUE(regions_equal(invert_region(img), Region::open_fundamental_domain()));
}

TEST(Region, TranslationByZero) {
  Region sq = Region::open_fundamental_domain();
  EXPECT_EQ(translate_region(sq, 0), sq);
  Region moved = translate_region(sq, GaussianInt(2, -1));
  EXPECT_TRUE(moved.contains(GaussianRational(GaussianInt(2, -1))));
  EXPECT_FALSE(moved.contains(GaussianRational(0)));
}

TEST(Region, EmptinessAndWitnesses) {
  Region sq = Region::open_fundamental_domain();
  auto w = find_witness(sq);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(sq.contains(w->x, w->y));
  EXPECT_TRUE(is_empty(sq.intersect(Region({GenCircleConstraint::re_greater(Rational(1, 2))}))));
  // tangent disks share no interior
  Region two = Region({GenCircleConstraint::inside_disk(1, 1), GenCircleConstraint::inside_disk(-1, 1)});
  EXPECT_TRUE(is_empty(two));
  EXPECT_TRUE(is_empty(Region::nothing()));
  EXPECT_FALSE(is_empty(Region()));
}

TEST(Region, SubsetAndEquality) {
  Region sq = Region::open_fundamental_domain();
  Region left = sq.intersect(Region({GenCircleConstraint::re_less(0)}));
  EXPECT_TRUE(is_subset(left, sq));
  EXPECT_FALSE(is_subset(sq, left));
  Region redundant = sq.intersect(Region({GenCircleConstraint::re_less(3)}));
  EXPECT_TRUE(regions_equal(redundant, sq));
  EXPECT_EQ(canonicalize(redundant).constraints().size(), 4u);
}

TEST(Region, CanonicalInSquare) {
  auto full = canonical_in_square({GenCircleConstraint::outside_disk(GaussianInt(3, 3), 1)});
  ASSERT_TRUE(full.has_value());
  EXPECT_TRUE(extra_constraints(*full).empty());
  auto bite = canonical_in_square({GenCircleConstraint::outside_disk(1, 1)});
  ASSERT_TRUE(bite.has_value());
  EXPECT_EQ(extra_constraints(*bite).size(), 1u);
  EXPECT_FALSE(canonical_in_square({GenCircleConstraint::inside_disk(GaussianInt(2, 2), 1)}).has_value());
}

TEST(Region, FingerprintCountsGridPoints) {
  Fingerprint f = fingerprint(Region::open_fundamental_domain());
  size_t bits = 0;
  for (auto w : f) bits += static_cast<size_t>(__builtin_popcountll(w));
  EXPECT_EQ(bits, static_cast<size_t>(kGridSide * kGridSide));
  Fingerprint g = fingerprint(*canonical_in_square({GenCircleConstraint::outside_disk(1, 1)}));
  EXPECT_NE(f, g);
}
