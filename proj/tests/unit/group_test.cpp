#include <gtest/gtest.h>

#include "oagw/group.hpp"
#include "oagw/random.hpp"
#include "test_support.hpp"

namespace oagw {
namespace {

using test::gam;
using test::kBoth;
using test::lam;

// ------------------------------------------------------------------ order

TEST(GroupOrder, InnerSlotsAreArchimedeanClasses) {
  // c1 exceeds every integer multiple of c2.
  EXPECT_EQ(cmp(lam("{G1[0].s[0]: c1}"), lam("{G1[0].s[0]: 2*c2}")), std::strong_ordering::greater);
  EXPECT_EQ(cmp(lam("{G1[0].s[0]: c1}"), lam("{G1[0].s[0]: 1000000*c2}")), std::strong_ordering::greater);
  // Slot 0 (the integer generator) dominates every c_k.
  EXPECT_GT(lam("{G1[0].s[0]: 5}"), lam("{G1[0].s[0]: 1000*c1}"));
  EXPECT_GT(lam("{G1[0].s[0]: 1-c1}"), lam("{G1[0].s[0]: 0}"));
}

TEST(GroupOrder, ZeroEqualsZero) {
  EXPECT_EQ(cmp(GroupElement::zero(Construction::Lambda), lam("0")), std::strong_ordering::equal);
}

TEST(GroupOrder, G2PositionsDominateG1) {
  EXPECT_EQ(cmp(lam("{G2[0].c: 1}"), lam("{G1[0].s[0]: 1000000}")), std::strong_ordering::greater);
  EXPECT_GT(gam("{G2[3].c: 1}"), gam("{G2[0].s: 100, G1[0].c: 7}"));
}

TEST(GroupOrder, LayoutOfPositions) {
  // ... G2[1].c G2[1].s G2[0].c G2[0].s | G1[0].s[0] G1[0].s[1] ... G1[0].c G1[1].s[0] ...
  const std::vector<Position> ascending = {
      Position::g2Circle(1),   Position::g2Square(1),   Position::g2Circle(0), Position::g2Square(0),
      Position::g1Square(0, 0), Position::g1Square(0, 7), Position::g1Circle(0), Position::g1Square(1, 0),
  };
  for (std::size_t i = 0; i + 1 < ascending.size(); ++i) {
    EXPECT_LT(ascending[i], ascending[i + 1]) << toString(ascending[i]) << " vs " << toString(ascending[i + 1]);
  }
  EXPECT_EQ(Position::g2Square(0).successor(), Position::g1Square(0, 0));
  EXPECT_EQ(Position::g2Circle(0).successor(), Position::g2Square(0));
  EXPECT_EQ(Position::g1Circle(2).successor(), Position::g1Square(3, 0));
}

TEST(GroupOrder, MixedConstructionsThrow) {
  EXPECT_THROW((void)cmp(lam("{G2[0].c: 1}"), gam("{G2[0].c: 1}")), ConstructionMismatch);
  EXPECT_THROW((void)(lam("{G2[0].c: 1}") + gam("{G2[0].c: 1}")), ConstructionMismatch);
}

// ------------------------------------------------------------- arithmetic

TEST(GroupArithmetic, Examples) {
  const GroupElement a = lam("{G2[1].s: 3, G1[0].c: 1/2}");
  EXPECT_TRUE((a + (-a)).isZero());
  EXPECT_EQ(lam("{G1[0].s[0]: 1}") + lam("{G1[0].s[0]: 1+c1}"), lam("{G1[0].s[0]: 2+c1}"));
  EXPECT_EQ(lam("{G2[0].c: 1/2}") + lam("{G2[0].c: 1/2}"), lam("{G2[0].c: 1}"));
  EXPECT_EQ(3 * gam("{G1[2].c: 1/3}"), gam("{G1[2].c: 1}"));
}

TEST(GroupArithmetic, AbelianGroupLawsAndTranslationInvariance) {
  for (Construction c : kBoth) {
    for (std::uint64_t i = 0; i < 500; ++i) {
      Rng rng = caseRng(7, i);
      const GroupElement a = randomElement(c, rng), b = randomElement(c, rng), d = randomElement(c, rng);
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ((a + b) + d, a + (b + d));
      ASSERT_EQ(a - a, GroupElement::zero(c));
      ASSERT_EQ(cmp(a, b), cmp(a + d, b + d)) << formatElement(a) << " " << formatElement(b);
      ASSERT_EQ(a.sign() > 0, a > GroupElement::zero(c));
      ASSERT_EQ(abs(a).sign() >= 0, true);
    }
  }
}

// ------------------------------------------------------------- divisibility

TEST(GroupDivisibility, Examples) {
  EXPECT_TRUE(isDivisible(lam("{G1[0].s[0]: 2+4*c1}"), 2));
  EXPECT_FALSE(isDivisible(lam("{G1[0].s[0]: 2+3*c1}"), 2));
  EXPECT_TRUE(isDivisible(lam("{G2[0].c: 1/3}"), 5));
  EXPECT_FALSE(isDivisible(gam("{G2[0].c: 1/3}"), 2));  // 1/6 is outside Z_(2)
  EXPECT_TRUE(isDivisible(gam("{G2[0].s: 1}"), 2));      // 1/2 is in Z_(3)
  EXPECT_FALSE(isDivisible(gam("{G2[0].s: 1}"), 3));
  EXPECT_THROW((void)isDivisible(lam("{G2[0].c: 1}"), 1), PreconditionError);
}

TEST(GroupDivisibility, LeadModExamples) {
  EXPECT_EQ(leadMod(lam("{G2[0].c: 1/2, G1[0].s[0]: 3}"), 2), (LeadDescriptor{Position::g1Square(0, 0), 0}));
  EXPECT_EQ(leadMod(lam("{G1[0].s[0]: 2+c1}"), 2), (LeadDescriptor{Position::g1Square(0, 0), 1}));
  EXPECT_EQ(leadMod(lam("{G2[0].c: 1}"), 2), std::nullopt);
  // 1 is 3-divisible in Z_(2) but not in Z_(3).
  EXPECT_EQ(leadMod(gam("{G2[0].s: 1, G2[0].c: 1}"), 3), (LeadDescriptor{Position::g2Square(0), 0}));
  EXPECT_EQ(leadMod(gam("{G2[0].s: 1, G2[0].c: 1}"), 2), (LeadDescriptor{Position::g2Circle(0), 0}));
}

TEST(GroupDivisibility, CongruenceIsDivisibilityOfTheDifference) {
  for (Construction c : kBoth) {
    for (std::uint64_t i = 0; i < 300; ++i) {
      Rng rng = caseRng(11, i);
      const GroupElement a = randomElement(c, rng), b = randomElement(c, rng);
      for (unsigned long n : {2UL, 3UL}) {
        ASSERT_EQ(congruent(a, b, n), isDivisible(b - a, n));
        ASSERT_TRUE(congruent(a, a + static_cast<long>(n) * b, n));
      }
    }
  }
}

// ------------------------------------------------------------------- psi

TEST(Psi, Examples) {
  EXPECT_TRUE(psi(2, lam("{G1[0].s[0]: 1}"), lam("{G1[0].s[0]: c1}")));
  EXPECT_TRUE(psi(2, lam("{G2[0].s: 5}"), -lam("{G1[0].s[0]: 1}")));
  EXPECT_FALSE(psi(2, lam("{G1[0].s[0]: 1}"), lam("{G1[0].s[0]: 1}")));
}

TEST(Psi, HandWitnessRefutesTheClosedFormFalseCase) {
  // a = b = {G1[0].s[0]: 1}: y = a - 2 * {G1[5].s[0]: 1} has 0 < y < b and y = a (mod 2).
  const GroupElement a = lam("{G1[0].s[0]: 1}");
  const GroupElement y = a - 2 * lam("{G1[5].s[0]: 1}");
  EXPECT_GT(y, GroupElement::zero(Construction::Lambda));
  EXPECT_LT(y, a);
  EXPECT_TRUE(congruent(y, a, 2));
}

TEST(Psi, AgreesWithDescriptorBlocks) {
  for (Construction c : kBoth) {
    for (std::uint64_t i = 0; i < 400; ++i) {
      Rng rng = caseRng(13, i);
      const GroupElement a = randomElement(c, rng), b = randomElement(c, rng);
      for (unsigned long n : {2UL, 3UL}) {
        ASSERT_EQ(psi(n, a, b), b.sign() <= 0 || descriptorBlocks(n, a, b));
      }
    }
  }
}

// ------------------------------------------------------------------ text

TEST(ElementText, ParseExamples) {
  EXPECT_EQ(lam("{G2[0].c: 1}"), GroupElement::unit(Construction::Lambda, Position::criticalCircle()));
  const GroupElement sq = lam("{G1[0].s[0]: 2+4*c1}");
  const auto slots = sq.component(Position::g1Square(0, 0));
  ASSERT_EQ(slots.size(), 2u);
  EXPECT_EQ(slots[0], (std::pair<std::uint32_t, Rational>{0, 2}));
  EXPECT_EQ(slots[1], (std::pair<std::uint32_t, Rational>{1, 4}));
  EXPECT_THROW((void)lam("{G1[0].s[0]: 1/2}"), ParseError);
  EXPECT_THROW((void)gam("{G1[0].s[0]: 1/3}"), ParseError);
  EXPECT_THROW((void)gam("{G1[0].c: 1/2}"), ParseError);
  EXPECT_THROW((void)GroupElement::unit(Construction::Gamma, Position::g1Circle(0), makeRational(1, 2)),
               PreconditionError);
  EXPECT_THROW((void)lam("{G1[0].s[0]: 1"), ParseError);
  EXPECT_EQ(parsePosition("G1[2].s[0]"), Position::g1Square(2, 0));
  EXPECT_EQ(parsePosition("G2[0].c"), Position::criticalCircle());
}

TEST(ElementText, FormatParseRoundTrip) {
  for (Construction c : kBoth) {
    for (std::uint64_t i = 0; i < 500; ++i) {
      Rng rng = caseRng(17, i);
      const GroupElement a = randomElement(c, rng);
      ASSERT_EQ(parseElement(formatElement(a), c), a) << formatElement(a);
    }
  }
  EXPECT_EQ(formatElement(GroupElement::zero(Construction::Gamma)), "0");
}

}  // namespace
}  // namespace oagw
