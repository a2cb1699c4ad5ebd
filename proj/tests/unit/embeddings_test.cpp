#include <gtest/gtest.h>

#include "oagw/embeddings.hpp"
#include "oagw/random.hpp"
#include "test_support.hpp"

namespace oagw {
namespace {

using test::gam;
using test::kBoth;
using test::lam;

const EmbeddingId kF1{EmbeddingKind::F1, Construction::Lambda};
const EmbeddingId kF2{EmbeddingKind::F2, Construction::Lambda};

TEST(Embeddings, F1Examples) {
  EXPECT_EQ(apply(kF1, lam("{G1[0].s[0]: 3+c2}")), lam("{G2[0].s: 3+c2}"));
  EXPECT_EQ(apply(kF1, lam("{G2[0].c: 1/3}")), lam("{G2[1].c: 1/3}"));
  EXPECT_EQ(apply(kF1, lam("{G1[2].c: 5/2}")), lam("{G1[2].c: 5/2}"));
  EXPECT_EQ(apply(kF1, lam("{G1[0].s[2]: 1}")), lam("{G1[0].s[1]: 1}"));
  const EmbeddingId gammaF1{EmbeddingKind::F1, Construction::Gamma};
  EXPECT_EQ(apply(gammaF1, gam("{G1[0].s[0]: 1/2}")), gam("{G2[0].s: 1/2}"));
}

TEST(Embeddings, PreimageExamples) {
  EXPECT_EQ(preimage(kF1, lam("{G2[0].c: 1}")), std::nullopt);
  EXPECT_EQ(preimage(kF1, lam("{G2[0].s: 3}")), lam("{G1[0].s[0]: 3}"));
  EXPECT_EQ(preimage(kF2, lam("{G1[0].s[5]: 1}")), std::nullopt);
  EXPECT_FALSE(inImage(kF1, lam("{G2[0].c: 1, G1[0].c: 1}")));
  EXPECT_TRUE(inImage(kF2, lam("{G2[0].c: 1, G1[1].s[0]: 1}")));
}

TEST(Embeddings, F2OnGammaRequiresOptIn) {
  EXPECT_THROW((void)apply(EmbeddingId{EmbeddingKind::F2, Construction::Gamma}, gam("{G1[0].c: 1}")), PreconditionError);
  EXPECT_NO_THROW((void)apply(EmbeddingId{EmbeddingKind::F2, Construction::Gamma, true}, gam("{G1[0].c: 1}")));
}

TEST(Embeddings, OrderEmbeddingLaws) {
  for (Construction c : kBoth) {
    for (EmbeddingKind k : {EmbeddingKind::F1, EmbeddingKind::F2}) {
      const EmbeddingId e{k, c, true};
      for (std::uint64_t i = 0; i < 500; ++i) {
        Rng rng = caseRng(31, i);
        const GroupElement a = randomElement(c, rng), b = randomElement(c, rng);
        ASSERT_EQ(apply(e, a + b), apply(e, a) + apply(e, b));
        ASSERT_EQ(cmp(apply(e, a), apply(e, b)), cmp(a, b));
        ASSERT_EQ(preimage(e, apply(e, a)), a);
        ASSERT_TRUE(inImage(e, apply(e, a)));
        const GroupElement x = randomElement(c, rng);
        if (auto pre = preimage(e, x)) {
          ASSERT_EQ(apply(e, *pre), x);
        }
      }
    }
  }
}

TEST(Perturbation, Examples) {
  const GroupElement t = lam("{G2[0].s: 1}");
  const std::vector<CongruenceConstraint> constraints{{2, t}};
  const GroupElement moved = perturbIntoImage(t, lam("{G1[5].s[0]: 1}"), constraints);
  EXPECT_EQ(moved, t + lam("{G1[6].s[0]: 1}"));
  EXPECT_FALSE(congruent(moved, t, 2));

  const GroupElement fresh = perturbIntoImage(lam("0"), lam("{G1[1].c: 1}"), {});
  EXPECT_GT(fresh, lam("0"));
  EXPECT_LT(fresh, lam("{G1[1].c: 1}"));
  EXPECT_TRUE(inImage(kF1, fresh));

  EXPECT_THROW((void)perturbIntoImage(lam("{G2[0].c: 1}"), lam("{G1[0].c: 1}"), {}), PreconditionError);
  EXPECT_THROW((void)perturbIntoImage(lam("0"), lam("0"), {}), PreconditionError);
}

TEST(Straddle, Examples) {
  auto [c1, d1] = straddleWitnesses(lam("{G1[0].s[0]: 3}"), 2);
  EXPECT_EQ(c1, lam("{G1[0].s[0]: 3-c1}"));
  EXPECT_EQ(d1, lam("{G1[0].s[0]: 3+c1}"));
  auto [c2, d2] = straddleWitnesses(lam("{G1[0].s[0]: 2+c1}"), 2);
  EXPECT_EQ(c2, lam("{G1[0].s[0]: 2+c1-c2}"));
  EXPECT_EQ(d2, lam("{G1[0].s[0]: 2+c1+c2}"));
  EXPECT_THROW((void)straddleWitnesses(lam("{G2[0].c: 1}"), 2), PreconditionError);
}

TEST(Straddle, EveryElementBetweenSharesTheDescriptor) {
  const GroupElement a = lam("{G1[0].s[0]: 2+c1, G1[1].c: 1}");
  const auto [c, d] = straddleWitnesses(a, 2);
  const LeadDescriptor want = *leadMod(a, 2);
  const GroupElement w = lam("{G1[0].s[0]: 2+c1}");
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = caseRng(37, i);
    // u = w + r with |r| < c2: r has an arbitrary c3 multiple plus later positions.
    std::vector<GroupElement::Term> r{{LeadDescriptor{Position::g1Square(0, 0), 3}, uniform(rng, -9, 9)}};
    const GroupElement noise = randomElement(Construction::Lambda, rng);
    for (const auto& t : noise.terms()) {
      if (Position::g1Square(0, 0) < t.index.position) r.push_back(t);
    }
    const GroupElement u = w + GroupElement::fromTerms(Construction::Lambda, r);
    ASSERT_TRUE(c < u && u < d) << formatElement(u);
    ASSERT_EQ(leadMod(u, 2), want) << formatElement(u);
  }
}

}  // namespace
}  // namespace oagw
