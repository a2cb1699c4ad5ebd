#include <gtest/gtest.h>

#include "oagw/audit.hpp"
#include "oagw/suites.hpp"
#include "test_support.hpp"

namespace oagw {
namespace {

SuiteOptions small(Construction c, std::size_t samples) {
  SuiteOptions o;
  o.construction = c;
  o.samples = samples;
  return o;
}

TEST(Suites, CatalogNamesResolve) {
  ASSERT_EQ(suiteCatalog().size(), 15u);
  for (const auto& info : suiteCatalog()) {
    ASSERT_NE(findSuite(info.name), nullptr);
    EXPECT_FALSE(info.lambdaOnly && info.gammaOnly) << info.name;
  }
  EXPECT_EQ(findSuite("no-such-suite"), nullptr);
  EXPECT_THROW((void)runSuite("no-such-suite", SuiteOptions{}), PreconditionError);
}

TEST(Suites, ConstructionRestrictions) {
  EXPECT_THROW((void)runSuite("lambda1-formula", small(Construction::Gamma, 1)), ConstructionMismatch);
  EXPECT_THROW((void)runSuite("gamma-counterexample", small(Construction::Lambda, 1)), ConstructionMismatch);
}

TEST(Suites, ReportsAreReproducible) {
  for (const char* name : {"psi-vs-search", "embedding-laws", "hahn-ring", "f1-exists-closure"}) {
    const SuiteReport a = runSuite(name, small(Construction::Gamma, 12));
    const SuiteReport b = runSuite(name, small(Construction::Gamma, 12));
    EXPECT_EQ(a.toJson(), b.toJson()) << name;
    EXPECT_EQ(a.suite, name);
    EXPECT_EQ(a.cases.size(), 12u);
    EXPECT_TRUE(a.wallTimeMs.has_value());
    SuiteOptions other = small(Construction::Gamma, 12);
    other.seed = 43;
    EXPECT_NE(runSuite(name, other).toJson(), a.toJson()) << name;
  }
}

TEST(Suites, SmallRunsPass) {
  for (const auto& info : suiteCatalog()) {
    for (Construction c : test::kBoth) {
      if ((info.lambdaOnly && c != Construction::Lambda) || (info.gammaOnly && c != Construction::Gamma)) continue;
      if (info.name == "gamma-counterexample") continue;  // covered below with a smaller bound
      const SuiteReport r = runSuite(info.name, small(c, 10));
      EXPECT_TRUE(r.passed()) << r.summary();
    }
  }
}

TEST(Demos, GammaCounterexampleAtSmallBound) {
  const SuiteReport r = demoGammaCounterexample(2);
  EXPECT_EQ(r.counts(), (SuiteCounts{static_cast<std::size_t>(r.cases.size()), 0, 0}));
  EXPECT_GE(r.cases.size(), 4u);
}

TEST(Demos, LambdaRepairFindsImageWitnesses) {
  const SuiteReport r = demoLambdaRepair();
  ASSERT_EQ(r.counts().pass, r.cases.size());
  EXPECT_NE(r.cases[0].detail.find("leadMod(x, 2) = (G2[0].s, 1)"), std::string::npos) << r.cases[0].detail;
}

TEST(Demos, HaWitnessOverPrimeField) {
  EXPECT_TRUE(demoHaWitness(CoefficientField::primeField(7)).passed());
}

TEST(Demos, IntervalSentenceFlaggedOnGammaOnly) {
  // The three-parameter sentence holds in Gamma with a witness on the critical circle.
  const Construction g = Construction::Gamma;
  const GroupElement b = GroupElement::unit(g, Position::g2Square(0));
  const GroupElement c = GroupElement::unit(g, Position::g2Square(1));
  const std::vector<CorpusEntry> corpus{{intervalSentence(b, c), {}}};
  FragmentConfig cfg{2, {GroupElement::unit(g, Position::g2Circle(1)), GroupElement::unit(g, Position::g1Square(0, 0)),
                         GroupElement::unit(g, Position::g1Circle(0)), GroupElement::unit(g, Position::criticalCircle())},
                     4096, 0};
  const SuiteReport r = closureAudit(Domain{g, EmbeddingId{EmbeddingKind::F1, g}}, Domain{g, std::nullopt}, corpus, cfg);
  ASSERT_EQ(r.cases.size(), 1u);
  EXPECT_EQ(r.cases[0].status, CaseStatus::Fail) << r.cases[0].detail;
  EXPECT_NE(r.cases[0].detail.find("violation"), std::string::npos);
}

}  // namespace
}  // namespace oagw
