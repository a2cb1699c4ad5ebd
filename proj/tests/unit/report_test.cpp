#include <gtest/gtest.h>
#include <json.hpp>

#include "oagw/audit.hpp"
#include "oagw/report.hpp"
#include "test_support.hpp"

namespace oagw {
namespace {

SuiteReport sample() {
  SuiteReport r;
  r.suite = "demo";
  r.construction = Construction::Gamma;
  r.seed = 9;
  r.add(101, CaseStatus::Pass, "ok").inputs.emplace_back("a", "{G2[0].c: 1}");
  r.add(102, CaseStatus::Unknown);
  r.add(103, CaseStatus::Fail, "bad");
  r.wallTimeMs = 12.5;
  return r;
}

TEST(Report, CountsAndSummary) {
  const SuiteReport r = sample();
  EXPECT_EQ(r.counts(), (SuiteCounts{1, 1, 1}));
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.cases[2].index, 2u);
  EXPECT_EQ(r.summary(), "demo [gamma] pass=1 fail=1 unknown=1");
}

TEST(Report, JsonSchemaIsStable) {
  const auto doc = nlohmann::json::parse(sample().toJson());
  EXPECT_EQ(doc["suite"], "demo");
  EXPECT_EQ(doc["construction"], "gamma");
  EXPECT_EQ(doc["seed"], 9);
  EXPECT_EQ(doc["counts"]["pass"], 1);
  EXPECT_EQ(doc["counts"]["fail"], 1);
  EXPECT_EQ(doc["counts"]["unknown"], 1);
  ASSERT_EQ(doc["cases"].size(), 3u);
  EXPECT_EQ(doc["cases"][0]["inputs"]["a"], "{G2[0].c: 1}");
  EXPECT_EQ(doc["cases"][1]["status"], "unknown");
  EXPECT_EQ(doc["cases"][2]["seed"], 103);
  EXPECT_FALSE(doc.contains("wallTimeMs"));
  EXPECT_EQ(nlohmann::json::parse(sample().toJson(true))["wallTimeMs"], 12.5);
}

TEST(ClosureAudit, EmptyCorpusGivesEmptyReport) {
  const Domain sub{Construction::Lambda, EmbeddingId{EmbeddingKind::F1, Construction::Lambda}};
  const Domain sup{Construction::Lambda, std::nullopt};
  const SuiteReport r = closureAudit(sub, sup, {}, FragmentConfig{});
  EXPECT_TRUE(r.cases.empty());
  EXPECT_TRUE(r.passed());
}

TEST(ClosureAudit, RejectsBindingsOutsideTheSubstructure) {
  const Domain sub{Construction::Lambda, EmbeddingId{EmbeddingKind::F1, Construction::Lambda}};
  const Domain sup{Construction::Lambda, std::nullopt};
  const std::vector<CorpusEntry> corpus{
      {parseFormula("E x. x < a", Construction::Lambda), Env{{"a", test::lam("{G2[0].c: 1}")}}}};
  EXPECT_THROW((void)closureAudit(sub, sup, corpus, FragmentConfig{}), PreconditionError);
}

TEST(Corpus, DeterministicAndInTheImage) {
  for (Construction c : test::kBoth) {
    for (CorpusKind kind : {CorpusKind::Exists, CorpusKind::ExistsForall}) {
      const auto a = generateCorpus(kind, c, 8, 5);
      const auto b = generateCorpus(kind, c, 8, 5);
      ASSERT_EQ(a.size(), 8u);
      const EmbeddingId f1{EmbeddingKind::F1, c};
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].formula, b[i].formula);
        EXPECT_EQ(a[i].formula.kind(), Connective::Exists);
        EXPECT_TRUE(freeVariables(a[i].formula).empty());
        for (const auto& k : formulaConstants(a[i].formula)) EXPECT_TRUE(inImage(f1, k)) << formatElement(k);
      }
    }
  }
  EXPECT_THROW((void)parseCorpusKind("forall"), PreconditionError);
}

}  // namespace
}  // namespace oagw
