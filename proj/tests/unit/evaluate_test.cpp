#include <gtest/gtest.h>

#include "oagw/evaluate.hpp"
#include "oagw/fragment.hpp"
#include "oagw/random.hpp"
#include "test_support.hpp"

namespace oagw {
namespace {

using test::gam;
using test::kBoth;
using test::lam;

const Domain kLambda{Construction::Lambda, std::nullopt};

FragmentConfig withProbes(const Formula& f, const Env& env, unsigned k = 2, std::size_t cap = 4096) {
  std::vector<GroupElement> seeds = formulaConstants(f);
  for (const auto& [name, value] : env) seeds.push_back(value);
  FragmentConfig cfg{k, {}, cap, 0};
  cfg.generatorPool = probePool(seeds.empty() ? Construction::Lambda : seeds.front().construction(), seeds);
  return cfg;
}

TEST(Evaluate, HalvingWitness) {
  const Formula f = parseFormula("E x. x + x = a", Construction::Lambda);
  const Env env{{"a", lam("{G2[0].c: 1}")}};
  const EvalResult r = evaluate(f, env, withProbes(f, env), kLambda);
  ASSERT_EQ(r.verdict, Verdict::True);
  ASSERT_EQ(r.bindings.size(), 1u);
  EXPECT_EQ(r.bindings[0].second, lam("{G2[0].c: 1/2}"));
}

TEST(Evaluate, AtomsAreExact) {
  const EvalResult r = evaluate(parseFormula("0 < 0", Construction::Lambda), {}, FragmentConfig{}, kLambda);
  EXPECT_EQ(r.verdict, Verdict::False);
  EXPECT_TRUE(evaluateAtom(LtAtom{Term(), Term::variable("x")}, Env{{"x", lam("{G1[9].c: 1/9}")}}, Construction::Lambda));
}

TEST(Evaluate, UndersizedBoundsAreUnknown) {
  const Formula f = parseFormula("E x. cong(2, x, a) & 0 < x & x < b", Construction::Lambda);
  const Env env{{"a", lam("{G1[0].s[0]: 1}")}, {"b", lam("{G1[0].s[0]: 1}")}};
  const EvalResult r = evaluate(f, env, FragmentConfig{1, {}, 3, 0}, kLambda);
  EXPECT_EQ(r.verdict, Verdict::Unknown);
  EXPECT_FALSE(r.reason.empty());
  // With probes the hand witness a - 2 * (unit far right) is found.
  EXPECT_EQ(evaluate(f, env, withProbes(f, env), kLambda).verdict, Verdict::True);
}

TEST(Evaluate, UniversalCounterexample) {
  const Formula f = parseFormula("A y. ~(0 < y & y < b & cong(2, y, a))", Construction::Lambda);
  const Env env{{"a", lam("{G1[0].s[0]: 1}")}, {"b", lam("{G1[0].s[0]: 1}")}};
  const EvalResult r = evaluate(f, env, withProbes(f, env), kLambda);
  ASSERT_EQ(r.verdict, Verdict::False);
  EXPECT_FALSE(r.bindings.empty());
}

TEST(Evaluate, ImageDomainRestrictsWitnesses) {
  const Formula f = parseFormula("E x. x = {G2[0].c: 1}", Construction::Lambda);
  const Domain image{Construction::Lambda, EmbeddingId{EmbeddingKind::F1, Construction::Lambda}};
  EXPECT_EQ(evaluate(f, {}, withProbes(f, {}), kLambda).verdict, Verdict::True);
  EXPECT_EQ(evaluate(f, {}, withProbes(f, {}), image).verdict, Verdict::Unknown);
}

TEST(Evaluate, UnboundFreeVariableThrows) {
  EXPECT_THROW((void)evaluate(parseFormula("x < y", Construction::Lambda), Env{{"x", lam("0")}}, FragmentConfig{}, kLambda),
               PreconditionError);
}

TEST(RPhi, DegenerateSystemIsPositivityOfTheBound) {
  RPhiAtom r;
  r.groups.push_back(BoundGroup{{"z"}, Term::variable("a")});
  for (const char* a : {"{G1[0].c: 1}", "0", "{G2[0].s: -1}"}) {
    const Env env{{"a", lam(a)}};
    EXPECT_EQ(decideRPhi(r, env, Construction::Lambda), lam(a).sign() > 0) << a;
  }
}

TEST(RPhi, NormalFormAgreesWithDecision) {
  // ~E z1 z2 (0<z1<a1 & 0<z2<a2 & z1 =2 b1 & z2 =2 b2 & z1 =2 z2), plus single-variable shapes.
  const char* shapes[] = {
      "rphi(z1 < a1, z2 < a2; cong(2, z1, b1) & cong(2, z2, b2) & cong(2, z1, z2))",
      "rphi(z < a1; cong(2, z, b1))",
      "rphi(z < a1; cong(3, z, b1) & cong(3, b1, b2))",
      "rphi([z1, z2] < a1; cong(2, z1, b1) & cong(2, z2, b2))",
  };
  for (Construction c : kBoth) {
    for (const char* text : shapes) {
      const RPhiAtom atom = std::get<RPhiAtom>(parseFormula(text, c).atomValue());
      for (std::uint64_t i = 0; i < 400; ++i) {
        Rng rng = caseRng(41, i);
        Env env;
        for (const char* v : {"a1", "a2", "b1", "b2"}) env[v] = randomElement(c, rng);
        const auto normal = negRphiNormalize(atom, env, c);
        ASSERT_TRUE(normal.has_value()) << text;
        const bool viaNormalForm =
            evaluate(*normal, {}, FragmentConfig{}, Domain{c, std::nullopt}).verdict == Verdict::True;
        ASSERT_EQ(viaNormalForm, !decideRPhi(atom, env, c)) << text << " " << printFormula(*normal);
      }
    }
  }
}

TEST(RPhi, DecisionMatchesBoundedSearchWitnesses) {
  // A witness found by search must agree with the exact decision.
  const Formula f = parseFormula("rphi(z < a; cong(2, z, b))", Construction::Gamma);
  const RPhiAtom atom = std::get<RPhiAtom>(f.atomValue());
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = caseRng(43, i);
    const Env env{{"a", randomPositive(Construction::Gamma, rng)}, {"b", randomElement(Construction::Gamma, rng)}};
    const Formula search = parseFormula("E z. 0 < z & z < a & cong(2, z, b)", Construction::Gamma);
    const EvalResult r = evaluate(search, env, withProbes(search, env, 2, 600), Domain{Construction::Gamma, std::nullopt});
    if (r.verdict == Verdict::True) {
      ASSERT_TRUE(decideRPhi(atom, env, Construction::Gamma));
    }
  }
}

TEST(Transfer, MovesCriticalCircleEntries) {
  const Env values{{"x", gam("{G2[0].c: 1, G1[0].c: 1}")}};
  const auto moved = transferIntoF1Image(values, 2, [](const Env&) { return true; });
  ASSERT_TRUE(moved.has_value());
  const GroupElement& x = moved->at("x");
  EXPECT_FALSE(x.hasEntryAt(Position::criticalCircle()));
  EXPECT_TRUE(x.hasEntryAt(Position::g2Square(0)));
  EXPECT_TRUE(isDivisible(x - gam("{G1[0].c: 1}"), 2));
  EXPECT_EQ(transferIntoF1Image(values, 2, [](const Env&) { return false; }, 3), std::nullopt);
}

}  // namespace
}  // namespace oagw
