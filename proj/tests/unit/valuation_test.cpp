#include <gtest/gtest.h>

#include "oagw/valuation.hpp"
#include "test_support.hpp"

namespace oagw {
namespace {

constexpr Construction L = Construction::Lambda;

SeriesEnv env(std::initializer_list<std::pair<const char*, const char*>> bindings) {
  SeriesEnv out;
  for (const auto& [name, text] : bindings) out.emplace(name, parseSeries(text, L));
  return out;
}

std::string translated(std::string_view text) {
  return printRingFormula(translateToRing(parseValuationFormula(text)));
}

TEST(Translation, Examples) {
  EXPECT_EQ(translated("v(x) >= v(y)"), "E g1. ValRing(g1) & x = g1*y");
  EXPECT_EQ(translated("v(x) <= v(y)"), "E g1. ValRing(g1) & y = g1*x");
  EXPECT_EQ(translated("v(x) < v(y)"), "~(E g1. ValRing(g1) & x = g1*y)");
  EXPECT_EQ(translated("v(x) + v(y) = v(z)"),
            "~~(E g1. ValRing(g1) & x*y = g1*z) & ~~(E g2. ValRing(g2) & z = g2*x*y)");
  EXPECT_EQ(translated("v(x) = v(y) -> v(x*z) >= v(1)"),
            "(E g1. ValRing(g1) & x = g1*y) & (E g2. ValRing(g2) & y = g2*x) -> (E g3. ValRing(g3) & x*z = g3)");
}

TEST(Translation, ParseErrors) {
  EXPECT_THROW((void)parseValuationFormula("v(x) >= "), ParseError);
  EXPECT_THROW((void)parseValuationFormula("v(x) + v(y) < v(z)"), ParseError);
  EXPECT_THROW((void)parseValuationFormula("v(E) = v(x)"), ParseError);
}

TEST(Translation, ReflexivityHoldsOnBothSides) {
  const auto f = parseValuationFormula("v(x) = v(x)");
  for (const char* x : {"0", "1", "2 * t^{G2[0].s: -1} + t^{G1[0].c: 3}"}) {
    const SeriesEnv e = env({{"x", x}});
    EXPECT_TRUE(evaluateValuation(f, e)) << x;
    EXPECT_TRUE(evaluateRing(translateToRing(f), e)) << x;
  }
}

TEST(Translation, ZeroHasInfiniteValuation) {
  const SeriesEnv e = env({{"x", "0"}, {"y", "t^{G2[0].c: 3}"}, {"z", "t^{G1[0].c: -1}"}});
  for (const char* text : {"v(z*z) > v(x*y)", "v(z) < v(x)", "v(x) >= v(y)", "v(x) + v(y) = v(x)", "v(x) = v(x*y)"}) {
    const auto f = parseValuationFormula(text);
    EXPECT_EQ(evaluateValuation(f, e), evaluateRing(translateToRing(f), e)) << text;
  }
  EXPECT_FALSE(evaluateValuation(parseValuationFormula("v(z*z) > v(x*y)"), e));
  EXPECT_TRUE(evaluateValuation(parseValuationFormula("v(z) < v(x)"), e));
}

TEST(Translation, GroupAndRingSidesAgree) {
  const char* statements[] = {"v(x) >= v(y)", "v(x*y) < v(z)", "v(x) + v(y) = v(z)", "v(x) = v(y*z)",
                              "v(x) > v(1) | v(y) <= v(z)", "~(v(x*x) = v(y))"};
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = caseRng(61, i);
    SeriesEnv e{{"x", randomSeries(L, {}, rng)}, {"y", randomSeries(L, {}, rng)}, {"z", randomSeries(L, {}, rng)}};
    if (i % 3 == 0) e.at("y") = e.at("x") * HahnSeries::power(GroupElement::unit(L, Position::g1Square(2, 0)));
    for (const char* text : statements) {
      const auto f = parseValuationFormula(text);
      ASSERT_EQ(evaluateValuation(f, e), evaluateRing(translateToRing(f), e)) << text << " at case " << i;
    }
  }
}

TEST(Translation, RingSideRejectsOtherQuantifiers) {
  const RingFormula f = RingFormula::forall("g", RingFormula::atom(ValRingAtom{SeriesProduct::of({"g"})}));
  EXPECT_THROW((void)evaluateRing(f, env({{"x", "1"}})), PreconditionError);
  EXPECT_THROW((void)evaluateValuation(parseValuationFormula("v(x) < v(w)"), env({{"x", "1"}})), PreconditionError);
}

}  // namespace
}  // namespace oagw
