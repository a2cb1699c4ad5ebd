#include <gtest/gtest.h>

#include "oagw/formula.hpp"
#include "test_support.hpp"

namespace oagw {
namespace {

using test::lam;

Formula parseL(std::string_view text) { return parseFormula(text, Construction::Lambda); }

TEST(FormulaParse, QuantifierPrefixAndImplication) {
  const Formula f = parseL("E x. A y. (0 < y & y < x) -> ~cong(2, y, {G2[0].c: 1})");
  ASSERT_EQ(f.kind(), Connective::Exists);
  EXPECT_EQ(f.variable(), "x");
  ASSERT_EQ(f.child().kind(), Connective::Forall);
  EXPECT_EQ(f.child().variable(), "y");
  EXPECT_EQ(f.child().child().kind(), Connective::Implies);
  EXPECT_TRUE(freeVariables(f).empty());
  EXPECT_EQ(classify(f).prefix, "∃∀");
  EXPECT_EQ(classify(f).label, "Σ2");
}

TEST(FormulaParse, Errors) {
  EXPECT_THROW((void)parseL("cong(1, x, y)"), ParseError);
  EXPECT_THROW((void)parseL("x <"), ParseError);
  EXPECT_THROW((void)parseL("E x. x < {G1[0].s[0]: 1/2}"), ParseError);
  EXPECT_THROW((void)parseL("(x < y"), ParseError);
}

TEST(FormulaParse, PrintParseRoundTrip) {
  const char* texts[] = {
      "E x. A y. 0 < y & y < x -> ~cong(2, y, {G2[0].c: 1})",
      "x < 2*y - {G1[0].s[0]: c1} | x = y & ~(y < 0)",
      "rphi([z1, z2] < x, z3 < y; E u. cong(2, z1, u) & cong(3, z2, z3))",
      "idx(2, x, {G1[1].c: 1/2}) -> A z. cong(3, z, x)",
      "~rphi(y < x; cong(2, y, {G2[1].s: 1}))",
      "true & ~false",
  };
  for (const char* text : texts) {
    const Formula f = parseL(text);
    const std::string printed = printFormula(f);
    EXPECT_EQ(parseL(printed), f) << text << "  =>  " << printed;
    EXPECT_EQ(printFormula(parseL(printed)), printed);
  }
}

TEST(FormulaParse, TermsAreCanonical) {
  const Formula f = parseL("x + x - y + y = 0");
  const auto& eq = std::get<EqAtom>(f.atomValue());
  EXPECT_EQ(eq.lhs, Term::variable("x", 2));
  EXPECT_TRUE(eq.rhs.isZero());
}

TEST(FormulaQueries, ConstantsModuliAndSubstitution) {
  const Formula f = parseL("E x. cong(2, x, {G1[0].c: 1}) & rphi(z < y; cong(3, z, x)) & idx(5, x, {G2[0].s: 1})");
  EXPECT_EQ(freeVariables(f), (std::set<std::string>{"y"}));
  EXPECT_EQ(formulaConstants(f).size(), 2u);
  EXPECT_EQ(formulaModuli(f), (std::set<unsigned long>{2, 3, 5}));
  const Formula g = substitute(f, Env{{"y", lam("{G2[0].s: 1}")}});
  EXPECT_TRUE(freeVariables(g).empty());
  EXPECT_EQ(formulaConstants(g).size(), 3u);
}

TEST(FormulaClassify, PrenexMinimisesAlternations) {
  EXPECT_EQ(classify(parseL("x < y")).label, "Δ0");
  EXPECT_EQ(classify(parseL("(E x. x < y) & (E z. z < y)")).label, "Σ1");
  EXPECT_EQ(classify(parseL("~(E x. x < y)")).label, "Π1");
  EXPECT_EQ(classify(parseL("(A x. x < y) & (E z. A w. z < w)")).prefix, "∃∀");
  // R_phi hides an existential block.
  EXPECT_EQ(classify(parseL("A x. rphi(z < x; cong(2, z, x))"), true).prefix, "∀∃");
  EXPECT_EQ(classify(parseL("A x. rphi(z < x; cong(2, z, x))"), false).prefix, "∀");
}

TEST(FormulaClassify, PrenexRenamesClashingVariables) {
  const Formula p = prenex(parseL("(E x. x < y) & (E x. y < x)"));
  ASSERT_EQ(p.kind(), Connective::Exists);
  ASSERT_EQ(p.child().kind(), Connective::Exists);
  EXPECT_NE(p.variable(), p.child().variable());
}

}  // namespace
}  // namespace oagw
