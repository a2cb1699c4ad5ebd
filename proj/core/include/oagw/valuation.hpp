#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oagw/hahn.hpp"
#include "oagw/logic.hpp"

namespace oagw {

/// Product of series variables (sorted factors; empty means 1).
struct SeriesProduct {
  std::vector<std::string> factors;

  static SeriesProduct of(std::vector<std::string> factors);
  friend bool operator==(const SeriesProduct&, const SeriesProduct&) = default;
};

enum class ValRelation : std::uint8_t { Lt, Le, Eq, Ge, Gt };

/// v(lhs) REL v(rhs).
struct ValCompare {
  SeriesProduct lhs;
  ValRelation relation = ValRelation::Ge;
  SeriesProduct rhs;
  friend bool operator==(const ValCompare&, const ValCompare&) = default;
};

/// v(first) + v(second) = v(sum).
struct ValSum {
  SeriesProduct first, second, sum;
  friend bool operator==(const ValSum&, const ValSum&) = default;
};

using ValAtom = std::variant<ValCompare, ValSum>;
/// Formula of valuation statements over series variables.
using ValFormula = Logic<ValAtom>;

/// ValRing(arg): arg lies in the valuation ring.
struct ValRingAtom {
  SeriesProduct arg;
  friend bool operator==(const ValRingAtom&, const ValRingAtom&) = default;
};

/// Polynomial equality of two products.
struct ProductEq {
  SeriesProduct lhs, rhs;
  friend bool operator==(const ProductEq&, const ProductEq&) = default;
};

using RingAtom = std::variant<ValRingAtom, ProductEq>;
/// Ring-language formula, produced by translateToRing.
using RingFormula = Logic<RingAtom>;

using SeriesEnv = std::map<std::string, HahnSeries>;

/// Grammar: the connectives and quantifiers of the group formulas over atoms
///   'v(' prod ')' REL 'v(' prod ')'   with REL in  < <= = >= >
///   'v(' prod ') + v(' prod ') = v(' prod ')'
///   prod := '1' | var ('*' var)*
ValFormula parseValuationFormula(std::string_view text);
std::string printValuationFormula(const ValFormula& f);
std::string printRingFormula(const RingFormula& f);

/// v(f1) >= v(f2)  ->  E g. ValRing(g) & f1 = g*f2, with g fresh;
/// <=, <, > and = through >= and negation; v(f1)+v(f2)=v(f3) ->
/// ~(v(f1 f2) < v(f3)) & ~(v(f1 f2) > v(f3)). Connectives and quantifiers
/// are kept.
RingFormula translateToRing(const ValFormula& f);

/// Group-side truth through series valuations (v(0) = +infinity).
/// Quantifier-free formulas only; throws PreconditionError otherwise or on
/// unbound variables.
bool evaluateValuation(const ValFormula& f, const SeriesEnv& env);

/// Ring-side truth. ValRing(s) holds iff every exponent of s is >= 0; the
/// only quantifier shape accepted is the translation's
/// E g. ValRing(g) & f1 = g*f2, decided by constructing the quotient g
/// (exact through its leading term) and checking its membership and the
/// equation up to the leading order.
bool evaluateRing(const RingFormula& f, const SeriesEnv& env);

}  // namespace oagw
