#include "oagw/valuation.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "text_cursor.hpp"

namespace oagw {

SeriesProduct SeriesProduct::of(std::vector<std::string> factors) {
  std::sort(factors.begin(), factors.end());
  return SeriesProduct{std::move(factors)};
}

// ---------------------------------------------------------------- printing

namespace {

std::string printProduct(const SeriesProduct& p) {
  if (p.factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < p.factors.size(); ++i) out += (i > 0 ? "*" : "") + p.factors[i];
  return out;
}

std::string_view relationText(ValRelation r) {
  switch (r) {
    case ValRelation::Lt:
      return "<";
    case ValRelation::Le:
      return "<=";
    case ValRelation::Eq:
      return "=";
    case ValRelation::Ge:
      return ">=";
    case ValRelation::Gt:
      return ">";
  }
  return "?";
}

std::string printValAtom(const ValAtom& atom) {
  if (const auto* c = std::get_if<ValCompare>(&atom)) {
    return "v(" + printProduct(c->lhs) + ") " + std::string(relationText(c->relation)) + " v(" +
           printProduct(c->rhs) + ")";
  }
  const auto& s = std::get<ValSum>(atom);
  return "v(" + printProduct(s.first) + ") + v(" + printProduct(s.second) + ") = v(" + printProduct(s.sum) + ")";
}

std::string printRingAtom(const RingAtom& atom) {
  if (const auto* r = std::get_if<ValRingAtom>(&atom)) return "ValRing(" + printProduct(r->arg) + ")";
  const auto& e = std::get<ProductEq>(atom);
  return printProduct(e.lhs) + " = " + printProduct(e.rhs);
}

}  // namespace

std::string printValuationFormula(const ValFormula& f) { return printLogic(f, printValAtom); }
std::string printRingFormula(const RingFormula& f) { return printLogic(f, printRingAtom); }

// ---------------------------------------------------------------- parsing

namespace {

class ValuationParser {
 public:
  explicit ValuationParser(std::string_view text) : cur_(text) {}

  ValFormula parseAll() {
    ValFormula f = formula();
    if (!cur_.atEnd()) cur_.fail("unexpected trailing input");
    return f;
  }

 private:
  ValFormula formula() {
    if (auto q = tryQuantifier()) return *q;
    ValFormula lhs = disjunction();
    if (cur_.consume("->")) return ValFormula::implies(std::move(lhs), formula());
    return lhs;
  }

  std::optional<ValFormula> tryQuantifier() {
    Connective kind;
    if (cur_.consumeWord("E")) {
      kind = Connective::Exists;
    } else if (cur_.consumeWord("A")) {
      kind = Connective::Forall;
    } else {
      return std::nullopt;
    }
    std::string var = variable();
    cur_.expect(".");
    return ValFormula::quantifier(kind, std::move(var), formula());
  }

  ValFormula disjunction() {
    ValFormula f = conjunction();
    while (cur_.consume("|")) f = ValFormula::disj(std::move(f), conjunction());
    return f;
  }

  ValFormula conjunction() {
    ValFormula f = unary();
    while (cur_.consume("&")) f = ValFormula::conj(std::move(f), unary());
    return f;
  }

  ValFormula unary() {
    if (cur_.consume("~")) return ValFormula::negate(unary());
    if (cur_.consume("(")) {
      ValFormula f = formula();
      cur_.expect(")");
      return f;
    }
    if (auto q = tryQuantifier()) return *q;
    if (cur_.consumeWord("true")) return ValFormula::top();
    if (cur_.consumeWord("false")) return ValFormula::bottom();
    return ValFormula::atom(atom());
  }

  ValAtom atom() {
    SeriesProduct lhs = valuationOf();
    if (cur_.consume("+")) {
      SeriesProduct second = valuationOf();
      cur_.expect("=");
      return ValSum{std::move(lhs), std::move(second), valuationOf()};
    }
    ValRelation r;
    if (cur_.consume("<=")) {
      r = ValRelation::Le;
    } else if (cur_.consume(">=")) {
      r = ValRelation::Ge;
    } else if (cur_.consume("<")) {
      r = ValRelation::Lt;
    } else if (cur_.consume(">")) {
      r = ValRelation::Gt;
    } else if (cur_.consume("=")) {
      r = ValRelation::Eq;
    } else {
      cur_.fail("expected a comparison of valuations");
    }
    return ValCompare{std::move(lhs), r, valuationOf()};
  }

  SeriesProduct valuationOf() {
    if (!cur_.consumeWord("v")) cur_.fail("expected 'v('");
    cur_.expect("(");
    std::vector<std::string> factors;
    if (!cur_.consume("1")) {
      factors.push_back(variable());
      while (cur_.consume("*")) factors.push_back(variable());
    }
    cur_.expect(")");
    return SeriesProduct::of(std::move(factors));
  }

  std::string variable() {
    const std::size_t at = cur_.offset();
    std::string name = cur_.identifier();
    if (name == "E" || name == "A" || name == "v" || name == "true" || name == "false") {
      throw ParseError("reserved word '" + name + "' used as a variable", at);
    }
    return name;
  }

  detail::TextCursor cur_;
};

}  // namespace

ValFormula parseValuationFormula(std::string_view text) { return ValuationParser(text).parseAll(); }

// ---------------------------------------------------------------- translation

namespace {

void collectNames(const ValFormula& f, std::set<std::string>& out) {
  auto addProduct = [&](const SeriesProduct& p) { out.insert(p.factors.begin(), p.factors.end()); };
  switch (f.kind()) {
    case Connective::Atom:
      if (const auto* c = std::get_if<ValCompare>(&f.atomValue())) {
        addProduct(c->lhs);
        addProduct(c->rhs);
      } else {
        const auto& s = std::get<ValSum>(f.atomValue());
        addProduct(s.first);
        addProduct(s.second);
        addProduct(s.sum);
      }
      return;
    case Connective::True:
    case Connective::False:
      return;
    case Connective::Not:
      collectNames(f.child(), out);
      return;
    case Connective::Exists:
    case Connective::Forall:
      out.insert(f.variable());
      collectNames(f.child(), out);
      return;
    default:
      collectNames(f.left(), out);
      collectNames(f.right(), out);
  }
}

class Translator {
 public:
  explicit Translator(const ValFormula& f) { collectNames(f, used_); }

  RingFormula translate(const ValFormula& f) {
    switch (f.kind()) {
      case Connective::Atom:
        return atom(f.atomValue());
      case Connective::True:
        return RingFormula::top();
      case Connective::False:
        return RingFormula::bottom();
      case Connective::Not:
        return RingFormula::negate(translate(f.child()));
      case Connective::Exists:
      case Connective::Forall:
        return RingFormula::quantifier(f.kind(), f.variable(), translate(f.child()));
      default: {
        RingFormula l = translate(f.left());
        return RingFormula::binary(f.kind(), std::move(l), translate(f.right()));
      }
    }
  }

 private:
  /// v(a) >= v(b)
  RingFormula atLeast(const SeriesProduct& a, const SeriesProduct& b) {
    const std::string g = fresh();
    std::vector<std::string> gb = b.factors;
    gb.push_back(g);
    return RingFormula::exists(g, RingFormula::conj(RingFormula::atom(ValRingAtom{SeriesProduct::of({g})}),
                                                    RingFormula::atom(ProductEq{a, SeriesProduct::of(gb)})));
  }

  RingFormula compare(const SeriesProduct& a, ValRelation r, const SeriesProduct& b) {
    switch (r) {
      case ValRelation::Ge:
        return atLeast(a, b);
      case ValRelation::Le:
        return atLeast(b, a);
      case ValRelation::Lt:
        return RingFormula::negate(atLeast(a, b));
      case ValRelation::Gt:
        return RingFormula::negate(atLeast(b, a));
      case ValRelation::Eq: {
        RingFormula l = atLeast(a, b);
        return RingFormula::conj(std::move(l), atLeast(b, a));
      }
    }
    throw PreconditionError("unknown valuation relation");
  }

  RingFormula atom(const ValAtom& a) {
    if (const auto* c = std::get_if<ValCompare>(&a)) return compare(c->lhs, c->relation, c->rhs);
    const auto& s = std::get<ValSum>(a);
    std::vector<std::string> product = s.first.factors;
    product.insert(product.end(), s.second.factors.begin(), s.second.factors.end());
    const SeriesProduct f1f2 = SeriesProduct::of(std::move(product));
    RingFormula notBelow = RingFormula::negate(compare(f1f2, ValRelation::Lt, s.sum));
    return RingFormula::conj(std::move(notBelow), RingFormula::negate(compare(f1f2, ValRelation::Gt, s.sum)));
  }

  std::string fresh() {
    for (;; ++counter_) {
      std::string name = "g" + std::to_string(counter_);
      if (!used_.contains(name)) {
        used_.insert(name);
        ++counter_;
        return name;
      }
    }
  }

  std::set<std::string> used_;
  unsigned counter_ = 1;
};

}  // namespace

RingFormula translateToRing(const ValFormula& f) { return Translator(f).translate(f); }

// ---------------------------------------------------------------- evaluation

namespace {

HahnSeries product(const SeriesProduct& p, const SeriesEnv& env) {
  if (env.empty()) throw PreconditionError("empty series environment");
  const HahnSeries& any = env.begin()->second;
  HahnSeries out = HahnSeries::one(any.construction(), any.field());
  for (const auto& name : p.factors) {
    auto it = env.find(name);
    if (it == env.end()) throw PreconditionError("unbound series variable '" + name + "'");
    out = out * it->second;
  }
  return out;
}

/// v(f) compared with v(g), with v(0) = +infinity.
std::strong_ordering compareValuations(const HahnSeries& f, const HahnSeries& g) {
  if (f.isZero() || g.isZero()) return f.isZero() <=> g.isZero();
  return cmp(f.valuation(), g.valuation());
}

bool holds(std::strong_ordering o, ValRelation r) {
  switch (r) {
    case ValRelation::Lt:
      return o < 0;
    case ValRelation::Le:
      return o <= 0;
    case ValRelation::Eq:
      return o == 0;
    case ValRelation::Ge:
      return o >= 0;
    case ValRelation::Gt:
      return o > 0;
  }
  return false;
}

bool valAtom(const ValAtom& a, const SeriesEnv& env) {
  if (const auto* c = std::get_if<ValCompare>(&a)) {
    return holds(compareValuations(product(c->lhs, env), product(c->rhs, env)), c->relation);
  }
  const auto& s = std::get<ValSum>(a);
  const HahnSeries f1 = product(s.first, env);
  const HahnSeries f2 = product(s.second, env);
  const HahnSeries f3 = product(s.sum, env);
  if (f1.isZero() || f2.isZero() || f3.isZero()) {
    return (f1.isZero() || f2.isZero()) && f3.isZero();
  }
  return f1.valuation() + f2.valuation() == f3.valuation();
}

bool inValuationRing(const HahnSeries& s) {
  return std::all_of(s.terms().begin(), s.terms().end(), [](const auto& t) { return t.first.sign() >= 0; });
}

/// E g. ValRing(g) & f1 = g*f2: the quotient f1/f2 is the only candidate.
bool divisionPattern(const HahnSeries& f1, const HahnSeries& f2) {
  if (f1.isZero()) return true;   // g = 0
  if (f2.isZero()) return false;  // f1 = g*0 forces f1 = 0
  // v(f2*inv - 1) > 0, so the quotient is exact through its leading term
  // v(f1) - v(f2).
  const HahnSeries q = f1 * truncatedInverse(f2, GroupElement::zero(f2.construction()));
  const HahnSeries residual = f1 - q * f2;
  if (!residual.isZero() && !(residual.valuation() > f1.valuation())) {
    throw PreconditionError("quotient check failed: residual does not vanish to leading order");
  }
  return inValuationRing(q.truncatedThrough(q.valuation()));
}

bool ring(const RingFormula& f, const SeriesEnv& env) {
  switch (f.kind()) {
    case Connective::Atom: {
      const auto& a = f.atomValue();
      if (const auto* r = std::get_if<ValRingAtom>(&a)) return inValuationRing(product(r->arg, env));
      const auto& e = std::get<ProductEq>(a);
      return product(e.lhs, env) == product(e.rhs, env);
    }
    case Connective::True:
      return true;
    case Connective::False:
      return false;
    case Connective::Not:
      return !ring(f.child(), env);
    case Connective::And:
      return ring(f.left(), env) && ring(f.right(), env);
    case Connective::Or:
      return ring(f.left(), env) || ring(f.right(), env);
    case Connective::Implies:
      return !ring(f.left(), env) || ring(f.right(), env);
    case Connective::Exists: {
      const std::string& g = f.variable();
      const RingFormula& body = f.child();
      if (body.kind() == Connective::And && body.left().kind() == Connective::Atom &&
          body.right().kind() == Connective::Atom) {
        const auto* member = std::get_if<ValRingAtom>(&body.left().atomValue());
        const auto* eq = std::get_if<ProductEq>(&body.right().atomValue());
        if (member != nullptr && eq != nullptr && member->arg.factors == std::vector<std::string>{g} &&
            std::count(eq->lhs.factors.begin(), eq->lhs.factors.end(), g) == 0 &&
            std::count(eq->rhs.factors.begin(), eq->rhs.factors.end(), g) == 1) {
          SeriesProduct rest = eq->rhs;
          rest.factors.erase(std::find(rest.factors.begin(), rest.factors.end(), g));
          SeriesEnv scoped = env;
          scoped.erase(g);
          return divisionPattern(product(eq->lhs, scoped), product(rest, scoped));
        }
      }
      [[fallthrough]];
    }
    case Connective::Forall:
      throw PreconditionError("ring evaluation accepts only the quantifier shape E g. ValRing(g) & f1 = g*f2");
  }
  return false;
}

}  // namespace

bool evaluateValuation(const ValFormula& f, const SeriesEnv& env) {
  switch (f.kind()) {
    case Connective::Atom:
      return valAtom(f.atomValue(), env);
    case Connective::True:
      return true;
    case Connective::False:
      return false;
    case Connective::Not:
      return !evaluateValuation(f.child(), env);
    case Connective::And:
      return evaluateValuation(f.left(), env) && evaluateValuation(f.right(), env);
    case Connective::Or:
      return evaluateValuation(f.left(), env) || evaluateValuation(f.right(), env);
    case Connective::Implies:
      return !evaluateValuation(f.left(), env) || evaluateValuation(f.right(), env);
    default:
      throw PreconditionError("valuation evaluation is quantifier-free");
  }
}

bool evaluateRing(const RingFormula& f, const SeriesEnv& env) { return ring(f, env); }

}  // namespace oagw
