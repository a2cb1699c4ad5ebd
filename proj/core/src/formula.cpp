#include "oagw/formula.hpp"

#include <algorithm>

#include "element_text.hpp"

namespace oagw {

// ---------------------------------------------------------------- Term

Term Term::variable(const std::string& name, Integer coeff) {
  Term t;
  if (coeff != 0) t.coeffs_.emplace(name, std::move(coeff));
  return t;
}

Term Term::constant(const GroupElement& value) {
  Term t;
  if (!value.isZero()) t.constant_ = value;
  return t;
}

Integer Term::coefficient(const std::string& var) const {
  auto it = coeffs_.find(var);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

std::optional<std::string> Term::asBareVariable() const {
  if (constant_ || coeffs_.size() != 1 || coeffs_.begin()->second != 1) return std::nullopt;
  return coeffs_.begin()->first;
}

bool Term::mentionsAny(const std::set<std::string>& vars) const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [&](const auto& kv) { return vars.contains(kv.first); });
}

void Term::collectVariables(std::set<std::string>& out) const {
  for (const auto& [v, k] : coeffs_) out.insert(v);
}

Term Term::without(const std::set<std::string>& vars) const {
  Term t = *this;
  std::erase_if(t.coeffs_, [&](const auto& kv) { return vars.contains(kv.first); });
  return t;
}

Term Term::substitute(const Env& env) const {
  Term out;
  out.constant_ = constant_;
  for (const auto& [v, k] : coeffs_) {
    auto it = env.find(v);
    if (it == env.end()) {
      out.coeffs_.emplace(v, k);
    } else {
      out = out + Term::constant(k * it->second);
    }
  }
  return out;
}

GroupElement Term::evaluate(const Env& env, Construction c) const {
  GroupElement out = constant_ ? *constant_ : GroupElement::zero(c);
  for (const auto& [v, k] : coeffs_) {
    auto it = env.find(v);
    if (it == env.end()) throw PreconditionError("unbound variable '" + v + "'");
    out += k * it->second;
  }
  return out;
}

Term Term::operator-() const {
  Term t = *this;
  for (auto& [v, k] : t.coeffs_) k = -k;
  if (t.constant_) t.constant_ = -*t.constant_;
  return t;
}

Term operator+(const Term& a, const Term& b) {
  Term t = a;
  for (const auto& [v, k] : b.coeffs_) {
    Integer sum = t.coefficient(v) + k;
    if (sum == 0) {
      t.coeffs_.erase(v);
    } else {
      t.coeffs_[v] = sum;
    }
  }
  if (b.constant_) {
    GroupElement sum = t.constant_ ? *t.constant_ + *b.constant_ : *b.constant_;
    t.constant_ = sum.isZero() ? std::nullopt : std::optional<GroupElement>(std::move(sum));
  }
  return t;
}

Term operator*(const Integer& k, const Term& t) {
  if (k == 0) return Term();
  Term out = t;
  for (auto& [v, c] : out.coeffs_) c *= k;
  if (out.constant_) out.constant_ = k * *out.constant_;
  return out;
}

std::set<std::string> RPhiAtom::boundVariables() const {
  std::set<std::string> out(inner.begin(), inner.end());
  for (const auto& g : groups) out.insert(g.vars.begin(), g.vars.end());
  return out;
}

// ---------------------------------------------------------------- printing

std::string printTerm(const Term& t) {
  if (t.isZero()) return "0";
  std::string out;
  for (const auto& [v, k] : t.coefficients()) {
    Integer mag = k < 0 ? Integer(-k) : k;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    if (mag != 1) out += toString(mag) + "*";
    out += v;
  }
  if (t.constantPart()) {
    if (!out.empty()) out += " + ";
    out += formatElement(*t.constantPart());
  }
  return out;
}

namespace {

std::string printCong(const char* name, unsigned long n, const Term& a, const Term& b) {
  return std::string(name) + "(" + std::to_string(n) + ", " + printTerm(a) + ", " + printTerm(b) + ")";
}

}  // namespace

std::string printAtom(const GroupAtom& atom) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, LtAtom>) {
          return printTerm(a.lhs) + " < " + printTerm(a.rhs);
        } else if constexpr (std::is_same_v<T, EqAtom>) {
          return printTerm(a.lhs) + " = " + printTerm(a.rhs);
        } else if constexpr (std::is_same_v<T, CongAtom>) {
          return printCong("cong", a.modulus, a.lhs, a.rhs);
        } else if constexpr (std::is_same_v<T, IdxAtom>) {
          return printCong("idx", a.modulus, a.cls, a.bound);
        } else {
          std::string out = "rphi(";
          for (std::size_t i = 0; i < a.groups.size(); ++i) {
            const auto& g = a.groups[i];
            if (i > 0) out += ", ";
            if (g.vars.size() == 1) {
              out += g.vars.front();
            } else {
              out += "[";
              for (std::size_t j = 0; j < g.vars.size(); ++j) out += (j > 0 ? ", " : "") + g.vars[j];
              out += "]";
            }
            out += " < " + printTerm(g.bound);
          }
          if (!a.system.empty() || !a.inner.empty()) {
            out += ";";
            for (const auto& u : a.inner) out += " E " + u + ".";
            if (a.system.empty()) out += " true";
            for (std::size_t i = 0; i < a.system.size(); ++i) {
              out += (i > 0 ? " & " : " ") + printCong("cong", a.system[i].modulus, a.system[i].lhs, a.system[i].rhs);
            }
          }
          return out + ")";
        }
      },
      atom);
}

std::string printFormula(const Formula& f) { return printLogic(f, printAtom); }

// ---------------------------------------------------------------- parsing

namespace {

bool isReserved(const std::string& word) {
  return word == "E" || word == "A" || word == "true" || word == "false" || word == "cong" || word == "idx" ||
         word == "rphi";
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, Construction c) : cur_(text), construction_(c) {}

  Formula parseAll() {
    Formula f = formula();
    if (!cur_.atEnd()) cur_.fail("unexpected trailing input");
    return f;
  }

 private:
  Formula formula() {
    if (auto q = tryQuantifier()) return *q;
    Formula lhs = disjunction();
    if (cur_.consume("->")) return Formula::implies(std::move(lhs), formula());
    return lhs;
  }

  std::optional<Formula> tryQuantifier() {
    const std::size_t mark = cur_.position();
    Connective kind;
    if (cur_.consumeWord("E")) {
      kind = Connective::Exists;
    } else if (cur_.consumeWord("A")) {
      kind = Connective::Forall;
    } else {
      return std::nullopt;
    }
    if (!cur_.peekIdentifier()) {
      cur_.reset(mark);
      cur_.fail("expected a variable after the quantifier");
    }
    std::string var = variableName();
    cur_.expect(".");
    return Formula::quantifier(kind, std::move(var), formula());
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (cur_.consume("|")) f = Formula::disj(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (cur_.consume("&")) f = Formula::conj(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (cur_.consume("~")) return Formula::negate(unary());
    if (cur_.consume("(")) {
      Formula f = formula();
      cur_.expect(")");
      return f;
    }
    if (auto q = tryQuantifier()) return *q;
    if (cur_.consumeWord("true")) return Formula::top();
    if (cur_.consumeWord("false")) return Formula::bottom();
    return Formula::atom(atom());
  }

  GroupAtom atom() {
    if (cur_.consumeWord("cong")) return congruence();
    if (cur_.consumeWord("idx")) {
      cur_.expect("(");
      IdxAtom a;
      a.modulus = modulus();
      cur_.expect(",");
      a.cls = term();
      cur_.expect(",");
      a.bound = term();
      cur_.expect(")");
      return a;
    }
    if (cur_.consumeWord("rphi")) return rphi();
    Term lhs = term();
    if (cur_.consume("<")) return LtAtom{std::move(lhs), term()};
    if (cur_.consume("=")) return EqAtom{std::move(lhs), term()};
    cur_.fail("expected '<' or '='");
  }

  CongAtom congruence() {
    cur_.expect("(");
    CongAtom a;
    a.modulus = modulus();
    cur_.expect(",");
    a.lhs = term();
    cur_.expect(",");
    a.rhs = term();
    cur_.expect(")");
    return a;
  }

  unsigned long modulus() {
    const std::size_t at = cur_.offset();
    const std::uint32_t n = cur_.smallNumber();
    if (n < 2) throw ParseError("congruence modulus must be at least 2", at);
    return n;
  }

  RPhiAtom rphi() {
    cur_.expect("(");
    RPhiAtom a;
    std::set<std::string> seen;
    auto declare = [&](const std::string& v, std::size_t at) {
      if (!seen.insert(v).second) throw ParseError("variable '" + v + "' declared twice in rphi", at);
    };
    do {
      BoundGroup g;
      if (cur_.consume("[")) {
        do {
          const std::size_t at = cur_.offset();
          g.vars.push_back(variableName());
          declare(g.vars.back(), at);
        } while (cur_.consume(","));
        cur_.expect("]");
      } else {
        const std::size_t at = cur_.offset();
        g.vars.push_back(variableName());
        declare(g.vars.back(), at);
      }
      cur_.expect("<");
      const std::size_t at = cur_.offset();
      g.bound = term();
      if (g.bound.mentionsAny(seen)) throw ParseError("rphi bound mentions a bounded variable", at);
      a.groups.push_back(std::move(g));
    } while (cur_.consume(","));
    if (cur_.consume(";")) {
      while (cur_.consumeWord("E")) {
        const std::size_t at = cur_.offset();
        a.inner.push_back(variableName());
        declare(a.inner.back(), at);
        cur_.expect(".");
      }
      if (!cur_.consumeWord("true")) {
        do {
          if (!cur_.consumeWord("cong")) cur_.fail("rphi systems contain only cong(...) equations");
          a.system.push_back(congruence());
        } while (cur_.consume("&"));
      }
    }
    cur_.expect(")");
    return a;
  }

  std::string variableName() {
    const std::size_t at = cur_.offset();
    std::string v = cur_.identifier();
    if (isReserved(v)) throw ParseError("'" + v + "' is reserved", at);
    return v;
  }

  Term term() {
    Term t;
    bool negative = cur_.consume("-");
    t = negative ? -item() : item();
    for (;;) {
      if (cur_.startsWith("->")) break;
      if (cur_.consume("+")) {
        t = t + item();
      } else if (cur_.consume("-")) {
        t = t - item();
      } else {
        break;
      }
    }
    return t;
  }

  Term item() {
    if (cur_.peekDigit()) {
      const std::size_t at = cur_.offset();
      Integer k(cur_.digits());
      if (!cur_.consume("*")) {
        if (k != 0) throw ParseError("a bare integer is not a term (use k*x or an element literal)", at);
        return Term();
      }
      return k * itemBody();
    }
    return itemBody();
  }

  Term itemBody() {
    if (cur_.peek() == '{') return Term::constant(detail::parseElementAt(cur_, construction_));
    if (cur_.peek() == '0') {
      cur_.expect("0");
      return Term();
    }
    return Term::variable(variableName());
  }

  detail::TextCursor cur_;
  Construction construction_;
};

}  // namespace

Formula parseFormula(std::string_view text, Construction c) { return FormulaParser(text, c).parseAll(); }

// ---------------------------------------------------------------- traversal

namespace {

void atomFreeVariables(const GroupAtom& atom, std::set<std::string>& out) {
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, LtAtom> || std::is_same_v<T, EqAtom>) {
          a.lhs.collectVariables(out);
          a.rhs.collectVariables(out);
        } else if constexpr (std::is_same_v<T, CongAtom>) {
          a.lhs.collectVariables(out);
          a.rhs.collectVariables(out);
        } else if constexpr (std::is_same_v<T, IdxAtom>) {
          a.cls.collectVariables(out);
          a.bound.collectVariables(out);
        } else {
          const auto bound = a.boundVariables();
          std::set<std::string> inside;
          for (const auto& g : a.groups) g.bound.collectVariables(out);
          for (const auto& c : a.system) {
            c.lhs.collectVariables(inside);
            c.rhs.collectVariables(inside);
          }
          for (const auto& v : inside) {
            if (!bound.contains(v)) out.insert(v);
          }
        }
      },
      atom);
}

void freeVars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Atom: {
      std::set<std::string> vars;
      atomFreeVariables(f.atomValue(), vars);
      for (const auto& v : vars) {
        if (!bound.contains(v)) out.insert(v);
      }
      return;
    }
    case Connective::True:
    case Connective::False:
      return;
    case Connective::Not:
      freeVars(f.child(), bound, out);
      return;
    case Connective::Exists:
    case Connective::Forall: {
      const bool fresh = bound.insert(f.variable()).second;
      freeVars(f.child(), bound, out);
      if (fresh) bound.erase(f.variable());
      return;
    }
    default:
      freeVars(f.left(), bound, out);
      freeVars(f.right(), bound, out);
  }
}

template <class Visit>
void forEachAtom(const Formula& f, Visit&& visit) {
  switch (f.kind()) {
    case Connective::Atom:
      visit(f.atomValue());
      return;
    case Connective::True:
    case Connective::False:
      return;
    case Connective::Not:
    case Connective::Exists:
    case Connective::Forall:
      forEachAtom(f.child(), visit);
      return;
    default:
      forEachAtom(f.left(), visit);
      forEachAtom(f.right(), visit);
  }
}

void termConstant(const Term& t, std::vector<GroupElement>& out) {
  if (t.constantPart()) out.push_back(*t.constantPart());
}

GroupAtom substituteAtom(const GroupAtom& atom, const Env& env) {
  return std::visit(
      [&](const auto& a) -> GroupAtom {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, LtAtom>) {
          return LtAtom{a.lhs.substitute(env), a.rhs.substitute(env)};
        } else if constexpr (std::is_same_v<T, EqAtom>) {
          return EqAtom{a.lhs.substitute(env), a.rhs.substitute(env)};
        } else if constexpr (std::is_same_v<T, CongAtom>) {
          return CongAtom{a.modulus, a.lhs.substitute(env), a.rhs.substitute(env)};
        } else if constexpr (std::is_same_v<T, IdxAtom>) {
          return IdxAtom{a.modulus, a.cls.substitute(env), a.bound.substitute(env)};
        } else {
          Env visible = env;
          for (const auto& v : a.boundVariables()) visible.erase(v);
          RPhiAtom out = a;
          for (auto& g : out.groups) g.bound = g.bound.substitute(env);
          for (auto& c : out.system) {
            c.lhs = c.lhs.substitute(visible);
            c.rhs = c.rhs.substitute(visible);
          }
          return out;
        }
      },
      atom);
}

}  // namespace

std::set<std::string> freeVariables(const Formula& f) {
  std::set<std::string> bound, out;
  freeVars(f, bound, out);
  return out;
}

std::vector<GroupElement> formulaConstants(const Formula& f) {
  std::vector<GroupElement> out;
  forEachAtom(f, [&](const GroupAtom& atom) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, IdxAtom>) {
            termConstant(a.cls, out);
            termConstant(a.bound, out);
          } else if constexpr (std::is_same_v<T, RPhiAtom>) {
            for (const auto& g : a.groups) termConstant(g.bound, out);
            for (const auto& c : a.system) {
              termConstant(c.lhs, out);
              termConstant(c.rhs, out);
            }
          } else {
            termConstant(a.lhs, out);
            termConstant(a.rhs, out);
          }
        },
        atom);
  });
  return out;
}

std::set<unsigned long> formulaModuli(const Formula& f) {
  std::set<unsigned long> out;
  forEachAtom(f, [&](const GroupAtom& atom) {
    if (const auto* c = std::get_if<CongAtom>(&atom)) out.insert(c->modulus);
    if (const auto* i = std::get_if<IdxAtom>(&atom)) out.insert(i->modulus);
    if (const auto* r = std::get_if<RPhiAtom>(&atom)) {
      for (const auto& c : r->system) out.insert(c.modulus);
    }
  });
  return out;
}

Formula substitute(const Formula& f, const Env& env) {
  switch (f.kind()) {
    case Connective::Atom:
      return Formula::atom(substituteAtom(f.atomValue(), env));
    case Connective::True:
    case Connective::False:
      return f;
    case Connective::Not:
      return Formula::negate(substitute(f.child(), env));
    case Connective::Exists:
    case Connective::Forall: {
      Env inner = env;
      inner.erase(f.variable());
      return Formula::quantifier(f.kind(), f.variable(), substitute(f.child(), inner));
    }
    default:
      return Formula::binary(f.kind(), substitute(f.left(), env), substitute(f.right(), env));
  }
}

}  // namespace oagw
