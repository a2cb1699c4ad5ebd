#include "element_text.hpp"

#include <set>

namespace oagw {

namespace detail {

Rational parseRationalAt(TextCursor& cur) {
  bool negative = false;
  if (cur.consume("-")) {
    negative = true;
  } else {
    cur.consume("+");
  }
  Integer num(cur.digits());
  Integer den = 1;
  if (cur.peekRaw() == '/') {
    cur.expect("/");
    const std::size_t at = cur.offset();
    den = Integer(cur.digits());
    if (den == 0) throw ParseError("zero denominator", at);
  }
  return makeRational(negative ? Integer(-num) : num, den);
}

Position parsePositionAt(TextCursor& cur) {
  if (cur.consume("G2[")) {
    const std::uint32_t m = cur.smallNumber();
    cur.expect("]");
    cur.expect(".");
    if (cur.consume("c")) return Position::g2Circle(m);
    if (cur.consume("s")) return Position::g2Square(m);
    cur.fail("expected 'c' or 's'");
  }
  if (cur.consume("G1[")) {
    const std::uint32_t b = cur.smallNumber();
    cur.expect("]");
    cur.expect(".");
    if (cur.consume("c")) return Position::g1Circle(b);
    if (cur.consume("s[")) {
      const std::uint32_t p = cur.smallNumber();
      cur.expect("]");
      return Position::g1Square(b, p);
    }
    cur.fail("expected 'c' or 's[p]'");
  }
  cur.fail("expected a position G2[m].c|s or G1[b].c|s[p]");
}

namespace {

/// Integer polynomial a0 + a1*c1 + ... ; a bare "ck" means coefficient 1.
std::vector<GroupElement::Term> parseSquarePolynomial(TextCursor& cur, const Position& at) {
  std::vector<GroupElement::Term> out;
  std::set<std::uint32_t> seen;
  bool first = true;
  for (;;) {
    int sign = 1;
    if (cur.consume("-")) {
      sign = -1;
    } else if (!cur.consume("+") && !first) {
      break;
    }
    first = false;
    const std::size_t start = cur.offset();
    Integer coeff = 1;
    bool haveCoeff = false;
    if (cur.peekDigit()) {
      coeff = Integer(cur.digits());
      haveCoeff = true;
      if (cur.peekRaw() == '/') cur.fail("Lambda square values are integer polynomials");
    }
    std::uint32_t slot = 0;
    bool haveMonomial = false;
    if (haveCoeff && cur.consume("*")) {
      haveMonomial = true;
    } else if (!haveCoeff) {
      haveMonomial = true;
    }
    if (haveMonomial) {
      if (!cur.consume("c")) cur.fail("expected c<k>");
      slot = cur.smallNumber();
      if (slot == 0) cur.fail("monomials start at c1");
    }
    if (slot >= kSlotCap) cur.fail("inner slot exceeds cap");
    if (!seen.insert(slot).second) throw ParseError("repeated monomial", start);
    out.push_back({{at, slot}, Rational(sign * coeff)});
  }
  return out;
}

}  // namespace

GroupElement parseElementAt(TextCursor& cur, Construction c) {
  if (cur.consume("0")) return GroupElement::zero(c);
  cur.expect("{");
  std::vector<GroupElement::Term> terms;
  std::set<Position> seen;
  if (!cur.consume("}")) {
    for (;;) {
      const std::size_t start = cur.offset();
      const Position p = parsePositionAt(cur);
      if (!seen.insert(p).second) throw ParseError("duplicate position " + toString(p), start);
      cur.expect(":");
      const std::size_t valueAt = cur.offset();
      try {
        if (componentKind(c, p) == ComponentKind::Integers) {
          for (auto& t : parseSquarePolynomial(cur, p)) terms.push_back(std::move(t));
        } else {
          Rational q = parseRationalAt(cur);
          if (!componentAdmits(componentKind(c, p), q)) {
            throw ParseError("value not admitted at " + toString(p), valueAt);
          }
          terms.push_back({{p, 0}, std::move(q)});
        }
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), valueAt);
      }
      if (cur.consume("}")) break;
      cur.expect(",");
    }
  }
  return GroupElement::fromTerms(c, std::move(terms));
}

}  // namespace detail

std::string formatElement(const GroupElement& a) {
  if (a.isZero()) return "0";
  std::string out = "{";
  const auto positions = a.supportPositions();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Position& p = positions[i];
    if (i > 0) out += ", ";
    out += toString(p);
    out += ": ";
    if (componentKind(a.construction(), p) != ComponentKind::Integers) {
      out += toString(a.coefficient({p, 0}));
      continue;
    }
    bool first = true;
    for (const auto& [slot, value] : a.component(p)) {
      Integer v = value.get_num();
      if (!first) {
        out += v < 0 ? "-" : "+";
        if (v < 0) v = -v;
      }
      if (slot == 0) {
        out += toString(v);
      } else if (v == 1) {
        out += "c" + std::to_string(slot);
      } else if (v == -1) {
        out += "-c" + std::to_string(slot);
      } else {
        out += toString(v) + "*c" + std::to_string(slot);
      }
      first = false;
    }
  }
  return out + "}";
}

GroupElement parseElement(std::string_view text, Construction c) {
  detail::TextCursor cur(text);
  GroupElement out = detail::parseElementAt(cur, c);
  if (!cur.atEnd()) cur.fail("trailing input");
  return out;
}

Position parsePosition(std::string_view text) {
  detail::TextCursor cur(text);
  Position p = detail::parsePositionAt(cur);
  if (!cur.atEnd()) cur.fail("trailing input");
  return p;
}

}  // namespace oagw
