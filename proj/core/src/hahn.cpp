#include "oagw/hahn.hpp"

#include "element_text.hpp"

namespace oagw {

// ---------------------------------------------------------------- coefficients

CoefficientField CoefficientField::primeField(unsigned long p) {
  if (p < 2 || mpz_probab_prime_p(Integer(p).get_mpz_t(), 25) == 0) {
    throw PreconditionError("coefficient field modulus " + std::to_string(p) + " is not prime");
  }
  return {p};
}

std::string CoefficientField::name() const { return isRational() ? "Q" : "F" + std::to_string(prime); }

Coefficient::Coefficient(const Rational& q, CoefficientField field) : field_(field) {
  if (field.isRational()) {
    value_ = q;
    return;
  }
  Integer p(field.prime);
  Integer den(q.get_den());
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw PreconditionError(toString(q) + " has no image in " + field.name());
  }
  Integer r = Integer(q.get_num()) * inv % p;
  if (r < 0) r += p;
  value_ = Rational(r);
}

namespace {

void requireSameField(const Coefficient& a, const Coefficient& b) {
  if (a.field() != b.field()) {
    throw ConstructionMismatch("coefficients from " + a.field().name() + " and " + b.field().name());
  }
}

}  // namespace

Coefficient Coefficient::operator-() const { return Coefficient(-value_, field_); }

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  requireSameField(a, b);
  return Coefficient(a.value_ + b.value_, a.field_);
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  requireSameField(a, b);
  return Coefficient(a.value_ * b.value_, a.field_);
}

Coefficient Coefficient::inverse() const {
  if (isZero()) throw PreconditionError("inverse of zero coefficient");
  return Coefficient(1 / value_, field_);
}

std::string toString(const Coefficient& c) { return toString(c.value()); }

// ---------------------------------------------------------------- series

HahnSeries HahnSeries::one(Construction c, CoefficientField field) {
  return monomial(Coefficient(1, field), GroupElement::zero(c));
}

HahnSeries HahnSeries::monomial(const Coefficient& a, const GroupElement& exponent) {
  HahnSeries f(exponent.construction(), a.field());
  f.addTerm(exponent, a);
  return f;
}

HahnSeries HahnSeries::power(const GroupElement& exponent, CoefficientField field) {
  return monomial(Coefficient(1, field), exponent);
}

Coefficient HahnSeries::coefficient(const GroupElement& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Coefficient(0, field_) : it->second;
}

const GroupElement& HahnSeries::valuation() const {
  if (terms_.empty()) throw PreconditionError("valuation of the zero series");
  return terms_.begin()->first;
}

const Coefficient& HahnSeries::leadingCoefficient() const {
  if (terms_.empty()) throw PreconditionError("leading coefficient of the zero series");
  return terms_.begin()->second;
}

void HahnSeries::addTerm(const GroupElement& exponent, const Coefficient& a) {
  if (exponent.construction() != construction_) throw ConstructionMismatch("series exponent construction mismatch");
  if (a.field() != field_) throw ConstructionMismatch("series coefficient field mismatch");
  if (a.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, a);
  if (!inserted) {
    it->second = it->second + a;
    if (it->second.isZero()) terms_.erase(it);
  }
}

namespace {

void requireCompatible(const HahnSeries& f, const HahnSeries& g) {
  if (f.construction() != g.construction()) throw ConstructionMismatch("series from different constructions");
  if (f.field() != g.field()) throw ConstructionMismatch("series over different coefficient fields");
}

}  // namespace

HahnSeries HahnSeries::operator-() const {
  HahnSeries out = *this;
  for (auto& [e, a] : out.terms_) a = -a;
  return out;
}

HahnSeries operator+(const HahnSeries& f, const HahnSeries& g) {
  requireCompatible(f, g);
  HahnSeries out = f;
  for (const auto& [e, a] : g.terms_) out.addTerm(e, a);
  return out;
}

HahnSeries operator*(const HahnSeries& f, const HahnSeries& g) {
  requireCompatible(f, g);
  HahnSeries out(f.construction_, f.field_);
  for (const auto& [e1, a1] : f.terms_) {
    for (const auto& [e2, a2] : g.terms_) out.addTerm(e1 + e2, a1 * a2);
  }
  return out;
}

bool operator==(const HahnSeries& f, const HahnSeries& g) {
  return f.construction_ == g.construction_ && f.field_ == g.field_ && f.terms_ == g.terms_;
}

HahnSeries HahnSeries::truncatedThrough(const GroupElement& bound) const {
  HahnSeries out(construction_, field_);
  for (const auto& [e, a] : terms_) {
    if (e > bound) break;
    out.terms_.emplace(e, a);
  }
  return out;
}

bool g2PartNonNegative(const GroupElement& g) {
  if (g.isZero()) return true;
  return g.lead()->position.inG1() || g.sign() > 0;
}

Membership membership(const HahnSeries& f) {
  if (f.construction() != Construction::Lambda) {
    throw ConstructionMismatch("membership flags are defined for the Lambda construction");
  }
  Membership m{true, true, true};
  for (const auto& [e, a] : f.terms()) {
    m.inValRing = m.inValRing && e.sign() >= 0;
    m.inKLambda1 = m.inKLambda1 && isInLambda1(e);
    m.inA = m.inA && g2PartNonNegative(e);
  }
  return m;
}

HahnSeries truncatedInverse(const HahnSeries& f, const GroupElement& precision, unsigned maxSteps) {
  if (f.isZero()) throw PreconditionError("truncatedInverse of the zero series");
  if (precision.construction() != f.construction()) throw ConstructionMismatch("precision construction mismatch");
  const Construction c = f.construction();
  const GroupElement gamma = f.valuation();
  const Coefficient lead = f.leadingCoefficient();
  const Coefficient leadInverse = lead.inverse();

  // f = lead * t^gamma * (1 + h) with every exponent of h positive.
  HahnSeries minusH(c, f.field());
  for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it) {
    minusH = minusH + HahnSeries::monomial(-(it->second * leadInverse), it->first - gamma);
  }

  HahnSeries sum = HahnSeries::one(c, f.field()).truncatedThrough(precision);
  HahnSeries term = HahnSeries::one(c, f.field());
  for (unsigned step = 0;; ++step) {
    term = (term * minusH).truncatedThrough(precision);
    if (term.isZero()) break;
    if (step >= maxSteps) {
      throw PreconditionError("truncatedInverse: precision " + formatElement(precision) + " not reached after " +
                              std::to_string(maxSteps) + " powers");
    }
    sum = sum + term;
  }
  return HahnSeries::monomial(leadInverse, -gamma) * sum;
}

HahnSeries liftEmbedding(const EmbeddingId& e, const HahnSeries& f) {
  HahnSeries out(f.construction(), f.field());
  for (const auto& [g, a] : f.terms()) out = out + HahnSeries::monomial(a, apply(e, g));
  return out;
}

std::pair<HahnSeries, HahnSeries> witnessHAnotInA(CoefficientField field) {
  const GroupElement gamma = -GroupElement::unit(Construction::Lambda, Position::g1Square(0, 0));
  HahnSeries x = HahnSeries::power(gamma, field);
  HahnSeries hx = liftEmbedding({EmbeddingKind::F1, Construction::Lambda}, x);
  return {std::move(x), std::move(hx)};
}

// ---------------------------------------------------------------- text

HahnSeries parseSeries(std::string_view text, Construction c, CoefficientField field) {
  detail::TextCursor cur(text);
  HahnSeries out(c, field);
  bool first = true;
  for (;;) {
    bool negative = false;
    if (cur.consume("-")) {
      negative = true;
    } else if (!first && !cur.consume("+")) {
      break;
    }
    first = false;
    Rational coeff = 1;
    GroupElement exponent = GroupElement::zero(c);
    if (cur.peekDigit()) {
      const std::size_t at = cur.offset();
      coeff = detail::parseRationalAt(cur);
      if (cur.consume("*")) {
        cur.expect("t^");
        exponent = detail::parseElementAt(cur, c);
      }
      try {
        out = out + HahnSeries::monomial(Coefficient(negative ? Rational(-coeff) : coeff, field), exponent);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), at);
      }
      continue;
    }
    cur.expect("t^");
    exponent = detail::parseElementAt(cur, c);
    out = out + HahnSeries::monomial(Coefficient(negative ? -1 : 1, field), exponent);
  }
  if (!cur.atEnd()) cur.fail("unexpected trailing input in series");
  return out;
}

std::string formatSeries(const HahnSeries& f) {
  if (f.isZero()) return "0";
  std::string out;
  for (const auto& [e, a] : f.terms()) {
    Rational v = a.value();
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (v < 0) v = -v;
    out += toString(v) + " * t^" + formatElement(e);
  }
  return out;
}

HahnSeries randomSeries(Construction c, CoefficientField field, Rng& rng, unsigned maxTerms, const ElementShape& shape) {
  HahnSeries out(c, field);
  const long count = uniform(rng, 0, maxTerms);
  for (long i = 0; i < count; ++i) {
    Rational q = makeRational(uniform(rng, -5, 5), uniform(rng, 1, 4));
    if (!field.isRational()) q = Rational(uniform(rng, 0, static_cast<long>(field.prime) - 1));
    out = out + HahnSeries::monomial(Coefficient(q, field), randomElement(c, rng, shape));
  }
  return out;
}

}  // namespace oagw
