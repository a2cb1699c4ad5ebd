#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "oagw/embeddings.hpp"
#include "oagw/group.hpp"
#include "oagw/random.hpp"

namespace oagw {

/// The residue field: Q (prime = 0) or F_p.
struct CoefficientField {
  unsigned long prime = 0;

  static CoefficientField rationals() { return {0}; }
  static CoefficientField primeField(unsigned long p);
  bool isRational() const { return prime == 0; }
  std::string name() const;
  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;
};

/// Element of a CoefficientField with a canonical representative
/// (lowest-terms rational, or an integer in [0, p)).
class Coefficient {
 public:
  Coefficient() = default;
  /// Image of q in the field; throws PreconditionError when p divides q's denominator.
  Coefficient(const Rational& q, CoefficientField field);

  CoefficientField field() const { return field_; }
  const Rational& value() const { return value_; }
  bool isZero() const { return value_ == 0; }

  Coefficient operator-() const;
  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient inverse() const;
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

 private:
  Rational value_ = 0;
  CoefficientField field_;
};

std::string toString(const Coefficient& c);

/// Finite-support series sum a_g t^g with exponents in a construction.
class HahnSeries {
 public:
  using Terms = std::map<GroupElement, Coefficient, ElementLess>;

  HahnSeries(Construction c, CoefficientField field) : construction_(c), field_(field) {}
  static HahnSeries zero(Construction c, CoefficientField field = {}) { return HahnSeries(c, field); }
  static HahnSeries one(Construction c, CoefficientField field = {});
  static HahnSeries monomial(const Coefficient& a, const GroupElement& exponent);
  /// t^exponent with coefficient 1.
  static HahnSeries power(const GroupElement& exponent, CoefficientField field = {});

  Construction construction() const { return construction_; }
  CoefficientField field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Coefficient coefficient(const GroupElement& exponent) const;

  /// Least exponent of the support; throws PreconditionError for 0.
  const GroupElement& valuation() const;
  const Coefficient& leadingCoefficient() const;

  HahnSeries operator-() const;
  friend HahnSeries operator+(const HahnSeries& f, const HahnSeries& g);
  friend HahnSeries operator-(const HahnSeries& f, const HahnSeries& g) { return f + (-g); }
  friend HahnSeries operator*(const HahnSeries& f, const HahnSeries& g);
  friend bool operator==(const HahnSeries& f, const HahnSeries& g);

  /// Keeps only the terms with exponent <= bound.
  HahnSeries truncatedThrough(const GroupElement& bound) const;

 private:
  void addTerm(const GroupElement& exponent, const Coefficient& a);

  Construction construction_;
  CoefficientField field_;
  Terms terms_;
};

/// The G2 projection of g is >= 0 (g's leading entry is in G1, or positive).
bool g2PartNonNegative(const GroupElement& g);

struct Membership {
  bool inValRing = false;   // every exponent >= 0
  bool inKLambda1 = false;  // every exponent supported on G1
  bool inA = false;         // every exponent has G2 part >= 0: k((Λ1)) + k[[Λ2⊕Λ1]]
  friend bool operator==(const Membership&, const Membership&) = default;
};

/// Membership flags; Lambda only.
Membership membership(const HahnSeries& f);

/// g with v(f*g - 1) > precision: f = c t^γ (1 + h) and g = c^-1 t^-γ sum (-h)^k,
/// truncated above `precision`. Throws PreconditionError for f = 0, and when
/// the precision is not reached within `maxSteps` powers of h (h's exponents
/// may lie in a smaller archimedean class than the precision).
HahnSeries truncatedInverse(const HahnSeries& f, const GroupElement& precision, unsigned maxSteps = 256);

/// sum a_g t^g  ->  sum a_g t^{apply(e, g)}.
HahnSeries liftEmbedding(const EmbeddingId& e, const HahnSeries& f);

/// x = t^γ with γ = -(unit at G1[0].s[0]) and h(x) under the lift of f1:
/// x lies in A, h(x) does not.
std::pair<HahnSeries, HahnSeries> witnessHAnotInA(CoefficientField field = {});

/// Series literal: "0" or terms "coeff * t^ELEMENT", "t^ELEMENT" or "coeff"
/// joined by + / -, e.g. "1/2 * t^{G1[0].s[0]: -1} + 3 * t^0".
HahnSeries parseSeries(std::string_view text, Construction c, CoefficientField field = {});
std::string formatSeries(const HahnSeries& f);

/// Random series with up to maxTerms terms (possibly zero).
HahnSeries randomSeries(Construction c, CoefficientField field, Rng& rng, unsigned maxTerms = 3,
                        const ElementShape& shape = {});

}  // namespace oagw
