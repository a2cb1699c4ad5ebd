#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oagw/numeric.hpp"

namespace oagw {

/// The two lexicographic direct sums. Gamma: squares Z_(3), circles Z_(2).
/// Lambda: squares Z[c1,c2,...] ordered lexicographically by slot, circles Q.
enum class Construction : std::uint8_t { Gamma, Lambda };

std::string_view toString(Construction c);
Construction parseConstruction(std::string_view text);

/// A component position of Γ₂⊕Γ₁ (or Λ₂⊕Λ₁).
///
/// Layout, smallest index first:
///   ... G2[1].c G2[1].s G2[0].c G2[0].s | G1[0].s[0] G1[0].s[1] ... G1[0].c G1[1].s[0] ...
/// G2[0].c is the critical circle.
struct Position {
  enum class Part : std::uint8_t { G2Pair, G1Block };
  enum class Shape : std::uint8_t { Circle, Square };

  Part part = Part::G1Block;
  std::uint32_t index = 0;   // m for G2 pairs, b for G1 blocks
  Shape shape = Shape::Square;
  std::uint32_t square = 0;  // p for G1 squares; always 0 otherwise

  static Position g2Circle(std::uint32_t m) { return {Part::G2Pair, m, Shape::Circle, 0}; }
  static Position g2Square(std::uint32_t m) { return {Part::G2Pair, m, Shape::Square, 0}; }
  static Position g1Square(std::uint32_t b, std::uint32_t p) { return {Part::G1Block, b, Shape::Square, p}; }
  static Position g1Circle(std::uint32_t b) { return {Part::G1Block, b, Shape::Circle, 0}; }
  static Position criticalCircle() { return g2Circle(0); }

  bool isCircle() const { return shape == Shape::Circle; }
  bool isSquare() const { return shape == Shape::Square; }
  bool inG2() const { return part == Part::G2Pair; }
  bool inG1() const { return part == Part::G1Block; }

  /// The position immediately after this one (every position has one).
  Position successor() const;

  friend bool operator==(const Position&, const Position&) = default;
  friend std::strong_ordering operator<=>(const Position& a, const Position& b);
};

inline bool posLt(const Position& a, const Position& b) { return a < b; }

std::string toString(const Position& p);

/// A fine index: a position plus an inner slot (slot k > 0 is the c_k
/// coefficient of a Lambda square; circles and Gamma squares only use slot 0).
/// Houses I(a)/J(a) and I_n(a)/J_n(a).
struct LeadDescriptor {
  Position position;
  std::uint32_t slot = 0;

  friend bool operator==(const LeadDescriptor&, const LeadDescriptor&) = default;
  friend std::strong_ordering operator<=>(const LeadDescriptor& a, const LeadDescriptor& b) {
    if (auto c = a.position <=> b.position; c != 0) return c;
    return a.slot <=> b.slot;
  }
};

std::string toString(const LeadDescriptor& d);

/// Inner slots 0..kSlotCap-1 are available in Lambda squares.
inline constexpr std::uint32_t kSlotCap = 64;

/// The rank-one group living at a fine index.
enum class ComponentKind : std::uint8_t {
  Integers,        // Lambda square slot
  Rationals,       // Lambda circle
  LocalAtThree,    // Gamma square, Z_(3)
  LocalAtTwo,      // Gamma circle, Z_(2)
};

ComponentKind componentKind(Construction c, const Position& p);

/// The next fine index in the construction's order (Lambda squares advance the
/// slot; everything else moves to the successor position, slot 0).
LeadDescriptor successor(Construction c, const LeadDescriptor& d);

/// True iff q is divisible by n inside the component group of the given kind.
bool componentDivisible(ComponentKind kind, const Rational& q, unsigned long n);

/// True iff q is a legal (nonzero) value of the component group.
bool componentAdmits(ComponentKind kind, const Rational& q);

/// Finitely supported element of Γ₂⊕Γ₁ or Λ₂⊕Λ₁, stored as a sorted list of
/// (fine index, nonzero value). Immutable value type.
class GroupElement {
 public:
  struct Term {
    LeadDescriptor index;
    Rational value;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit GroupElement(Construction c = Construction::Lambda) : construction_(c) {}

  /// Validates, sorts and merges the given entries; zero values are dropped.
  static GroupElement fromTerms(Construction c, std::vector<Term> terms);
  static GroupElement zero(Construction c) { return GroupElement(c); }
  static GroupElement unit(Construction c, LeadDescriptor at, Rational value = 1);
  static GroupElement unit(Construction c, Position at, Rational value = 1) {
    return unit(c, LeadDescriptor{at, 0}, std::move(value));
  }

  Construction construction() const { return construction_; }
  std::span<const Term> terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  int sign() const;

  /// Plain leading descriptor (I(a), J(a)); absent for 0.
  std::optional<LeadDescriptor> lead() const;
  /// Value at the leading fine index; requires a != 0.
  const Rational& leadCoefficient() const;
  Rational coefficient(const LeadDescriptor& at) const;
  bool hasEntryAt(const Position& p) const;
  std::vector<Position> supportPositions() const;

  /// Slot-indexed view of the component at p (empty when the component is 0).
  std::vector<std::pair<std::uint32_t, Rational>> component(const Position& p) const;

  /// Entries strictly before / at-or-before `cut`.
  GroupElement truncatedThrough(const LeadDescriptor& cut) const;

  GroupElement operator-() const;
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator*(const Integer& k, const GroupElement& a);
  friend GroupElement operator*(long k, const GroupElement& a) { return Integer(k) * a; }
  GroupElement& operator+=(const GroupElement& b) { return *this = *this + b; }
  GroupElement& operator-=(const GroupElement& b) { return *this = *this - b; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  template <class Combine>
  static GroupElement merge(const GroupElement& a, const GroupElement& b, Combine combine);

  Construction construction_;
  std::vector<Term> terms_;
};

GroupElement abs(const GroupElement& a);

void requireSameConstruction(const GroupElement& a, const GroupElement& b);

/// Lexicographic comparison; throws ConstructionMismatch.
std::strong_ordering cmp(const GroupElement& a, const GroupElement& b);

inline bool operator<(const GroupElement& a, const GroupElement& b) { return cmp(a, b) < 0; }
inline bool operator>(const GroupElement& a, const GroupElement& b) { return cmp(a, b) > 0; }
inline bool operator<=(const GroupElement& a, const GroupElement& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const GroupElement& a, const GroupElement& b) { return cmp(a, b) >= 0; }

/// Strict weak ordering for associative containers keyed by elements.
struct ElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const { return cmp(a, b) < 0; }
};

/// a = n*b for some b. Throws PreconditionError for n < 2.
bool isDivisible(const GroupElement& a, unsigned long n);

/// n | (b - a).
bool congruent(const GroupElement& a, const GroupElement& b, unsigned long n);

/// (I_n(a), J_n(a)): the first fine index whose value is not n-divisible.
std::optional<LeadDescriptor> leadMod(const GroupElement& a, unsigned long n);

/// psi_n(a, b) = "b in H^n_a" = forall y (0 < y < b -> y !=_n a), decided exactly.
bool psi(unsigned long n, const GroupElement& a, const GroupElement& b);

/// True iff no element congruent to `cls` modulo n has a descriptor pattern
/// below x: leadMod(cls, n) = D exists and either x = 0, lead(|x|) > D, or
/// lead(|x|) = D with |x|'s coefficient smaller than the least positive
/// representative of cls's class there. psi_n(a, b) <=> b <= 0 or descriptorBlocks(n, a, b).
bool descriptorBlocks(unsigned long n, const GroupElement& cls, const GroupElement& x);

/// Support contained in G1 positions (ground truth for the Lambda_1 test).
bool isInLambda1(const GroupElement& a);

/// Text form: "0" or "{G2[0].c: 1/2, G1[0].s[0]: 2+4*c1}".
std::string formatElement(const GroupElement& a);

/// Parses the element grammar; Lambda squares take integer polynomials in c_k,
/// every other component takes a rational literal.
GroupElement parseElement(std::string_view text, Construction c);

/// Parses a position such as "G1[2].s[0]" or "G2[0].c".
Position parsePosition(std::string_view text);

}  // namespace oagw
