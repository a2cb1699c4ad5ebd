#include "oagw/tail_set.hpp"

namespace oagw {

bool TailSet::contains(const GroupElement& b) const {
  if (!cut_) return false;
  if (b.sign() <= 0) return withNonPositive_ || b.isZero();
  return *b.lead() > *cut_;
}

bool TailSet::containsInCore(const GroupElement& b) const {
  if (!cut_) return false;
  return b.isZero() || *b.lead() > *cut_;
}

std::string toString(const TailSet& s) {
  if (s.isEmpty()) return "Empty";
  return "StrictlyAfter" + toString(*s.cut());
}

LeadDescriptor firstTwoRigidIndex(Construction c, LeadDescriptor from) {
  // A G1 block lists its squares s[0], s[1], ... before its circle, so in
  // Gamma the first 2-rigid index after a G1 square is that block's circle;
  // everywhere else one successor step reaches a rigid component.
  for (;;) {
    const auto kind = componentKind(c, from.position);
    if (kind == ComponentKind::Integers || kind == ComponentKind::LocalAtTwo) return from;
    if (from.position.inG1() && from.position.isSquare()) return {Position::g1Circle(from.position.index), 0};
    from = {from.position.successor(), 0};
  }
}

TailSet hPrimeDescriptor(const GroupElement& a) {
  if (a.sign() <= 0) return TailSet::empty();
  return TailSet::strictlyAfter(firstTwoRigidIndex(a.construction(), *a.lead()), true);
}

bool inHPrime(const GroupElement& a, const GroupElement& b) {
  requireSameConstruction(a, b);
  return hPrimeDescriptor(a).contains(b);
}

namespace {

bool leadsAtSquareSlotZero(const GroupElement& e) {
  if (e.sign() <= 0) return false;
  const LeadDescriptor d = *e.lead();
  return d.position.isSquare() && d.slot == 0;
}

}  // namespace

bool isAdmissibleLambda1Pair(const GroupElement& x, const GroupElement& y) {
  requireSameConstruction(x, y);
  if (x.construction() != Construction::Lambda) {
    throw PreconditionError("the Lambda_1 definition applies to the Lambda construction");
  }
  if (!leadsAtSquareSlotZero(x) || !leadsAtSquareSlotZero(y)) return false;
  const TailSet hx = hPrimeDescriptor(x);
  const TailSet hy = hPrimeDescriptor(y);
  if (!(*hy.cut() < *hx.cut())) return false;  // H'_x strictly inside H'_y
  return y.lead()->position.successor() == x.lead()->position;
}

std::pair<GroupElement, GroupElement> pinnedLambda1Pair() {
  return {GroupElement::unit(Construction::Lambda, Position::g1Square(0, 0)),
          GroupElement::unit(Construction::Lambda, Position::g2Square(0))};
}

bool lambda1ByFormula(const GroupElement& a) {
  if (a.construction() != Construction::Lambda) {
    throw ConstructionMismatch("lambda1ByFormula requires a Lambda element");
  }
  if (a.isZero()) return true;
  const auto [x, y] = pinnedLambda1Pair();
  const TailSet hx = hPrimeDescriptor(x);
  return hPrimeDescriptor(abs(a)) == hx || hx.containsInCore(a);
}

}  // namespace oagw
