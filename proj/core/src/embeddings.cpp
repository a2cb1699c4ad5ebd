#include "oagw/embeddings.hpp"

#include <vector>

#include "oagw/fragment.hpp"

namespace oagw {

std::string_view toString(EmbeddingKind k) { return k == EmbeddingKind::F1 ? "f1" : "f2"; }

Position mapPosition(EmbeddingKind which, const Position& p) {
  if (which == EmbeddingKind::F1) {
    if (p.inG2()) return p.isCircle() ? Position::g2Circle(p.index + 1) : Position::g2Square(p.index + 1);
    if (p.index == 0 && p.isSquare()) {
      return p.square == 0 ? Position::g2Square(0) : Position::g1Square(0, p.square - 1);
    }
    return p;
  }
  if (p.inG2()) {
    if (p.index >= 1) return p.isCircle() ? Position::g2Circle(p.index - 1) : Position::g2Square(p.index - 1);
    return p.isCircle() ? Position::g1Circle(0) : Position::g1Square(1, 0);
  }
  if (p.index == 0) return p.isSquare() ? Position::g1Square(1, p.square + 1) : Position::g1Circle(1);
  return p.isSquare() ? Position::g1Square(p.index + 1, p.square) : Position::g1Circle(p.index + 1);
}

std::optional<Position> unmapPosition(EmbeddingKind which, const Position& p) {
  if (which == EmbeddingKind::F1) {
    if (p.inG2()) {
      if (p.index == 0) {
        if (p.isCircle()) return std::nullopt;  // the critical circle
        return Position::g1Square(0, 0);
      }
      return p.isCircle() ? Position::g2Circle(p.index - 1) : Position::g2Square(p.index - 1);
    }
    if (p.index == 0 && p.isSquare()) return Position::g1Square(0, p.square + 1);
    return p;
  }
  if (p.inG2()) return p.isCircle() ? Position::g2Circle(p.index + 1) : Position::g2Square(p.index + 1);
  if (p.index == 0) {
    if (p.isCircle()) return Position::g2Circle(0);
    return std::nullopt;  // the avoided block of squares
  }
  if (p.index == 1) {
    if (p.isCircle()) return Position::g1Circle(0);
    return p.square == 0 ? Position::g2Square(0) : Position::g1Square(0, p.square - 1);
  }
  return p.isSquare() ? Position::g1Square(p.index - 1, p.square) : Position::g1Circle(p.index - 1);
}

namespace {

void checkEmbedding(const EmbeddingId& e, const GroupElement& a) {
  if (a.construction() != e.construction) {
    throw ConstructionMismatch("embedding " + std::string(toString(e.which)) + " on " +
                               std::string(toString(e.construction)) + " applied to a " +
                               std::string(toString(a.construction())) + " element");
  }
  if (e.which == EmbeddingKind::F2 && e.construction == Construction::Gamma && !e.allowExperimental) {
    throw PreconditionError("f2 on the Gamma construction is experimental; enable it explicitly");
  }
}

std::vector<GroupElement::Term> moveTerms(const GroupElement& a, auto&& mapper) {
  std::vector<GroupElement::Term> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back({{mapper(t.index.position), t.index.slot}, t.value});
  return out;
}

}  // namespace

GroupElement apply(const EmbeddingId& e, const GroupElement& a) {
  checkEmbedding(e, a);
  // Square slots land on squares and circles on circles, so kinds are preserved.
  return GroupElement::fromTerms(a.construction(),
                                 moveTerms(a, [&](const Position& p) { return mapPosition(e.which, p); }));
}

std::optional<GroupElement> preimage(const EmbeddingId& e, const GroupElement& a) {
  checkEmbedding(e, a);
  std::vector<GroupElement::Term> out;
  for (const auto& t : a.terms()) {
    auto p = unmapPosition(e.which, t.index.position);
    if (!p) return std::nullopt;
    out.push_back({{*p, t.index.slot}, t.value});
  }
  return GroupElement::fromTerms(a.construction(), std::move(out));
}

bool inImage(const EmbeddingId& e, const GroupElement& a) { return preimage(e, a).has_value(); }

GroupElement randomImageElement(const EmbeddingId& e, Rng& rng, const ElementShape& shape) {
  return apply(e, randomElement(e.construction, rng, shape));
}

GroupElement perturbIntoImage(const GroupElement& t, const GroupElement& eps,
                              std::span<const CongruenceConstraint> constraints) {
  requireSameConstruction(t, eps);
  if (t.construction() != Construction::Lambda) throw PreconditionError("perturbIntoImage requires Lambda");
  if (eps.sign() <= 0) throw PreconditionError("perturbIntoImage requires eps > 0");
  const EmbeddingId f1{EmbeddingKind::F1, Construction::Lambda};
  if (!inImage(f1, t)) throw PreconditionError("perturbIntoImage requires t in the f1 image");
  std::vector<GroupElement> supports{t, eps};
  for (const auto& c : constraints) {
    requireSameConstruction(t, c.residue);
    if (c.modulus < 2) throw PreconditionError("modulus must be at least 2");
    supports.push_back(c.residue);
  }
  // The fresh unit sits after every support, so it is below eps, it keeps the
  // image condition, and t' - r has a coefficient 1 there: never n-divisible.
  return t + farUnit(Construction::Lambda, supports);
}

std::pair<GroupElement, GroupElement> straddleWitnesses(const GroupElement& a, unsigned long n) {
  if (a.construction() != Construction::Lambda) throw PreconditionError("straddleWitnesses requires Lambda");
  const auto d = leadMod(a, n);
  if (!d) throw PreconditionError("straddleWitnesses: " + formatElement(a) + " is " + std::to_string(n) + "-divisible");
  if (d->slot + 1 >= kSlotCap) throw PreconditionError("straddleWitnesses: no inner slot left after the lead");
  std::vector<GroupElement::Term> w;
  for (const auto& [slot, value] : a.component(d->position)) {
    if (slot <= d->slot) w.push_back({{d->position, slot}, value});
  }
  const GroupElement base = GroupElement::fromTerms(Construction::Lambda, std::move(w));
  const GroupElement delta = GroupElement::unit(Construction::Lambda, LeadDescriptor{d->position, d->slot + 1});
  return {base - delta, base + delta};
}

}  // namespace oagw
