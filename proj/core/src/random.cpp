#include "oagw/random.hpp"

#include <array>

namespace oagw {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool chance(Rng& rng, unsigned num, unsigned den) { return uniform(rng, 1, den) <= static_cast<long>(num); }

Position randomPosition(Rng& rng, const ElementShape& shape) {
  if (chance(rng, 1, 2)) {
    const auto m = static_cast<std::uint32_t>(uniform(rng, 0, shape.maxG2Pair));
    return chance(rng, 1, 2) ? Position::g2Circle(m) : Position::g2Square(m);
  }
  const auto b = static_cast<std::uint32_t>(uniform(rng, 0, shape.maxG1Block));
  if (chance(rng, 1, 3)) return Position::g1Circle(b);
  return Position::g1Square(b, static_cast<std::uint32_t>(uniform(rng, 0, shape.maxSquare)));
}

namespace {

long nonzero(Rng& rng, long bound) {
  long v = uniform(rng, 1, bound);
  return chance(rng, 1, 2) ? v : -v;
}

long scale(Rng& rng) {
  static constexpr std::array<long, 4> kScales{1, 2, 3, 6};
  return chance(rng, 1, 3) ? kScales[static_cast<std::size_t>(uniform(rng, 1, 3))] : 1;
}

}  // namespace

Rational randomValue(Construction c, const Position& p, Rng& rng, const ElementShape& shape) {
  switch (componentKind(c, p)) {
    case ComponentKind::Integers:
      return nonzero(rng, shape.maxNumerator) * scale(rng);
    case ComponentKind::Rationals:
      return makeRational(nonzero(rng, shape.maxNumerator) * scale(rng), uniform(rng, 1, 6));
    case ComponentKind::LocalAtThree: {
      static constexpr std::array<long, 6> kDens{1, 2, 4, 5, 7, 8};
      return makeRational(nonzero(rng, shape.maxNumerator) * scale(rng),
                          kDens[static_cast<std::size_t>(uniform(rng, 0, 5))]);
    }
    case ComponentKind::LocalAtTwo: {
      static constexpr std::array<long, 5> kDens{1, 3, 5, 7, 9};
      return makeRational(nonzero(rng, shape.maxNumerator) * scale(rng),
                          kDens[static_cast<std::size_t>(uniform(rng, 0, 4))]);
    }
  }
  return 1;
}

GroupElement randomElement(Construction c, Rng& rng, const ElementShape& shape) {
  std::vector<GroupElement::Term> terms;
  const long count = uniform(rng, 0, shape.maxTerms);
  for (long i = 0; i < count; ++i) {
    const Position p = randomPosition(rng, shape);
    if (componentKind(c, p) == ComponentKind::Integers) {
      const long slots = uniform(rng, 1, 2);
      for (long s = 0; s < slots; ++s) {
        const auto slot = static_cast<std::uint32_t>(uniform(rng, 0, shape.maxSlot));
        terms.push_back({{p, slot}, randomValue(c, p, rng, shape)});
      }
    } else {
      terms.push_back({{p, 0}, randomValue(c, p, rng, shape)});
    }
  }
  return GroupElement::fromTerms(c, std::move(terms));
}

GroupElement randomPositive(Construction c, Rng& rng, const ElementShape& shape) {
  for (;;) {
    GroupElement e = randomElement(c, rng, shape);
    if (!e.isZero()) return abs(e);
  }
}

}  // namespace oagw
