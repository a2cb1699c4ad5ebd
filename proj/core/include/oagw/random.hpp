#pragma once

#include <cstdint>
#include <random>

#include "oagw/group.hpp"

namespace oagw {

/// splitmix64 finaliser; derives independent per-case seeds.
constexpr std::uint64_t splitmix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// The generator every sampler draws from.
using Rng = std::mt19937_64;

/// Generator for case `index` of a run seeded with `seed`; independent of
/// the order in which cases are executed.
inline Rng caseRng(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix(seed, index)); }

/// Size knobs of random elements.
struct ElementShape {
  unsigned maxTerms = 4;      // positions per element
  unsigned maxG2Pair = 2;     // m in G2[m]
  unsigned maxG1Block = 3;    // b in G1[b]
  unsigned maxSquare = 2;     // p in G1[b].s[p]
  unsigned maxSlot = 3;       // c_k for Lambda squares
  long maxNumerator = 6;
};

/// Uniform integer in [lo, hi].
long uniform(Rng& rng, long lo, long hi);

/// Bernoulli trial with probability num/den.
bool chance(Rng& rng, unsigned num, unsigned den);

Position randomPosition(Rng& rng, const ElementShape& shape = {});

/// A random nonzero value legal at position p (sometimes scaled by 2, 3 or 6
/// so that divisible components are well represented).
Rational randomValue(Construction c, const Position& p, Rng& rng, const ElementShape& shape = {});

/// Random element with up to shape.maxTerms positions (possibly zero).
GroupElement randomElement(Construction c, Rng& rng, const ElementShape& shape = {});

/// Random strictly positive element.
GroupElement randomPositive(Construction c, Rng& rng, const ElementShape& shape = {});

}  // namespace oagw
