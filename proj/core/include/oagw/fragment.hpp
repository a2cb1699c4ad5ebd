#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oagw/group.hpp"

namespace oagw {

/// Bounds of a finite witness-search fragment.
struct FragmentConfig {
  unsigned coeffBound = 2;                  // K: |k_i| <= K
  std::vector<GroupElement> generatorPool;  // extra generators beyond the parameters
  std::size_t sizeCap = 4096;               // 0 = unlimited
  std::uint64_t seed = 0;                   // permutes enumeration order within a weight class
};

/// Deterministic enumeration of sum k_i p_i + sum k_j g_j with |k| <= K over
/// params followed by the generator pool, ordered by total weight sum |k|.
/// The result starts with 0 and every parameter, holds no duplicates, and is
/// truncated at sizeCap. Throws ConstructionMismatch on mixed constructions.
std::vector<GroupElement> fragment(Construction c, std::span<const GroupElement> params, const FragmentConfig& cfg);

/// Generators that probe the neighbourhood of the given elements' supports:
/// units at each support index, the next inner slot and next position, the
/// "halving" values (1/2 on Lambda circles and Gamma squares, 1/3 on Gamma
/// circles) and one unit far to the right of every support.
std::vector<GroupElement> probePool(Construction c, std::span<const GroupElement> seeds);

/// Unit at G1[B].s[0] where B is one more than every G1 block used by the
/// given elements (B = 0 when none is used).
GroupElement farUnit(Construction c, std::span<const GroupElement> elements);

}  // namespace oagw
