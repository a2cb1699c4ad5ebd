#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "oagw/group.hpp"
#include "oagw/random.hpp"

namespace oagw {

enum class EmbeddingKind : std::uint8_t { F1, F2 };

std::string_view toString(EmbeddingKind k);

/// One of the two self-embeddings of a construction. F2 on Gamma reuses the
/// Lambda index bookkeeping and must be opted into.
struct EmbeddingId {
  EmbeddingKind which = EmbeddingKind::F1;
  Construction construction = Construction::Lambda;
  bool allowExperimental = false;

  friend bool operator==(const EmbeddingId&, const EmbeddingId&) = default;
};

/// Position map of the embedding (total and injective on positions).
///   F1: G2[m] -> G2[m+1]; G1[0].s[0] -> G2[0].s; G1[0].s[p>=1] -> G1[0].s[p-1];
///       the rest of G1 is fixed.
///   F2: G2[m>=1] -> G2[m-1]; G2[0].c -> G1[0].c; G2[0].s -> G1[1].s[0];
///       G1[0].s[p] -> G1[1].s[p+1]; G1[0].c -> G1[1].c; G1[b>=1] -> G1[b+1].
Position mapPosition(EmbeddingKind which, const Position& p);

/// Inverse of mapPosition when p is in its image.
std::optional<Position> unmapPosition(EmbeddingKind which, const Position& p);

/// Component values are carried unchanged along the position map.
GroupElement apply(const EmbeddingId& e, const GroupElement& a);

/// b with apply(e, b) = a, or absent when a is outside the image.
std::optional<GroupElement> preimage(const EmbeddingId& e, const GroupElement& a);

/// F1: the critical circle G2[0].c is zero. F2: every G1[0].s[p] is zero.
bool inImage(const EmbeddingId& e, const GroupElement& a);

/// apply(e, randomElement(...)).
GroupElement randomImageElement(const EmbeddingId& e, Rng& rng, const ElementShape& shape = {});

/// Requirement t' !=_n r.
struct CongruenceConstraint {
  unsigned long modulus = 2;
  GroupElement residue;
};

/// t' in the F1 image with |t' - t| < eps and t' !=_n r for every constraint:
/// t' = t + unit at G1[B].s[0], B one past every G1 block of t, eps and the
/// residues. Lambda only; requires eps > 0 and t in the F1 image.
GroupElement perturbIntoImage(const GroupElement& t, const GroupElement& eps,
                              std::span<const CongruenceConstraint> constraints);

/// For (i, j) = leadMod(a, n): c = w - delta, d = w + delta where w is a's
/// component at i truncated to slots <= j and delta is the unit at (i, j+1).
/// Every u with c < u < d has leadMod(u, n) = (i, j); c and d lie in the F1
/// image. Lambda only; throws when leadMod(a, n) is absent.
std::pair<GroupElement, GroupElement> straddleWitnesses(const GroupElement& a, unsigned long n);

}  // namespace oagw
