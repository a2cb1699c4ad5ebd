#pragma once

#include <optional>
#include <string>
#include <utility>

#include "oagw/group.hpp"

namespace oagw {

/// A computable "tail" set: either empty, or every element whose leading fine
/// index lies strictly after a cut, together with (optionally) every b <= 0.
///
/// H'_a = U_{0<t<a} H_t contains every b <= 0 (the defining interval is empty
/// for them), so the descriptor of a positive a records that flag. The convex
/// subgroup part of the set ("core") is {0} U {b : lead(|b|) > cut}.
class TailSet {
 public:
  static TailSet empty() { return TailSet(); }
  static TailSet strictlyAfter(LeadDescriptor cut, bool withNonPositive) {
    return TailSet(cut, withNonPositive);
  }

  bool isEmpty() const { return !cut_.has_value(); }
  const std::optional<LeadDescriptor>& cut() const { return cut_; }
  bool withNonPositive() const { return withNonPositive_; }

  /// Membership in the set as defined (b <= 0 included when flagged).
  bool contains(const GroupElement& b) const;
  /// Membership in the convex subgroup {0} U {b : lead(|b|) > cut}.
  bool containsInCore(const GroupElement& b) const;

  friend bool operator==(const TailSet&, const TailSet&) = default;

 private:
  TailSet() = default;
  TailSet(LeadDescriptor cut, bool withNonPositive) : cut_(cut), withNonPositive_(withNonPositive) {}

  std::optional<LeadDescriptor> cut_;
  bool withNonPositive_ = false;
};

std::string toString(const TailSet& s);

/// The first fine index at or after `from` whose component has elements that
/// are not 2-divisible (Lambda square slots, Gamma circles).
LeadDescriptor firstTwoRigidIndex(Construction c, LeadDescriptor from);

/// Canonical descriptor of H'_a (congruence modulus 2).
///   a <= 0                        -> Empty
///   Lambda, a leads at square (i,j) -> StrictlyAfter((i, j))
///   Lambda, a leads at circle i     -> StrictlyAfter((successor square of i, 0))
///   Gamma (experimental)          -> StrictlyAfter(first circle at or after I(a))
TailSet hPrimeDescriptor(const GroupElement& a);

/// b in H'_a, decided from the descriptor.
bool inHPrime(const GroupElement& a, const GroupElement& b);

/// A pair (x, y) of positive elements used by the Lambda_1 definition:
/// both lead at a square with slot 0, H'_x is strictly inside H'_y, and no
/// circle separates the two leading squares (y's square is immediately
/// followed by x's).
bool isAdmissibleLambda1Pair(const GroupElement& x, const GroupElement& y);

/// The admissible pair with the largest H'_x: x = unit at (G1[0].s[0], 0),
/// y = unit at (G2[0].s, 0).
std::pair<GroupElement, GroupElement> pinnedLambda1Pair();

/// Membership in the set defined by the parameter-free Lambda_1 formula,
/// computed from descriptors: a = 0, or H'_|a| = H'_x, or a lies in the core of
/// H'_x, where (x, y) is the pinned pair. Lambda only.
bool lambda1ByFormula(const GroupElement& a);

}  // namespace oagw
