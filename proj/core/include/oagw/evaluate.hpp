#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oagw/embeddings.hpp"
#include "oagw/formula.hpp"
#include "oagw/fragment.hpp"

namespace oagw {

/// Three-valued verdict: Unknown means the finite search did not decide.
enum class Verdict : std::uint8_t { True, False, Unknown };

std::string_view toString(Verdict v);

/// Structure in which quantifiers range: the whole construction, or the image
/// of one of its self-embeddings.
struct Domain {
  Construction construction = Construction::Lambda;
  std::optional<EmbeddingId> image;

  bool contains(const GroupElement& e) const;
  std::string describe() const;
};

struct EvalResult {
  Verdict verdict = Verdict::Unknown;
  /// Witnesses / counterexamples of the quantifiers that decided the verdict,
  /// outermost first.
  std::vector<std::pair<std::string, GroupElement>> bindings;
  std::string reason;           // why the verdict is Unknown
  std::size_t rangeSize = 0;    // candidates per quantifier
};

/// Bounded evaluation. Atoms are exact; every quantifier ranges over
/// fragment(env values ∪ formula constants, cfg) restricted to the domain.
/// An existential is True on a witness and Unknown otherwise; a universal is
/// False on a counterexample and Unknown otherwise.
/// Throws PreconditionError when a free variable is unbound, and
/// ConstructionMismatch for env values of another construction.
EvalResult evaluate(const Formula& f, const Env& env, const FragmentConfig& cfg, const Domain& domain);

/// Exact truth of a single atom (R_phi included) under env.
bool evaluateAtom(const GroupAtom& atom, const Env& env, Construction c);

/// Exact decision of R_phi, component by component modulo lcm of the moduli.
bool decideRPhi(const RPhiAtom& atom, const Env& env, Construction c);

/// Quantifier-free formula over constants equivalent to ~R_phi, for systems
/// with a single modulus, no inner variables, and congruences whose sides are
/// either a bare bounded variable or free of bounded variables. The result is
/// a disjunction of ~(0 < x_g), ~cong(n, p, p') and idx(n, p, x_g) atoms.
/// Returns nullopt for other shapes.
std::optional<Formula> negRphiNormalize(const RPhiAtom& atom, const Env& env, Construction c);

/// Moves every critical-circle entry q of the given values to T*q at
/// (G2[0].s, 0), so the result lies in the f1 image. T starts at a multiple of
/// `modulus` and every denominator, and doubles until `accept` holds (at most
/// `attempts` times). Returns the accepted values or nullopt.
std::optional<Env> transferIntoF1Image(const Env& values, unsigned long modulus,
                                       const std::function<bool(const Env&)>& accept, unsigned attempts = 12);

}  // namespace oagw
