#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "oagw/evaluate.hpp"
#include "oagw/report.hpp"

namespace oagw {

struct CorpusEntry {
  Formula formula;
  Env env;  // values in the substructure; empty for sentences
};

enum class CorpusKind : std::uint8_t {
  Exists,        // E x. conjunction of order / equality / congruence / R_phi atoms
  ExistsForall,  // E x. conjunction including psi atoms ~rphi(y < v; cong(n, y, u))
};

CorpusKind parseCorpusKind(std::string_view text);  // "exists" | "ea"

/// Random sentences with every constant in the F1 image of c. Each sentence
/// is built around a planted full-group witness, so it holds in the full
/// group; deterministic per seed.
std::vector<CorpusEntry> generateCorpus(CorpusKind kind, Construction c, std::size_t count, std::uint64_t seed);

/// psi_n(u, v) as the atom ~rphi(y < v; cong(n, y, u)), with y fresh.
Formula psiFormula(unsigned long n, const Term& u, const Term& v);

/// Delta-closedness audit of `sub` inside `sup` over the corpus. Each entry
/// is evaluated in both domains; a case fails (a violation) when `sup` is
/// True but no witness is found in `sub`, including after moving the `sup`
/// witness into the F1 image (transferIntoF1Image) when `sub` is that
/// image. `sup` Unknown gives an unknown case.
/// Throws PreconditionError when an env value lies outside `sub`.
SuiteReport closureAudit(const Domain& sub, const Domain& sup, std::span<const CorpusEntry> corpus,
                         const FragmentConfig& cfg, std::uint64_t seed = 0);

}  // namespace oagw
