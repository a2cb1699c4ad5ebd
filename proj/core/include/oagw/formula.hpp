#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oagw/group.hpp"
#include "oagw/logic.hpp"

namespace oagw {

/// Variable assignment.
using Env = std::map<std::string, GroupElement>;

/// Integer combination of variables plus an optional constant element.
/// Canonical: no zero coefficients, and a zero constant is stored as absent.
class Term {
 public:
  Term() = default;
  static Term variable(const std::string& name, Integer coeff = 1);
  static Term constant(const GroupElement& value);

  const std::map<std::string, Integer>& coefficients() const { return coeffs_; }
  const std::optional<GroupElement>& constantPart() const { return constant_; }
  Integer coefficient(const std::string& var) const;

  bool isZero() const { return coeffs_.empty() && !constant_; }
  /// Exactly one variable with coefficient 1 and no constant.
  std::optional<std::string> asBareVariable() const;
  bool mentionsAny(const std::set<std::string>& vars) const;
  void collectVariables(std::set<std::string>& out) const;

  /// The term with every variable in `vars` removed (coefficients dropped).
  Term without(const std::set<std::string>& vars) const;
  /// Replaces variables bound in env by their values (others are kept).
  Term substitute(const Env& env) const;
  /// Value of the term; throws PreconditionError for unbound variables.
  GroupElement evaluate(const Env& env, Construction c) const;

  Term operator-() const;
  friend Term operator+(const Term& a, const Term& b);
  friend Term operator-(const Term& a, const Term& b) { return a + (-b); }
  friend Term operator*(const Integer& k, const Term& t);
  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::map<std::string, Integer> coeffs_;
  std::optional<GroupElement> constant_;
};

/// lhs < rhs.
struct LtAtom {
  Term lhs, rhs;
  friend bool operator==(const LtAtom&, const LtAtom&) = default;
};

/// lhs = rhs.
struct EqAtom {
  Term lhs, rhs;
  friend bool operator==(const EqAtom&, const EqAtom&) = default;
};

/// lhs ≡ rhs modulo n, i.e. n divides rhs - lhs. Modulus >= 2.
struct CongAtom {
  unsigned long modulus = 2;
  Term lhs, rhs;
  friend bool operator==(const CongAtom&, const CongAtom&) = default;
};

/// Descriptor comparison: no element of cls's class modulo n lies strictly
/// between 0 and bound (see descriptorBlocks). For bound > 0 this is the
/// statement that the index of cls precedes the index of bound.
struct IdxAtom {
  unsigned long modulus = 2;
  Term cls, bound;
  friend bool operator==(const IdxAtom&, const IdxAtom&) = default;
};

/// Variables sharing one upper bound: 0 < z < bound for each z.
struct BoundGroup {
  std::vector<std::string> vars;
  Term bound;
  friend bool operator==(const BoundGroup&, const BoundGroup&) = default;
};

/// R_phi: exists bounded z's (0 < z < bound) and unbounded inner u's such that
/// every congruence in the system holds.
struct RPhiAtom {
  std::vector<BoundGroup> groups;
  std::vector<std::string> inner;
  std::vector<CongAtom> system;
  friend bool operator==(const RPhiAtom&, const RPhiAtom&) = default;

  std::set<std::string> boundVariables() const;
};

using GroupAtom = std::variant<LtAtom, EqAtom, CongAtom, IdxAtom, RPhiAtom>;

/// Formula of the ordered-group language enriched by congruences, R_phi and
/// descriptor atoms.
using Formula = Logic<GroupAtom>;

/// Parses the formula grammar. Element literals are read in construction c.
///   formula := quant | impl;  quant := ('E'|'A') var '.' formula
///   impl := disj ('->' formula)?;  disj := conj ('|' conj)*;  conj := unary ('&' unary)*
///   unary := '~' unary | '(' formula ')' | quant | 'true' | 'false' | atom
///   atom := term '<' term | term '=' term | 'cong(' n ',' term ',' term ')'
///         | 'idx(' n ',' term ',' term ')'
///         | 'rphi(' bound (',' bound)* (';' ('E' var '.')* cong ('&' cong)*)? ')'
///   bound := var '<' term | '[' var (',' var)* ']' '<' term
///   term := ['-'] item (('+'|'-') item)*;  item := [digits '*'] (var | element) | '0'
Formula parseFormula(std::string_view text, Construction c);
std::string printFormula(const Formula& f);
std::string printTerm(const Term& t);
std::string printAtom(const GroupAtom& a);

/// Variables occurring free.
std::set<std::string> freeVariables(const Formula& f);
/// Constants (element literals) occurring anywhere in the formula.
std::vector<GroupElement> formulaConstants(const Formula& f);
/// Every congruence modulus used by Cong, Idx and R_phi atoms.
std::set<unsigned long> formulaModuli(const Formula& f);

/// Replaces free variables bound in env by constants.
Formula substitute(const Formula& f, const Env& env);

/// Prenex form chosen to minimise quantifier alternations; bound variables
/// are renamed apart where they would clash.
Formula prenex(const Formula& f);

struct Classification {
  std::string prefix;  // collapsed quantifier blocks, e.g. "∃∀∃"; empty when quantifier-free
  std::string label;   // "Σ2", "Π1", or "Δ0" for quantifier-free
  unsigned blocks = 0;
};

/// Prefix class after prenexing. With expandRPhi, every R_phi atom counts as
/// an existential block (its z's and u's).
Classification classify(const Formula& f, bool expandRPhi = false);

}  // namespace oagw
