#include "oagw/group.hpp"

#include <algorithm>
#include <tuple>

namespace oagw {

std::string_view toString(Construction c) { return c == Construction::Gamma ? "gamma" : "lambda"; }

Construction parseConstruction(std::string_view text) {
  if (text == "gamma" || text == "Gamma") return Construction::Gamma;
  if (text == "lambda" || text == "Lambda") return Construction::Lambda;
  throw PreconditionError("unknown construction '" + std::string(text) + "' (expected gamma|lambda)");
}

namespace {

// G2 before G1; larger m further left; circle before square inside a pair;
// squares (by p) before the circle inside a block.
std::tuple<int, std::int64_t, int, std::uint32_t> orderKey(const Position& p) {
  if (p.inG2()) return {0, -static_cast<std::int64_t>(p.index), p.isCircle() ? 0 : 1, 0};
  return {1, static_cast<std::int64_t>(p.index), p.isSquare() ? 0 : 1, p.square};
}

}  // namespace

std::strong_ordering operator<=>(const Position& a, const Position& b) { return orderKey(a) <=> orderKey(b); }

Position Position::successor() const {
  if (inG2()) {
    if (isCircle()) return g2Square(index);
    return index > 0 ? g2Circle(index - 1) : g1Square(0, 0);
  }
  if (isSquare()) return g1Square(index, square + 1);
  return g1Square(index + 1, 0);
}

std::string toString(const Position& p) {
  if (p.inG2()) return "G2[" + std::to_string(p.index) + (p.isCircle() ? "].c" : "].s");
  if (p.isCircle()) return "G1[" + std::to_string(p.index) + "].c";
  return "G1[" + std::to_string(p.index) + "].s[" + std::to_string(p.square) + "]";
}

std::string toString(const LeadDescriptor& d) {
  return "(" + toString(d.position) + ", " + std::to_string(d.slot) + ")";
}

ComponentKind componentKind(Construction c, const Position& p) {
  if (c == Construction::Lambda) return p.isSquare() ? ComponentKind::Integers : ComponentKind::Rationals;
  return p.isSquare() ? ComponentKind::LocalAtThree : ComponentKind::LocalAtTwo;
}

LeadDescriptor successor(Construction c, const LeadDescriptor& d) {
  if (componentKind(c, d.position) == ComponentKind::Integers) return {d.position, d.slot + 1};
  return {d.position.successor(), 0};
}

bool componentAdmits(ComponentKind kind, const Rational& q) {
  switch (kind) {
    case ComponentKind::Integers:
      return q.get_den() == 1;
    case ComponentKind::Rationals:
      return true;
    case ComponentKind::LocalAtThree:
      return inLocalization(q, 3);
    case ComponentKind::LocalAtTwo:
      return inLocalization(q, 2);
  }
  return false;
}

bool componentDivisible(ComponentKind kind, const Rational& q, unsigned long n) {
  if (q == 0) return true;
  switch (kind) {
    case ComponentKind::Integers:
      return q.get_den() == 1 && mpz_divisible_ui_p(q.get_num_mpz_t(), n);
    case ComponentKind::Rationals:
      return true;
    case ComponentKind::LocalAtThree:
      return padicValuation(q, 3) >= static_cast<long>(padicValuation(Integer(n), 3));
    case ComponentKind::LocalAtTwo:
      return padicValuation(q, 2) >= static_cast<long>(padicValuation(Integer(n), 2));
  }
  return false;
}

namespace {

void validateTerm(Construction c, const GroupElement::Term& t) {
  const auto kind = componentKind(c, t.index.position);
  if (kind != ComponentKind::Integers && t.index.slot != 0) {
    throw PreconditionError("inner slot " + std::to_string(t.index.slot) + " not available at " +
                            toString(t.index.position));
  }
  if (t.index.slot >= kSlotCap) throw PreconditionError("inner slot exceeds cap");
  if (!componentAdmits(kind, t.value)) {
    throw PreconditionError("value " + toString(t.value) + " not admitted at " + toString(t.index.position) +
                            " in the " + std::string(toString(c)) + " construction");
  }
}

void requireNonTrivialModulus(unsigned long n) {
  if (n < 2) throw PreconditionError("modulus must be at least 2");
}

}  // namespace

GroupElement GroupElement::fromTerms(Construction c, std::vector<Term> terms) {
  for (const auto& t : terms) validateTerm(c, t);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  GroupElement out(c);
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().index == t.index) {
      out.terms_.back().value += t.value;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.value == 0; });
  return out;
}

GroupElement GroupElement::unit(Construction c, LeadDescriptor at, Rational value) {
  std::vector<Term> terms;
  terms.push_back({at, std::move(value)});
  return fromTerms(c, std::move(terms));
}

int GroupElement::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().value); }

std::optional<LeadDescriptor> GroupElement::lead() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().index;
}

const Rational& GroupElement::leadCoefficient() const {
  if (terms_.empty()) throw PreconditionError("zero element has no leading coefficient");
  return terms_.front().value;
}

Rational GroupElement::coefficient(const LeadDescriptor& at) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), at,
                             [](const Term& t, const LeadDescriptor& d) { return t.index < d; });
  if (it != terms_.end() && it->index == at) return it->value;
  return 0;
}

bool GroupElement::hasEntryAt(const Position& p) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.index.position == p; });
}

std::vector<Position> GroupElement::supportPositions() const {
  std::vector<Position> out;
  for (const auto& t : terms_) {
    if (out.empty() || out.back() != t.index.position) out.push_back(t.index.position);
  }
  return out;
}

std::vector<std::pair<std::uint32_t, Rational>> GroupElement::component(const Position& p) const {
  std::vector<std::pair<std::uint32_t, Rational>> out;
  for (const auto& t : terms_) {
    if (t.index.position == p) out.emplace_back(t.index.slot, t.value);
  }
  return out;
}

GroupElement GroupElement::truncatedThrough(const LeadDescriptor& cut) const {
  GroupElement out(construction_);
  for (const auto& t : terms_) {
    if (t.index > cut) break;
    out.terms_.push_back(t);
  }
  return out;
}

GroupElement GroupElement::operator-() const {
  GroupElement out = *this;
  for (auto& t : out.terms_) t.value = -t.value;
  return out;
}

// Kinds are closed under + and -, so merged entries need no revalidation.
template <class Combine>
GroupElement GroupElement::merge(const GroupElement& a, const GroupElement& b, Combine combine) {
  requireSameConstruction(a, b);
  GroupElement out(a.construction());
  const auto& lhs = a.terms_;
  const auto& rhs = b.terms_;
  out.terms_.reserve(lhs.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].index < rhs[j].index)) {
      out.terms_.push_back({lhs[i].index, combine(lhs[i].value, Rational(0))});
      ++i;
    } else if (i == lhs.size() || rhs[j].index < lhs[i].index) {
      out.terms_.push_back({rhs[j].index, combine(Rational(0), rhs[j].value)});
      ++j;
    } else {
      Rational v = combine(lhs[i].value, rhs[j].value);
      if (v != 0) out.terms_.push_back({lhs[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  return GroupElement::merge(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  return GroupElement::merge(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

GroupElement operator*(const Integer& k, const GroupElement& a) {
  if (k == 0) return GroupElement::zero(a.construction());
  GroupElement out = a;
  for (auto& t : out.terms_) t.value *= k;
  return out;
}

GroupElement abs(const GroupElement& a) { return a.sign() < 0 ? -a : a; }

void requireSameConstruction(const GroupElement& a, const GroupElement& b) {
  if (a.construction() != b.construction()) {
    throw ConstructionMismatch("cannot combine " + std::string(toString(a.construction())) + " and " +
                               std::string(toString(b.construction())) + " elements");
  }
}

std::strong_ordering cmp(const GroupElement& a, const GroupElement& b) {
  requireSameConstruction(a, b);
  auto lhs = a.terms();
  auto rhs = b.terms();
  std::size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].index < rhs[j].index)) {
      return sgn(lhs[i].value) > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i == lhs.size() || rhs[j].index < lhs[i].index) {
      return sgn(rhs[j].value) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    int c = ::cmp(lhs[i].value, rhs[j].value);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

bool isDivisible(const GroupElement& a, unsigned long n) { return !leadMod(a, n).has_value(); }

bool congruent(const GroupElement& a, const GroupElement& b, unsigned long n) { return isDivisible(b - a, n); }

std::optional<LeadDescriptor> leadMod(const GroupElement& a, unsigned long n) {
  requireNonTrivialModulus(n);
  for (const auto& t : a.terms()) {
    if (!componentDivisible(componentKind(a.construction(), t.index.position), t.value, n)) return t.index;
  }
  return std::nullopt;
}

bool descriptorBlocks(unsigned long n, const GroupElement& cls, const GroupElement& x) {
  requireSameConstruction(cls, x);
  const auto d = leadMod(cls, n);
  if (!d) return false;
  if (x.isZero()) return true;
  const LeadDescriptor l = *x.lead();
  if (l < *d) return false;
  if (l > *d) return true;
  // Same fine index. Dense components (Z_(p)) always reach the class below x.
  if (componentKind(cls.construction(), d->position) != ComponentKind::Integers) return false;
  Integer residue = cls.coefficient(*d).get_num() % Integer(n);
  if (residue < 0) residue += n;
  Integer beta = x.leadCoefficient().get_num();
  if (beta < 0) beta = -beta;
  return beta < residue;
}

bool psi(unsigned long n, const GroupElement& a, const GroupElement& b) {
  requireSameConstruction(a, b);
  requireNonTrivialModulus(n);
  if (b.sign() <= 0) return true;
  return descriptorBlocks(n, a, b);
}

bool isInLambda1(const GroupElement& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const GroupElement::Term& t) { return t.index.position.inG1(); });
}

}  // namespace oagw
