#include "oagw/fragment.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace oagw {

namespace {

/// Appends every coefficient vector of total weight `weight` (|k| <= bound per entry).
void vectorsOfWeight(std::size_t index, unsigned remaining, unsigned bound, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (index == current.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const std::size_t left = current.size() - index - 1;
  for (unsigned mag = 0; mag <= std::min(bound, remaining); ++mag) {
    if (remaining - mag > left * bound) continue;
    if (mag == 0) {
      current[index] = 0;
      vectorsOfWeight(index + 1, remaining, bound, current, out);
    } else {
      for (int sign : {1, -1}) {
        current[index] = sign * static_cast<int>(mag);
        vectorsOfWeight(index + 1, remaining - mag, bound, current, out);
      }
    }
  }
  current[index] = 0;
}

class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}
  bool full() const { return cap_ != 0 && out_.size() >= cap_; }
  void add(GroupElement e) {
    if (full()) return;
    if (seen_.insert(e).second) out_.push_back(std::move(e));
  }
  std::vector<GroupElement> take() { return std::move(out_); }

 private:
  std::size_t cap_;
  std::set<GroupElement, ElementLess> seen_;
  std::vector<GroupElement> out_;
};

}  // namespace

std::vector<GroupElement> fragment(Construction c, std::span<const GroupElement> params, const FragmentConfig& cfg) {
  std::vector<GroupElement> gens;
  for (const auto& p : params) {
    if (p.construction() != c) throw ConstructionMismatch("fragment parameter has the wrong construction");
    gens.push_back(p);
  }
  for (const auto& g : cfg.generatorPool) {
    if (g.construction() != c) throw ConstructionMismatch("fragment generator has the wrong construction");
    gens.push_back(g);
  }

  // Parameters are always present, even past the cap.
  Collector out(0);
  out.add(GroupElement::zero(c));
  for (const auto& p : params) out.add(p);
  std::vector<GroupElement> head = out.take();
  Collector rest(cfg.sizeCap == 0 ? 0 : (cfg.sizeCap > head.size() ? cfg.sizeCap - head.size() : 0));
  std::set<GroupElement, ElementLess> headSet(head.begin(), head.end());
  if (cfg.sizeCap != 0 && head.size() >= cfg.sizeCap) return head;

  std::mt19937_64 rng(cfg.seed);
  const unsigned maxWeight = cfg.coeffBound * static_cast<unsigned>(gens.size());
  std::vector<int> current(gens.size(), 0);
  for (unsigned w = 1; w <= maxWeight && !rest.full(); ++w) {
    std::vector<std::vector<int>> level;
    vectorsOfWeight(0, w, cfg.coeffBound, current, level);
    if (cfg.seed != 0) std::shuffle(level.begin(), level.end(), rng);
    for (const auto& ks : level) {
      GroupElement e = GroupElement::zero(c);
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] != 0) e += static_cast<long>(ks[i]) * gens[i];
      }
      if (!headSet.contains(e)) rest.add(std::move(e));
      if (rest.full()) break;
    }
  }
  for (auto& e : rest.take()) head.push_back(std::move(e));
  return head;
}

GroupElement farUnit(Construction c, std::span<const GroupElement> elements) {
  std::uint32_t next = 0;
  for (const auto& e : elements) {
    for (const auto& t : e.terms()) {
      if (t.index.position.inG1()) next = std::max(next, t.index.position.index + 1);
    }
  }
  return GroupElement::unit(c, Position::g1Square(next, 0));
}

std::vector<GroupElement> probePool(Construction c, std::span<const GroupElement> seeds) {
  std::set<GroupElement, ElementLess> seen;
  std::vector<GroupElement> out;
  auto push = [&](GroupElement e) {
    if (!e.isZero() && seen.insert(e).second) out.push_back(std::move(e));
  };
  auto halving = [&](const Position& p) -> Rational {
    switch (componentKind(c, p)) {
      case ComponentKind::Rationals:
      case ComponentKind::LocalAtThree:
        return makeRational(1, 2);
      case ComponentKind::LocalAtTwo:
        return makeRational(1, 3);
      case ComponentKind::Integers:
        break;
    }
    return 1;
  };

  std::set<LeadDescriptor> indices;
  for (const auto& s : seeds) {
    if (s.construction() != c) throw ConstructionMismatch("probe seed has the wrong construction");
    for (const auto& t : s.terms()) indices.insert(t.index);
  }
  for (const auto& d : indices) {
    push(GroupElement::unit(c, d));
    const auto next = successor(c, d);
    if (next.slot < kSlotCap) push(GroupElement::unit(c, next));
    if (componentKind(c, d.position) != ComponentKind::Integers) {
      push(GroupElement::unit(c, d, halving(d.position)));
    } else {
      push(GroupElement::unit(c, LeadDescriptor{d.position.successor(), 0}));
    }
    const auto after = d.position.successor();
    if (componentKind(c, after) != ComponentKind::Integers) push(GroupElement::unit(c, after, halving(after)));
  }
  push(farUnit(c, seeds));
  return out;
}

}  // namespace oagw
