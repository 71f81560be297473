#include "pnrule/refinement.hpp"

#include <algorithm>

namespace pnrule {

namespace {

bool conjunctions_within(const Concept& c, std::size_t max_conjuncts) {
  switch (c.kind()) {
    case Concept::Kind::And:
      if (c.conjuncts().size() > max_conjuncts) return false;
      return std::all_of(c.conjuncts().begin(), c.conjuncts().end(),
                         [&](const Concept& x) { return conjunctions_within(x, max_conjuncts); });
    case Concept::Kind::SomeObject: return conjunctions_within(c.filler(), max_conjuncts);
    default: return true;
  }
}

}  // namespace

Refiner::Refiner(const KnowledgeBase& kb, std::vector<FuzzySetFamily> families, std::size_t max_conjuncts,
                 std::size_t max_role_depth)
    : families_(std::move(families)), max_conjuncts_(max_conjuncts), max_role_depth_(max_role_depth) {
  for (const auto& a : kb.classes()) top_.push_back(Concept::atomic(a));
  for (const auto& r : kb.object_properties()) top_.push_back(Concept::some(r, Concept::top()));
  for (const auto& f : families_) {
    for (const auto& d : f.sets) top_.push_back(Concept::some(f.property, d));
  }
  for (const auto& [b, kind] : kb.data_properties()) {
    if (kind != DataKind::Boolean) continue;
    top_.push_back(Concept::some(b, FuzzyDatatype::equals_bool(true)));
    top_.push_back(Concept::some(b, FuzzyDatatype::equals_bool(false)));
  }
  std::sort(top_.begin(), top_.end());
  top_.erase(std::unique(top_.begin(), top_.end()), top_.end());

  const auto& closure = kb.subclass_closure();
  for (const auto& [sub, supers] : closure) {
    for (const auto& super : supers) {
      if (super == sub) continue;
      if (closure.at(super).contains(sub)) continue;  // equivalent classes
      strict_subsumees_[super].push_back(sub);
    }
  }
}

bool Refiner::admissible(const Concept& c, std::size_t depth_budget) const {
  return role_depth(c) <= depth_budget && conjunctions_within(c, max_conjuncts_);
}

void Refiner::refine_into(const Concept& c, std::size_t depth_budget, std::set<Concept>& out) const {
  std::vector<Concept> raw;
  auto extend = [&] {
    for (const auto& x : top_) raw.push_back(Concept::conjunction({c, x}));
  };
  switch (c.kind()) {
    case Concept::Kind::Top:
      raw = top_;
      break;
    case Concept::Kind::Atomic:
      if (auto it = strict_subsumees_.find(c.name()); it != strict_subsumees_.end()) {
        for (const auto& sub : it->second) raw.push_back(Concept::atomic(sub));
      }
      extend();
      break;
    case Concept::Kind::SomeObject:
      if (depth_budget >= 1) {
        std::set<Concept> inner;
        refine_into(c.filler(), depth_budget - 1, inner);
        for (const auto& d : inner) raw.push_back(Concept::some(c.name(), d));
      }
      extend();
      break;
    case Concept::Kind::SomeData:
      extend();
      break;
    case Concept::Kind::And: {
      const auto parts = c.conjuncts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::set<Concept> replaced;
        refine_into(parts[i], depth_budget, replaced);
        for (const auto& r : replaced) {
          std::vector<Concept> next(parts.begin(), parts.end());
          next[i] = r;
          raw.push_back(Concept::conjunction(std::move(next)));
        }
      }
      break;
    }
  }
  for (auto& candidate : raw) {
    if (candidate != c && admissible(candidate, depth_budget)) out.insert(std::move(candidate));
  }
}

std::vector<Concept> Refiner::refine(const Concept& c) const {
  std::set<Concept> out;
  refine_into(c, max_role_depth_, out);
  return {out.begin(), out.end()};
}

}  // namespace pnrule
