#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pnrule/concept.hpp"
#include "pnrule/fuzzification.hpp"
#include "pnrule/kb.hpp"

namespace pnrule {

/// Downward refinement operator over fuzzy EL(D) concepts.
///
///   ρ(⊤)        = classes ∪ {∃r.⊤} ∪ {∃s.d | d in the family of s} ∪ {∃b.=true, ∃b.=false}
///   ρ(A)        = strict subsumees of A ∪ {A ⊓ X | X ∈ ρ(⊤)}
///   ρ(∃r.D)     = {∃r.D' | D' ∈ ρ(D)} ∪ {∃r.D ⊓ X | X ∈ ρ(⊤)}
///   ρ(∃s.d)     = {∃s.d ⊓ X | X ∈ ρ(⊤)}
///   ρ(C1⊓…⊓Cn)  = one conjunct replaced by one of its refinements
///
/// Results respect the conjunct and role-depth bounds (the conjunct bound
/// also applies inside fillers), never contain the input, carry no duplicate
/// conjuncts and come sorted by canonical key.
class Refiner {
 public:
  Refiner(const KnowledgeBase& kb, std::vector<FuzzySetFamily> families, std::size_t max_conjuncts,
          std::size_t max_role_depth);

  std::vector<Concept> refine(const Concept& c) const;

  /// ρ(⊤) before bounds are applied.
  const std::vector<Concept>& top_refinements() const noexcept { return top_; }
  const std::vector<FuzzySetFamily>& families() const noexcept { return families_; }
  std::size_t max_conjuncts() const noexcept { return max_conjuncts_; }
  std::size_t max_role_depth() const noexcept { return max_role_depth_; }

 private:
  void refine_into(const Concept& c, std::size_t depth_budget, std::set<Concept>& out) const;
  bool admissible(const Concept& c, std::size_t depth_budget) const;

  std::vector<FuzzySetFamily> families_;
  std::size_t max_conjuncts_;
  std::size_t max_role_depth_;
  std::vector<Concept> top_;
  std::map<std::string, std::vector<std::string>> strict_subsumees_;
};

}  // namespace pnrule
