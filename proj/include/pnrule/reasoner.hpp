#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pnrule/concept.hpp"
#include "pnrule/fuzzy.hpp"
#include "pnrule/kb.hpp"
#include "pnrule/task.hpp"

namespace pnrule {

/// Degrees of one concept for every individual, indexed by IndividualId.
using Extension = std::vector<Degree>;

/// Best-entailment-degree evaluator for fuzzy EL(D) concepts over a crisp KB
/// with an atomic TBox.
///
/// For this fragment the minimal model is unique and evaluation is
/// structural: top is 1; A is 1 iff some asserted class of the individual is
/// subsumed by A; an existential restriction takes the max over asserted
/// successors or values (role degrees are crisp); a conjunction folds the
/// conjunction t-norm over its conjuncts. Extensions are memoised by concept
/// key; the cache is safe for concurrent use. The knowledge base must outlive
/// the reasoner.
class Reasoner {
 public:
  explicit Reasoner(const KnowledgeBase& kb, Logic conjunction = Logic::Goedel);

  Reasoner(const Reasoner&) = delete;
  Reasoner& operator=(const Reasoner&) = delete;

  const KnowledgeBase& kb() const noexcept { return *kb_; }
  Logic conjunction() const noexcept { return conjunction_; }

  std::shared_ptr<const Extension> extension(const Concept& c) const;
  /// Degrees of `c` computed from memoised sub-concepts, without memoising
  /// `c` itself. Used for short-lived search candidates.
  Extension evaluate(const Concept& c) const;
  Degree bed(IndividualId a, const Concept& c) const;
  Degree bed(std::string_view individual, const Concept& c) const;

  std::size_t cache_size() const;

 private:
  Extension compute(const Concept& c) const;

  const KnowledgeBase* kb_;
  Logic conjunction_;
  std::unordered_map<std::string, std::vector<IndividualId>> instances_;
  std::unordered_map<std::string, std::vector<std::vector<IndividualId>>> successors_;
  std::unordered_map<std::string, std::vector<std::vector<DataValue>>> values_;

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const Extension>> cache_;
};

/// Σ of bed over `individuals`.
double fuzzy_cardinality(const Reasoner& r, const Concept& c, const IndividualSet& individuals);
/// Number of individuals with bed > 0.
std::size_t crisp_cardinality(const Reasoner& r, const Concept& c, const IndividualSet& individuals);
/// Fuzzy proportion of `body`'s cover that lies in `positives`; 0 when the
/// body covers nothing.
Degree confidence(const Reasoner& r, const Concept& body, const IndividualSet& positives);
/// |body|_inds / |inds|; 0 for an empty set.
Degree support(const Reasoner& r, const Concept& body, const IndividualSet& individuals);

/// Fuzzy modus ponens: bed(a, body) combined with the rule degree by the
/// t-norm whose residuum is `gci`.
Degree rule_value(const Reasoner& r, const WeightedRule& rule, IndividualId a, Logic gci = Logic::Lukasiewicz);

/// Prediction value h(a): star(max P-rule value, max N-rule value), or the
/// max P-rule value alone when there are no N-rules.
Degree hypothesis_value(const Reasoner& r, const Hypothesis& h, IndividualId a);
/// hypothesis_value for every individual of the reasoner's KB.
Extension hypothesis_values(const Reasoner& r, const Hypothesis& h);

/// Individuals with h(a) > 0.
IndividualSet coverage(const Reasoner& r, const Hypothesis& h);
/// Individuals with h(a) >= theta.
IndividualSet coverage(const Reasoner& r, const Hypothesis& h, Degree theta);

}  // namespace pnrule
