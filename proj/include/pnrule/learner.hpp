#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pnrule/concept.hpp"
#include "pnrule/fuzzification.hpp"
#include "pnrule/kb.hpp"
#include "pnrule/reasoner.hpp"
#include "pnrule/refinement.hpp"
#include "pnrule/task.hpp"

namespace pnrule {

/// Everything one stage of the learner sees. `positives`, `negatives` and
/// `unlabelled` are pairwise disjoint; `pos_remaining` ⊆ `positives` are the
/// positives not yet covered. Negatives and unlabelled individuals are both
/// treated as non-positives.
struct StageInputs {
  const Reasoner* reasoner = nullptr;
  const Refiner* refiner = nullptr;
  std::string target;
  IndividualSet pos_remaining;
  IndividualSet positives;
  IndividualSet negatives;
  IndividualSet unlabelled;
  double theta = 0.1;
  double eta = 1.0;
  std::size_t backtrack_size = 5;
  Logic gci = Logic::Lukasiewicz;

  IndividualSet non_positives() const;
};

/// Information gain of moving from `current` to `candidate`:
///   p * (log2 cf(candidate) - log2 cf(current))
/// with p the fuzzy cardinality of candidate ⊓ current over `pos_remaining`
/// and both confidences taken w.r.t. `pos_remaining`. Zero whenever p or one
/// of the confidences is zero.
double gain(const Reasoner& r, const Concept& candidate, const Concept& current, const IndividualSet& pos_remaining);

/// Greedy gain-guided specialisation from ⊤ with a bounded backtracking stack.
/// Returns the body of the accepted axiom, or nullopt when nothing satisfies
/// the confidence (>= theta over the stage positives) and non-positive
/// support (<= eta) criteria.
std::optional<Concept> learn_one_axiom(const StageInputs& in);

/// Stage learner: repeatedly learns an axiom, weights it by its confidence
/// over the stage positives and removes the positives it covers, until every
/// positive is covered, nothing is learnable or an axiom repeats.
std::vector<WeightedRule> pn_foil_dl(const StageInputs& in);

/// What the two-stage driver did, for inspection and tests.
struct LearnTrace {
  IndividualSet p_coverage;       ///< theta_P-coverage of the P-stage rules
  IndividualSet false_positives;  ///< p_coverage minus the positives
  bool n_stage_ran = false;
};

/// Two-stage learner. P-stage rules cover the positives; if they θ_P-cover
/// non-positives, an N-stage learns rules for those false positives against
/// the positives, and the two rule groups are combined with the star
/// aggregation. Fuzzy datatypes are built from `kb` per the task unless
/// `families` is given. Throws ValidationError for an invalid task.
Hypothesis pn_owl(const KnowledgeBase& kb, const LearningTask& task, LearnTrace* trace = nullptr);
Hypothesis pn_owl(const KnowledgeBase& kb, const LearningTask& task, std::vector<FuzzySetFamily> families,
                  LearnTrace* trace = nullptr);

/// Fuzzy sets the task's fuzzification builds on `kb`.
std::vector<FuzzySetFamily> task_families(const KnowledgeBase& kb, const LearningTask& task);

struct Classification {
  Degree value = 0.0;
  bool positive = false;
};

Classification classify(const Reasoner& r, const Hypothesis& h, IndividualId a);

}  // namespace pnrule
