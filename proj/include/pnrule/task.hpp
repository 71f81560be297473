#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pnrule/concept.hpp"
#include "pnrule/fuzzy.hpp"
#include "pnrule/kb.hpp"

namespace pnrule {

enum class Label : std::int8_t { Negative = -1, Unlabelled = 0, Positive = 1 };

enum class Fuzzification { Uniform, CMeans };

std::string_view to_string(Fuzzification method);
Fuzzification parse_fuzzification(std::string_view text);

/// Thresholds and structural bounds of one learning stage.
struct StageParams {
  double theta = 0.1;        ///< minimal rule confidence w.r.t. the stage positives
  double eta = 1.0;          ///< maximal support over the stage non-positives
  std::size_t max_conjuncts = 5;
  std::size_t max_role_depth = 1;

  friend bool operator==(const StageParams&, const StageParams&) = default;
};

inline constexpr StageParams kDefaultPStage{0.1, 1.0, 5, 1};
inline constexpr StageParams kDefaultNStage{0.3, 0.2, 10, 1};

struct CMeansParams {
  double fuzzifier = 2.0;
  double epsilon = 0.05;
  std::size_t max_iterations = 100;

  friend bool operator==(const CMeansParams&, const CMeansParams&) = default;
};

/// One target class to learn, with example labels and every knob of a run.
/// Individuals missing from `labels` are unlabelled.
struct LearningTask {
  std::string target;
  std::map<std::string, Label> labels;

  StageParams p_stage = kDefaultPStage;
  StageParams n_stage = kDefaultNStage;
  bool run_n_stage = true;

  std::size_t fuzzy_sets = 3;
  Fuzzification fuzzification = Fuzzification::Uniform;
  CMeansParams cmeans;

  Logic conjunction = Logic::Goedel;
  Logic gci = Logic::Lukasiewicz;
  std::size_t backtrack_size = 5;
  std::uint64_t seed = 42;

  /// Throws ValidationError unless the task is runnable against `kb`: at
  /// least one positive, the target is not a class of `kb`, every labelled
  /// individual exists and all thresholds lie in [0,1].
  void validate(const KnowledgeBase& kb) const;

  IndividualSet individuals_with(const KnowledgeBase& kb, Label label) const;
};

/// Fuzzy GCI <body ⊑ head, degree>.
struct WeightedRule {
  Concept body;
  std::string head;
  Degree degree = 1.0;

  friend bool operator==(const WeightedRule&, const WeightedRule&) = default;
};

/// The learnt ensemble: P-rules aggregated by max, N-rules aggregated by max,
/// the two combined by the star operator. With no N-rules the prediction is
/// the P-aggregate alone.
struct Hypothesis {
  std::string target;
  std::vector<WeightedRule> p_rules;
  std::vector<WeightedRule> n_rules;
  Logic conjunction = Logic::Goedel;  ///< semantics of ⊓ in rule bodies
  Logic gci = Logic::Lukasiewicz;     ///< implication of the rules; modus ponens uses its t-norm
  AggregationChoice aggregation;

  bool empty() const noexcept { return p_rules.empty(); }
  std::size_t size() const noexcept { return p_rules.size() + n_rules.size(); }

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// Name of the auxiliary class the N-stage learns for `target`.
std::string false_positive_class(std::string_view target);

}  // namespace pnrule
