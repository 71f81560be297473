#include "pnrule/task.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "pnrule/error.hpp"

namespace pnrule {

std::string_view to_string(Fuzzification method) {
  return method == Fuzzification::Uniform ? "uniform" : "cmeans";
}

Fuzzification parse_fuzzification(std::string_view text) {
  if (text == "uniform") return Fuzzification::Uniform;
  if (text == "cmeans" || text == "c-means") return Fuzzification::CMeans;
  throw ValidationError(fmt::format("unknown fuzzification method '{}'", text));
}

std::string false_positive_class(std::string_view target) { return fmt::format("FALSEP_{}", target); }

namespace {

void check_unit(double v, std::string_view what) {
  if (!(v >= 0.0 && v <= 1.0)) throw ValidationError(fmt::format("{} = {} is outside [0,1]", what, v));
}

}  // namespace

void LearningTask::validate(const KnowledgeBase& kb) const {
  if (target.empty()) throw ValidationError("learning task without a target name");
  if (kb.has_class(target)) throw ValidationError(fmt::format("target '{}' is already a class of the KB", target));
  bool any_positive = false;
  for (const auto& [name, label] : labels) {
    if (!kb.find_individual(name)) throw ValidationError(fmt::format("labelled individual '{}' not in the KB", name));
    any_positive = any_positive || label == Label::Positive;
  }
  if (!any_positive) throw ValidationError(fmt::format("no positive examples for target '{}'", target));
  check_unit(p_stage.theta, "theta_p");
  check_unit(p_stage.eta, "eta_p");
  check_unit(n_stage.theta, "theta_n");
  check_unit(n_stage.eta, "eta_n");
  if (fuzzy_sets < 3) throw ValidationError("fuzzy_sets must be at least 3");
  if (!(cmeans.fuzzifier > 1.0)) throw ValidationError("c-means fuzzifier must be > 1");
  if (!(cmeans.epsilon > 0.0)) throw ValidationError("c-means epsilon must be > 0");
  if (cmeans.max_iterations == 0) throw ValidationError("c-means max_iterations must be > 0");
}

IndividualSet LearningTask::individuals_with(const KnowledgeBase& kb, Label wanted) const {
  IndividualSet out;
  for (const auto& [name, label] : labels) {
    if (label == wanted) out.push_back(kb.individual(name));
  }
  if (wanted == Label::Unlabelled) {
    for (std::size_t i = 0; i < kb.individual_count(); ++i) {
      if (!labels.contains(kb.individuals()[i])) out.push_back(individual_at(i));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pnrule
