#include "pnrule/learner.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <unordered_set>

#include "pnrule/error.hpp"

namespace pnrule {

namespace {

// Hard cap on node expansions per Learn-One-Axiom call; the search space is
// finite, this only bounds pathological backtracking.
constexpr std::size_t kMaxExpansions = 10000;

IndividualSet set_union(const IndividualSet& a, const IndividualSet& b) {
  IndividualSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndividualSet set_difference(const IndividualSet& a, const IndividualSet& b) {
  IndividualSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct SetSums {
  double within = 0.0;
  double total = 0.0;
};

SetSums sums(const Extension& ext, const IndividualSet& subset) {
  SetSums s;
  for (Degree d : ext) s.total += d;
  for (auto a : subset) s.within += ext[index(a)];
  return s;
}

double ratio(const SetSums& s) { return s.total == 0.0 ? 0.0 : s.within / s.total; }

double gain_of(Logic conjunction, const Extension& candidate, const Extension& current, double cf_candidate,
               double cf_current, const IndividualSet& pos_remaining) {
  if (cf_candidate == 0.0 || cf_current == 0.0) return 0.0;
  double p = 0.0;
  for (auto a : pos_remaining) p += tnorm(conjunction, candidate[index(a)], current[index(a)]);
  if (p == 0.0) return 0.0;
  return p * (std::log2(cf_candidate) - std::log2(cf_current));
}

struct Scored {
  Concept concept_;
  double gain = 0.0;
  double confidence = 0.0;  // w.r.t. the remaining positives
};

// Deterministic preference among equal gains: higher confidence, fewer
// conjuncts, smaller canonical key.
bool preferred(const Scored& a, const Scored& b) {
  if (a.confidence != b.confidence) return a.confidence > b.confidence;
  const auto ca = conjunct_count(a.concept_);
  const auto cb = conjunct_count(b.concept_);
  if (ca != cb) return ca < cb;
  return a.concept_ < b.concept_;
}

}  // namespace

IndividualSet StageInputs::non_positives() const { return set_union(negatives, unlabelled); }

double gain(const Reasoner& r, const Concept& candidate, const Concept& current, const IndividualSet& pos_remaining) {
  const auto cand = r.evaluate(candidate);
  const auto cur = r.evaluate(current);
  return gain_of(r.conjunction(), cand, cur, ratio(sums(cand, pos_remaining)), ratio(sums(cur, pos_remaining)),
                 pos_remaining);
}

std::optional<Concept> learn_one_axiom(const StageInputs& in) {
  if (in.reasoner == nullptr || in.refiner == nullptr) throw Error("learn_one_axiom: missing reasoner or refiner");
  const Reasoner& r = *in.reasoner;
  const IndividualSet non_positives = in.non_positives();

  auto accepts = [&](const Concept& c) {
    const auto ext = r.evaluate(c);
    const double cf = ratio(sums(ext, in.positives));
    const double supp =
        non_positives.empty() ? 0.0 : sums(ext, non_positives).within / static_cast<double>(non_positives.size());
    return cf >= in.theta && supp <= in.eta;
  };

  std::unordered_set<std::string> visited;
  std::vector<Scored> stack;  // best first
  Concept current = Concept::top();

  for (std::size_t expansion = 0; expansion < kMaxExpansions; ++expansion) {
    visited.insert(current.key());
    const Extension cur_ext = r.evaluate(current);
    const double cf_current = ratio(sums(cur_ext, in.pos_remaining));

    std::optional<Scored> best;
    std::vector<Scored> scored;
    for (auto& candidate : in.refiner->refine(current)) {
      if (visited.contains(candidate.key())) continue;
      const Extension ext = r.evaluate(candidate);
      const double cf = ratio(sums(ext, in.pos_remaining));
      const double g = gain_of(r.conjunction(), ext, cur_ext, cf, cf_current, in.pos_remaining);
      scored.push_back({std::move(candidate), g, cf});
      const Scored& s = scored.back();
      if (s.gain > 0.0 && (!best || s.gain > best->gain || (s.gain == best->gain && preferred(s, *best)))) {
        best = s;
      }
    }

    if (in.backtrack_size > 0) {
      for (auto& s : scored) {
        if (s.confidence > 0.0 && !(best && s.concept_ == best->concept_)) stack.push_back(std::move(s));
      }
      std::sort(stack.begin(), stack.end(), preferred);
      stack.erase(std::unique(stack.begin(), stack.end(),
                              [](const Scored& a, const Scored& b) { return a.concept_ == b.concept_; }),
                  stack.end());
      if (stack.size() > in.backtrack_size) stack.resize(in.backtrack_size);
    }

    if (best) {
      current = best->concept_;
      continue;
    }
    if (accepts(current)) return current;

    std::erase_if(stack, [&](const Scored& s) { return visited.contains(s.concept_.key()); });
    if (stack.empty()) return std::nullopt;
    current = stack.front().concept_;
    stack.erase(stack.begin());
  }
  return std::nullopt;
}

std::vector<WeightedRule> pn_foil_dl(const StageInputs& in) {
  if (in.reasoner == nullptr) throw Error("pn_foil_dl: missing reasoner");
  std::vector<WeightedRule> rules;
  StageInputs state = in;
  while (!state.pos_remaining.empty()) {
    auto body = learn_one_axiom(state);
    if (!body) break;
    const bool repeated =
        std::any_of(rules.begin(), rules.end(), [&](const WeightedRule& rule) { return rule.body == *body; });
    if (repeated) break;
    const Degree degree = confidence(*in.reasoner, *body, in.positives);
    rules.push_back({*body, in.target, degree});

    const auto ext = in.reasoner->extension(*body);
    std::erase_if(state.pos_remaining,
                  [&](IndividualId a) { return tnorm(in.gci, (*ext)[index(a)], degree) > 0.0; });
  }
  return rules;
}

std::vector<FuzzySetFamily> task_families(const KnowledgeBase& kb, const LearningTask& task) {
  return build_families(kb, task.fuzzification, task.fuzzy_sets, task.cmeans);
}

Hypothesis pn_owl(const KnowledgeBase& kb, const LearningTask& task, LearnTrace* trace) {
  return pn_owl(kb, task, task_families(kb, task), trace);
}

Hypothesis pn_owl(const KnowledgeBase& kb, const LearningTask& task, std::vector<FuzzySetFamily> families,
                  LearnTrace* trace) {
  task.validate(kb);
  if (trace != nullptr) *trace = {};

  Hypothesis h;
  h.target = task.target;
  h.conjunction = task.conjunction;
  h.gci = task.gci;

  const Reasoner reasoner(kb, task.conjunction);
  const IndividualSet positives = task.individuals_with(kb, Label::Positive);
  const IndividualSet negatives = task.individuals_with(kb, Label::Negative);
  const IndividualSet everyone = kb.all_individuals();

  // P-stage
  const Refiner p_refiner(kb, families, task.p_stage.max_conjuncts, task.p_stage.max_role_depth);
  StageInputs p_in;
  p_in.reasoner = &reasoner;
  p_in.refiner = &p_refiner;
  p_in.target = task.target;
  p_in.pos_remaining = positives;
  p_in.positives = positives;
  p_in.negatives = negatives;
  p_in.unlabelled = set_difference(everyone, set_union(positives, negatives));
  p_in.theta = task.p_stage.theta;
  p_in.eta = task.p_stage.eta;
  p_in.backtrack_size = task.backtrack_size;
  p_in.gci = task.gci;
  h.p_rules = pn_foil_dl(p_in);
  if (h.p_rules.empty()) return h;

  const IndividualSet covered = coverage(reasoner, h, task.p_stage.theta);
  const IndividualSet false_positives = set_difference(covered, positives);
  if (trace != nullptr) {
    trace->p_coverage = covered;
    trace->false_positives = false_positives;
  }
  if (false_positives.empty() || !task.run_n_stage) return h;

  // N-stage: the false positives become the target, the positives the negatives.
  const Refiner n_refiner(kb, std::move(families), task.n_stage.max_conjuncts, task.n_stage.max_role_depth);
  StageInputs n_in = p_in;
  n_in.refiner = &n_refiner;
  n_in.target = false_positive_class(task.target);
  n_in.pos_remaining = false_positives;
  n_in.positives = false_positives;
  n_in.negatives = positives;
  n_in.unlabelled = set_difference(everyone, set_union(false_positives, positives));
  n_in.theta = task.n_stage.theta;
  n_in.eta = task.n_stage.eta;
  h.n_rules = pn_foil_dl(n_in);
  if (trace != nullptr) trace->n_stage_ran = true;
  return h;
}

Classification classify(const Reasoner& r, const Hypothesis& h, IndividualId a) {
  const Degree v = hypothesis_value(r, h, a);
  return {v, v > 0.0};
}

}  // namespace pnrule
