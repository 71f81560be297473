#include "pnrule/reasoner.hpp"

#include <algorithm>
#include <mutex>

#include <fmt/format.h>

#include "pnrule/error.hpp"

namespace pnrule {

Reasoner::Reasoner(const KnowledgeBase& kb, Logic conjunction) : kb_(&kb), conjunction_(conjunction) {
  const auto& closure = kb.subclass_closure();
  for (const auto& a : kb.class_assertions()) {
    for (const auto& super : closure.at(a.class_name)) instances_[super].push_back(a.individual);
  }
  for (auto& [name, list] : instances_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  const std::size_t n = kb.individual_count();
  for (const auto& p : kb.object_properties()) successors_[p].resize(n);
  for (const auto& a : kb.role_assertions()) successors_[a.property][index(a.subject)].push_back(a.object);
  for (const auto& [p, kind] : kb.data_properties()) values_[p].resize(n);
  for (const auto& a : kb.data_assertions()) values_[a.property][index(a.individual)].push_back(a.value);
}

std::shared_ptr<const Extension> Reasoner::extension(const Concept& c) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(c.key()); it != cache_.end()) return it->second;
  }
  auto computed = std::make_shared<const Extension>(compute(c));
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(c.key(), std::move(computed)).first->second;
}

Extension Reasoner::evaluate(const Concept& c) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(c.key()); it != cache_.end()) return *it->second;
  }
  return compute(c);
}

Extension Reasoner::compute(const Concept& c) const {
  const std::size_t n = kb_->individual_count();
  Extension out(n, 0.0);
  switch (c.kind()) {
    case Concept::Kind::Top:
      std::fill(out.begin(), out.end(), 1.0);
      break;
    case Concept::Kind::Atomic:
      if (auto it = instances_.find(c.name()); it != instances_.end()) {
        for (auto id : it->second) out[index(id)] = 1.0;
      }
      break;
    case Concept::Kind::SomeObject: {
      auto it = successors_.find(c.name());
      if (it == successors_.end()) break;
      const auto filler = extension(c.filler());
      for (std::size_t i = 0; i < n; ++i) {
        Degree best = 0.0;
        for (auto b : it->second[i]) best = std::max(best, (*filler)[index(b)]);
        out[i] = best;
      }
      break;
    }
    case Concept::Kind::SomeData: {
      auto it = values_.find(c.name());
      if (it == values_.end()) break;
      const auto& d = c.datatype();
      for (std::size_t i = 0; i < n; ++i) {
        Degree best = 0.0;
        for (const auto& v : it->second[i]) best = std::max(best, d.membership(v));
        out[i] = best;
      }
      break;
    }
    case Concept::Kind::And: {
      const auto parts = c.conjuncts();
      out = *extension(parts.front());
      for (const auto& part : parts.subspan(1)) {
        const auto ext = extension(part);
        for (std::size_t i = 0; i < n; ++i) out[i] = tnorm(conjunction_, out[i], (*ext)[i]);
      }
      break;
    }
  }
  return out;
}

Degree Reasoner::bed(IndividualId a, const Concept& c) const {
  if (index(a) >= kb_->individual_count()) {
    throw ValidationError(fmt::format("individual id {} out of range", index(a)));
  }
  return (*extension(c))[index(a)];
}

Degree Reasoner::bed(std::string_view individual, const Concept& c) const { return bed(kb_->individual(individual), c); }

std::size_t Reasoner::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

double fuzzy_cardinality(const Reasoner& r, const Concept& c, const IndividualSet& individuals) {
  const auto ext = r.extension(c);
  double sum = 0.0;
  for (auto a : individuals) sum += (*ext)[index(a)];
  return sum;
}

std::size_t crisp_cardinality(const Reasoner& r, const Concept& c, const IndividualSet& individuals) {
  const auto ext = r.extension(c);
  return static_cast<std::size_t>(
      std::count_if(individuals.begin(), individuals.end(), [&](IndividualId a) { return (*ext)[index(a)] > 0.0; }));
}

Degree confidence(const Reasoner& r, const Concept& body, const IndividualSet& positives) {
  const auto ext = r.extension(body);
  double total = 0.0;
  for (Degree d : *ext) total += d;
  if (total == 0.0) return 0.0;
  return fuzzy_cardinality(r, body, positives) / total;
}

Degree support(const Reasoner& r, const Concept& body, const IndividualSet& individuals) {
  if (individuals.empty()) return 0.0;
  return fuzzy_cardinality(r, body, individuals) / static_cast<double>(individuals.size());
}

Degree rule_value(const Reasoner& r, const WeightedRule& rule, IndividualId a, Logic gci) {
  return tnorm(gci, r.bed(a, rule.body), rule.degree);
}

namespace {

Extension group_values(const Reasoner& r, const std::vector<WeightedRule>& rules, Logic gci) {
  Extension best(r.kb().individual_count(), 0.0);
  for (const auto& rule : rules) {
    const auto ext = r.extension(rule.body);
    for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], tnorm(gci, (*ext)[i], rule.degree));
  }
  return best;
}

}  // namespace

Degree hypothesis_value(const Reasoner& r, const Hypothesis& h, IndividualId a) {
  Degree p = 0.0;
  for (const auto& rule : h.p_rules) p = std::max(p, rule_value(r, rule, a, h.gci));
  if (h.n_rules.empty()) return p;
  Degree n = 0.0;
  for (const auto& rule : h.n_rules) n = std::max(n, rule_value(r, rule, a, h.gci));
  return aggregate_star(p, n);
}

Extension hypothesis_values(const Reasoner& r, const Hypothesis& h) {
  Extension p = group_values(r, h.p_rules, h.gci);
  if (h.n_rules.empty()) return p;
  const Extension n = group_values(r, h.n_rules, h.gci);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = aggregate_star(p[i], n[i]);
  return p;
}

IndividualSet coverage(const Reasoner& r, const Hypothesis& h) {
  const auto values = hypothesis_values(r, h);
  IndividualSet out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > 0.0) out.push_back(individual_at(i));
  }
  return out;
}

IndividualSet coverage(const Reasoner& r, const Hypothesis& h, Degree theta) {
  const auto values = hypothesis_values(r, h);
  IndividualSet out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= theta) out.push_back(individual_at(i));
  }
  return out;
}

}  // namespace pnrule
