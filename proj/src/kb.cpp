#include "pnrule/kb.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include <fmt/format.h>

#include "pnrule/error.hpp"

namespace pnrule {

namespace {

bool data_less(const DataAssertion& a, const DataAssertion& b) {
  if (a.individual != b.individual) return a.individual < b.individual;
  if (a.property != b.property) return a.property < b.property;
  if (a.value.index() != b.value.index()) return a.value.index() < b.value.index();
  return a.value < b.value;
}

SubclassClosure compute_closure(const std::vector<std::string>& classes,
                                const std::vector<std::pair<std::string, std::string>>& axioms) {
  std::map<std::string, std::vector<std::string>> supers;
  for (const auto& [sub, super] : axioms) supers[sub].push_back(super);
  SubclassClosure closure;
  for (const auto& c : classes) {
    auto& reached = closure[c];
    std::deque<std::string> frontier{c};
    reached.insert(c);
    while (!frontier.empty()) {
      const std::string current = std::move(frontier.front());
      frontier.pop_front();
      if (auto it = supers.find(current); it != supers.end()) {
        for (const auto& s : it->second) {
          if (reached.insert(s).second) frontier.push_back(s);
        }
      }
    }
  }
  return closure;
}

}  // namespace

std::string_view to_string(DataKind kind) { return kind == DataKind::Numeric ? "numeric" : "boolean"; }

IndividualSet KnowledgeBase::all_individuals() const {
  IndividualSet all(individuals_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = individual_at(i);
  return all;
}

bool KnowledgeBase::has_class(std::string_view name) const {
  return std::binary_search(classes_.begin(), classes_.end(), name);
}

bool KnowledgeBase::has_object_property(std::string_view name) const {
  return std::binary_search(object_properties_.begin(), object_properties_.end(), name);
}

std::optional<DataKind> KnowledgeBase::data_property_kind(std::string_view name) const {
  auto it = data_properties_.find(std::string(name));
  if (it == data_properties_.end()) return std::nullopt;
  return it->second;
}

std::optional<IndividualId> KnowledgeBase::find_individual(std::string_view name) const {
  auto it = individual_index_.find(std::string(name));
  if (it == individual_index_.end()) return std::nullopt;
  return it->second;
}

IndividualId KnowledgeBase::individual(std::string_view name) const {
  if (auto id = find_individual(name)) return *id;
  throw ValidationError(fmt::format("unknown individual '{}'", name));
}

void KnowledgeBase::finish() {
  individual_index_.clear();
  for (std::size_t i = 0; i < individuals_.size(); ++i) individual_index_.emplace(individuals_[i], individual_at(i));
  closure_ = compute_closure(classes_, subclass_axioms_);
}

KnowledgeBase KnowledgeBase::without_assertions_involving(const IndividualSet& removed) const {
  std::vector<bool> drop(individuals_.size(), false);
  for (auto id : removed) drop.at(index(id)) = true;
  KnowledgeBase view = *this;
  std::erase_if(view.class_assertions_, [&](const ClassAssertion& a) { return drop[index(a.individual)]; });
  std::erase_if(view.role_assertions_,
                [&](const RoleAssertion& a) { return drop[index(a.subject)] || drop[index(a.object)]; });
  std::erase_if(view.data_assertions_, [&](const DataAssertion& a) { return drop[index(a.individual)]; });
  return view;
}

bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
  return a.classes_ == b.classes_ && a.subclass_axioms_ == b.subclass_axioms_ &&
         a.object_properties_ == b.object_properties_ && a.data_properties_ == b.data_properties_ &&
         a.individuals_ == b.individuals_ && a.class_assertions_ == b.class_assertions_ &&
         a.role_assertions_ == b.role_assertions_ && a.data_assertions_ == b.data_assertions_;
}

// ---- Builder ----------------------------------------------------------------

KnowledgeBase::Builder& KnowledgeBase::Builder::declare_class(std::string name) {
  if (name.empty()) throw ValidationError("empty class name");
  classes_.insert(std::move(name));
  return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::add_subclass(std::string sub, std::string super) {
  for (const auto* n : {&sub, &super}) {
    if (!classes_.contains(*n)) throw ValidationError(fmt::format("undeclared class '{}'", *n));
  }
  subclass_axioms_.emplace(std::move(sub), std::move(super));
  return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::declare_object_property(std::string name) {
  if (name.empty()) throw ValidationError("empty object property name");
  if (kb_.data_properties_.contains(name)) {
    throw ValidationError(fmt::format("'{}' is already a data property", name));
  }
  object_properties_.insert(std::move(name));
  return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::declare_data_property(std::string name, DataKind kind) {
  if (name.empty()) throw ValidationError("empty data property name");
  if (object_properties_.contains(name)) {
    throw ValidationError(fmt::format("'{}' is already an object property", name));
  }
  auto [it, inserted] = kb_.data_properties_.emplace(std::move(name), kind);
  if (!inserted && it->second != kind) {
    throw ValidationError(fmt::format("data property '{}' redeclared as {}", it->first, to_string(kind)));
  }
  return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::declare_individual(std::string name) {
  if (name.empty()) throw ValidationError("empty individual name");
  if (kb_.individual_index_.contains(name)) return *this;
  kb_.individual_index_.emplace(name, individual_at(kb_.individuals_.size()));
  kb_.individuals_.push_back(std::move(name));
  return *this;
}

IndividualId KnowledgeBase::Builder::require_individual(std::string_view name) const {
  auto it = kb_.individual_index_.find(std::string(name));
  if (it == kb_.individual_index_.end()) throw ValidationError(fmt::format("undeclared individual '{}'", name));
  return it->second;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::add_class_assertion(std::string_view individual,
                                                                    std::string class_name) {
  const auto id = require_individual(individual);
  if (!classes_.contains(class_name)) throw ValidationError(fmt::format("undeclared class '{}'", class_name));
  class_assertions_.insert({id, std::move(class_name)});
  return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::add_role_assertion(std::string_view subject, std::string property,
                                                                   std::string_view object) {
  const auto s = require_individual(subject);
  const auto o = require_individual(object);
  if (!object_properties_.contains(property)) {
    throw ValidationError(fmt::format("undeclared object property '{}'", property));
  }
  role_assertions_.insert({s, std::move(property), o});
  return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::add_data_assertion(std::string_view individual,
                                                                   std::string property, DataValue value) {
  const auto id = require_individual(individual);
  auto it = kb_.data_properties_.find(property);
  if (it == kb_.data_properties_.end()) {
    throw ValidationError(fmt::format("undeclared data property '{}'", property));
  }
  const bool is_bool = std::holds_alternative<bool>(value);
  if (is_bool != (it->second == DataKind::Boolean)) {
    throw ValidationError(fmt::format("value of kind {} for {} data property '{}'", is_bool ? "boolean" : "numeric",
                                      to_string(it->second), property));
  }
  if (!is_bool && !std::isfinite(std::get<double>(value))) {
    throw ValidationError(fmt::format("non-finite value for data property '{}'", property));
  }
  kb_.data_assertions_.push_back({id, std::move(property), value});
  return *this;
}

KnowledgeBase KnowledgeBase::Builder::build() && {
  kb_.classes_.assign(classes_.begin(), classes_.end());
  kb_.subclass_axioms_.assign(subclass_axioms_.begin(), subclass_axioms_.end());
  kb_.object_properties_.assign(object_properties_.begin(), object_properties_.end());
  kb_.class_assertions_.assign(class_assertions_.begin(), class_assertions_.end());
  kb_.role_assertions_.assign(role_assertions_.begin(), role_assertions_.end());
  auto& data = kb_.data_assertions_;
  std::sort(data.begin(), data.end(), data_less);
  data.erase(std::unique(data.begin(), data.end()), data.end());
  kb_.finish();
  return std::move(kb_);
}

// ---- free functions -----------------------------------------------------------

const SubclassClosure& subclass_closure(const KnowledgeBase& kb) { return kb.subclass_closure(); }

std::vector<double> datatype_values(const KnowledgeBase& kb, std::string_view property) {
  const auto kind = kb.data_property_kind(property);
  if (!kind) throw ValidationError(fmt::format("unknown data property '{}'", property));
  if (*kind != DataKind::Numeric) throw ValidationError(fmt::format("data property '{}' is not numeric", property));
  std::vector<double> values;
  for (const auto& a : kb.data_assertions()) {
    if (a.property == property) values.push_back(std::get<double>(a.value));
  }
  return values;
}

}  // namespace pnrule
