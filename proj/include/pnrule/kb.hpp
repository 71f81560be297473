#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pnrule/fuzzy.hpp"

namespace pnrule {

enum class DataKind { Numeric, Boolean };

std::string_view to_string(DataKind kind);

/// Position of an individual in its knowledge base's declaration order.
enum class IndividualId : std::uint32_t {};

constexpr std::size_t index(IndividualId id) noexcept { return static_cast<std::size_t>(id); }
constexpr IndividualId individual_at(std::size_t i) noexcept { return static_cast<IndividualId>(i); }

/// Sorted, duplicate-free list of individuals.
using IndividualSet = std::vector<IndividualId>;

struct ClassAssertion {
  IndividualId individual;
  std::string class_name;

  friend auto operator<=>(const ClassAssertion&, const ClassAssertion&) = default;
};

struct RoleAssertion {
  IndividualId subject;
  std::string property;
  IndividualId object;

  friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
};

struct DataAssertion {
  IndividualId individual;
  std::string property;
  DataValue value;

  friend bool operator==(const DataAssertion&, const DataAssertion&) = default;
};

/// Reflexive-transitive closure of the atomic subclass axioms:
/// class -> every class it is (transitively) subsumed by, itself included.
using SubclassClosure = std::map<std::string, std::set<std::string>>;

/// Crisp knowledge base: declared names, atomic subclass axioms and crisp
/// assertions. Immutable once built; assertion lists are kept sorted so two
/// knowledge bases with the same content compare equal.
class KnowledgeBase {
 public:
  class Builder;

  KnowledgeBase() = default;

  const std::vector<std::string>& classes() const noexcept { return classes_; }
  const std::vector<std::pair<std::string, std::string>>& subclass_axioms() const noexcept {
    return subclass_axioms_;
  }
  const std::vector<std::string>& object_properties() const noexcept { return object_properties_; }
  const std::map<std::string, DataKind>& data_properties() const noexcept { return data_properties_; }
  /// In declaration order; IndividualId indexes into this list.
  const std::vector<std::string>& individuals() const noexcept { return individuals_; }
  std::size_t individual_count() const noexcept { return individuals_.size(); }
  IndividualSet all_individuals() const;

  const std::vector<ClassAssertion>& class_assertions() const noexcept { return class_assertions_; }
  const std::vector<RoleAssertion>& role_assertions() const noexcept { return role_assertions_; }
  const std::vector<DataAssertion>& data_assertions() const noexcept { return data_assertions_; }

  bool has_class(std::string_view name) const;
  bool has_object_property(std::string_view name) const;
  std::optional<DataKind> data_property_kind(std::string_view name) const;

  std::optional<IndividualId> find_individual(std::string_view name) const;
  /// Throws ValidationError for unknown names.
  IndividualId individual(std::string_view name) const;
  const std::string& name(IndividualId id) const { return individuals_.at(index(id)); }

  const SubclassClosure& subclass_closure() const noexcept { return closure_; }

  /// Same declarations, with every assertion that mentions one of `removed`
  /// (either endpoint of a role assertion) dropped.
  KnowledgeBase without_assertions_involving(const IndividualSet& removed) const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b);

 private:
  void finish();

  std::vector<std::string> classes_;
  std::vector<std::pair<std::string, std::string>> subclass_axioms_;
  std::vector<std::string> object_properties_;
  std::map<std::string, DataKind> data_properties_;
  std::vector<std::string> individuals_;
  std::unordered_map<std::string, IndividualId> individual_index_;
  std::vector<ClassAssertion> class_assertions_;
  std::vector<RoleAssertion> role_assertions_;
  std::vector<DataAssertion> data_assertions_;
  SubclassClosure closure_;
};

/// Incremental, validating construction. Every name must be declared before
/// an axiom or assertion refers to it; violations throw ValidationError.
/// Re-declaring an existing name is a no-op (a data property may not change
/// kind).
class KnowledgeBase::Builder {
 public:
  Builder& declare_class(std::string name);
  Builder& add_subclass(std::string sub, std::string super);
  Builder& declare_object_property(std::string name);
  Builder& declare_data_property(std::string name, DataKind kind);
  Builder& declare_individual(std::string name);
  Builder& add_class_assertion(std::string_view individual, std::string class_name);
  Builder& add_role_assertion(std::string_view subject, std::string property, std::string_view object);
  Builder& add_data_assertion(std::string_view individual, std::string property, DataValue value);

  KnowledgeBase build() &&;

 private:
  IndividualId require_individual(std::string_view name) const;

  KnowledgeBase kb_;
  std::set<std::string> classes_;
  std::set<std::pair<std::string, std::string>> subclass_axioms_;
  std::set<std::string> object_properties_;
  std::set<ClassAssertion> class_assertions_;
  std::set<RoleAssertion> role_assertions_;
};

/// Closure of the knowledge base's atomic subclass axioms. Cycles are
/// tolerated: members of a cycle subsume each other.
const SubclassClosure& subclass_closure(const KnowledgeBase& kb);

/// Every value asserted for numeric property `property`, duplicates kept.
/// Throws ValidationError when the property is unknown or not numeric.
std::vector<double> datatype_values(const KnowledgeBase& kb, std::string_view property);

}  // namespace pnrule
