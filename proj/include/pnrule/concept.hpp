#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pnrule/fuzzy.hpp"

namespace pnrule {

/// An immutable fuzzy EL(D) concept: top, a class name, an existential
/// restriction over an object or datatype property, or a conjunction.
///
/// Conjunctions are kept in normal form: nested conjunctions are flattened,
/// top conjuncts dropped, syntactic duplicates removed and the remaining
/// conjuncts sorted by their canonical key. Two concepts are equal iff their
/// keys are equal. Copies share the underlying node.
class Concept {
 public:
  enum class Kind { Top, Atomic, SomeObject, SomeData, And };

  Concept();  // top

  static Concept top();
  static Concept atomic(std::string class_name);
  static Concept some(std::string object_property, Concept filler);
  static Concept some(std::string data_property, FuzzyDatatype datatype);
  /// Builds the normal-form conjunction. Collapses to the sole conjunct (or
  /// top) when fewer than two distinct conjuncts remain.
  static Concept conjunction(std::vector<Concept> conjuncts);

  Kind kind() const noexcept;
  bool is_top() const noexcept { return kind() == Kind::Top; }
  /// Class name, object property or data property; empty for top and And.
  const std::string& name() const noexcept;
  /// Filler of an SomeObject restriction.
  const Concept& filler() const;
  /// Datatype of an SomeData restriction.
  const FuzzyDatatype& datatype() const;
  /// Conjuncts of an And; a single-element view of itself otherwise.
  std::span<const Concept> conjuncts() const noexcept;

  const std::string& key() const noexcept;

  friend bool operator==(const Concept& a, const Concept& b) noexcept { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept {
    return a.key() <=> b.key();
  }

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Number of top-level conjuncts (1 for anything but an And).
std::size_t conjunct_count(const Concept& c) noexcept;
/// Maximal nesting of existential restrictions.
std::size_t role_depth(const Concept& c) noexcept;

}  // namespace pnrule

template <>
struct std::hash<pnrule::Concept> {
  std::size_t operator()(const pnrule::Concept& c) const noexcept { return std::hash<std::string>{}(c.key()); }
};
