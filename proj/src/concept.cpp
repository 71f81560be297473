#include "pnrule/concept.hpp"

#include <algorithm>
#include <optional>

#include <fmt/format.h>

#include "pnrule/error.hpp"

namespace pnrule {

struct Concept::Node {
  Kind kind = Kind::Top;
  std::string name;
  std::vector<Concept> children;  // filler (size 1) or conjuncts
  std::optional<FuzzyDatatype> datatype;
  std::string key;
};

Concept::Concept() : Concept(top()) {}

Concept Concept::top() {
  static const Concept t{[] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Top;
    n->key = "*top*";
    return std::shared_ptr<const Node>(std::move(n));
  }()};
  return t;
}

Concept Concept::atomic(std::string class_name) {
  if (class_name.empty()) throw ValidationError("atomic concept with empty name");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atomic;
  n->key = class_name;
  n->name = std::move(class_name);
  return Concept(std::move(n));
}

Concept Concept::some(std::string object_property, Concept filler) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SomeObject;
  n->key = fmt::format("(some {} {})", object_property, filler.key());
  n->name = std::move(object_property);
  n->children.push_back(std::move(filler));
  return Concept(std::move(n));
}

Concept Concept::some(std::string data_property, FuzzyDatatype datatype) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SomeData;
  n->key = fmt::format("(some {} {})", data_property, datatype.key());
  n->name = std::move(data_property);
  n->datatype = std::move(datatype);
  return Concept(std::move(n));
}

Concept Concept::conjunction(std::vector<Concept> conjuncts) {
  std::vector<Concept> flat;
  flat.reserve(conjuncts.size());
  for (auto& c : conjuncts) {
    if (c.kind() == Kind::And) {
      for (const auto& inner : c.conjuncts()) flat.push_back(inner);
    } else if (!c.is_top()) {
      flat.push_back(std::move(c));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat.front();

  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  std::string key = "(and";
  for (const auto& c : flat) {
    key += ' ';
    key += c.key();
  }
  key += ')';
  n->key = std::move(key);
  n->children = std::move(flat);
  return Concept(std::move(n));
}

Concept::Kind Concept::kind() const noexcept { return node_->kind; }

const std::string& Concept::name() const noexcept { return node_->name; }

const Concept& Concept::filler() const {
  if (node_->kind != Kind::SomeObject) throw Error("filler() on a non object restriction");
  return node_->children.front();
}

const FuzzyDatatype& Concept::datatype() const {
  if (node_->kind != Kind::SomeData) throw Error("datatype() on a non data restriction");
  return *node_->datatype;
}

std::span<const Concept> Concept::conjuncts() const noexcept {
  if (node_->kind == Kind::And) return node_->children;
  return {this, 1};
}

const std::string& Concept::key() const noexcept { return node_->key; }

std::size_t conjunct_count(const Concept& c) noexcept { return c.conjuncts().size(); }

std::size_t role_depth(const Concept& c) noexcept {
  switch (c.kind()) {
    case Concept::Kind::Top:
    case Concept::Kind::Atomic: return 0;
    case Concept::Kind::SomeData: return 1;
    case Concept::Kind::SomeObject: return 1 + role_depth(c.filler());
    case Concept::Kind::And: {
      std::size_t depth = 0;
      for (const auto& x : c.conjuncts()) depth = std::max(depth, role_depth(x));
      return depth;
    }
  }
  return 0;
}

}  // namespace pnrule
