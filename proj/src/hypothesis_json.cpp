#include "pnrule/hypothesis_json.hpp"

#include <iterator>

#include <json.hpp>

#include "pnrule/error.hpp"
#include "pnrule/native_format.hpp"

namespace pnrule {

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "pnrule-hypothesis";
constexpr int kVersion = 1;

json range_json(const ValueRange& r) { return json::array({r.low, r.high}); }

ValueRange range_of(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json datatype_json(const FuzzyDatatype& d) {
  if (d.is_boolean()) return {{"kind", "equals"}, {"value", d.bool_value()}};
  const auto p = d.parameters();
  return {{"kind", to_string(d.kind())},
          {"params", std::vector<double>(p.begin(), p.end())},
          {"range", range_json(d.range())},
          {"label", d.label()}};
}

FuzzyDatatype datatype_of(const json& j) {
  const auto name = j.at("kind").get<std::string>();
  const auto kind = parse_datatype_kind(name);
  if (!kind) throw ValidationError("unknown datatype kind '" + name + "'");
  if (*kind == FuzzyDatatype::Kind::EqualsBool) return FuzzyDatatype::equals_bool(j.at("value").get<bool>());
  const auto params = j.at("params").get<std::vector<double>>();
  return FuzzyDatatype::from_parameters(*kind, params, range_of(j.at("range")), j.at("label").get<std::string>());
}

json concept_json(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Top: return {{"type", "top"}};
    case Concept::Kind::Atomic: return {{"type", "class"}, {"name", c.name()}};
    case Concept::Kind::SomeObject: return {{"type", "some"}, {"role", c.name()}, {"filler", concept_json(c.filler())}};
    case Concept::Kind::SomeData:
      return {{"type", "some-data"}, {"property", c.name()}, {"datatype", datatype_json(c.datatype())}};
    case Concept::Kind::And: {
      json parts = json::array();
      for (const auto& x : c.conjuncts()) parts.push_back(concept_json(x));
      return {{"type", "and"}, {"conjuncts", parts}};
    }
  }
  return {};
}

Concept concept_of(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "top") return Concept::top();
  if (type == "class") return Concept::atomic(j.at("name").get<std::string>());
  if (type == "some") return Concept::some(j.at("role").get<std::string>(), concept_of(j.at("filler")));
  if (type == "some-data") return Concept::some(j.at("property").get<std::string>(), datatype_of(j.at("datatype")));
  if (type == "and") {
    std::vector<Concept> parts;
    for (const auto& x : j.at("conjuncts")) parts.push_back(concept_of(x));
    return Concept::conjunction(std::move(parts));
  }
  throw ValidationError("unknown concept type '" + type + "'");
}

json rules_json(const std::vector<WeightedRule>& rules) {
  json out = json::array();
  for (const auto& r : rules) out.push_back({{"body", concept_json(r.body)}, {"head", r.head}, {"degree", r.degree}});
  return out;
}

std::vector<WeightedRule> rules_of(const json& j) {
  std::vector<WeightedRule> out;
  for (const auto& r : j) out.push_back({concept_of(r.at("body")), r.at("head").get<std::string>(), r.at("degree").get<double>()});
  return out;
}

}  // namespace

std::string hypothesis_to_json(const HypothesisFile& file) {
  const Hypothesis& h = file.hypothesis;
  json families = json::array();
  for (const auto& f : file.families) {
    json sets = json::array();
    for (const auto& d : f.sets) sets.push_back(datatype_json(d));
    families.push_back({{"property", f.property}, {"range", range_json(f.range)}, {"sets", sets}});
  }
  const json doc = {{"format", kFormat},
                    {"version", kVersion},
                    {"target", h.target},
                    {"conjunction", to_string(h.conjunction)},
                    {"gci", to_string(h.gci)},
                    {"families", families},
                    {"p_rules", rules_json(h.p_rules)},
                    {"n_rules", rules_json(h.n_rules)}};
  return doc.dump(2) + "\n";
}

HypothesisFile hypothesis_from_json(std::string_view text, const std::string& source) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != kFormat) throw ValidationError("not a hypothesis file");
    if (doc.at("version").get<int>() != kVersion) throw ValidationError("unsupported hypothesis file version");
    HypothesisFile file;
    Hypothesis& h = file.hypothesis;
    h.target = doc.at("target").get<std::string>();
    h.conjunction = parse_logic(doc.at("conjunction").get<std::string>());
    h.gci = parse_logic(doc.at("gci").get<std::string>());
    h.p_rules = rules_of(doc.at("p_rules"));
    h.n_rules = rules_of(doc.at("n_rules"));
    for (const auto& f : doc.at("families")) {
      FuzzySetFamily family{f.at("property").get<std::string>(), {}, range_of(f.at("range"))};
      for (const auto& d : f.at("sets")) family.sets.push_back(datatype_of(d));
      file.families.push_back(std::move(family));
    }
    return file;
  } catch (const json::exception& e) {
    throw ParseError(source, 0, e.what());
  } catch (const ValidationError& e) {
    throw ParseError(source, 0, e.what());
  }
}

void save_hypothesis(const std::filesystem::path& path, const HypothesisFile& file) {
  auto out = open_output(path);
  out << hypothesis_to_json(file);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

HypothesisFile load_hypothesis(const std::filesystem::path& path) {
  auto in = open_input(path);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return hypothesis_from_json(text, path.string());
}

}  // namespace pnrule
