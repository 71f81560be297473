#include "pnrule/native_format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pnrule/error.hpp"

namespace pnrule {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream words(line);
  for (std::string w; words >> w;) {
    if (w.front() == '#') break;
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<double> parse_number(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<bool> parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  return std::nullopt;
}

void expect_arity(const std::vector<std::string>& t, std::size_t n, const std::string& source, std::size_t line) {
  if (t.size() != n) {
    throw ParseError(source, line, fmt::format("'{}' expects {} argument(s), got {}", t[0], n - 1, t.size() - 1));
  }
}

}  // namespace

KnowledgeBase parse_kb(std::istream& in, const std::string& source) {
  KnowledgeBase::Builder b;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = tokens_of(line);
    if (t.empty()) continue;
    const std::string& kw = t[0];
    try {
      if (kw == "class") {
        expect_arity(t, 2, source, number);
        b.declare_class(t[1]);
      } else if (kw == "subclass") {
        expect_arity(t, 3, source, number);
        b.add_subclass(t[1], t[2]);
      } else if (kw == "objprop") {
        expect_arity(t, 2, source, number);
        b.declare_object_property(t[1]);
      } else if (kw == "dataprop") {
        expect_arity(t, 3, source, number);
        if (t[2] == "numeric") {
          b.declare_data_property(t[1], DataKind::Numeric);
        } else if (t[2] == "boolean") {
          b.declare_data_property(t[1], DataKind::Boolean);
        } else {
          throw ParseError(source, number, fmt::format("unknown data kind '{}'", t[2]));
        }
      } else if (kw == "individual") {
        expect_arity(t, 2, source, number);
        b.declare_individual(t[1]);
      } else if (kw == "instance") {
        expect_arity(t, 3, source, number);
        b.add_class_assertion(t[1], t[2]);
      } else if (kw == "rel") {
        expect_arity(t, 4, source, number);
        b.add_role_assertion(t[1], t[2], t[3]);
      } else if (kw == "val") {
        expect_arity(t, 4, source, number);
        if (auto flag = parse_bool(t[3])) {
          b.add_data_assertion(t[1], t[2], *flag);
        } else if (auto v = parse_number(t[3])) {
          b.add_data_assertion(t[1], t[2], *v);
        } else {
          throw ParseError(source, number, fmt::format("bad literal '{}'", t[3]));
        }
      } else {
        throw ParseError(source, number, fmt::format("unknown keyword '{}'", kw));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ParseError(source, number, e.what());
    }
  }
  return std::move(b).build();
}

KnowledgeBase load_kb(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_kb(in, path.string());
}

void write_kb(std::ostream& out, const KnowledgeBase& kb) {
  for (const auto& c : kb.classes()) fmt::print(out, "class {}\n", c);
  for (const auto& [sub, super] : kb.subclass_axioms()) fmt::print(out, "subclass {} {}\n", sub, super);
  for (const auto& p : kb.object_properties()) fmt::print(out, "objprop {}\n", p);
  for (const auto& [p, kind] : kb.data_properties()) fmt::print(out, "dataprop {} {}\n", p, to_string(kind));
  for (const auto& a : kb.individuals()) fmt::print(out, "individual {}\n", a);
  for (const auto& a : kb.class_assertions()) fmt::print(out, "instance {} {}\n", kb.name(a.individual), a.class_name);
  for (const auto& a : kb.role_assertions()) {
    fmt::print(out, "rel {} {} {}\n", kb.name(a.subject), a.property, kb.name(a.object));
  }
  for (const auto& a : kb.data_assertions()) {
    if (const bool* flag = std::get_if<bool>(&a.value)) {
      fmt::print(out, "val {} {} {}\n", kb.name(a.individual), a.property, *flag ? "true" : "false");
    } else {
      fmt::print(out, "val {} {} {}\n", kb.name(a.individual), a.property, std::get<double>(a.value));
    }
  }
}

ExampleLabels parse_examples(std::istream& in, const std::string& source) {
  ExampleLabels labels;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = tokens_of(line);
    if (t.empty()) continue;
    if (t.size() != 2) throw ParseError(source, number, "expected '<individual> <label>'");
    Label label;
    if (t[1] == "1" || t[1] == "+1") {
      label = Label::Positive;
    } else if (t[1] == "-1") {
      label = Label::Negative;
    } else if (t[1] == "0") {
      label = Label::Unlabelled;
    } else {
      throw ParseError(source, number, fmt::format("label must be 1, -1 or 0, got '{}'", t[1]));
    }
    if (!labels.emplace(t[0], label).second) {
      throw ParseError(source, number, fmt::format("individual '{}' labelled twice", t[0]));
    }
  }
  return labels;
}

ExampleLabels load_examples(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_examples(in, path.string());
}

void write_examples(std::ostream& out, const KnowledgeBase& kb, const ExampleLabels& labels) {
  for (const auto& name : kb.individuals()) {
    auto it = labels.find(name);
    if (it == labels.end()) continue;
    fmt::print(out, "{} {}\n", name, static_cast<int>(it->second));
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open '{}' for reading", path.string()));
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot open '{}' for writing", path.string()));
  return out;
}

}  // namespace pnrule
