#include "pnrule/fuzzyowl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "pnrule/error.hpp"

namespace pnrule {

namespace {

constexpr std::string_view kHeader = "# PN rule hypothesis for ";

void collect_properties(const Concept& c, std::set<std::string>& out) {
  switch (c.kind()) {
    case Concept::Kind::SomeData:
      if (!c.datatype().is_boolean()) out.insert(c.name());
      break;
    case Concept::Kind::SomeObject: collect_properties(c.filler(), out); break;
    case Concept::Kind::And:
      for (const auto& x : c.conjuncts()) collect_properties(x, out);
      break;
    default: break;
  }
}

void print_concept(const Concept& c, std::string& out) {
  switch (c.kind()) {
    case Concept::Kind::Top: out += "*top*"; break;
    case Concept::Kind::Atomic: out += c.name(); break;
    case Concept::Kind::SomeObject:
      out += "(some " + c.name() + " ";
      print_concept(c.filler(), out);
      out += ")";
      break;
    case Concept::Kind::SomeData: {
      const auto& d = c.datatype();
      if (d.is_boolean()) {
        out += fmt::format("(some {} {})", c.name(), d.bool_value() ? "true" : "false");
      } else {
        if (d.label().empty()) throw Error(fmt::format("datatype {} has no name to export", d.key()));
        out += fmt::format("(some {} {})", c.name(), d.label());
      }
      break;
    }
    case Concept::Kind::And:
      out += "(and";
      for (const auto& x : c.conjuncts()) {
        out += ' ';
        print_concept(x, out);
      }
      out += ")";
      break;
  }
}

// S-expressions of rule lines.
struct Sexp {
  std::string atom;
  std::vector<Sexp> items;
  bool is_list = false;
};

class SexpReader {
 public:
  SexpReader(std::string_view text, const std::string& source, std::size_t line)
      : text_(text), source_(source), line_(line) {}

  Sexp read() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of line");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] == '(') {
      ++pos_;
      Sexp list;
      list.is_list = true;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) fail("missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    const auto start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    return {std::string(text_.substr(start, pos_ - start)), {}, false};
  }

  void expect_end() {
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(source_, line_, message); }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const std::string& source_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

double number(std::string_view text, const std::string& source, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ParseError(source, line, fmt::format("bad number '{}'", text));
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

struct Definition {
  std::string property;
  FuzzyDatatype datatype;
};

Definition parse_definition(std::string_view line, const std::string& source, std::size_t number_line) {
  // (define-fuzzy-concept <name> <shape>(<k1>,<k2>,<p>...))
  constexpr std::string_view kOpen = "(define-fuzzy-concept ";
  auto fail = [&](const std::string& m) -> ParseError { return ParseError(source, number_line, m); };
  if (!line.starts_with(kOpen) || !line.ends_with("))")) throw fail("malformed define-fuzzy-concept");
  std::string_view rest = line.substr(kOpen.size(), line.size() - kOpen.size() - 2);
  const auto space = rest.find(' ');
  const auto paren = rest.find('(');
  if (space == std::string_view::npos || paren == std::string_view::npos || paren < space) {
    throw fail("malformed define-fuzzy-concept");
  }
  const std::string name(rest.substr(0, space));
  const std::string_view shape = trim(rest.substr(space + 1, paren - space - 1));
  const auto kind = parse_datatype_kind(shape);
  if (!kind || *kind == FuzzyDatatype::Kind::EqualsBool || *kind == FuzzyDatatype::Kind::AtLeast ||
      *kind == FuzzyDatatype::Kind::AtMost) {
    throw fail(fmt::format("unknown fuzzy concept shape '{}'", shape));
  }
  std::vector<double> values;
  std::string_view args = rest.substr(paren + 1);
  for (std::size_t start = 0;;) {
    const auto comma = args.find(',', start);
    values.push_back(number(trim(args.substr(start, comma - start)), source, number_line));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() < 3) throw fail("a fuzzy concept needs a range and parameters");
  const ValueRange range{values[0], values[1]};
  std::vector<double> params(values.begin() + 2, values.end());
  // Rounded parameters may fall just outside the exact range.
  for (auto& p : params) p = std::clamp(p, range.low, range.high);
  const auto underscore = name.rfind('_');
  std::string property = underscore == std::string::npos ? name : name.substr(0, underscore);
  try {
    return {std::move(property), FuzzyDatatype::from_parameters(*kind, params, range, name)};
  } catch (const ValidationError& e) {
    throw fail(e.what());
  }
}

class BodyBuilder {
 public:
  BodyBuilder(const std::map<std::string, FuzzyDatatype>& sets, const std::string& source, std::size_t line)
      : sets_(sets), source_(source), line_(line) {}

  Concept build(const Sexp& e) const {
    if (!e.is_list) {
      if (e.atom == "*top*") return Concept::top();
      if (e.atom.empty()) fail("empty concept");
      return Concept::atomic(e.atom);
    }
    if (e.items.empty() || e.items[0].is_list) fail("malformed concept");
    const std::string& op = e.items[0].atom;
    if (op == "and") {
      std::vector<Concept> parts;
      for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(build(e.items[i]));
      if (parts.size() < 2) fail("(and ...) needs two conjuncts");
      return Concept::conjunction(std::move(parts));
    }
    if (op == "some") {
      if (e.items.size() != 3 || e.items[1].is_list) fail("(some ...) takes a property and a filler");
      const std::string& prop = e.items[1].atom;
      const Sexp& filler = e.items[2];
      if (!filler.is_list) {
        if (filler.atom == "true" || filler.atom == "false") {
          return Concept::some(prop, FuzzyDatatype::equals_bool(filler.atom == "true"));
        }
        if (auto it = sets_.find(filler.atom); it != sets_.end()) return Concept::some(prop, it->second);
      }
      return Concept::some(prop, build(filler));
    }
    fail(fmt::format("unknown constructor '{}'", op));
  }

 private:
  [[noreturn]] void fail(const std::string& m) const { throw ParseError(source_, line_, m); }

  const std::map<std::string, FuzzyDatatype>& sets_;
  const std::string& source_;
  std::size_t line_;
};

}  // namespace

std::vector<FuzzySetFamily> families_used(const Hypothesis& h, const std::vector<FuzzySetFamily>& families) {
  std::set<std::string> props;
  for (const auto* group : {&h.p_rules, &h.n_rules}) {
    for (const auto& r : *group) collect_properties(r.body, props);
  }
  std::vector<FuzzySetFamily> out;
  for (const auto& f : families) {
    if (props.contains(f.property)) out.push_back(f);
  }
  return out;
}

std::string fuzzyowl_concept(const Concept& c) {
  std::string out;
  print_concept(c, out);
  return out;
}

std::string export_fuzzyowl(const Hypothesis& h, const std::vector<FuzzySetFamily>& families) {
  std::string out = fmt::format("{}{}\n", kHeader, h.target);
  out += fmt::format("# p_rules={} n_rules={} conjunction={} gci={}\n", h.p_rules.size(), h.n_rules.size(),
                     to_string(h.conjunction), to_string(h.gci));
  if (h.empty()) return out;
  for (const auto& f : families) {
    for (const auto& d : f.sets) {
      if (d.is_boolean() || d.kind() == FuzzyDatatype::Kind::AtLeast || d.kind() == FuzzyDatatype::Kind::AtMost) {
        continue;
      }
      out += fmt::format("(define-fuzzy-concept {} {}({},{},{:.3f}))\n", d.label(), to_string(d.kind()), f.range.low,
                         f.range.high, fmt::join(d.parameters(), ","));
    }
  }
  for (const auto* group : {&h.p_rules, &h.n_rules}) {
    for (const auto& r : *group) {
      out += fmt::format("(implies {} {} {:.6f})\n", fuzzyowl_concept(r.body), r.head, r.degree);
    }
  }
  return out;
}

FuzzyOwlDocument parse_fuzzyowl(std::string_view text, const std::string& source) {
  FuzzyOwlDocument doc;
  Hypothesis& h = doc.hypothesis;
  std::map<std::string, FuzzyDatatype> sets;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number_line = 0;
  bool have_target = false;
  while (std::getline(in, raw)) {
    ++number_line;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.starts_with(kHeader)) {
        h.target = std::string(trim(line.substr(kHeader.size())));
        have_target = true;
      } else if (auto c = line.find("conjunction="); c != std::string_view::npos) {
        std::istringstream fields{std::string(line.substr(1))};
        for (std::string field; fields >> field;) {
          const auto eq = field.find('=');
          if (eq == std::string::npos) continue;
          const auto key = field.substr(0, eq);
          const auto value = field.substr(eq + 1);
          try {
            if (key == "conjunction") h.conjunction = parse_logic(value);
            if (key == "gci") h.gci = parse_logic(value);
          } catch (const ValidationError& e) {
            throw ParseError(source, number_line, e.what());
          }
        }
      }
      continue;
    }
    if (line.starts_with("(define-fuzzy-concept")) {
      auto def = parse_definition(line, source, number_line);
      if (doc.families.empty() || doc.families.back().property != def.property) {
        doc.families.push_back({def.property, {}, def.datatype.range()});
      }
      doc.families.back().sets.push_back(def.datatype);
      if (!sets.emplace(def.datatype.label(), def.datatype).second) {
        throw ParseError(source, number_line, fmt::format("fuzzy concept '{}' defined twice", def.datatype.label()));
      }
      continue;
    }
    SexpReader reader(line, source, number_line);
    const Sexp e = reader.read();
    reader.expect_end();
    if (!e.is_list || e.items.size() != 4 || e.items[0].is_list || e.items[0].atom != "implies" ||
        e.items[2].is_list || e.items[3].is_list) {
      reader.fail("expected (implies <body> <head> <degree>)");
    }
    WeightedRule rule{BodyBuilder(sets, source, number_line).build(e.items[1]), e.items[2].atom,
                      number(e.items[3].atom, source, number_line)};
    if (!have_target) {
      h.target = rule.head;
      have_target = true;
    }
    if (rule.head == h.target) {
      h.p_rules.push_back(std::move(rule));
    } else if (rule.head == false_positive_class(h.target)) {
      h.n_rules.push_back(std::move(rule));
    } else {
      reader.fail(fmt::format("rule head '{}' is neither the target nor its false-positive class", rule.head));
    }
  }
  return doc;
}

}  // namespace pnrule
