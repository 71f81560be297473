#include "pnrule/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <set>

#include <fmt/format.h>

#include "pnrule/error.hpp"

namespace pnrule {

namespace {

using Row = std::vector<std::string>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// RFC 4180 style: quoted fields may contain delimiters, doubled quotes and newlines.
bool read_row(std::istream& in, char delim, Row& row, std::size_t& line, const std::string& source) {
  row.clear();
  std::string field;
  bool quoted = false;
  bool any = false;
  for (int ch; (ch = in.get()) != EOF;) {
    any = true;
    const char c = static_cast<char>(ch);
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
    } else if (c == '"' && trim(field).empty()) {
      field.clear();
      quoted = true;
    } else if (c == delim) {
      row.push_back(trim(field));
      field.clear();
    } else if (c == '\n') {
      ++line;
      row.push_back(trim(field));
      return true;
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError(source, line, "unterminated quoted field");
  if (!any) return false;
  row.push_back(trim(field));
  ++line;
  return true;
}

bool blank(const Row& row) {
  return std::all_of(row.begin(), row.end(), [](const std::string& f) { return f.empty(); });
}

bool missing(const std::string& cell) { return cell.empty() || cell == "?"; }

std::optional<double> as_number(const std::string& cell) {
  double v = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<bool> as_bool(const std::string& cell) {
  std::string lower(cell);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "true" || lower == "yes") return true;
  if (lower == "false" || lower == "no") return false;
  return std::nullopt;
}

ColumnKind infer(const std::vector<Row>& rows, std::size_t col) {
  bool numeric = true;
  bool boolean = true;
  bool seen = false;
  for (const auto& r : rows) {
    const auto& cell = r[col];
    if (missing(cell)) continue;
    seen = true;
    numeric = numeric && as_number(cell).has_value();
    boolean = boolean && as_bool(cell).has_value();
  }
  if (!seen) return ColumnKind::Categorical;
  if (numeric) return ColumnKind::Numeric;
  if (boolean) return ColumnKind::Boolean;
  return ColumnKind::Categorical;
}

std::string number_token(double v) { return sanitize_name(fmt::format("{}", v)); }

}  // namespace

std::string sanitize_name(std::string_view text) {
  std::string out;
  for (unsigned char c : text) {
    out += (std::isalnum(c) || c == '_' || c == '-' || c == '.') ? static_cast<char>(c) : '_';
  }
  if (out.empty()) out = "_";
  return out;
}

CsvConversion csv_to_kb(std::istream& in, const CsvOptions& options, const std::string& source) {
  std::size_t line = 0;
  Row header;
  if (!read_row(in, options.delimiter, header, line, source) || blank(header)) {
    throw ParseError(source, 1, "missing header row");
  }
  auto column_of = [&](const std::string& name) -> std::size_t {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ValidationError(fmt::format("{}: no column named '{}'", source, name));
    return static_cast<std::size_t>(it - header.begin());
  };
  if (options.target_column.empty()) throw ValidationError("a target column is required");
  if (std::set<std::string>(header.begin(), header.end()).size() != header.size()) {
    throw ParseError(source, 1, "duplicate column names");
  }
  const std::size_t target = column_of(options.target_column);
  const std::size_t no_column = header.size();
  const std::size_t id = options.id_column ? column_of(*options.id_column) : no_column;
  for (const auto& [name, kind] : options.kinds) column_of(name);
  std::set<std::size_t> ignored;
  for (const auto& name : options.ignore) ignored.insert(column_of(name));

  std::vector<Row> rows;
  std::vector<std::size_t> row_lines;
  for (Row r; read_row(in, options.delimiter, r, line, source);) {
    if (blank(r)) continue;
    if (r.size() != header.size()) {
      throw ParseError(source, line, fmt::format("expected {} fields, got {}", header.size(), r.size()));
    }
    rows.push_back(std::move(r));
    row_lines.push_back(line);
  }

  std::vector<std::size_t> features;
  std::vector<ColumnKind> kinds(header.size(), ColumnKind::Categorical);
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == target || c == id || ignored.contains(c)) continue;
    features.push_back(c);
    auto forced = options.kinds.find(header[c]);
    kinds[c] = forced != options.kinds.end() ? forced->second : infer(rows, c);
  }

  KnowledgeBase::Builder b;
  std::vector<std::string> props(header.size());
  for (auto c : features) {
    props[c] = sanitize_name(header[c]);
    if (kinds[c] == ColumnKind::Numeric) b.declare_data_property(props[c], DataKind::Numeric);
    if (kinds[c] == ColumnKind::Boolean) b.declare_data_property(props[c], DataKind::Boolean);
  }

  std::vector<std::string> names;
  std::set<std::string> used;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string name = id != no_column ? sanitize_name(rows[i][id]) : fmt::format("row{}", i);
    if (!used.insert(name).second) {
      throw ParseError(source, row_lines[i], fmt::format("duplicate individual '{}'", name));
    }
    b.declare_individual(name);
    names.push_back(std::move(name));
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto c : features) {
      const auto& cell = rows[i][c];
      if (missing(cell)) continue;
      auto bad = [&](std::string_view what) {
        return ParseError(source, row_lines[i], fmt::format("column '{}': '{}' is not {}", header[c], cell, what));
      };
      switch (kinds[c]) {
        case ColumnKind::Numeric: {
          auto v = as_number(cell);
          if (!v) throw bad("a number");
          b.add_data_assertion(names[i], props[c], *v);
          break;
        }
        case ColumnKind::Boolean: {
          auto v = as_bool(cell);
          if (!v) throw bad("a boolean");
          b.add_data_assertion(names[i], props[c], *v);
          break;
        }
        case ColumnKind::Categorical: {
          std::string cls = sanitize_name(fmt::format("{}_{}", header[c], cell));
          b.declare_class(cls);
          b.add_class_assertion(names[i], std::move(cls));
          break;
        }
      }
    }
  }

  CsvConversion result{std::move(b).build(), {}};
  const std::string col = sanitize_name(header[target]);
  if (options.positive_min) {
    CsvTarget t{fmt::format("{}_ge_{}", col, number_token(*options.positive_min)), {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& cell = rows[i][target];
      if (missing(cell)) continue;
      auto v = as_number(cell);
      if (!v) throw ParseError(source, row_lines[i], fmt::format("target '{}' is not a number", cell));
      t.labels[names[i]] = *v >= *options.positive_min ? Label::Positive : Label::Negative;
    }
    result.targets.push_back(std::move(t));
    return result;
  }

  std::vector<std::string> values = options.positive_values;
  if (values.empty()) {
    std::set<std::string> distinct;
    for (const auto& r : rows) {
      if (!missing(r[target])) distinct.insert(r[target]);
    }
    values.assign(distinct.begin(), distinct.end());
  }
  for (const auto& value : values) {
    CsvTarget t{sanitize_name(fmt::format("{}_{}", col, value)), {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& cell = rows[i][target];
      if (missing(cell)) continue;
      t.labels[names[i]] = cell == value ? Label::Positive : Label::Negative;
    }
    result.targets.push_back(std::move(t));
  }
  return result;
}

CsvConversion csv_to_kb(const std::filesystem::path& path, const CsvOptions& options) {
  auto in = open_input(path);
  return csv_to_kb(in, options, path.string());
}

}  // namespace pnrule
