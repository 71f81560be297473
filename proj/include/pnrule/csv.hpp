#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pnrule/kb.hpp"
#include "pnrule/native_format.hpp"

namespace pnrule {

enum class ColumnKind { Numeric, Boolean, Categorical };

struct CsvOptions {
  std::string target_column;  ///< required
  std::optional<std::string> id_column;
  /// Target values counted as positive; one learning target per value. Empty
  /// means every distinct value of the target column becomes a target.
  std::vector<std::string> positive_values;
  /// Alternative to `positive_values` for numeric targets: rows whose target
  /// is >= this threshold are positive (single target `<col>_ge_<x>`).
  std::optional<double> positive_min;
  /// Overrides of the inferred column kinds.
  std::map<std::string, ColumnKind> kinds;
  std::vector<std::string> ignore;
  char delimiter = ',';
};

struct CsvTarget {
  std::string name;
  ExampleLabels labels;
};

struct CsvConversion {
  KnowledgeBase kb;
  std::vector<CsvTarget> targets;
};

/// One individual per row: numeric columns become numeric data properties,
/// boolean columns boolean properties and categorical column `c` with value
/// `v` a class `c_v`. Empty and `?` cells are skipped. The target column
/// yields +1/-1 labels and is not a feature. Throws ParseError (row-numbered)
/// for malformed rows or cells that do not fit a forced column kind.
CsvConversion csv_to_kb(std::istream& in, const CsvOptions& options, const std::string& source = "<csv>");
CsvConversion csv_to_kb(const std::filesystem::path& path, const CsvOptions& options);

/// Name usable as a token of the native format.
std::string sanitize_name(std::string_view text);

}  // namespace pnrule
