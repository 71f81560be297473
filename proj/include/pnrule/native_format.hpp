#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <map>
#include <string>

#include "pnrule/kb.hpp"
#include "pnrule/task.hpp"

namespace pnrule {

/// Line-oriented knowledge base text:
///
///   class <name>
///   subclass <sub> <super>
///   objprop <name>
///   dataprop <name> numeric|boolean
///   individual <name>
///   instance <ind> <class>
///   rel <ind> <objprop> <ind>
///   val <ind> <dataprop> <literal>
///
/// `#` starts a comment. Names must be declared before use. Errors are
/// reported as ParseError with the offending line.
KnowledgeBase parse_kb(std::istream& in, const std::string& source = "<input>");
KnowledgeBase load_kb(const std::filesystem::path& path);
void write_kb(std::ostream& out, const KnowledgeBase& kb);

using ExampleLabels = std::map<std::string, Label>;

/// `<individual> <label>` lines with label 1, -1 or 0. Each individual may
/// appear once.
ExampleLabels parse_examples(std::istream& in, const std::string& source = "<input>");
ExampleLabels load_examples(const std::filesystem::path& path);
void write_examples(std::ostream& out, const KnowledgeBase& kb, const ExampleLabels& labels);

/// Opens `path` for reading, throwing Error when it cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);
/// Opens `path` for writing (creating parent directories), throwing Error on failure.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace pnrule
