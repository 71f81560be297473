#include "pnrule/config.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pnrule/error.hpp"
#include "pnrule/native_format.hpp"

namespace pnrule {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_real(std::string_view key, std::string_view v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ValidationError(fmt::format("{}: '{}' is not a number", key, v));
  }
  return out;
}

template <typename Int>
Int to_integer(std::string_view key, std::string_view v) {
  Int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ValidationError(fmt::format("{}: '{}' is not a non-negative integer", key, v));
  }
  return out;
}

bool to_flag(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ValidationError(fmt::format("{}: '{}' is not a boolean", key, v));
}

}  // namespace

void set_config_value(RunConfig& c, std::string_view key, std::string_view value) {
  LearningTask& t = c.task;
  if (key == "kb") {
    c.kb = std::string(value);
  } else if (key == "examples") {
    c.examples = std::string(value);
  } else if (key == "out") {
    c.out = std::string(value);
  } else if (key == "target") {
    t.target = std::string(value);
  } else if (key == "folds") {
    c.folds = to_integer<std::size_t>(key, value);
  } else if (key == "jobs") {
    c.jobs = to_integer<std::size_t>(key, value);
  } else if (key == "seed") {
    t.seed = to_integer<std::uint64_t>(key, value);
  } else if (key == "fuzzification") {
    t.fuzzification = parse_fuzzification(value);
  } else if (key == "fuzzy_sets") {
    t.fuzzy_sets = to_integer<std::size_t>(key, value);
  } else if (key == "cmeans_fuzzifier") {
    t.cmeans.fuzzifier = to_real(key, value);
  } else if (key == "cmeans_epsilon") {
    t.cmeans.epsilon = to_real(key, value);
  } else if (key == "cmeans_max_iterations") {
    t.cmeans.max_iterations = to_integer<std::size_t>(key, value);
  } else if (key == "conjunction") {
    t.conjunction = parse_logic(value);
  } else if (key == "gci") {
    t.gci = parse_logic(value);
  } else if (key == "backtrack") {
    t.backtrack_size = to_integer<std::size_t>(key, value);
  } else if (key == "n_stage") {
    t.run_n_stage = to_flag(key, value);
  } else if (key == "p_theta") {
    t.p_stage.theta = to_real(key, value);
  } else if (key == "p_eta") {
    t.p_stage.eta = to_real(key, value);
  } else if (key == "p_max_conjuncts") {
    t.p_stage.max_conjuncts = to_integer<std::size_t>(key, value);
  } else if (key == "p_max_depth") {
    t.p_stage.max_role_depth = to_integer<std::size_t>(key, value);
  } else if (key == "n_theta") {
    t.n_stage.theta = to_real(key, value);
  } else if (key == "n_eta") {
    t.n_stage.eta = to_real(key, value);
  } else if (key == "n_max_conjuncts") {
    t.n_stage.max_conjuncts = to_integer<std::size_t>(key, value);
  } else if (key == "n_max_depth") {
    t.n_stage.max_role_depth = to_integer<std::size_t>(key, value);
  } else {
    throw ValidationError(fmt::format("unknown configuration key '{}'", key));
  }
}

void parse_config(std::istream& in, RunConfig& config, const std::string& source) {
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, number, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(source, number, "empty key");
    try {
      set_config_value(config, key, value);
    } catch (const ValidationError& e) {
      throw ParseError(source, number, e.what());
    }
  }
}

void load_config(const std::filesystem::path& path, RunConfig& config) {
  auto in = open_input(path);
  parse_config(in, config, path.string());
}

void write_config(std::ostream& out, const RunConfig& c) {
  const LearningTask& t = c.task;
  if (!c.kb.empty()) fmt::print(out, "kb = {}\n", c.kb.string());
  if (!c.examples.empty()) fmt::print(out, "examples = {}\n", c.examples.string());
  if (!c.out.empty()) fmt::print(out, "out = {}\n", c.out.string());
  if (!t.target.empty()) fmt::print(out, "target = {}\n", t.target);
  fmt::print(out, "folds = {}\njobs = {}\nseed = {}\n", c.folds, c.jobs, t.seed);
  fmt::print(out, "fuzzification = {}\nfuzzy_sets = {}\n", to_string(t.fuzzification), t.fuzzy_sets);
  fmt::print(out, "cmeans_fuzzifier = {}\ncmeans_epsilon = {}\ncmeans_max_iterations = {}\n", t.cmeans.fuzzifier,
             t.cmeans.epsilon, t.cmeans.max_iterations);
  fmt::print(out, "conjunction = {}\ngci = {}\nbacktrack = {}\n", to_string(t.conjunction), to_string(t.gci),
             t.backtrack_size);
  fmt::print(out, "n_stage = {}\n", t.run_n_stage ? "true" : "false");
  fmt::print(out, "p_theta = {}\np_eta = {}\np_max_conjuncts = {}\np_max_depth = {}\n", t.p_stage.theta,
             t.p_stage.eta, t.p_stage.max_conjuncts, t.p_stage.max_role_depth);
  fmt::print(out, "n_theta = {}\nn_eta = {}\nn_max_conjuncts = {}\nn_max_depth = {}\n", t.n_stage.theta,
             t.n_stage.eta, t.n_stage.max_conjuncts, t.n_stage.max_role_depth);
}

}  // namespace pnrule
