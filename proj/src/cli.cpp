#include "pnrule/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pnrule/config.hpp"
#include "pnrule/csv.hpp"
#include "pnrule/error.hpp"
#include "pnrule/fuzzyowl.hpp"
#include "pnrule/hypothesis_json.hpp"
#include "pnrule/learner.hpp"
#include "pnrule/native_format.hpp"

namespace pnrule {

namespace fs = std::filesystem;

std::vector<std::pair<Fuzzification, std::size_t>> default_sweep_grid() {
  std::vector<std::pair<Fuzzification, std::size_t>> grid;
  for (auto method : {Fuzzification::Uniform, Fuzzification::CMeans}) {
    for (std::size_t k : {3, 5, 7}) grid.emplace_back(method, k);
  }
  return grid;
}

std::vector<SweepPoint> sweep(const KnowledgeBase& kb, const std::vector<LearningTask>& tasks,
                              const std::vector<std::pair<Fuzzification, std::size_t>>& grid,
                              const CrossValidationOptions& options) {
  std::vector<SweepPoint> points;
  for (const auto& [method, sets] : grid) {
    SweepPoint point{method, sets, {}, 0.0};
    for (LearningTask task : tasks) {
      task.fuzzification = method;
      task.fuzzy_sets = sets;
      point.reports.push_back(cross_validate(kb, task, options));
    }
    point.mean_f1 = mean_f1(point.reports);
    points.push_back(std::move(point));
  }
  return points;
}

std::size_t best_point(const std::vector<SweepPoint>& points) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].mean_f1 > points[best].mean_f1) best = i;
  }
  return best;
}

namespace {

struct CsvFlags {
  std::string path;
  CsvOptions options;
  std::string delimiter = ",";
  std::vector<std::string> numeric, categorical, boolean;
  double positive_min = 0.0;
  CLI::Option* positive_min_opt = nullptr;

  void add(CLI::App& cmd, bool required) {
    auto* csv = cmd.add_option("--csv", path, "CSV file with a header row")->check(CLI::ExistingFile);
    if (required) csv->required();
    cmd.add_option("--target-column", options.target_column, "column holding the class");
    cmd.add_option("--id-column", options.id_column, "column naming the individuals");
    cmd.add_option("--positive", options.positive_values, "target value counted as positive (repeatable)");
    positive_min_opt = cmd.add_option("--positive-min", positive_min, "numeric target threshold for positives");
    cmd.add_option("--numeric", numeric, "force a column to numeric");
    cmd.add_option("--categorical", categorical, "force a column to categorical");
    cmd.add_option("--boolean", boolean, "force a column to boolean");
    cmd.add_option("--ignore", options.ignore, "drop a column");
    cmd.add_option("--delimiter", delimiter, "field separator")->check([](const std::string& d) {
      return d.size() == 1 ? std::string() : std::string("delimiter must be one character");
    });
  }

  CsvConversion convert() {
    if (options.target_column.empty()) throw ValidationError("--target-column is required with --csv");
    options.delimiter = delimiter[0];
    if (positive_min_opt->count() > 0) options.positive_min = positive_min;
    for (const auto& c : numeric) options.kinds[c] = ColumnKind::Numeric;
    for (const auto& c : categorical) options.kinds[c] = ColumnKind::Categorical;
    for (const auto& c : boolean) options.kinds[c] = ColumnKind::Boolean;
    return csv_to_kb(fs::path(path), options);
  }
};

struct CommonFlags {
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;

  void add(CLI::App& cmd, const std::string& out_help) {
    cmd.add_option("--config", config, "key=value configuration file")->check(CLI::ExistingFile);
    cmd.add_option("--out", out, out_help);
    seed_opt = cmd.add_option("--seed", seed, "random seed");
  }

  RunConfig load() const {
    RunConfig c;
    if (!config.empty()) load_config(config, c);
    if (!out.empty()) c.out = out;
    if (seed_opt->count() > 0) c.task.seed = seed;
    return c;
  }
};

struct TaskFlags {
  std::string fuzzification;
  std::size_t sets = 0;
  bool no_n_stage = false;
  std::vector<std::string> set;

  void add(CLI::App& cmd) {
    cmd.add_option("--fuzzification", fuzzification, "uniform or cmeans");
    cmd.add_option("--sets", sets, "fuzzy sets per numeric property");
    cmd.add_flag("--no-n-stage", no_n_stage, "learn P-rules only");
    cmd.add_option("--set", set, "override a configuration key (key=value, repeatable)");
  }

  void apply(RunConfig& c) const {
    if (!fuzzification.empty()) c.task.fuzzification = parse_fuzzification(fuzzification);
    if (sets != 0) c.task.fuzzy_sets = sets;
    if (no_n_stage) c.task.run_n_stage = false;
    for (const auto& kv : set) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ValidationError(fmt::format("--set expects key=value, got '{}'", kv));
      set_config_value(c, kv.substr(0, eq), kv.substr(eq + 1));
    }
  }
};

std::string target_from(const fs::path& examples) { return examples.stem().string(); }

LearningTask make_task(const RunConfig& c, std::string target, ExampleLabels labels) {
  LearningTask t = c.task;
  t.target = std::move(target);
  t.labels = std::move(labels);
  return t;
}

void write_text(const fs::path& path, const std::string& text) {
  auto out = open_output(path);
  out << text;
  if (!out) throw Error(fmt::format("failed writing '{}'", path.string()));
}

std::string require_out(const RunConfig& c, std::string_view command) {
  if (c.out.empty()) throw ValidationError(fmt::format("{}: --out is required", command));
  return c.out.string();
}

int run_convert(CsvFlags& csv, const CommonFlags& common, std::ostream& out) {
  const RunConfig c = common.load();
  const fs::path dir = require_out(c, "convert");
  const CsvConversion conv = csv.convert();
  {
    auto kb_out = open_output(dir / "kb.txt");
    write_kb(kb_out, conv.kb);
  }
  for (const auto& t : conv.targets) {
    auto ex = open_output(dir / (t.name + ".examples"));
    write_examples(ex, conv.kb, t.labels);
  }
  fmt::print(out, "{} individuals, {} data properties, {} classes, {} target(s) written to {}\n",
             conv.kb.individual_count(), conv.kb.data_properties().size(), conv.kb.classes().size(),
             conv.targets.size(), dir.string());
  return kExitOk;
}

int run_learn(const CommonFlags& common, const TaskFlags& flags, const std::string& kb_path,
              const std::string& examples_path, const std::string& target, std::ostream& out) {
  RunConfig c = common.load();
  flags.apply(c);
  if (!kb_path.empty()) c.kb = kb_path;
  if (!examples_path.empty()) c.examples = examples_path;
  if (!target.empty()) c.task.target = target;
  if (c.kb.empty() || c.examples.empty()) throw ValidationError("learn: --kb and --examples are required");
  const fs::path dir = require_out(c, "learn");

  const KnowledgeBase kb = load_kb(c.kb);
  LearningTask task =
      make_task(c, c.task.target.empty() ? target_from(c.examples) : c.task.target, load_examples(c.examples));
  const auto families = task_families(kb, task);
  const Hypothesis h = pn_owl(kb, task, families);
  const HypothesisFile file{h, families_used(h, families)};
  save_hypothesis(dir / "hypothesis.json", file);
  const std::string text = export_fuzzyowl(h, file.families);
  write_text(dir / "hypothesis.fowl", text);
  fmt::print(out, "{} P-rule(s), {} N-rule(s) for {}\n", h.p_rules.size(), h.n_rules.size(), h.target);
  for (const auto* group : {&h.p_rules, &h.n_rules}) {
    for (const auto& r : *group) fmt::print(out, "  {} -> {} {:.6f}\n", fuzzyowl_concept(r.body), r.head, r.degree);
  }
  return kExitOk;
}

int run_predict(const CommonFlags& common, const std::string& kb_path, const std::string& hypothesis_path,
                std::ostream& out) {
  const RunConfig c = common.load();
  const fs::path kbp = kb_path.empty() ? c.kb : fs::path(kb_path);
  if (kbp.empty() || hypothesis_path.empty()) throw ValidationError("predict: --kb and --hypothesis are required");
  const KnowledgeBase kb = load_kb(kbp);
  const HypothesisFile file = load_hypothesis(hypothesis_path);
  const Reasoner r(kb, file.hypothesis.conjunction);
  const auto values = hypothesis_values(r, file.hypothesis);
  std::ostringstream text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    fmt::print(text, "{}\t{:.6f}\t{}\n", kb.individuals()[i], values[i], values[i] > 0.0 ? 1 : 0);
  }
  if (c.out.empty()) {
    out << text.str();
  } else {
    write_text(c.out, text.str());
  }
  return kExitOk;
}

int run_export(const CommonFlags& common, const std::string& hypothesis_path, std::ostream& out) {
  const RunConfig c = common.load();
  if (hypothesis_path.empty()) throw ValidationError("export: --hypothesis is required");
  const HypothesisFile file = load_hypothesis(hypothesis_path);
  const std::string text = export_fuzzyowl(file.hypothesis, families_used(file.hypothesis, file.families));
  if (c.out.empty()) {
    out << text;
  } else {
    write_text(c.out, text);
  }
  return kExitOk;
}

struct EvalFlags {
  std::string kb;
  std::vector<std::string> examples;
  std::size_t folds = 0;
  std::size_t jobs = 0;
  bool sweep = false;
  bool timings = false;
};

int run_eval(CsvFlags& csv, const CommonFlags& common, const TaskFlags& flags, const EvalFlags& e,
             std::ostream& out) {
  RunConfig c = common.load();
  flags.apply(c);
  if (e.folds != 0) c.folds = e.folds;
  if (e.jobs != 0) c.jobs = e.jobs;
  if (!e.kb.empty()) c.kb = e.kb;
  const fs::path dir = require_out(c, "eval");

  KnowledgeBase kb;
  std::vector<LearningTask> tasks;
  if (!csv.path.empty()) {
    CsvConversion conv = csv.convert();
    kb = std::move(conv.kb);
    for (auto& t : conv.targets) tasks.push_back(make_task(c, t.name, std::move(t.labels)));
  } else {
    if (c.kb.empty()) throw ValidationError("eval: give --csv or --kb with --examples");
    kb = load_kb(c.kb);
    std::vector<std::string> examples = e.examples;
    if (examples.empty() && !c.examples.empty()) examples.push_back(c.examples.string());
    if (examples.empty()) throw ValidationError("eval: --examples is required with --kb");
    for (const auto& path : examples) {
      std::string target = examples.size() == 1 && !c.task.target.empty() ? c.task.target : target_from(path);
      tasks.push_back(make_task(c, std::move(target), load_examples(path)));
    }
  }
  for (const auto& t : tasks) {
    if (t.individuals_with(kb, Label::Positive).empty()) {
      throw ValidationError(fmt::format("target '{}' has no positive examples", t.target));
    }
  }

  const CrossValidationOptions options{c.folds, c.task.seed, c.jobs};
  const auto grid = e.sweep ? default_sweep_grid()
                            : std::vector<std::pair<Fuzzification, std::size_t>>{
                                  {c.task.fuzzification, c.task.fuzzy_sets}};
  const auto points = sweep(kb, tasks, grid, options);
  const std::size_t best = best_point(points);
  const SweepPoint& chosen = points[best];

  std::ostringstream records;
  write_records(records, chosen.reports, e.timings);
  write_text(dir / "records.tsv", records.str());

  std::ostringstream report;
  fmt::print(report, "{} individuals, {} target(s), {} folds, seed {}\n", kb.individual_count(), tasks.size(),
             c.folds, c.task.seed);
  if (e.sweep) {
    std::ostringstream sweep_tsv;
    fmt::print(report, "\n{:<14} {:>5} {:>9}\n", "fuzzification", "sets", "mean_f1");
    for (const auto& p : points) {
      fmt::print(sweep_tsv, "{}\t{}\t{:.6f}\n", to_string(p.method), p.sets, p.mean_f1);
      fmt::print(report, "{:<14} {:>5} {:>9.3f}\n", to_string(p.method), p.sets, p.mean_f1);
    }
    write_text(dir / "sweep.tsv", sweep_tsv.str());
  }
  fmt::print(report, "\nfuzzification {} with {} sets\n\n", to_string(chosen.method), chosen.sets);
  write_table(report, chosen.reports, e.timings);
  write_text(dir / "report.txt", report.str());

  fmt::print(out, "{}", report.str());
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Learns weighted fuzzy EL(D) rules with a two-stage P/N strategy", "pnrule"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");

  CsvFlags convert_csv;
  CommonFlags convert_common;
  auto* convert = app.add_subcommand("convert", "convert a CSV file into a knowledge base and example files");
  convert_csv.add(*convert, true);
  convert_common.add(*convert, "output directory");

  CommonFlags learn_common;
  TaskFlags learn_task;
  std::string learn_kb, learn_examples, learn_target;
  auto* learn = app.add_subcommand("learn", "learn a hypothesis for one target");
  learn_common.add(*learn, "output directory");
  learn_task.add(*learn);
  learn->add_option("--kb", learn_kb, "knowledge base file");
  learn->add_option("--examples", learn_examples, "examples file");
  learn->add_option("--target", learn_target, "target class name (default: examples file stem)");

  CommonFlags predict_common;
  std::string predict_kb, predict_hypothesis;
  auto* predict = app.add_subcommand("predict", "print each individual's degree under a hypothesis");
  predict_common.add(*predict, "output file (default: standard output)");
  predict->add_option("--kb", predict_kb, "knowledge base file");
  predict->add_option("--hypothesis", predict_hypothesis, "hypothesis.json written by learn");

  CsvFlags eval_csv;
  CommonFlags eval_common;
  TaskFlags eval_task;
  EvalFlags eval_flags;
  auto* eval = app.add_subcommand("eval", "stratified k-fold cross-validation");
  eval_csv.add(*eval, false);
  eval_common.add(*eval, "output directory");
  eval_task.add(*eval);
  eval->add_option("--kb", eval_flags.kb, "knowledge base file");
  eval->add_option("--examples", eval_flags.examples, "examples file, one per target (repeatable)");
  eval->add_option("--folds", eval_flags.folds, "number of folds");
  eval->add_option("--jobs", eval_flags.jobs, "folds run concurrently");
  eval->add_flag("--sweep", eval_flags.sweep, "try uniform and c-means partitions with 3, 5 and 7 sets");
  eval->add_flag("--timings", eval_flags.timings, "record wall-clock time per fold");

  CommonFlags export_common;
  std::string export_hypothesis;
  auto* exp = app.add_subcommand("export", "write a hypothesis in Fuzzy OWL textual syntax");
  export_common.add(*exp, "output file (default: standard output)");
  exp->add_option("--hypothesis", export_hypothesis, "hypothesis.json written by learn");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (convert->parsed()) return run_convert(convert_csv, convert_common, out);
    if (learn->parsed()) return run_learn(learn_common, learn_task, learn_kb, learn_examples, learn_target, out);
    if (predict->parsed()) return run_predict(predict_common, predict_kb, predict_hypothesis, out);
    if (eval->parsed()) return run_eval(eval_csv, eval_common, eval_task, eval_flags, out);
    if (exp->parsed()) return run_export(export_common, export_hypothesis, out);
  } catch (const ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace pnrule
