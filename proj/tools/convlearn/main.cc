// convlearn: learn a codebase's naming and formatting conventions and check
// new code against them.
//
// JSON goes to stdout, human-readable text to stderr. Exit codes: 0 success
// (or accept), 1 reject (check only), 2 usage or input error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "convlearn/cli/check.h"
#include "convlearn/cli/corpus.h"
#include "convlearn/cli/report.h"
#include "convlearn/cli/rules.h"
#include "convlearn/eval/experiments.h"
#include "convlearn/eval/synthetic.h"
#include "convlearn/lexer/token.h"
#include "convlearn/ngram/binary_io.h"
#include "convlearn/propose/proposers.h"
#include "convlearn/suggest/calibrate.h"
#include "convlearn/suggest/convention_model.h"
#include "convlearn/suggest/engine.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace convlearn {
namespace {

constexpr int kExitReject = 1;
constexpr int kExitError = 2;

// Aborts the current command with an exit code.
struct CommandError {
  int code;
  std::string message;
};

[[noreturn]] void Fail(std::string message) { throw CommandError{kExitError, std::move(message)}; }

void PrintJson(const json& j) { std::cout << j.dump(2) << "\n"; }

void PrintWarnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::vector<std::string> DefaultExtensions(const std::string& language) {
  if (language == "java") return {".java"};
  if (language == "cpp") return {".c", ".cc", ".cpp", ".cxx", ".h", ".hh", ".hpp", ".hxx"};
  return {};
}

bool HasExtension(const std::string& path, const std::vector<std::string>& extensions) {
  if (extensions.empty()) return true;
  const std::string ext = fs::path(path).extension().string();
  return std::find(extensions.begin(), extensions.end(), ext) != extensions.end();
}

std::string ReadText(const fs::path& path) {
  try {
    return ReadFileBytes(path);
  } catch (const std::exception& e) {
    Fail("cannot read " + path.string() + ": " + e.what());
  }
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) Fail("cannot write " + path.string());
}

ConventionModel LoadModel(const std::string& path) {
  try {
    return ConventionModel::Load(path);
  } catch (const std::exception& e) {
    Fail("cannot load model " + path + ": " + e.what());
  }
}

SourceFile AnalyzeOrFail(const ConventionModel& model, const std::string& path,
                         std::string text) {
  try {
    return model.Analyze(path, std::move(text));
  } catch (const LexError& e) {
    Fail(path + ": " + e.what());
  }
}

// Output of a shell command; fails on a nonzero status.
std::string RunCommand(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) Fail("cannot run: " + command);
  std::string out;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe.get())) > 0) out.append(buffer, n);
  if (pclose(pipe.release()) != 0) Fail("command failed: " + command);
  return out;
}

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// Corpus selection flags shared by train, calibrate and eval.
struct CorpusFlags {
  std::vector<std::string> roots;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  std::vector<std::string> extensions;
  std::uint64_t max_bytes = 1 << 20;

  void Add(CLI::App* app, bool required) {
    auto* opt = app->add_option("roots", roots, "Corpus directories or files");
    if (required) opt->required();
    app->add_option("--include", include, "Glob of files to keep (repeatable)");
    app->add_option("--exclude", exclude, "Glob of files to drop (repeatable)");
    app->add_option("--ext", extensions, "File extensions, default by language");
    app->add_option("--max-bytes", max_bytes, "Skip larger files");
  }

  std::vector<SourceFile> Load(const LanguageProfile& profile, int bucket) const {
    CorpusSpec spec;
    for (const auto& r : roots) spec.roots.emplace_back(r);
    spec.include = include;
    spec.exclude = exclude;
    spec.extensions = extensions.empty() ? DefaultExtensions(profile.name()) : extensions;
    spec.max_file_bytes = max_bytes;
    std::vector<std::string> warnings;
    const auto paths = ResolveCorpus(spec, &warnings);
    auto files = LoadCorpus(paths, profile, bucket, &warnings);
    PrintWarnings(warnings);
    if (files.empty()) Fail("empty corpus");
    return files;
  }
};

struct TrainFlags {
  TrainConfig config;

  void Add(CLI::App* app) {
    app->add_option("-n,--order", config.order, "n-gram order of the naming model");
    app->add_option("--format-order", config.format_order,
                    "n-gram order of the formatting model");
    app->add_option("-q,--bucket", config.bucket_size, "Whitespace bucket size q");
    app->add_option("--min-count", config.min_count,
                    "Lexemes seen fewer times become the unknown token");
  }
};

// ---- train -----------------------------------------------------------------

struct TrainCommand {
  CorpusFlags corpus;
  TrainFlags train;
  std::string output = "convlearn.model";

  int Run(const std::string& language) const {
    train.config.Validate();
    const LanguageProfile profile = LanguageProfile::Resolve(language);
    const auto files = corpus.Load(profile, train.config.bucket_size);
    const ConventionModel model = ConventionModel::Train(files, profile, train.config);
    model.Save(output);
    const json stats = StatsToJson(model);
    PrintJson(stats);
    std::cerr << "trained on " << model.stats().files << " files, " << model.stats().tokens
              << " tokens, " << model.names().vocab().size() << " names in vocabulary, UNK rate "
              << model.stats().unk_rate() << "\nwrote " << output << "\n";
    return 0;
  }
};

// ---- suggest ---------------------------------------------------------------

struct SuggestFlags {
  SuggestConfig config;
  std::string global_model;

  void Add(CLI::App* app) {
    app->add_option("-k", config.k, "Number of suggestions");
    app->add_option("-t", config.t, "Minimum gap for a suggestion");
    app->add_option("--lambda", config.lambda, "Weight of the global model");
    app->add_option("--global-model", global_model,
                    "Model trained on other projects, mixed into naming scores");
  }
};

struct SuggestCommand {
  std::string model_path;
  std::string file;
  std::string target;
  SuggestFlags flags;
  bool apply = false;
  bool candidates = false;

  int Run() const {
    const ConventionModel model = LoadModel(model_path);
    std::optional<ConventionModel> global;
    if (!flags.global_model.empty()) global = LoadModel(flags.global_model);
    const Engine engine(model, flags.config, global ? &global->names() : nullptr);
    const SourceFile source = AnalyzeOrFail(model, file, ReadText(file));
    PreparedFile prepared = engine.Prepare(source);

    LocationReport report;
    try {
      report = engine.SuggestTarget(prepared, target);
    } catch (const TargetError& e) {
      Fail(e.what());
    }
    json j = ReportToJson(report, candidates);
    std::cerr << RenderReport(report);

    if (apply) {
      j["applied"] = false;
      if (!report.suggestions.empty() && !report.suggestions.front().keep) {
        const Suggestion& top = report.suggestions.front();
        std::string text;
        if (report.location.kind == LocationKind::kName) {
          text = ApplyNameEdits(source, top.edits);
        } else {
          const auto edited = ApplyFormattingEdits(source.format, top.edits);
          text = DetokenizeFormatting(edited, source.text, model.profile());
        }
        WriteText(file, text);
        j["applied"] = true;
        std::cerr << "applied '" << top.lexeme << "' to " << file << "\n";
      }
    }
    PrintJson(j);
    return 0;
  }
};

// ---- profile ---------------------------------------------------------------

struct ProfileCommand {
  std::string model_path;
  std::string file;
  std::string diff;
  int k = 7;

  int Run() const {
    const ConventionModel model = LoadModel(model_path);
    const Engine engine(model);
    const SourceFile source = AnalyzeOrFail(model, file, ReadText(file));
    PreparedFile prepared = engine.Prepare(source);

    std::vector<TokenRange> ranges = {TokenRange{}};
    if (!diff.empty()) {
      ranges.clear();
      const auto changes = ParseUnifiedDiff(ReadText(diff));
      for (const FileChange& c : changes) {
        if (fs::path(c.path).lexically_normal() != fs::path(file).lexically_normal()) continue;
        auto r = ChangedTokenRanges(source, c.lines);
        ranges.insert(ranges.end(), r.begin(), r.end());
      }
    }
    StyleProfile profile;
    for (const TokenRange& r : ranges) {
      StyleProfile part = engine.Profile(prepared, r, -1);
      profile.locations_examined += part.locations_examined;
      for (auto& e : part.entries) profile.entries.push_back(std::move(e));
    }
    std::stable_sort(profile.entries.begin(), profile.entries.end(),
                     [](const LocationReport& a, const LocationReport& b) {
                       return a.improvement > b.improvement;
                     });
    if (k >= 0 && profile.entries.size() > static_cast<std::size_t>(k)) {
      profile.entries.resize(static_cast<std::size_t>(k));
    }
    PrintJson(ProfileToJson(profile));
    std::cerr << RenderProfile(profile);
    return 0;
  }
};

// ---- check -----------------------------------------------------------------

struct CheckCommand {
  std::string model_path;
  std::vector<std::string> files;
  bool staged = false;
  std::string diff;
  std::string root = ".";
  std::string mode = "both";
  std::optional<double> threshold;
  std::optional<double> alpha;
  std::vector<std::string> extensions;

  double Threshold(const ConventionModel& model, DecisionMode m) const {
    if (threshold) return *threshold;
    const auto& cal = model.calibration();
    const std::string hint = "; run `convlearn calibrate --mode " + mode +
                             (alpha ? " --alpha " + std::to_string(*alpha) : "") +
                             "` or pass --threshold";
    if (!cal) Fail("model has no calibrated threshold" + hint);
    if (cal->mode != m) {
      Fail("model is calibrated for mode " + std::string(DecisionModeName(cal->mode)) + hint);
    }
    if (alpha && std::abs(*alpha - cal->alpha) > 1e-12) {
      Fail("model is calibrated for alpha " + std::to_string(cal->alpha) + hint);
    }
    return cal->threshold;
  }

  std::vector<CheckTarget> Targets(const ConventionModel& model) const {
    const auto exts =
        extensions.empty() ? DefaultExtensions(model.profile().name()) : extensions;
    std::vector<CheckTarget> targets;
    const auto add_changes = [&](const std::vector<FileChange>& changes, bool from_index) {
      for (const FileChange& c : changes) {
        if (!HasExtension(c.path, exts) || c.lines.empty()) continue;
        const std::string text = from_index ? RunCommand("git show " + ShellQuote(":" + c.path))
                                            : ReadText(fs::path(root) / c.path);
        CheckTarget t{AnalyzeOrFail(model, c.path, text), {}};
        t.ranges = ChangedTokenRanges(t.file, c.lines);
        if (!t.ranges.empty()) targets.push_back(std::move(t));
      }
    };
    if (staged) {
      add_changes(ParseUnifiedDiff(RunCommand(
                      "git diff --cached -U0 --no-color --no-ext-diff --diff-filter=ACMR")),
                  true);
    }
    if (!diff.empty()) add_changes(ParseUnifiedDiff(ReadText(diff)), false);
    for (const std::string& f : files) {
      targets.push_back({AnalyzeOrFail(model, f, ReadText(f)), {TokenRange{}}});
    }
    return targets;
  }

  int Run() const {
    DecisionMode m;
    try {
      m = ParseDecisionMode(mode);
    } catch (const std::exception& e) {
      Fail(e.what());
    }
    const ConventionModel model = LoadModel(model_path);
    const double t = Threshold(model, m);
    const auto targets = Targets(model);
    const Engine engine(model);
    const Decision d = CheckTargets(engine, targets, m, t);
    PrintJson(DecisionToJson(d));
    std::cerr << RenderDecision(d);
    return d.reject ? kExitReject : 0;
  }
};

// ---- calibrate -------------------------------------------------------------

struct CalibrateCommand {
  std::string model_path;
  std::string output;
  CorpusFlags corpus;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  std::size_t samples = kDefaultCalibrationSamples;
  std::string mode = "both";

  int Run() const {
    ConventionModel model = LoadModel(model_path);
    const auto files = corpus.Load(model.profile(), model.config().bucket_size);
    const Engine engine(model);
    CalibrationRecord record;
    try {
      record = CalibrateThreshold(engine, files, alpha, ParseDecisionMode(mode), seed, samples);
    } catch (const CalibrationError& e) {
      Fail(e.what());
    } catch (const std::invalid_argument& e) {
      Fail(e.what());
    }
    model.set_calibration(record);
    const std::string out = output.empty() ? model_path : output;
    model.Save(out);
    PrintJson(CalibrationToJson(record));
    std::cerr << "T = " << record.threshold << " (estimated FPR " << record.estimated_fpr
              << " over " << record.samples << " spans)\n";
    if (record.warning) {
      std::cerr << "warning: no threshold reaches alpha " << alpha
                << "; using the largest grid value\n";
    }
    std::cerr << "wrote " << out << "\n";
    return 0;
  }
};

// ---- genrule ---------------------------------------------------------------

struct GenruleCommand {
  std::string model_path;
  std::string library = "rules";
  double min_gap = kDefaultRuleGap;
  std::string output;

  int Run() const {
    if (!fs::is_directory(library)) Fail("no snippet library at " + library);
    const ConventionModel model = LoadModel(model_path);
    const RuleSet rules = GenerateRules(model, library, min_gap);
    for (const Rule& r : rules.rules) {
      if (!r.warning.empty()) std::cerr << "warning: " << r.setting << ": " << r.warning << "\n";
    }
    const std::string kv = RenderKeyValue(rules);
    if (!output.empty()) WriteText(output, kv);
    PrintJson(RuleSetToJson(rules));
    std::cerr << kv;
    return 0;
  }
};

// ---- eval ------------------------------------------------------------------

struct EvalCommand {
  std::string experiment;
  CorpusFlags corpus;
  TrainFlags train;
  bool synthetic = false;
  bool rare = false;
  int synthetic_files = 40;
  std::string global_model;
  std::string csv;
  std::string json_path;
  std::string plot;
  EvalConfig config;

  void Add(CLI::App* app) {
    app->add_option("experiment", experiment, "naming|multi|format|roc|junk|sup")
        ->required()
        ->check(CLI::IsMember({"naming", "multi", "format", "roc", "junk", "sup"}));
    corpus.Add(app, false);
    train.Add(app);
    app->add_flag("--synthetic", synthetic, "Use a generated corpus instead of roots");
    app->add_flag("--rare", rare, "Add rare-name methods to the generated corpus");
    app->add_option("--synthetic-files", synthetic_files, "Files in the generated corpus");
    app->add_option("--global-model", global_model, "Global model for naming (mixture)");
    app->add_option("--lambda", config.suggest.lambda, "Weight of the global model");
    app->add_option("-t", config.suggest.t, "Minimum gap for a suggestion");
    app->add_option("--seed", config.seed, "Perturbation seed");
    app->add_option("--ks", config.ks, "Ranks k for accuracy curves");
    app->add_option("--frequencies", config.frequencies, "Suggestion frequencies");
    app->add_option("--zipf-s", config.zipf_s, "Zipf slope of junk names");
    app->add_option("--junk-pool", config.junk_pool, "Distinct junk names");
    app->add_option("--junk-rates", config.junk_rates, "Injection rates");
    app->add_option("--trials", config.multi_trials, "Renamed snippets per test file");
    app->add_option("--recall-rank", config.recall_rank, "Rank for recall");
    app->add_option("--roc-samples", config.roc_samples, "Spans in the binary experiment");
    app->add_option("--folds", config.folds, "Folds in the binary experiment");
    app->add_option("--t-grid", config.t_grid, "Thresholds t for the SUP experiment");
    app->add_option("--format-stride", config.format_stride,
                    "Evaluate every n-th whitespace location");
    app->add_option("--csv", csv, "Write the table as CSV");
    app->add_option("--json", json_path, "Write the report as JSON");
    app->add_option("--plot", plot, "Write x/y series for plotting");
  }

  int Run(const std::string& language) {
    config.train = train.config;
    config.train.Validate();
    config.suggest.Validate();
    const LanguageProfile profile = LanguageProfile::Resolve(language);
    std::vector<SourceFile> files;
    if (synthetic) {
      SyntheticOptions options;
      options.files = synthetic_files;
      options.seed = config.seed;
      options.rare_names = rare;
      for (const SyntheticFile& f : GenerateSynthetic(options)) {
        files.push_back(SourceFile::Analyze(f.path, f.text, profile, config.train.bucket_size));
      }
    } else {
      if (corpus.roots.empty()) Fail("eval needs corpus roots or --synthetic");
      files = corpus.Load(profile, config.train.bucket_size);
    }
    if (files.size() < 2) Fail("eval needs at least two files");

    std::optional<ConventionModel> global;
    if (!global_model.empty()) global = LoadModel(global_model);

    EvalReport report;
    if (experiment == "naming") {
      report = EvalNaming(files, profile, config, global ? &global->names() : nullptr).report;
    } else if (experiment == "multi") {
      report = EvalMultiPoint(files, profile, config).report;
    } else if (experiment == "format") {
      report = EvalFormatting(files, profile, config).report;
    } else if (experiment == "roc") {
      report = EvalBinaryRoc(files, profile, config).report;
    } else if (experiment == "junk") {
      report = EvalJunk(files, profile, config).report;
    } else {
      report = EvalSup(files, profile, config).report;
    }
    if (!csv.empty()) WriteText(csv, report.ToCsv());
    if (!json_path.empty()) WriteText(json_path, report.ToJson().dump(2) + "\n");
    if (!plot.empty()) WriteText(plot, report.ToPlotData());
    PrintJson(report.ToJson());
    std::cerr << report.ToCsv();
    return 0;
  }
};

// ---- synth -----------------------------------------------------------------

struct SynthCommand {
  std::string output;
  SyntheticOptions options;
  std::string indent = "4";
  bool no_operator_space = false;
  bool no_keyword_space = false;

  int Run() {
    if (indent == "2") {
      options.style.indent = IndentStyle::kTwo;
    } else if (indent == "4") {
      options.style.indent = IndentStyle::kFour;
    } else if (indent == "tab") {
      options.style.indent = IndentStyle::kTab;
    } else {
      Fail("--indent must be 2, 4 or tab");
    }
    options.style.space_around_operators = !no_operator_space;
    options.style.space_after_keyword = !no_keyword_space;
    const auto files = GenerateSynthetic(options);
    WriteSynthetic(files, output);
    PrintJson({{"files", files.size()}, {"directory", output}});
    std::cerr << "wrote " << files.size() << " files to " << output << "\n";
    return 0;
  }
};

// ---- dump ------------------------------------------------------------------

struct DumpCommand {
  std::string model_path;

  int Run() const {
    const ConventionModel model = LoadModel(model_path);
    json j = StatsToJson(model);
    const auto ngrams = [](const NGramModel& lm) {
      json counts = json::array();
      for (int k = 1; k <= lm.counts().order(); ++k) counts.push_back(lm.counts().Order(k).size());
      return counts;
    };
    j["name_ngrams"] = ngrams(model.names());
    j["format_ngrams"] = ngrams(model.format());
    PrintJson(j);
    return 0;
  }
};

int Main(int argc, char** argv) {
  CLI::App app{"Learn coding conventions from a corpus and check code against them."};
  app.set_config("--config", "", "INI file of option defaults");
  app.require_subcommand(1);
  std::string language = "java";
  app.add_option("--lang", language, "java, cpp, or a language profile file");

  TrainCommand train;
  auto* train_cmd = app.add_subcommand("train", "Train a model on a corpus");
  train.corpus.Add(train_cmd, true);
  train.train.Add(train_cmd);
  train_cmd->add_option("-o,--output", train.output, "Model file to write");

  SuggestCommand suggest;
  auto* suggest_cmd = app.add_subcommand("suggest", "Rank alternatives for one location");
  suggest_cmd->add_option("-m,--model", suggest.model_path, "Model file")->required();
  suggest_cmd->add_option("file", suggest.file, "Source file")->required();
  suggest_cmd->add_option("target", suggest.target, "Identifier name or line:col")->required();
  suggest.flags.Add(suggest_cmd);
  suggest_cmd->add_flag("--apply", suggest.apply, "Rewrite the file with the top suggestion");
  suggest_cmd->add_flag("--candidates", suggest.candidates, "Include every scored candidate");

  ProfileCommand profile;
  auto* profile_cmd = app.add_subcommand("profile", "List the most surprising names");
  profile_cmd->add_option("-m,--model", profile.model_path, "Model file")->required();
  profile_cmd->add_option("file", profile.file, "Source file")->required();
  profile_cmd->add_option("--diff", profile.diff, "Only lines changed by this diff");
  profile_cmd->add_option("-k", profile.k, "Entries to show, -1 for all");

  CheckCommand check;
  auto* check_cmd = app.add_subcommand("check", "Accept or reject changed code");
  check_cmd->add_option("-m,--model", check.model_path, "Model file")->required();
  check_cmd->add_option("files", check.files, "Whole files to check");
  check_cmd->add_flag("--staged", check.staged, "Check lines staged in git");
  check_cmd->add_option("--diff", check.diff, "Check lines added by a unified diff");
  check_cmd->add_option("--root", check.root, "Directory the diff paths are relative to");
  check_cmd->add_option("--mode", check.mode, "names, format or both");
  check_cmd->add_option("--threshold", check.threshold, "Explicit threshold T");
  check_cmd->add_option("--alpha", check.alpha, "Expected calibration alpha");
  check_cmd->add_option("--ext", check.extensions, "File extensions to check");

  CalibrateCommand calibrate;
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Set T from a false positive rate");
  calibrate_cmd->add_option("-m,--model", calibrate.model_path, "Model file")->required();
  calibrate.corpus.Add(calibrate_cmd, true);
  calibrate_cmd->add_option("-o,--output", calibrate.output, "Model file to write");
  calibrate_cmd->add_option("--alpha", calibrate.alpha, "Target false positive rate");
  calibrate_cmd->add_option("--seed", calibrate.seed, "Span sampling seed");
  calibrate_cmd->add_option("--samples", calibrate.samples, "Spans to sample");
  calibrate_cmd->add_option("--mode", calibrate.mode, "names, format or both");

  GenruleCommand genrule;
  auto* genrule_cmd = app.add_subcommand("genrule", "Infer formatter settings");
  genrule_cmd->add_option("-m,--model", genrule.model_path, "Model file")->required();
  genrule_cmd->add_option("--library", genrule.library, "Snippet library directory");
  genrule_cmd->add_option("--min-gap", genrule.min_gap, "Gap needed to decide a setting");
  genrule_cmd->add_option("-o,--output", genrule.output, "Key-value file to write");

  EvalCommand eval;
  auto* eval_cmd = app.add_subcommand("eval", "Run an evaluation experiment");
  eval.Add(eval_cmd);

  SynthCommand synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic corpus");
  synth_cmd->add_option("-o,--output", synth.output, "Directory")->required();
  synth_cmd->add_option("--files", synth.options.files, "Files (base files if balanced)");
  synth_cmd->add_option("--methods", synth.options.methods_per_file, "Methods per file");
  synth_cmd->add_option("--seed", synth.options.seed, "Seed");
  synth_cmd->add_flag("--balanced", synth.options.balanced, "Every style combination");
  synth_cmd->add_flag("--rare", synth.options.rare_names, "Add rare-name methods");
  synth_cmd->add_flag("--brace-next-line", synth.options.style.brace_next_line,
                      "Opening braces on their own line");
  synth_cmd->add_flag("--no-operator-space", synth.no_operator_space,
                      "No spaces around binary operators");
  synth_cmd->add_flag("--no-keyword-space", synth.no_keyword_space,
                      "No space between a keyword and '('");
  synth_cmd->add_option("--indent", synth.indent, "2, 4 or tab");
  synth_cmd->add_flag("--blank-before-close", synth.options.style.blank_line_before_close,
                      "Blank line before closing braces");

  DumpCommand dump;
  auto* dump_cmd = app.add_subcommand("dump", "Print a model summary");
  dump_cmd->add_option("-m,--model", dump.model_path, "Model file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*train_cmd) return train.Run(language);
    if (*suggest_cmd) return suggest.Run();
    if (*profile_cmd) return profile.Run();
    if (*check_cmd) return check.Run();
    if (*calibrate_cmd) return calibrate.Run();
    if (*genrule_cmd) return genrule.Run();
    if (*eval_cmd) return eval.Run(language);
    if (*synth_cmd) return synth.Run();
    if (*dump_cmd) return dump.Run();
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace
}  // namespace convlearn

int main(int argc, char** argv) { return convlearn::Main(argc, argv); }
