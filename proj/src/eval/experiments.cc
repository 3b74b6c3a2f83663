#include "convlearn/eval/experiments.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "convlearn/propose/proposers.h"
#include "convlearn/suggest/calibrate.h"

namespace convlearn {
namespace {

std::string Fmt(const char* format, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string Point(int k, double f) { return "k=" + std::to_string(k) + Fmt(",f=%.2f", f); }

std::set<std::string, std::less<>> Reserved(std::span<const SourceFile> files,
                                            const LanguageProfile& profile) {
  auto taken = IdentifiersOf(files);
  taken.insert(profile.keywords().begin(), profile.keywords().end());
  taken.insert(profile.literal_words().begin(), profile.literal_words().end());
  return taken;
}

std::size_t Uniform(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

void AddCurves(AccuracyResult& result, const std::string& experiment,
               const EvalConfig& config, std::span<const PredictionEvent> events) {
  for (std::size_t i = 0; i < config.ks.size(); ++i) {
    const int k = config.ks[i];
    result.curves.push_back(AccuracyAtFrequency(events, k, config.frequencies));
    PlotSeries series{experiment + " k=" + std::to_string(k), "suggestion frequency",
                      "accuracy", {}, {}};
    for (const CurvePoint& p : result.curves.back()) {
      result.report.Add(experiment, Point(k, p.frequency), "accuracy", p.accuracy, p.suggested);
      result.report.Add(experiment, Point(k, p.frequency), "threshold", p.threshold,
                        p.suggested);
      series.x.push_back(p.frequency);
      series.y.push_back(p.accuracy);
    }
    result.report.series.push_back(std::move(series));
    const FileSpread spread = PerFileAccuracy(events, k);
    const std::string point = "k=" + std::to_string(k) + ",per_file";
    result.report.Add(experiment, point, "accuracy_q1", spread.q1, spread.files);
    result.report.Add(experiment, point, "accuracy_median", spread.median, spread.files);
    result.report.Add(experiment, point, "accuracy_q3", spread.q3, spread.files);
  }
  result.report.Add(experiment, "all", "events", static_cast<double>(events.size()),
                    events.size());
  result.report.Add(experiment, "all", "no_candidate",
                    static_cast<double>(result.no_candidate), result.no_candidate);
  if (result.unperturbed > 0) {
    result.report.Add(experiment, "unperturbed", "abstention_rate",
                      static_cast<double>(result.abstained) /
                          static_cast<double>(result.unperturbed),
                      result.unperturbed);
  }
}

}  // namespace

std::uint64_t ConfigHash(const EvalConfig& c) {
  std::string s;
  const auto add = [&](const std::string& key, double v) { s += key + "=" + Fmt("%.17g", v) + ";"; };
  add("order", c.train.order);
  add("format_order", c.train.format_order);
  add("bucket", c.train.bucket_size);
  add("min_count", c.train.min_count);
  add("cutoff", c.train.discount_cutoff);
  add("k", c.suggest.k);
  add("t", c.suggest.t);
  add("lambda", c.suggest.lambda);
  add("alternatives", static_cast<double>(c.suggest.max_alternatives));
  add("normalization", static_cast<double>(c.suggest.normalization));
  for (double f : c.frequencies) add("f", f);
  for (int k : c.ks) add("ks", k);
  add("seed", static_cast<double>(c.seed));
  add("zipf", c.zipf_s);
  add("pool", static_cast<double>(c.junk_pool));
  for (double p : c.junk_rates) add("p", p);
  add("multi", c.multi_trials);
  add("recall", c.recall_rank);
  add("roc", c.roc_samples);
  add("folds", c.folds);
  for (double t : c.t_grid) add("tg", t);
  add("stride", static_cast<double>(c.format_stride));
  add("abstain", c.measure_abstention);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

AccuracyResult EvalNaming(std::span<const SourceFile> files, const LanguageProfile& profile,
                          const EvalConfig& config, const NGramModel* global) {
  AccuracyResult result;
  result.report.seed = config.seed;
  result.report.config_hash = ConfigHash(config);
  std::vector<PredictionEvent> events;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const ConventionModel model = TrainLeaveOneOut(files, i, profile, config.train);
    const Engine engine(model, config.suggest, global);
    PreparedFile prepared = engine.Prepare(files[i]);
    for (std::size_t g = 0; g < files[i].scopes.groups().size(); ++g) {
      const HiddenPrediction p = PredictHiddenName(engine, prepared, g);
      if (p.ranked.empty()) {
        ++result.no_candidate;
      } else {
        events.push_back({p.confidence, p.RankOfOriginal(), p.category, i});
      }
      if (config.measure_abstention) {
        ++result.unperturbed;
        if (engine.EvaluateGroup(prepared, g).suggestions.empty()) ++result.abstained;
      }
    }
  }
  result.events = events.size();
  AddCurves(result, "naming", config, events);

  for (IdentifierCategory category :
       {IdentifierCategory::kVariable, IdentifierCategory::kMethod, IdentifierCategory::kType}) {
    std::vector<PredictionEvent> subset;
    for (const auto& e : events) {
      if (e.category == category) subset.push_back(e);
    }
    result.category_curves.push_back(AccuracyAtFrequency(subset, 1, config.frequencies));
    const std::string name = "naming_" + std::string(IdentifierCategoryName(category));
    for (const CurvePoint& p : result.category_curves.back()) {
      result.report.Add(name, Point(1, p.frequency), "accuracy", p.accuracy, p.suggested);
    }
  }
  result.report.notes.push_back(
      "identifier categories are lexical guesses: after '.' a method, capitalized a type");
  return result;
}

AccuracyResult EvalFormatting(std::span<const SourceFile> files,
                              const LanguageProfile& profile, const EvalConfig& config) {
  AccuracyResult result;
  result.report.seed = config.seed;
  result.report.config_hash = ConfigHash(config);
  EvalConfig k1 = config;
  k1.ks = {1};
  std::vector<PredictionEvent> events;
  const std::size_t stride = std::max<std::size_t>(1, config.format_stride);
  for (std::size_t i = 0; i < files.size(); ++i) {
    const ConventionModel model = TrainLeaveOneOut(files, i, profile, config.train);
    const Engine engine(model, config.suggest);
    PreparedFile prepared = engine.Prepare(files[i]);
    for (std::size_t w = 1; w < files[i].format.size(); w += 2 * stride) {
      const HiddenPrediction p = PredictHiddenWhitespace(engine, prepared, w);
      if (p.ranked.empty()) {
        ++result.no_candidate;
      } else {
        events.push_back({p.confidence, p.RankOfOriginal(), IdentifierCategory::kVariable, i});
      }
      if (config.measure_abstention) {
        ++result.unperturbed;
        if (engine.EvaluateWhitespace(prepared, w).suggestions.empty()) ++result.abstained;
      }
    }
  }
  result.events = events.size();
  AddCurves(result, "format", k1, events);
  return result;
}

double MeanReciprocalRank(std::span<const int> ranks) {
  if (ranks.empty()) return 0.0;
  double sum = 0;
  for (int r : ranks) sum += r > 0 ? 1.0 / r : 0.0;
  return sum / static_cast<double>(ranks.size());
}

double RecallAt(std::span<const int> ranks, int k) {
  if (ranks.empty()) return 0.0;
  const auto hits =
      std::count_if(ranks.begin(), ranks.end(), [&](int r) { return r >= 1 && r <= k; });
  return static_cast<double>(hits) / static_cast<double>(ranks.size());
}

MultiPointResult EvalMultiPoint(std::span<const SourceFile> files,
                                const LanguageProfile& profile, const EvalConfig& config) {
  MultiPointResult result;
  result.report.seed = config.seed;
  result.report.config_hash = ConfigHash(config);
  std::mt19937_64 rng(config.seed);
  NonceNames fresh(Reserved(files, profile), 1u << 20);
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const SourceFile& file = files[i];
    std::vector<CodeSpan> spans;
    for (const CodeSpan& s : EligibleSpans(std::span(&file, 1))) {
      for (std::size_t t = s.range.begin; t < s.range.end; ++t) {
        if (file.tokens[t].is_identifier()) {
          spans.push_back(s);
          break;
        }
      }
    }
    if (spans.empty()) {
      ++skipped;
      continue;
    }
    const ConventionModel model = TrainLeaveOneOut(files, i, profile, config.train);
    const Engine engine(model, config.suggest);
    for (int trial = 0; trial < config.multi_trials; ++trial) {
      const CodeSpan& span = spans[Uniform(rng, spans.size())];
      const auto groups = engine.GroupsIn(file, span.range);
      const std::size_t group = groups[Uniform(rng, groups.size())];
      const std::string name = fresh.Next();
      const SourceFile renamed = RenameGroup(model, file, group, name);
      PreparedFile prepared = engine.Prepare(renamed);
      const StyleProfile style = engine.Profile(prepared, span.range, -1);
      int rank = 0;
      for (std::size_t e = 0; e < style.entries.size(); ++e) {
        if (style.entries[e].location.original == name) {
          rank = static_cast<int>(e) + 1;
          break;
        }
      }
      result.ranks.push_back(rank);
    }
  }
  result.recall = RecallAt(result.ranks, config.recall_rank);
  result.mrr = MeanReciprocalRank(result.ranks);
  const auto n = result.ranks.size();
  result.report.Add("multi", "k=" + std::to_string(config.recall_rank), "recall",
                    result.recall, n);
  result.report.Add("multi", "all", "mrr", result.mrr, n);
  result.report.Add("multi", "all", "skipped_files", static_cast<double>(skipped), skipped);
  PlotSeries series{"multi recall@k", "k", "recall", {}, {}};
  for (int k = 1; k <= 10; ++k) {
    series.x.push_back(k);
    series.y.push_back(RecallAt(result.ranks, k));
  }
  result.report.series.push_back(std::move(series));
  return result;
}

std::vector<RocPoint> RocCurve(std::span<const double> negatives,
                               std::span<const double> positives) {
  std::vector<double> thresholds;
  for (double g : negatives) {
    if (std::isfinite(g)) thresholds.push_back(g);
  }
  for (double g : positives) {
    if (std::isfinite(g)) thresholds.push_back(g);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  thresholds.insert(thresholds.begin(), kNegativeInfinity);
  thresholds.push_back(kPositiveInfinity);

  const auto rate = [](std::span<const double> scores, double t) {
    if (scores.empty()) return 0.0;
    if (t == kNegativeInfinity) return 1.0;
    return EstimateFpr(scores, t);
  };
  std::vector<RocPoint> out;
  for (double t : thresholds) out.push_back({t, rate(negatives, t), rate(positives, t)});
  std::sort(out.begin(), out.end(), [](const RocPoint& a, const RocPoint& b) {
    if (a.fpr != b.fpr) return a.fpr < b.fpr;
    return a.tpr < b.tpr;
  });
  return out;
}

double TprAtFpr(std::span<const RocPoint> curve, double fpr) {
  double best = 0.0;
  for (const RocPoint& p : curve) {
    if (p.fpr <= fpr + 1e-12) best = std::max(best, p.tpr);
  }
  return best;
}

RocResult EvalBinaryRoc(std::span<const SourceFile> files, const LanguageProfile& profile,
                        const EvalConfig& config) {
  RocResult result;
  result.report.seed = config.seed;
  result.report.config_hash = ConfigHash(config);
  std::mt19937_64 rng(config.seed);
  NonceNames fresh(Reserved(files, profile), 1u << 21);
  const int folds = std::max(1, std::min<int>(config.folds, static_cast<int>(files.size())));

  for (int fold = 0; fold < folds; ++fold) {
    std::vector<bool> held(files.size(), false);
    std::vector<SourceFile> test;
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (static_cast<int>(i % folds) == fold) {
        held[i] = true;
        test.push_back(files[i]);
      }
    }
    const auto eligible = EligibleSpans(test);
    if (eligible.empty()) continue;
    const ConventionModel model =
        folds == 1 ? ConventionModel::Train(files, profile, config.train)
                   : TrainExcluding(files, held, profile, config.train);
    const Engine engine(model, config.suggest);
    const int quota = config.roc_samples / folds + (fold < config.roc_samples % folds ? 1 : 0);

    for (int s = 0; s < quota; ++s) {
      const auto kind = static_cast<Perturbation>(Uniform(rng, 3));
      std::optional<SourceFile> subject;
      CodeSpan span;
      for (int attempt = 0; attempt < 50 && !subject; ++attempt) {
        span = eligible[Uniform(rng, eligible.size())];
        const SourceFile& file = test[span.file];
        if (kind == Perturbation::kNone) {
          subject = file;
        } else if (kind == Perturbation::kName) {
          const auto groups = engine.GroupsIn(file, span.range);
          if (groups.empty()) continue;
          subject = RenameGroup(model, file, groups[Uniform(rng, groups.size())], fresh.Next());
        } else {
          const auto gaps = engine.WhitespaceIn(file, span.range);
          if (gaps.empty()) continue;
          subject = PerturbWhitespace(model, file, gaps[Uniform(rng, gaps.size())], rng);
        }
      }
      if (!subject) continue;
      PreparedFile prepared = engine.Prepare(*subject);
      RocSample sample;
      sample.perturbation = kind;
      sample.g_names =
          engine.Decide(prepared, span.range, DecisionMode::kNames, kPositiveInfinity).g;
      sample.g_format =
          engine.Decide(prepared, span.range, DecisionMode::kFormat, kPositiveInfinity).g;
      sample.g_both = std::max(sample.g_names, sample.g_format);
      result.samples.push_back(sample);
    }
  }

  std::vector<double> neg[3], pos[3];
  for (const RocSample& s : result.samples) {
    const double g[3] = {s.g_names, s.g_format, s.g_both};
    for (int m = 0; m < 3; ++m) (s.perturbation == Perturbation::kNone ? neg : pos)[m].push_back(g[m]);
  }
  result.negatives = neg[0].size();
  result.positives = pos[0].size();
  result.names = RocCurve(neg[0], pos[0]);
  result.format = RocCurve(neg[1], pos[1]);
  result.both = RocCurve(neg[2], pos[2]);

  const std::pair<const char*, const std::vector<RocPoint>*> modes[] = {
      {"names", &result.names}, {"format", &result.format}, {"both", &result.both}};
  for (const auto& [name, curve] : modes) {
    PlotSeries series{std::string("roc ") + name, "false positive rate",
                      "true positive rate", {}, {}};
    for (const RocPoint& p : *curve) {
      series.x.push_back(p.fpr);
      series.y.push_back(p.tpr);
    }
    result.report.series.push_back(std::move(series));
    for (double f : {0.01, 0.05, 0.1, 0.2}) {
      result.report.Add("roc", std::string("mode=") + name + Fmt(",fpr=%.2f", f), "tpr",
                        TprAtFpr(*curve, f), result.positives);
    }
  }
  result.report.Add("roc", "all", "negatives", static_cast<double>(result.negatives),
                    result.negatives);
  result.report.Add("roc", "all", "positives", static_cast<double>(result.positives),
                    result.positives);
  return result;
}

JunkResult EvalJunk(std::span<const SourceFile> files, const LanguageProfile& profile,
                    const EvalConfig& config) {
  JunkResult result;
  result.report.seed = config.seed;
  result.report.config_hash = ConfigHash(config);
  const auto taken = Reserved(files, profile);
  EvalConfig top1 = config;
  top1.suggest.k = 1;

  for (std::size_t pi = 0; pi < config.junk_rates.size(); ++pi) {
    const double p = config.junk_rates[pi];
    std::mt19937_64 rng(config.seed + 7919 * pi);
    JunkNames junk(taken, config.junk_pool, config.zipf_s);
    JunkPoint point;
    point.rate = p;

    // Only the training side is perturbed; suggestions are made on the
    // original held-out file.
    std::vector<SourceFile> perturbed;
    for (const SourceFile& file : files) {
      std::vector<Edit> edits;
      for (const IdentifierGroup& g : file.scopes.groups()) {
        if (CategorizeIdentifier(file.tokens, g.first()) != IdentifierCategory::kVariable) {
          continue;
        }
        ++point.groups;
        if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) >= p) continue;
        ++point.renamed;
        const std::string name = junk.Draw(rng);
        for (std::size_t o : g.occurrences) edits.push_back({o, name});
      }
      perturbed.push_back(edits.empty()
                              ? file
                              : SourceFile::Analyze(file.path, ApplyNameEdits(file, edits),
                                                    profile, config.train.bucket_size));
    }

    for (std::size_t i = 0; i < files.size(); ++i) {
      std::vector<SourceFile> training = perturbed;
      training[i] = files[i];
      const ConventionModel model = TrainLeaveOneOut(training, i, profile, config.train);
      const Engine engine(model, top1.suggest);
      PreparedFile prepared = engine.Prepare(files[i]);
      const auto& groups = files[i].scopes.groups();
      for (std::size_t g = 0; g < groups.size(); ++g) {
        if (CategorizeIdentifier(files[i].tokens, groups[g].first()) !=
            IdentifierCategory::kVariable) {
          continue;
        }
        const LocationReport r = engine.EvaluateGroup(prepared, g);
        if (r.suggestions.empty()) continue;
        ++point.suggestions;
        if (junk.IsJunk(r.suggestions.front().lexeme)) ++point.junk_suggestions;
      }
    }
    const std::string key = Fmt("p=%.2f", p);
    result.report.Add("junk", key, "junk_suggestion_rate", point.junk_rate(), point.suggestions);
    result.report.Add("junk", key, "renamed_groups", static_cast<double>(point.renamed),
                      point.groups);
    result.points.push_back(point);
  }

  ZipfSampler zipf(config.junk_pool, config.zipf_s);
  std::mt19937_64 rng(config.seed);
  std::vector<std::uint64_t> counts(config.junk_pool, 0);
  for (int i = 0; i < 10000; ++i) ++counts[zipf(rng) - 1];
  result.fitted_slope = FitZipfSlope(counts);
  result.report.Add("junk", "draws=10000", "fitted_zipf_slope", result.fitted_slope, 10000);

  PlotSeries series{"junk", "injection rate", "junk suggestion rate", {}, {}};
  for (const JunkPoint& p : result.points) {
    series.x.push_back(p.rate);
    series.y.push_back(p.junk_rate());
  }
  result.report.series.push_back(std::move(series));
  return result;
}

SupResult EvalSup(std::span<const SourceFile> files, const LanguageProfile& profile,
                  const EvalConfig& config) {
  SupResult result;
  result.report.seed = config.seed;
  result.report.config_hash = ConfigHash(config);
  for (double t : config.t_grid) result.points.push_back({t, 0, 0});
  for (std::size_t i = 0; i < files.size(); ++i) {
    const ConventionModel model = TrainLeaveOneOut(files, i, profile, config.train);
    const Engine engine(model, config.suggest);
    PreparedFile prepared = engine.Prepare(files[i]);
    const auto& groups = files[i].scopes.groups();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (model.names().vocab().Contains(groups[g].lexeme)) continue;
      const LocationReport r = engine.EvaluateGroup(prepared, g);
      for (SupPoint& p : result.points) {
        ++p.total;
        if (SelectSuggestions(r.scored.ranked, config.suggest.k, p.t).empty()) ++p.preserved;
      }
    }
  }
  PlotSeries series{"sup", "t", "preserved fraction", {}, {}};
  for (const SupPoint& p : result.points) {
    result.report.Add("sup", Fmt("t=%g", p.t), "preserved_fraction", p.fraction(), p.total);
    series.x.push_back(p.t);
    series.y.push_back(p.fraction());
  }
  result.report.series.push_back(std::move(series));
  return result;
}

}  // namespace convlearn
