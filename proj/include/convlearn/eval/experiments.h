#ifndef CONVLEARN_EVAL_EXPERIMENTS_H_
#define CONVLEARN_EVAL_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "convlearn/eval/protocols.h"
#include "convlearn/eval/report.h"
#include "convlearn/eval/zipf.h"
#include "convlearn/lexer/source_file.h"
#include "convlearn/ngram/ngram_model.h"
#include "convlearn/suggest/config.h"

namespace convlearn {

struct EvalConfig {
  TrainConfig train;
  SuggestConfig suggest;
  std::vector<double> frequencies = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<int> ks = {1, 5};
  std::uint64_t seed = 1;
  double zipf_s = kJunkZipfSlope;
  std::size_t junk_pool = 1000;
  std::vector<double> junk_rates = {0.0, 0.05, 0.10, 0.25};
  // Renamed snippets per test file in the multi-point experiment.
  int multi_trials = 5;
  int recall_rank = 7;
  // Spans sampled for the binary experiment.
  int roc_samples = 300;
  int folds = 5;
  std::vector<double> t_grid = {0.0, 0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0, 1.5, 2.0,
                                kPositiveInfinity};
  // Every stride-th whitespace location is evaluated (1 = all).
  std::size_t format_stride = 1;
  // Also run plain suggest on every location and count abstentions.
  bool measure_abstention = true;
};

// FNV-1a over a canonical rendering of the config.
std::uint64_t ConfigHash(const EvalConfig& config);

struct AccuracyResult {
  // curves[i] belongs to config.ks[i].
  std::vector<std::vector<CurvePoint>> curves;
  std::vector<std::vector<CurvePoint>> category_curves;  // k = 1, by category
  std::size_t events = 0;
  // Locations without any concrete candidate (left out of the curves).
  std::size_t no_candidate = 0;
  std::size_t unperturbed = 0;
  std::size_t abstained = 0;
  EvalReport report;
};

// Leave-one-out hidden-name prediction over every identifier group.
AccuracyResult EvalNaming(std::span<const SourceFile> files, const LanguageProfile& profile,
                          const EvalConfig& config, const NGramModel* global = nullptr);

// Leave-one-out hidden-whitespace prediction, k = 1.
AccuracyResult EvalFormatting(std::span<const SourceFile> files,
                              const LanguageProfile& profile, const EvalConfig& config);

struct MultiPointResult {
  std::vector<int> ranks;  // 0 = not in the profile
  double recall = 0.0;     // at config.recall_rank
  double mrr = 0.0;
  EvalReport report;
};

// Mean reciprocal rank, 0 for unranked outcomes.
double MeanReciprocalRank(std::span<const int> ranks);
double RecallAt(std::span<const int> ranks, int k);

// Renames one identifier of a held-out snippet to a fresh name and records
// the rank of that location in the snippet's profile.
MultiPointResult EvalMultiPoint(std::span<const SourceFile> files,
                                const LanguageProfile& profile, const EvalConfig& config);

enum class Perturbation { kNone, kName, kWhitespace };

struct RocPoint {
  double threshold = 0.0;
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocSample {
  Perturbation perturbation = Perturbation::kNone;
  double g_names = kNegativeInfinity;
  double g_format = kNegativeInfinity;
  double g_both = kNegativeInfinity;
};

struct RocResult {
  std::vector<RocSample> samples;
  std::vector<RocPoint> names;
  std::vector<RocPoint> format;
  std::vector<RocPoint> both;
  std::size_t negatives = 0;
  std::size_t positives = 0;
  EvalReport report;
};

// Points for every distinct score plus T = -inf and T = +inf, sorted by
// (fpr, tpr).
std::vector<RocPoint> RocCurve(std::span<const double> negatives,
                               std::span<const double> positives);
// Best TPR among points with FPR at most `fpr`.
double TprAtFpr(std::span<const RocPoint> curve, double fpr);

// Held-out spans left alone, given one renamed identifier, or given one
// changed whitespace token, each with probability 1/3; G in all three modes.
RocResult EvalBinaryRoc(std::span<const SourceFile> files, const LanguageProfile& profile,
                        const EvalConfig& config);

struct JunkPoint {
  double rate = 0.0;
  std::size_t groups = 0;
  std::size_t renamed = 0;
  std::size_t suggestions = 0;
  std::size_t junk_suggestions = 0;
  double junk_rate() const {
    return suggestions == 0 ? 0.0
                            : static_cast<double>(junk_suggestions) /
                                  static_cast<double>(suggestions);
  }
};

struct JunkResult {
  std::vector<JunkPoint> points;
  double fitted_slope = 0.0;
  EvalReport report;
};

// Renames a fraction p of the variable groups in each training fold's files
// to Zipf-drawn junk names, then counts junk among the leave-one-out
// suggestions (k = 1) on the untouched test file.
JunkResult EvalJunk(std::span<const SourceFile> files, const LanguageProfile& profile,
                    const EvalConfig& config);

struct SupPoint {
  double t = 0.0;
  std::size_t preserved = 0;
  std::size_t total = 0;
  double fraction() const {
    return total == 0 ? 1.0 : static_cast<double>(preserved) / static_cast<double>(total);
  }
};

struct SupResult {
  std::vector<SupPoint> points;  // one per config.t_grid value
  EvalReport report;
};

// Identifiers unknown to the leave-one-out model: the fraction for which no
// alternative is suggested, per t.
SupResult EvalSup(std::span<const SourceFile> files, const LanguageProfile& profile,
                  const EvalConfig& config);

}  // namespace convlearn

#endif  // CONVLEARN_EVAL_EXPERIMENTS_H_
