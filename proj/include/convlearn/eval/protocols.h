#ifndef CONVLEARN_EVAL_PROTOCOLS_H_
#define CONVLEARN_EVAL_PROTOCOLS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "convlearn/lexer/source_file.h"
#include "convlearn/suggest/convention_model.h"
#include "convlearn/suggest/engine.h"

namespace convlearn {

// Prediction for a location whose original lexeme is hidden: the focus is
// replaced by the unknown-word token and only concrete candidates compete.
struct HiddenPrediction {
  std::string original;
  // Concrete candidates, best first.
  std::vector<std::string> ranked;
  // Gap of the best candidate over the hidden snippet; -inf without candidates.
  double confidence = 0.0;
  IdentifierCategory category = IdentifierCategory::kVariable;

  // 1-based rank of the original, 0 when absent.
  int RankOfOriginal() const;
};

HiddenPrediction PredictHiddenName(const Engine& engine, PreparedFile& prepared,
                                   std::size_t group);
HiddenPrediction PredictHiddenWhitespace(const Engine& engine, PreparedFile& prepared,
                                         std::size_t format_index);

struct PredictionEvent {
  double confidence = 0.0;
  int rank = 0;
  IdentifierCategory category = IdentifierCategory::kVariable;
  // Held-out file the event came from.
  std::size_t file = 0;
};

struct CurvePoint {
  double frequency = 0.0;
  // Confidence of the least confident event included.
  double threshold = 0.0;
  std::size_t suggested = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
};

// For each frequency f, the ceil(f * n) most confident events count as
// suggestions; accuracy is the fraction whose original ranks within k.
std::vector<CurvePoint> AccuracyAtFrequency(std::span<const PredictionEvent> events, int k,
                                            std::span<const double> frequencies);

struct FileSpread {
  std::size_t files = 0;  // files with at least one event
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};

// Quartiles over files of the per-file accuracy within k, every event counted.
FileSpread PerFileAccuracy(std::span<const PredictionEvent> events, int k);

// Trains on every file but `held_out` and checks, via the training-list
// hash, that the held-out file was excluded. Throws std::logic_error if not.
ConventionModel TrainLeaveOneOut(std::span<const SourceFile> files, std::size_t held_out,
                                 const LanguageProfile& profile, const TrainConfig& config);
// Same for a set of held-out files.
ConventionModel TrainExcluding(std::span<const SourceFile> files,
                               const std::vector<bool>& held_out,
                               const LanguageProfile& profile, const TrainConfig& config);

// Every identifier lexeme of the files.
std::set<std::string, std::less<>> IdentifiersOf(std::span<const SourceFile> files);

// The file re-analyzed with every occurrence of `group` renamed.
SourceFile RenameGroup(const ConventionModel& model, const SourceFile& file,
                       std::size_t group, const std::string& name);

// The file re-analyzed with the whitespace at `format_index` replaced by a
// random different formatting candidate; nullopt when there is none.
std::optional<SourceFile> PerturbWhitespace(const ConventionModel& model,
                                            const SourceFile& file,
                                            std::size_t format_index, std::mt19937_64& rng);

}  // namespace convlearn

#endif  // CONVLEARN_EVAL_PROTOCOLS_H_
