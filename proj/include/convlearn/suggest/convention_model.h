#ifndef CONVLEARN_SUGGEST_CONVENTION_MODEL_H_
#define CONVLEARN_SUGGEST_CONVENTION_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convlearn/lexer/language_profile.h"
#include "convlearn/lexer/source_file.h"
#include "convlearn/ngram/ngram_model.h"
#include "convlearn/propose/context_index.h"
#include "convlearn/suggest/config.h"

namespace convlearn {

// Result of threshold calibration, kept with the model so it can be
// reproduced.
struct CalibrationRecord {
  double alpha = 0.05;
  double threshold = 0.0;
  DecisionMode mode = DecisionMode::kBoth;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t eligible_spans = 0;
  double grid_min = 0.0;
  double grid_max = 0.0;
  std::uint32_t grid_points = 0;
  double estimated_fpr = 0.0;
  // No grid value met alpha; the largest one was used.
  bool warning = false;

  friend bool operator==(const CalibrationRecord&, const CalibrationRecord&) = default;
};

struct CorpusStats {
  std::uint64_t files = 0;
  std::uint64_t tokens = 0;
  std::uint64_t unk_tokens = 0;
  std::uint64_t format_tokens = 0;
  std::uint64_t format_unk_tokens = 0;

  double unk_rate() const {
    return tokens == 0 ? 0.0 : static_cast<double>(unk_tokens) / static_cast<double>(tokens);
  }
  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

// FNV-1a over the sorted paths, newline separated.
std::uint64_t HashFileList(std::vector<std::string> paths);

// Everything learned from one corpus: the naming and formatting models, the
// context index for name proposals, and the calibrated threshold.
class ConventionModel {
 public:
  // Throws std::invalid_argument on an empty corpus.
  static ConventionModel Train(std::span<const SourceFile> files,
                               const LanguageProfile& profile,
                               const TrainConfig& config = {});

  const TrainConfig& config() const { return config_; }
  const LanguageProfile& profile() const { return profile_; }
  const NGramModel& names() const { return names_; }
  const NGramModel& format() const { return format_; }
  const ContextIndex& contexts() const { return contexts_; }
  const CorpusStats& stats() const { return stats_; }
  std::uint64_t training_hash() const { return training_hash_; }

  const std::optional<CalibrationRecord>& calibration() const { return calibration_; }
  void set_calibration(CalibrationRecord record) { calibration_ = record; }

  // Analyzes text with this model's profile and bucket size.
  SourceFile Analyze(std::string path, std::string text) const;

  std::string Serialize() const;
  // Throws LoadError.
  static ConventionModel Deserialize(std::string_view bytes);
  void Save(const std::filesystem::path& path) const;
  static ConventionModel Load(const std::filesystem::path& path);

 private:
  TrainConfig config_;
  LanguageProfile profile_;
  NGramModel names_;
  NGramModel format_;
  ContextIndex contexts_;
  CorpusStats stats_;
  std::uint64_t training_hash_ = 0;
  std::optional<CalibrationRecord> calibration_;
};

}  // namespace convlearn

#endif  // CONVLEARN_SUGGEST_CONVENTION_MODEL_H_
