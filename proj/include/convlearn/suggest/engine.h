#ifndef CONVLEARN_SUGGEST_ENGINE_H_
#define CONVLEARN_SUGGEST_ENGINE_H_

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "convlearn/lexer/scope_index.h"
#include "convlearn/lexer/source_file.h"
#include "convlearn/suggest/config.h"
#include "convlearn/suggest/convention_model.h"
#include "convlearn/suggest/scorer.h"
#include "convlearn/suggest/suggestion.h"

namespace convlearn {

enum class LocationKind { kName, kFormat };

std::string_view LocationKindName(LocationKind kind);

struct Location {
  LocationKind kind = LocationKind::kName;
  std::string file;
  // First focus position: token index for names, format index for whitespace.
  std::size_t position = 0;
  // 1-based, of the first focus byte.
  std::size_t line = 0;
  std::size_t column = 0;
  ByteSpan bytes;
  // Identifier, or whitespace lexeme.
  std::string original;
  std::vector<std::size_t> focus;
  int group = -1;
  IdentifierCategory category = IdentifierCategory::kVariable;
};

struct LocationReport {
  Location location;
  Snippet snippet;
  ScoredSet scored;
  std::vector<Suggestion> suggestions;
  // g(c1, x) when the top candidate is a concrete alternative, else 0.
  double top_gap = 0.0;
  // |C_v|: n-gram windows of the stream that contain a focus position.
  std::size_t contexts = 0;
  // Log-ratio of a concrete winner over x, normalized by |C_v| (or by the
  // occurrence count); 0 when there is no concrete winner.
  double improvement = 0.0;
};

struct StyleProfile {
  std::size_t locations_examined = 0;
  std::vector<LocationReport> entries;
};

struct Decision {
  bool reject = false;
  double g = kNegativeInfinity;
  double threshold = 0.0;
  std::size_t locations = 0;
  std::optional<LocationReport> worst;
};

// Token-index range [begin, end) of a file.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = std::numeric_limits<std::size_t>::max();
};

// A suggestion target that does not resolve to a suggestible token.
class TargetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file with its streams encoded for scoring.
struct PreparedFile {
  const SourceFile* file = nullptr;
  std::vector<std::string> names;
  std::vector<std::string> format;
  LanguageScorer::Encoded name_ids;
  LanguageScorer::Encoded format_ids;
  // Naming stream in the local model's ids (context index lookups).
  std::vector<WordId> local_name_ids;
  std::vector<std::size_t> line_starts;

  // 1-based line and column of a byte offset.
  std::pair<std::size_t, std::size_t> LineColumn(std::size_t offset) const;
};

class Engine {
 public:
  // `global_names`, when given, is mixed into naming scores with weight
  // config.lambda.
  Engine(const ConventionModel& model, SuggestConfig config = {},
         const NGramModel* global_names = nullptr);

  const ConventionModel& model() const { return *model_; }
  const SuggestConfig& config() const { return config_; }
  void set_config(const SuggestConfig& config);
  const LanguageScorer& name_scorer() const { return name_scorer_; }
  const LanguageScorer& format_scorer() const { return format_scorer_; }

  PreparedFile Prepare(const SourceFile& file) const;

  // One identifier group; the focus is its occurrences inside `region`.
  // Throws std::invalid_argument if none are.
  LocationReport EvaluateGroup(PreparedFile& prepared, std::size_t group,
                               TokenRange region = {}) const;
  LocationReport EvaluateWhitespace(PreparedFile& prepared,
                                    std::size_t format_index) const;

  // Resolves an identifier name (first group with that name) or a
  // "line:col" position. Throws TargetError.
  LocationReport SuggestTarget(PreparedFile& prepared, std::string_view target) const;

  // Identifier groups of `region` ranked by normalized improvement; only
  // locations with a concrete better alternative, at most k entries.
  StyleProfile Profile(PreparedFile& prepared, TokenRange region, int k) const;

  // G = max over the region's locations of their top_gap; reject iff G > T.
  // T = -inf rejects unconditionally.
  Decision Decide(PreparedFile& prepared, TokenRange region, DecisionMode mode,
                  double threshold) const;

  // Groups with at least one occurrence in `region`, and whitespace format
  // indices between tokens of `region`.
  std::vector<std::size_t> GroupsIn(const SourceFile& file, TokenRange region) const;
  std::vector<std::size_t> WhitespaceIn(const SourceFile& file, TokenRange region) const;

 private:
  const ConventionModel* model_;
  SuggestConfig config_;
  LanguageScorer name_scorer_;
  LanguageScorer format_scorer_;
};

}  // namespace convlearn

#endif  // CONVLEARN_SUGGEST_ENGINE_H_
