#ifndef CONVLEARN_SUGGEST_CONFIG_H_
#define CONVLEARN_SUGGEST_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "convlearn/lexer/format_lexer.h"
#include "convlearn/ngram/ngram_model.h"
#include "convlearn/propose/proposers.h"

namespace convlearn {

// How profile() normalizes a location's improvement.
enum class Normalization {
  kContexts,     // divide by |C_v|, the number of n-gram windows touched
  kOccurrences,  // divide by the number of occurrences
};

// Which locations decide() and calibrate() consider.
enum class DecisionMode { kNames, kFormat, kBoth };

std::string_view DecisionModeName(DecisionMode mode);
// Throws std::invalid_argument.
DecisionMode ParseDecisionMode(std::string_view text);
std::string_view NormalizationName(Normalization n);
Normalization ParseNormalization(std::string_view text);

struct SuggestConfig {
  int k = 5;
  // Minimum gap for a suggestion to be shown.
  double t = 0.0;
  // Rejection threshold; unset until calibrated or given.
  std::optional<double> threshold;
  double alpha = 0.05;
  double lambda = 0.5;
  std::size_t max_alternatives = kDefaultMaxAlternatives;
  Normalization normalization = Normalization::kContexts;

  // Throws std::invalid_argument on out-of-range values.
  void Validate() const;
};

// Parameters fixed at training time.
struct TrainConfig {
  int order = kDefaultOrder;
  int format_order = kDefaultOrder;
  int bucket_size = kDefaultBucketSize;
  int min_count = kDefaultMinCount;
  int discount_cutoff = kDefaultDiscountCutoff;

  void Validate() const;
  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

inline constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();
inline constexpr double kPositiveInfinity = std::numeric_limits<double>::infinity();

}  // namespace convlearn

#endif  // CONVLEARN_SUGGEST_CONFIG_H_
