#include "convlearn/suggest/config.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace convlearn {

std::string_view DecisionModeName(DecisionMode mode) {
  switch (mode) {
    case DecisionMode::kNames:
      return "names";
    case DecisionMode::kFormat:
      return "format";
    case DecisionMode::kBoth:
      return "both";
  }
  return "both";
}

DecisionMode ParseDecisionMode(std::string_view text) {
  if (text == "names") return DecisionMode::kNames;
  if (text == "format") return DecisionMode::kFormat;
  if (text == "both") return DecisionMode::kBoth;
  throw std::invalid_argument("mode must be names, format or both, got '" +
                              std::string(text) + "'");
}

std::string_view NormalizationName(Normalization n) {
  return n == Normalization::kContexts ? "contexts" : "occurrences";
}

Normalization ParseNormalization(std::string_view text) {
  if (text == "contexts") return Normalization::kContexts;
  if (text == "occurrences") return Normalization::kOccurrences;
  throw std::invalid_argument("normalization must be contexts or occurrences");
}

void SuggestConfig::Validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (std::isnan(t)) throw std::invalid_argument("t must be a number");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in (0, 1]");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must be in [0, 1]");
  }
  if (max_alternatives < 1) throw std::invalid_argument("max_alternatives must be >= 1");
  if (threshold && std::isnan(*threshold)) throw std::invalid_argument("threshold is NaN");
}

void TrainConfig::Validate() const {
  if (order < 1 || order > kMaxOrder || format_order < 1 || format_order > kMaxOrder) {
    throw std::invalid_argument("n must be in [1, " + std::to_string(kMaxOrder) + "]");
  }
  if (bucket_size < 1) throw std::invalid_argument("q must be >= 1");
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
  if (discount_cutoff < 0) throw std::invalid_argument("discount cutoff must be >= 0");
}

}  // namespace convlearn
