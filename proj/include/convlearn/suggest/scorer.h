#ifndef CONVLEARN_SUGGEST_SCORER_H_
#define CONVLEARN_SUGGEST_SCORER_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "convlearn/ngram/ngram_model.h"
#include "convlearn/ngram/score.h"
#include "convlearn/propose/candidate.h"

namespace convlearn {

// Scores lexeme streams under one model or a global/local mixture. A stream
// is encoded once per component; candidate edits are patched in and out.
class LanguageScorer {
 public:
  explicit LanguageScorer(const NGramModel& model);
  LanguageScorer(const NGramModel& global, const NGramModel& local, double lambda);

  struct Encoded {
    std::vector<WordId> primary;
    std::vector<WordId> secondary;  // mixture only
    std::size_t size() const { return primary.size(); }
  };

  int order() const { return order_; }
  bool is_mixture() const { return secondary_ != nullptr; }
  const NGramModel& primary() const { return *primary_; }

  Encoded Encode(std::span<const std::string> lexemes) const;
  double LogProbAt(const Encoded& stream, std::size_t i) const;
  double LogProbRange(const Encoded& stream, std::size_t begin, std::size_t end) const;

  // Sum over `positions` of log P with `edits` applied. `stream` is restored
  // before returning.
  double LogProbWithEdits(Encoded& stream, std::span<const Edit> edits,
                          std::span<const std::size_t> positions) const;

 private:
  const NGramModel* primary_;
  const NGramModel* secondary_ = nullptr;
  double lambda_ = 1.0;
  int order_;
};

}  // namespace convlearn

#endif  // CONVLEARN_SUGGEST_SCORER_H_
