#ifndef CONVLEARN_NGRAM_SCORE_H_
#define CONVLEARN_NGRAM_SCORE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "convlearn/ngram/ngram_model.h"

namespace convlearn {

// P(ids[i] | preceding ids), padding the start of `ids` with start markers.
double TokenProb(const NGramModel& model, std::span<const WordId> ids,
                 std::size_t i);

// log P(ids[i] | preceding ids), padding the start of `ids` with start markers.
double TokenLogProb(const NGramModel& model, std::span<const WordId> ids,
                    std::size_t i);

// Sum of TokenLogProb over positions [begin, end).
double LogProbRange(const NGramModel& model, std::span<const WordId> ids,
                    std::size_t begin, std::size_t end);

// Mean natural-log probability per token, s(y) = log P(y) / N.
// Throws std::invalid_argument on an empty sequence.
double Score(const NGramModel& model, std::span<const WordId> ids);

// g(y, z) = s(y) - s(z).
double Gap(const NGramModel& model, std::span<const WordId> y,
           std::span<const WordId> z);

struct GapStats {
  std::size_t windows_examined = 0;
  bool fell_back = false;
};

// Same value as Gap() when y and z have equal length and differ only at
// `diff_locations`, computed from the n-gram windows touching those
// positions. Any other input is scored in full.
double GapFast(const NGramModel& model, std::span<const WordId> y,
               std::span<const WordId> z,
               std::span<const std::size_t> diff_locations,
               GapStats* stats = nullptr);

// Positions whose n-gram window (ending there) contains one of `locations`,
// clipped to [0, length). Sorted, unique.
std::vector<std::size_t> AffectedPositions(std::span<const std::size_t> locations,
                                           int order, std::size_t length);

// Interpolation of a global and a project-local model. Each component maps
// lexemes through its own vocabulary.
class CrossProjectModel {
 public:
  // Throws std::invalid_argument unless 0 <= lambda <= 1.
  CrossProjectModel(const NGramModel& global, const NGramModel& local,
                    double lambda = 0.5);

  const NGramModel& global() const { return *global_; }
  const NGramModel& local() const { return *local_; }
  double lambda() const { return lambda_; }

  // log(lambda P_G(w_i|h) + (1 - lambda) P_A(w_i|h)) for each i in
  // [begin, end), summed.
  double LogProbRange(std::span<const std::string> lexemes, std::size_t begin,
                      std::size_t end) const;

 private:
  const NGramModel* global_;
  const NGramModel* local_;
  double lambda_;
};

double ScoreCrossProject(const CrossProjectModel& model,
                         std::span<const std::string> lexemes);

}  // namespace convlearn

#endif  // CONVLEARN_NGRAM_SCORE_H_
