#include "convlearn/suggest/scorer.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace convlearn {

LanguageScorer::LanguageScorer(const NGramModel& model)
    : primary_(&model), order_(model.order()) {}

LanguageScorer::LanguageScorer(const NGramModel& global, const NGramModel& local,
                               double lambda)
    : primary_(&global),
      secondary_(&local),
      lambda_(lambda),
      order_(std::max(global.order(), local.order())) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must be in [0, 1]");
  }
}

LanguageScorer::Encoded LanguageScorer::Encode(
    std::span<const std::string> lexemes) const {
  Encoded e;
  e.primary = primary_->vocab().Encode(lexemes);
  if (secondary_) e.secondary = secondary_->vocab().Encode(lexemes);
  return e;
}

double LanguageScorer::LogProbAt(const Encoded& stream, std::size_t i) const {
  if (!secondary_) return TokenLogProb(*primary_, stream.primary, i);
  const double pg = TokenProb(*primary_, stream.primary, i);
  const double pa = TokenProb(*secondary_, stream.secondary, i);
  return std::log(lambda_ * pg + (1.0 - lambda_) * pa);
}

double LanguageScorer::LogProbRange(const Encoded& stream, std::size_t begin,
                                    std::size_t end) const {
  double sum = 0;
  for (std::size_t i = begin; i < end && i < stream.size(); ++i) sum += LogProbAt(stream, i);
  return sum;
}

double LanguageScorer::LogProbWithEdits(Encoded& stream, std::span<const Edit> edits,
                                        std::span<const std::size_t> positions) const {
  std::vector<std::pair<WordId, WordId>> saved;
  saved.reserve(edits.size());
  for (const Edit& e : edits) {
    saved.emplace_back(stream.primary[e.position],
                       secondary_ ? stream.secondary[e.position] : 0);
    stream.primary[e.position] = primary_->vocab().Lookup(e.lexeme);
    if (secondary_) stream.secondary[e.position] = secondary_->vocab().Lookup(e.lexeme);
  }
  double sum = 0;
  for (std::size_t p : positions) sum += LogProbAt(stream, p);
  for (std::size_t j = edits.size(); j-- > 0;) {
    stream.primary[edits[j].position] = saved[j].first;
    if (secondary_) stream.secondary[edits[j].position] = saved[j].second;
  }
  return sum;
}

}  // namespace convlearn
