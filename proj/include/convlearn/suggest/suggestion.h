#ifndef CONVLEARN_SUGGEST_SUGGESTION_H_
#define CONVLEARN_SUGGEST_SUGGESTION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "convlearn/propose/candidate.h"
#include "convlearn/suggest/scorer.h"

namespace convlearn {

struct ScoredCandidate {
  Candidate candidate;
  // s(c): mean log-probability over the snippet's scored range.
  double score = 0.0;
  // g(c, x) = s(c) - s(x).
  double gap = 0.0;
  // Sum of log-probability differences over the windows the edits touch,
  // i.e. gap * snippet length.
  double log_ratio = 0.0;
};

struct ScoredSet {
  double original_score = 0.0;
  std::vector<ScoredCandidate> ranked;
};

// Scores every candidate against the snippet as it currently stands in
// `stream`, adding the current snippet itself (gap 0) when no candidate keeps
// it. Only the n-gram windows touched by a candidate's edits are evaluated.
// Ranked by score, then training frequency (descending), then lexeme.
ScoredSet ScoreCandidates(const LanguageScorer& scorer,
                          LanguageScorer::Encoded& stream,
                          std::span<const std::string> lexemes,
                          const Snippet& snippet, const CandidateSet& set,
                          std::uint64_t original_frequency);

void RankCandidates(std::vector<ScoredCandidate>& candidates);

struct Suggestion {
  std::string lexeme;
  // UNK or the current lexeme: rendered as "keep".
  bool keep = false;
  double score = 0.0;
  double gap = 0.0;
  int rank = 0;
  std::vector<Edit> edits;
};

// The suggest rule: if the top candidate is the current snippet or UNK,
// abstain (empty list); otherwise the first k candidates with gap >= t.
std::vector<Suggestion> SelectSuggestions(std::span<const ScoredCandidate> ranked,
                                          int k, double t);

// True if the top candidate is a concrete alternative.
bool HasConcreteWinner(std::span<const ScoredCandidate> ranked);

}  // namespace convlearn

#endif  // CONVLEARN_SUGGEST_SUGGESTION_H_
