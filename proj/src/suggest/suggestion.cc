#include "convlearn/suggest/suggestion.h"

#include <algorithm>
#include <stdexcept>

#include "convlearn/ngram/score.h"

namespace convlearn {

void RankCandidates(std::vector<ScoredCandidate>& candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ScoredCandidate& a, const ScoredCandidate& b) {
                     if (a.log_ratio != b.log_ratio) return a.log_ratio > b.log_ratio;
                     if (a.candidate.frequency != b.candidate.frequency) {
                       return a.candidate.frequency > b.candidate.frequency;
                     }
                     return a.candidate.lexeme < b.candidate.lexeme;
                   });
}

ScoredSet ScoreCandidates(const LanguageScorer& scorer,
                          LanguageScorer::Encoded& stream,
                          std::span<const std::string> lexemes,
                          const Snippet& snippet, const CandidateSet& set,
                          std::uint64_t original_frequency) {
  if (snippet.end <= snippet.begin || snippet.end > stream.size()) {
    throw std::invalid_argument("snippet range outside the stream");
  }
  const std::size_t length = snippet.length();
  std::vector<double> base(length);
  double base_sum = 0;
  for (std::size_t i = 0; i < length; ++i) {
    base[i] = scorer.LogProbAt(stream, snippet.begin + i);
    base_sum += base[i];
  }
  const auto base_at = [&](std::size_t p) {
    return p >= snippet.begin && p < snippet.end ? base[p - snippet.begin]
                                                 : scorer.LogProbAt(stream, p);
  };

  ScoredSet out;
  out.original_score = base_sum / static_cast<double>(length);
  bool has_original = false;
  for (const Candidate& c : set.candidates) {
    // Only edits that change an encoded id move any probability.
    std::vector<std::size_t> changed;
    for (const Edit& e : c.edits) {
      const bool differs =
          scorer.primary().vocab().Lookup(e.lexeme) != stream.primary[e.position] ||
          (scorer.is_mixture() && lexemes[e.position] != e.lexeme);
      if (differs) changed.push_back(e.position);
    }
    ScoredCandidate sc;
    sc.candidate = c;
    if (!changed.empty()) {
      const auto positions = AffectedPositions(changed, scorer.order(), stream.size());
      double before = 0;
      for (std::size_t p : positions) before += base_at(p);
      const double after = scorer.LogProbWithEdits(stream, c.edits, positions);
      sc.log_ratio = after - before;
    }
    sc.gap = sc.log_ratio / static_cast<double>(length);
    sc.score = out.original_score + sc.gap;
    has_original = has_original || c.keeps_original;
    out.ranked.push_back(std::move(sc));
  }
  if (!has_original) {
    ScoredCandidate x;
    x.candidate.lexeme = set.original;
    x.candidate.keeps_original = true;
    x.candidate.frequency = original_frequency;
    x.score = out.original_score;
    out.ranked.push_back(std::move(x));
  }
  RankCandidates(out.ranked);
  return out;
}

bool HasConcreteWinner(std::span<const ScoredCandidate> ranked) {
  return !ranked.empty() && !ranked.front().candidate.keeps_original &&
         !ranked.front().candidate.is_unk;
}

std::vector<Suggestion> SelectSuggestions(std::span<const ScoredCandidate> ranked,
                                          int k, double t) {
  std::vector<Suggestion> out;
  if (!HasConcreteWinner(ranked)) return out;
  for (std::size_t i = 0; i < ranked.size() && static_cast<int>(i) < k; ++i) {
    const ScoredCandidate& c = ranked[i];
    if (!(c.gap >= t)) continue;
    Suggestion s;
    s.lexeme = c.candidate.lexeme;
    s.keep = c.candidate.keeps_original || c.candidate.is_unk;
    s.score = c.score;
    s.gap = c.gap;
    s.rank = static_cast<int>(i) + 1;
    s.edits = c.candidate.edits;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace convlearn
