#include "convlearn/eval/protocols.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "convlearn/propose/proposers.h"

namespace convlearn {
namespace {

std::vector<std::string> ConcreteRanking(const ScoredSet& scored, double& confidence) {
  std::vector<std::string> out;
  confidence = kNegativeInfinity;
  for (const ScoredCandidate& c : scored.ranked) {
    if (c.candidate.is_unk || c.candidate.edits.empty()) continue;
    if (out.empty()) confidence = c.gap;
    out.push_back(c.candidate.lexeme);
  }
  return out;
}

void Hide(LanguageScorer::Encoded& stream, std::vector<std::string>& lexemes,
          std::span<const std::size_t> focus) {
  for (std::size_t p : focus) {
    stream.primary[p] = kUnkId;
    if (!stream.secondary.empty()) stream.secondary[p] = kUnkId;
    lexemes[p] = std::string(kUnkLexeme);
  }
}

void DropUnknown(CandidateSet& set) {
  std::erase_if(set.candidates, [](const Candidate& c) { return c.is_unk; });
  for (Candidate& c : set.candidates) c.keeps_original = false;
  set.original = std::string(kUnkLexeme);
}

}  // namespace

int HiddenPrediction::RankOfOriginal() const {
  const auto it = std::find(ranked.begin(), ranked.end(), original);
  return it == ranked.end() ? 0 : static_cast<int>(it - ranked.begin()) + 1;
}

HiddenPrediction PredictHiddenName(const Engine& engine, PreparedFile& prepared,
                                   std::size_t group) {
  const SourceFile& file = *prepared.file;
  const ConventionModel& model = engine.model();
  const IdentifierGroup& g = file.scopes.groups().at(group);
  const Snippet snippet = NameSnippet(file, group, engine.name_scorer().order());

  NameProposalOptions options;
  options.max_alternatives = engine.config().max_alternatives;
  CandidateSet set = ProposeNames(prepared.names, prepared.local_name_ids, g.occurrences,
                                  model.contexts(), model.names().vocab(),
                                  NamesInScope(file, group), options);
  DropUnknown(set);

  LanguageScorer::Encoded hidden = prepared.name_ids;
  std::vector<std::string> lexemes = prepared.names;
  Hide(hidden, lexemes, g.occurrences);
  const ScoredSet scored =
      ScoreCandidates(engine.name_scorer(), hidden, lexemes, snippet, set, 0);

  HiddenPrediction out;
  out.original = g.lexeme;
  out.category = CategorizeIdentifier(file.tokens, g.first());
  out.ranked = ConcreteRanking(scored, out.confidence);
  return out;
}

HiddenPrediction PredictHiddenWhitespace(const Engine& engine, PreparedFile& prepared,
                                         std::size_t format_index) {
  const SourceFile& file = *prepared.file;
  const ConventionModel& model = engine.model();
  CandidateSet set =
      ProposeFormatting(file.format, format_index, model.format().vocab(),
                        model.config().bucket_size, file.text, model.profile());
  const Snippet snippet =
      FormatSnippet(file, format_index, set, engine.format_scorer().order());
  DropUnknown(set);

  LanguageScorer::Encoded hidden = prepared.format_ids;
  std::vector<std::string> lexemes = prepared.format;
  const std::size_t focus[] = {format_index};
  Hide(hidden, lexemes, focus);
  const ScoredSet scored =
      ScoreCandidates(engine.format_scorer(), hidden, lexemes, snippet, set, 0);

  HiddenPrediction out;
  out.original = prepared.format[format_index];
  out.ranked = ConcreteRanking(scored, out.confidence);
  return out;
}

std::vector<CurvePoint> AccuracyAtFrequency(std::span<const PredictionEvent> events, int k,
                                            std::span<const double> frequencies) {
  std::vector<std::size_t> order(events.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return events[a].confidence > events[b].confidence;
  });
  std::vector<CurvePoint> out;
  for (double f : frequencies) {
    CurvePoint point;
    point.frequency = f;
    const double wanted = std::ceil(f * static_cast<double>(events.size()) - 1e-9);
    point.suggested = static_cast<std::size_t>(
        std::clamp(wanted, 0.0, static_cast<double>(events.size())));
    point.threshold = kPositiveInfinity;
    for (std::size_t i = 0; i < point.suggested; ++i) {
      const PredictionEvent& e = events[order[i]];
      if (e.rank >= 1 && e.rank <= k) ++point.correct;
      point.threshold = e.confidence;
    }
    point.accuracy = point.suggested == 0 ? 0.0
                                          : static_cast<double>(point.correct) /
                                                static_cast<double>(point.suggested);
    out.push_back(point);
  }
  return out;
}

FileSpread PerFileAccuracy(std::span<const PredictionEvent> events, int k) {
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> per_file;  // correct, total
  for (const PredictionEvent& e : events) {
    auto& [correct, total] = per_file[e.file];
    if (e.rank >= 1 && e.rank <= k) ++correct;
    ++total;
  }
  std::vector<double> accuracy;
  for (const auto& [file, counts] : per_file) {
    accuracy.push_back(static_cast<double>(counts.first) / static_cast<double>(counts.second));
  }
  FileSpread spread;
  spread.files = accuracy.size();
  if (accuracy.empty()) return spread;
  std::sort(accuracy.begin(), accuracy.end());
  // Linear interpolation between order statistics.
  const auto quantile = [&](double q) {
    const double at = q * static_cast<double>(accuracy.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(at));
    const std::size_t hi = std::min(lo + 1, accuracy.size() - 1);
    return accuracy[lo] + (at - static_cast<double>(lo)) * (accuracy[hi] - accuracy[lo]);
  };
  spread.q1 = quantile(0.25);
  spread.median = quantile(0.5);
  spread.q3 = quantile(0.75);
  return spread;
}

ConventionModel TrainExcluding(std::span<const SourceFile> files,
                               const std::vector<bool>& held_out,
                               const LanguageProfile& profile, const TrainConfig& config) {
  std::vector<SourceFile> training;
  std::vector<std::string> paths;
  std::vector<std::string> all_paths;
  for (std::size_t i = 0; i < files.size(); ++i) {
    all_paths.push_back(files[i].path);
    if (i < held_out.size() && held_out[i]) continue;
    training.push_back(files[i]);
    paths.push_back(files[i].path);
  }
  ConventionModel model = ConventionModel::Train(training, profile, config);
  if (model.training_hash() != HashFileList(paths) ||
      (paths.size() != all_paths.size() && model.training_hash() == HashFileList(all_paths))) {
    throw std::logic_error("training list does not exclude the held-out files");
  }
  return model;
}

ConventionModel TrainLeaveOneOut(std::span<const SourceFile> files, std::size_t held_out,
                                 const LanguageProfile& profile, const TrainConfig& config) {
  std::vector<bool> mask(files.size(), false);
  mask.at(held_out) = true;
  return TrainExcluding(files, mask, profile, config);
}

std::set<std::string, std::less<>> IdentifiersOf(std::span<const SourceFile> files) {
  std::set<std::string, std::less<>> out;
  for (const SourceFile& f : files) {
    for (const Token& t : f.tokens) {
      if (t.is_identifier()) out.insert(t.lexeme);
    }
  }
  return out;
}

SourceFile RenameGroup(const ConventionModel& model, const SourceFile& file,
                       std::size_t group, const std::string& name) {
  std::vector<Edit> edits;
  for (std::size_t p : file.scopes.groups().at(group).occurrences) edits.push_back({p, name});
  return model.Analyze(file.path, ApplyNameEdits(file, edits));
}

std::optional<SourceFile> PerturbWhitespace(const ConventionModel& model,
                                            const SourceFile& file,
                                            std::size_t format_index, std::mt19937_64& rng) {
  const CandidateSet set =
      ProposeFormatting(file.format, format_index, model.format().vocab(),
                        model.config().bucket_size, file.text, model.profile());
  std::vector<const Candidate*> options;
  for (const Candidate& c : set.candidates) {
    if (!c.keeps_original) options.push_back(&c);
  }
  if (options.empty()) return std::nullopt;
  const Candidate& pick =
      *options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
  const auto edited = ApplyFormattingEdits(file.format, pick.edits);
  std::string text = DetokenizeFormatting(edited, file.text, model.profile());
  if (text == file.text) return std::nullopt;
  return model.Analyze(file.path, std::move(text));
}

}  // namespace convlearn
