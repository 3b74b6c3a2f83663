#include "convlearn/suggest/engine.h"

#include <algorithm>
#include <charconv>

#include "convlearn/ngram/score.h"
#include "convlearn/propose/proposers.h"

namespace convlearn {
namespace {

LanguageScorer MakeNameScorer(const ConventionModel& model, const SuggestConfig& config,
                              const NGramModel* global) {
  if (global) return LanguageScorer(*global, model.names(), config.lambda);
  return LanguageScorer(model.names());
}

std::uint64_t FrequencyOf(const Vocabulary& vocab, std::string_view lexeme) {
  return vocab.Contains(lexeme) ? vocab.Count(vocab.Lookup(lexeme)) : 0;
}

bool ParseLineColumn(std::string_view target, std::size_t& line, std::size_t& column) {
  const auto colon = target.find(':');
  if (colon == std::string_view::npos) return false;
  const auto parse = [](std::string_view s, std::size_t& v) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size() && v >= 1;
  };
  return parse(target.substr(0, colon), line) && parse(target.substr(colon + 1), column);
}

}  // namespace

std::string_view LocationKindName(LocationKind kind) {
  return kind == LocationKind::kName ? "name" : "format";
}

std::pair<std::size_t, std::size_t> PreparedFile::LineColumn(std::size_t offset) const {
  const auto it = std::upper_bound(line_starts.begin(), line_starts.end(), offset);
  const std::size_t line = static_cast<std::size_t>(it - line_starts.begin());
  return {line, offset - line_starts[line - 1] + 1};
}

Engine::Engine(const ConventionModel& model, SuggestConfig config,
               const NGramModel* global_names)
    : model_(&model),
      config_(config),
      name_scorer_(MakeNameScorer(model, config, global_names)),
      format_scorer_(model.format()) {
  config_.Validate();
}

void Engine::set_config(const SuggestConfig& config) {
  config.Validate();
  if (config.lambda != config_.lambda && name_scorer_.is_mixture()) {
    name_scorer_ = LanguageScorer(name_scorer_.primary(), model_->names(), config.lambda);
  }
  config_ = config;
}

PreparedFile Engine::Prepare(const SourceFile& file) const {
  PreparedFile p;
  p.file = &file;
  p.names = file.NameStream();
  p.format = file.FormatStream();
  p.name_ids = name_scorer_.Encode(p.names);
  p.format_ids = format_scorer_.Encode(p.format);
  p.local_name_ids = model_->names().vocab().Encode(p.names);
  p.line_starts.push_back(0);
  for (std::size_t i = 0; i < file.text.size(); ++i) {
    if (file.text[i] == '\n') p.line_starts.push_back(i + 1);
  }
  return p;
}

LocationReport Engine::EvaluateGroup(PreparedFile& prepared, std::size_t group,
                                     TokenRange region) const {
  const SourceFile& file = *prepared.file;
  const IdentifierGroup& g = file.scopes.groups().at(group);
  std::vector<std::size_t> focus;
  for (std::size_t p : g.occurrences) {
    if (p >= region.begin && p < region.end) focus.push_back(p);
  }
  if (focus.empty()) throw std::invalid_argument("group has no occurrence in the region");

  LocationReport report;
  Location& loc = report.location;
  loc.kind = LocationKind::kName;
  loc.file = file.path;
  loc.position = focus.front();
  loc.bytes = file.tokens[focus.front()].span;
  std::tie(loc.line, loc.column) = prepared.LineColumn(loc.bytes.begin);
  loc.original = g.lexeme;
  loc.focus = focus;
  loc.group = static_cast<int>(group);
  loc.category = CategorizeIdentifier(file.tokens, focus.front());

  const int order = name_scorer_.order();
  Snippet& snippet = report.snippet;
  snippet.origin = file.path;
  snippet.focus = focus;
  snippet.begin = focus.front();
  snippet.end = std::min(focus.back() + static_cast<std::size_t>(order), file.tokens.size());
  snippet.bytes = {file.tokens[snippet.begin].span.begin,
                   file.tokens[snippet.end - 1].span.end};

  NameProposalOptions options;
  options.max_alternatives = config_.max_alternatives;
  const CandidateSet set =
      ProposeNames(prepared.names, prepared.local_name_ids, focus, model_->contexts(),
                   model_->names().vocab(), NamesInScope(file, group), options);
  report.scored = ScoreCandidates(name_scorer_, prepared.name_ids, prepared.names,
                                  snippet, set,
                                  FrequencyOf(model_->names().vocab(), g.lexeme));
  report.suggestions = SelectSuggestions(report.scored.ranked, config_.k, config_.t);
  report.contexts = AffectedPositions(focus, order, file.tokens.size()).size();
  if (HasConcreteWinner(report.scored.ranked)) {
    const ScoredCandidate& top = report.scored.ranked.front();
    report.top_gap = top.gap;
    const double norm = config_.normalization == Normalization::kContexts
                            ? static_cast<double>(report.contexts)
                            : static_cast<double>(focus.size());
    report.improvement = top.log_ratio / norm;
  }
  return report;
}

LocationReport Engine::EvaluateWhitespace(PreparedFile& prepared,
                                          std::size_t format_index) const {
  const SourceFile& file = *prepared.file;
  LocationReport report;
  Location& loc = report.location;
  const FormatToken& w = file.format.at(format_index);
  loc.kind = LocationKind::kFormat;
  loc.file = file.path;
  loc.position = format_index;
  loc.bytes = w.span;
  std::tie(loc.line, loc.column) = prepared.LineColumn(w.span.begin);
  loc.original = prepared.format[format_index];
  loc.focus = {format_index};

  const CandidateSet set =
      ProposeFormatting(file.format, format_index, model_->format().vocab(),
                        model_->config().bucket_size, file.text, model_->profile());
  report.snippet = FormatSnippet(file, format_index, set, format_scorer_.order());
  report.scored = ScoreCandidates(format_scorer_, prepared.format_ids, prepared.format,
                                  report.snippet, set,
                                  FrequencyOf(model_->format().vocab(), loc.original));
  report.suggestions = SelectSuggestions(report.scored.ranked, config_.k, config_.t);
  const std::size_t focus[] = {format_index};
  report.contexts =
      AffectedPositions(focus, format_scorer_.order(), file.format.size()).size();
  if (HasConcreteWinner(report.scored.ranked)) {
    const ScoredCandidate& top = report.scored.ranked.front();
    report.top_gap = top.gap;
    report.improvement = top.log_ratio / static_cast<double>(report.contexts);
  }
  return report;
}

LocationReport Engine::SuggestTarget(PreparedFile& prepared,
                                     std::string_view target) const {
  const SourceFile& file = *prepared.file;
  std::size_t line = 0;
  std::size_t column = 0;
  if (!ParseLineColumn(target, line, column)) {
    const auto groups = file.scopes.GroupsOf(target);
    if (groups.empty()) {
      throw TargetError("no identifier '" + std::string(target) + "' in " + file.path);
    }
    return EvaluateGroup(prepared, static_cast<std::size_t>(groups.front()));
  }
  if (line > prepared.line_starts.size()) throw TargetError("line out of range");
  const std::size_t offset = prepared.line_starts[line - 1] + column - 1;
  const std::size_t line_end = line < prepared.line_starts.size()
                                   ? prepared.line_starts[line]
                                   : file.text.size() + 1;
  if (offset >= line_end) throw TargetError("column out of range");
  for (std::size_t i = 0; i < file.tokens.size(); ++i) {
    const Token& t = file.tokens[i];
    if (offset < t.span.begin) break;
    if (t.span.Contains(offset)) {
      if (!t.is_identifier()) {
        throw TargetError("not a suggestible token: '" + t.lexeme + "' is a " +
                          std::string(TokenKindName(t.kind)));
      }
      return EvaluateGroup(prepared, static_cast<std::size_t>(file.scopes.GroupAt(i)));
    }
  }
  for (const auto& c : file.comments) {
    if (c.Contains(offset)) throw TargetError("not a suggestible token: inside a comment");
  }
  for (std::size_t f = 1; f < file.format.size(); f += 2) {
    const FormatToken& w = file.format[f];
    if (offset >= w.gap.begin && offset < w.gap.end) return EvaluateWhitespace(prepared, f);
  }
  throw TargetError("not a suggestible token at " + std::string(target));
}

std::vector<std::size_t> Engine::GroupsIn(const SourceFile& file, TokenRange region) const {
  std::vector<std::size_t> out;
  const auto& groups = file.scopes.groups();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& occ = groups[g].occurrences;
    const auto it = std::lower_bound(occ.begin(), occ.end(), region.begin);
    if (it != occ.end() && *it < region.end) out.push_back(g);
  }
  return out;
}

std::vector<std::size_t> Engine::WhitespaceIn(const SourceFile& file,
                                              TokenRange region) const {
  std::vector<std::size_t> out;
  const std::size_t end = std::min(region.end, file.tokens.size());
  for (std::size_t i = region.begin; i + 1 < end; ++i) out.push_back(2 * i + 1);
  return out;
}

StyleProfile Engine::Profile(PreparedFile& prepared, TokenRange region, int k) const {
  StyleProfile profile;
  for (std::size_t g : GroupsIn(*prepared.file, region)) {
    LocationReport r = EvaluateGroup(prepared, g, region);
    ++profile.locations_examined;
    if (r.improvement > 0.0) profile.entries.push_back(std::move(r));
  }
  std::stable_sort(profile.entries.begin(), profile.entries.end(),
                   [](const LocationReport& a, const LocationReport& b) {
                     if (a.improvement != b.improvement) return a.improvement > b.improvement;
                     return a.location.position < b.location.position;
                   });
  if (k >= 0 && profile.entries.size() > static_cast<std::size_t>(k)) {
    profile.entries.resize(static_cast<std::size_t>(k));
  }
  return profile;
}

Decision Engine::Decide(PreparedFile& prepared, TokenRange region, DecisionMode mode,
                        double threshold) const {
  Decision d;
  d.threshold = threshold;
  const auto consider = [&](LocationReport r) {
    ++d.locations;
    if (!d.worst || r.top_gap > d.g) {
      d.g = r.top_gap;
      d.worst = std::move(r);
    }
  };
  if (mode != DecisionMode::kFormat) {
    for (std::size_t g : GroupsIn(*prepared.file, region)) {
      consider(EvaluateGroup(prepared, g, region));
    }
  }
  if (mode != DecisionMode::kNames) {
    for (std::size_t f : WhitespaceIn(*prepared.file, region)) {
      consider(EvaluateWhitespace(prepared, f));
    }
  }
  d.reject = threshold == kNegativeInfinity || d.g > threshold;
  return d;
}

}  // namespace convlearn
