#include "convlearn/propose/proposers.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "convlearn/lexer/code_lexer.h"

namespace convlearn {
namespace {

std::string TokenLexeme(const FormatToken& t, int column_bucket) {
  return t.collapsed_class + "/" + std::to_string(t.size_bucket) + "/" +
         std::to_string(column_bucket);
}

// True if the two tokens would not lex back as themselves with nothing
// between them.
bool WouldFuse(std::string_view left, std::string_view right,
               const LanguageProfile& profile) {
  const std::string joined = std::string(left) + std::string(right);
  try {
    const auto tokens = LexCode(joined, profile).tokens;
    return tokens.size() != 2 || tokens[0].lexeme != left || tokens[1].lexeme != right;
  } catch (const LexError&) {
    return true;
  }
}

}  // namespace

CandidateSet ProposeNames(std::span<const std::string> lexemes,
                          std::span<const WordId> ids,
                          std::span<const std::size_t> focus,
                          const ContextIndex& index, const Vocabulary& vocab,
                          const std::set<std::string, std::less<>>& forbidden,
                          const NameProposalOptions& options) {
  if (focus.empty()) throw std::invalid_argument("snippet has no focus");
  if (lexemes.size() != ids.size()) throw std::invalid_argument("stream size mismatch");
  const std::string& v = lexemes[focus.front()];
  for (std::size_t p : focus) {
    if (p >= lexemes.size() || lexemes[p] != v) {
      throw std::invalid_argument("focus positions do not all hold '" + v + "'");
    }
  }

  std::map<WordId, std::uint64_t> fillers;
  for (std::size_t p : focus) index.CollectFillers(ids, p, fillers);

  const auto make = [&](std::string lexeme, std::uint64_t frequency) {
    Candidate c;
    c.keeps_original = lexeme == v;
    c.frequency = frequency;
    for (std::size_t p : focus) c.edits.push_back({p, lexeme});
    c.lexeme = std::move(lexeme);
    return c;
  };

  CandidateSet set;
  set.original = v;
  Candidate unk = make(std::string(kUnkLexeme), vocab.Count(kUnkId));
  unk.is_unk = true;
  unk.keeps_original = false;
  set.candidates.push_back(std::move(unk));

  std::vector<Candidate> alternatives;
  for (const auto& [id, count] : fillers) {
    if (id == kUnkId || id == kBosId || id >= vocab.size()) continue;
    const std::string& lexeme = vocab.Lexeme(id);
    if (lexeme != v && forbidden.count(lexeme)) continue;
    alternatives.push_back(make(lexeme, vocab.Count(id)));
  }
  std::sort(alternatives.begin(), alternatives.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return a.lexeme < b.lexeme;
            });
  if (alternatives.size() > options.max_alternatives) {
    alternatives.resize(options.max_alternatives);
  }
  for (auto& c : alternatives) set.candidates.push_back(std::move(c));
  return set;
}

Snippet NameSnippet(const SourceFile& file, std::size_t group, int order) {
  const IdentifierGroup& g = file.scopes.groups().at(group);
  Snippet s;
  s.origin = file.path;
  s.focus = g.occurrences;
  s.begin = g.first();
  s.end = std::min(g.last() + static_cast<std::size_t>(order), file.tokens.size());
  s.bytes = {file.tokens[s.begin].span.begin, file.tokens[s.end - 1].span.end};
  return s;
}

std::set<std::string, std::less<>> NamesInScope(const SourceFile& file,
                                                std::size_t group) {
  const IdentifierGroup& g = file.scopes.groups().at(group);
  const ScopeRegion& region = file.scopes.regions().at(g.region);
  std::set<std::string, std::less<>> names;
  for (std::size_t i = region.begin; i < region.end && i < file.tokens.size(); ++i) {
    const Token& t = file.tokens[i];
    if (t.is_identifier() && t.lexeme != g.lexeme) names.insert(t.lexeme);
  }
  return names;
}

CandidateSet ProposeFormatting(std::span<const FormatToken> tokens,
                               std::size_t focus, const Vocabulary& vocab,
                               int bucket_size, std::string_view source,
                               const LanguageProfile& profile) {
  if (focus >= tokens.size() || !tokens[focus].is_whitespace()) {
    throw std::invalid_argument("formatting focus is not a whitespace token");
  }
  const FormatToken& w = tokens[focus];
  const bool indent_family = w.kind == FormatKind::kIndent;

  // Code tokens whose column moves with this whitespace.
  std::vector<std::size_t> same_line;
  if (focus + 1 < tokens.size()) {
    const int line = tokens[focus + 1].line;
    for (std::size_t j = focus + 1; j < tokens.size() && tokens[j].line == line; j += 2) {
      same_line.push_back(j);
    }
  }
  std::size_t next_indent = tokens.size();
  if (indent_family) {
    for (std::size_t g = focus + 2; g < tokens.size(); g += 2) {
      if (tokens[g].kind == FormatKind::kIndent) {
        next_indent = g;
        break;
      }
    }
  }
  const bool fusable = w.kind == FormatKind::kSpace && w.space_count > 0 &&
                       w.gap == w.span && focus >= 1 && focus + 1 < tokens.size();

  CandidateSet set;
  set.original = w.Lexeme();
  for (WordId id = 2; id < vocab.size(); ++id) {
    const std::string& lexeme = vocab.Lexeme(id);
    const auto parsed = ParseWhitespaceLexeme(lexeme);
    if (!parsed || (parsed->kind == FormatKind::kIndent) != indent_family) continue;

    int shift = 0;
    if (indent_family) {
      const int target = w.previous_indent + parsed->delta;
      if (target < 0 || (parsed->uses_tabs && target == 0)) continue;
      shift = target - w.indent;
    } else {
      if (parsed->space_count == 0 && fusable) {
        const auto& left = tokens[focus - 1].span;
        const auto& right = tokens[focus + 1].span;
        if (WouldFuse(source.substr(left.begin, left.size()),
                      source.substr(right.begin, right.size()), profile)) {
          continue;
        }
      }
      shift = parsed->space_count - w.space_count;
    }

    Candidate c;
    c.lexeme = lexeme;
    c.keeps_original = lexeme == set.original;
    c.frequency = vocab.Count(id);
    c.edits.push_back({focus, lexeme});
    if (shift != 0) {
      for (std::size_t j : same_line) {
        const int bucket = (tokens[j].column + shift) / bucket_size;
        if (bucket != tokens[j].column_bucket) {
          c.edits.push_back({j, TokenLexeme(tokens[j], bucket)});
        }
      }
      if (next_indent < tokens.size()) {
        FormatToken adjusted = tokens[next_indent];
        adjusted.delta -= shift;
        c.edits.push_back({next_indent, adjusted.Lexeme()});
      }
    }
    set.candidates.push_back(std::move(c));
  }
  return set;
}

Snippet FormatSnippet(const SourceFile& file, std::size_t focus,
                      const CandidateSet& candidates, int order) {
  std::size_t lo = focus;
  std::size_t hi = focus;
  for (const auto& c : candidates.candidates) {
    for (const auto& e : c.edits) {
      lo = std::min(lo, e.position);
      hi = std::max(hi, e.position);
    }
  }
  Snippet s;
  s.origin = file.path;
  s.focus = {focus};
  s.begin = lo;
  s.end = std::min(hi + static_cast<std::size_t>(order), file.format.size());
  s.bytes = {file.format[s.begin].span.begin, file.format[s.end - 1].span.end};
  return s;
}

std::vector<FormatToken> ApplyFormattingEdits(std::span<const FormatToken> tokens,
                                              std::span<const Edit> edits) {
  std::vector<FormatToken> out(tokens.begin(), tokens.end());
  for (const Edit& e : edits) {
    FormatToken& t = out.at(e.position);
    if (t.is_whitespace()) {
      const auto parsed = ParseWhitespaceLexeme(e.lexeme);
      if (!parsed) throw std::invalid_argument("not a whitespace lexeme: " + e.lexeme);
      t.kind = parsed->kind;
      t.space_count = parsed->space_count;
      t.uses_tabs = parsed->uses_tabs;
      t.delta = parsed->delta;
      t.newline_count = parsed->newline_count;
    } else {
      const auto last = e.lexeme.rfind('/');
      const auto middle = last == std::string::npos || last == 0
                              ? std::string::npos
                              : e.lexeme.rfind('/', last - 1);
      if (middle == std::string::npos ||
          e.lexeme.substr(0, middle) != t.collapsed_class) {
        throw std::invalid_argument("edit changes a code token: " + e.lexeme);
      }
      t.size_bucket = std::stoi(e.lexeme.substr(middle + 1, last - middle - 1));
      t.column_bucket = std::stoi(e.lexeme.substr(last + 1));
    }
  }
  return out;
}

std::string ApplyNameEdits(const SourceFile& file, std::span<const Edit> edits) {
  std::vector<Edit> sorted(edits.begin(), edits.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Edit& a, const Edit& b) { return a.position < b.position; });
  std::string out;
  std::size_t at = 0;
  for (const Edit& e : sorted) {
    const ByteSpan span = file.tokens.at(e.position).span;
    if (span.begin < at) throw std::invalid_argument("overlapping edits");
    out.append(file.text, at, span.begin - at);
    out.append(e.lexeme);
    at = span.end;
  }
  out.append(file.text, at, std::string::npos);
  return out;
}

std::vector<std::string> ApplyEdits(std::span<const std::string> lexemes,
                                    std::span<const Edit> edits) {
  std::vector<std::string> out(lexemes.begin(), lexemes.end());
  for (const Edit& e : edits) out.at(e.position) = e.lexeme;
  return out;
}

}  // namespace convlearn
