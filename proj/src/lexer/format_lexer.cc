#include "convlearn/lexer/format_lexer.h"

#include <algorithm>
#include <charconv>

#include "convlearn/lexer/code_lexer.h"

namespace convlearn {
namespace {

std::string CollapsedClass(const Token& token) {
  switch (token.kind) {
    case TokenKind::kIdentifier:
      return "ID";
    case TokenKind::kLiteral:
      return "LIT";
    default:
      return token.lexeme;
  }
}

std::size_t LineStart(std::string_view source, std::size_t offset) {
  if (offset == 0) return 0;
  const std::size_t nl = source.rfind('\n', offset - 1);
  return nl == std::string_view::npos ? 0 : nl + 1;
}

int LeadingUnits(std::string_view source, std::size_t line_start) {
  int units = 0;
  for (std::size_t i = line_start; i < source.size(); ++i) {
    const char c = source[i];
    if (c == '\n' || !IsWhitespaceByte(c)) break;
    ++units;
  }
  return units;
}

std::string_view NewlineOf(std::string_view gap_text) {
  return gap_text.find("\r\n") != std::string_view::npos ? "\r\n" : "\n";
}

bool ParseInt(std::string_view text, int& value) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::string FormatToken::Lexeme() const {
  switch (kind) {
    case FormatKind::kToken:
      return collapsed_class + "/" + std::to_string(size_bucket) + "/" +
             std::to_string(column_bucket);
    case FormatKind::kSpace:
      return "SPACE^" + std::to_string(space_count) + (uses_tabs ? "t" : "");
    case FormatKind::kIndent: {
      std::string d = delta > 0 ? "+" + std::to_string(delta) : std::to_string(delta);
      return "INDENT^" + d + (uses_tabs ? "t" : "") + "_" +
             std::to_string(newline_count) + "n";
    }
  }
  return {};
}

bool FormatToken::SameShape(const FormatToken& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case FormatKind::kToken:
      return collapsed_class == other.collapsed_class && span == other.span;
    case FormatKind::kSpace:
      return space_count == other.space_count && uses_tabs == other.uses_tabs;
    case FormatKind::kIndent:
      return delta == other.delta && newline_count == other.newline_count &&
             uses_tabs == other.uses_tabs;
  }
  return false;
}

std::vector<FormatToken> TokenizeFormatting(std::string_view source,
                                            int bucket_size,
                                            const LanguageProfile& profile) {
  return FormatStreamFromLex(source, LexCode(source, profile), bucket_size);
}

std::vector<FormatToken> FormatStreamFromLex(std::string_view source,
                                             const LexResult& lexed,
                                             int bucket_size) {
  if (bucket_size < 1) throw std::invalid_argument("bucket size must be >= 1");
  const auto& tokens = lexed.tokens;
  const auto& comments = lexed.comments;

  std::vector<FormatToken> out;
  if (tokens.empty()) return out;
  out.reserve(tokens.size() * 2);

  int current_indent = LeadingUnits(source, LineStart(source, tokens[0].span.begin));
  std::size_t comment = 0;
  int line = 0;
  std::size_t line_scan = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    line += static_cast<int>(std::count(source.begin() + line_scan,
                                        source.begin() + tok.span.begin, '\n'));
    line_scan = tok.span.begin;
    FormatToken t;
    t.kind = FormatKind::kToken;
    t.span = tok.span;
    t.collapsed_class = CollapsedClass(tok);
    t.size = static_cast<int>(tok.span.size());
    t.line = line;
    t.column = static_cast<int>(tok.span.begin - LineStart(source, tok.span.begin));
    t.size_bucket = t.size / bucket_size;
    t.column_bucket = t.column / bucket_size;
    out.push_back(std::move(t));

    const ByteSpan gap{tok.span.end,
                       i + 1 < tokens.size() ? tokens[i + 1].span.begin
                                             : source.size()};
    std::size_t tail_begin = gap.begin;
    while (comment < comments.size() && comments[comment].begin < gap.end) {
      if (comments[comment].begin >= gap.begin) {
        tail_begin = std::max(tail_begin, comments[comment].end);
      }
      ++comment;
    }
    const std::string_view tail = source.substr(tail_begin, gap.end - tail_begin);

    FormatToken w;
    w.span = {tail_begin, gap.end};
    w.gap = gap;
    w.previous_indent = current_indent;
    w.indent = current_indent;
    const auto newlines = std::count(tail.begin(), tail.end(), '\n');
    if (newlines > 0) {
      const std::string_view run = tail.substr(tail.rfind('\n') + 1);
      w.kind = FormatKind::kIndent;
      w.newline_count = static_cast<int>(newlines);
      w.uses_tabs = run.find('\t') != std::string_view::npos;
      w.indent = static_cast<int>(run.size());
      w.delta = w.indent - current_indent;
      current_indent = w.indent;
    } else {
      w.kind = FormatKind::kSpace;
      w.space_count = static_cast<int>(tail.size());
      w.uses_tabs = tail.find('\t') != std::string_view::npos;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string DetokenizeFormatting(std::span<const FormatToken> tokens,
                                 std::string_view original,
                                 const LanguageProfile& profile) {
  const std::vector<FormatToken> reference = TokenizeFormatting(original, 1, profile);
  if (reference.size() != tokens.size()) {
    throw IntegrityError("format stream has " + std::to_string(tokens.size()) +
                         " tokens, source has " + std::to_string(reference.size()));
  }
  if (reference.empty()) return std::string(original);

  std::string out(original.substr(0, reference[0].span.begin));
  int current_indent = reference[1].previous_indent;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const FormatToken& tok = tokens[i];
    const FormatToken& ref = reference[i];
    if (ref.kind == FormatKind::kToken) {
      if (!tok.SameShape(ref)) {
        throw IntegrityError("code token " + std::to_string(i / 2) +
                             " does not match the source");
      }
      out.append(original.substr(ref.span.begin, ref.span.size()));
      continue;
    }
    if (!tok.is_whitespace() ||
        (tok.kind == FormatKind::kIndent) != (ref.kind == FormatKind::kIndent)) {
      throw IntegrityError("whitespace token " + std::to_string(i) +
                           " changed kind");
    }
    const std::string_view gap_text = original.substr(ref.gap.begin, ref.gap.size());
    if (tok.SameShape(ref)) {
      out.append(gap_text);
      if (ref.kind == FormatKind::kIndent) current_indent = ref.indent;
      continue;
    }
    // Keep any comments in the gap, re-render the tail.
    out.append(original.substr(ref.gap.begin, ref.span.begin - ref.gap.begin));
    const char unit = tok.uses_tabs ? '\t' : ' ';
    if (tok.kind == FormatKind::kSpace) {
      out.append(static_cast<std::size_t>(std::max(0, tok.space_count)), unit);
    } else {
      const int target = std::max(0, current_indent + tok.delta);
      const std::string_view newline = NewlineOf(gap_text);
      for (int n = 0; n < std::max(1, tok.newline_count); ++n) out.append(newline);
      out.append(static_cast<std::size_t>(target), unit);
      current_indent = target;
    }
  }
  return out;
}

std::optional<FormatToken> ParseWhitespaceLexeme(std::string_view lexeme) {
  FormatToken w;
  if (lexeme.starts_with("SPACE^")) {
    std::string_view body = lexeme.substr(6);
    w.kind = FormatKind::kSpace;
    if (!body.empty() && body.back() == 't') {
      w.uses_tabs = true;
      body.remove_suffix(1);
    }
    if (!ParseInt(body, w.space_count) || w.space_count < 0) return std::nullopt;
    return w;
  }
  if (lexeme.starts_with("INDENT^")) {
    std::string_view body = lexeme.substr(7);
    const auto underscore = body.rfind('_');
    if (underscore == std::string_view::npos || !body.ends_with('n')) {
      return std::nullopt;
    }
    std::string_view delta = body.substr(0, underscore);
    std::string_view lines = body.substr(underscore + 1);
    lines.remove_suffix(1);
    w.kind = FormatKind::kIndent;
    if (!delta.empty() && delta.back() == 't') {
      w.uses_tabs = true;
      delta.remove_suffix(1);
    }
    if (!ParseInt(delta, w.delta) || !ParseInt(lines, w.newline_count) ||
        w.newline_count < 1) {
      return std::nullopt;
    }
    return w;
  }
  return std::nullopt;
}

bool IsSpaceLexeme(std::string_view lexeme) { return lexeme.starts_with("SPACE^"); }

bool IsIndentLexeme(std::string_view lexeme) {
  return lexeme.starts_with("INDENT^");
}

}  // namespace convlearn
