#ifndef CONVLEARN_LEXER_FORMAT_LEXER_H_
#define CONVLEARN_LEXER_FORMAT_LEXER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convlearn/lexer/code_lexer.h"
#include "convlearn/lexer/language_profile.h"
#include "convlearn/lexer/token.h"

namespace convlearn {

inline constexpr int kDefaultBucketSize = 20;

enum class FormatKind { kToken, kSpace, kIndent };

// One element of the whitespace-annotated stream. The stream alternates
// strictly: T W T W ... T W, where W is the whitespace (SPACE or INDENT)
// between a code token and the next one, or the end of the file. Text before
// the first code token is not tokenized.
//
// A gap that contains comments is measured on its tail, the whitespace after
// the last comment; `span` covers that tail and `gap` the whole gap.
struct FormatToken {
  FormatKind kind = FormatKind::kToken;
  ByteSpan span;

  // kToken: ID, LIT, or the verbatim keyword/operator/punctuation.
  std::string collapsed_class;
  int size = 0;
  int line = 0;  // 0-based line of the first byte
  int column = 0;
  int size_bucket = 0;
  int column_bucket = 0;

  // kSpace and kIndent.
  bool uses_tabs = false;
  ByteSpan gap;

  // kSpace.
  int space_count = 0;

  // kIndent: whitespace units (a tab is one unit) of the new line relative to
  // the previous code line, and the number of line breaks.
  int delta = 0;
  int newline_count = 0;
  // Indent of the current line before and after this token; equal for SPACE.
  int previous_indent = 0;
  int indent = 0;

  bool is_whitespace() const { return kind != FormatKind::kToken; }

  // Identity of the token inside the formatting language model:
  //   T       "ID/0/1"        class/size bucket/column bucket
  //   SPACE   "SPACE^1"       "SPACE^2t" when tabs are used
  //   INDENT  "INDENT^+4_1n"  "INDENT^-1t_2n" when tabs are used
  std::string Lexeme() const;

  // Metadata equality for whitespace, class/span equality for T.
  bool SameShape(const FormatToken& other) const;
};

std::vector<FormatToken> TokenizeFormatting(
    std::string_view source, int bucket_size = kDefaultBucketSize,
    const LanguageProfile& profile = LanguageProfile::Java());

// Same, reusing an existing lexing pass over `source`.
std::vector<FormatToken> FormatStreamFromLex(std::string_view source,
                                             const LexResult& lexed,
                                             int bucket_size);

// Renders a (possibly edited) stream back to text. Whitespace tokens whose
// metadata is unchanged reproduce the original bytes; edited ones are rendered
// from their metadata. Throws IntegrityError when the code tokens do not match
// `original`.
std::string DetokenizeFormatting(
    std::span<const FormatToken> tokens, std::string_view original,
    const LanguageProfile& profile = LanguageProfile::Java());

// Inverse of Lexeme() for SPACE and INDENT lexemes.
std::optional<FormatToken> ParseWhitespaceLexeme(std::string_view lexeme);

bool IsSpaceLexeme(std::string_view lexeme);
bool IsIndentLexeme(std::string_view lexeme);

}  // namespace convlearn

#endif  // CONVLEARN_LEXER_FORMAT_LEXER_H_
