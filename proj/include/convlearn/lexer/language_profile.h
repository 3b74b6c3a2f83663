#ifndef CONVLEARN_LEXER_LANGUAGE_PROFILE_H_
#define CONVLEARN_LEXER_LANGUAGE_PROFILE_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace convlearn {

struct BlockCommentDelimiters {
  std::string open;
  std::string close;

  friend bool operator==(const BlockCommentDelimiters&,
                         const BlockCommentDelimiters&) = default;
};

// Lexical description of a C-family language. Everything the lexer knows
// about a language lives here, so a new language needs only a config file.
//
// Config file syntax, one setting per line, `#` starts a comment line and
// repeated keys append:
//
//   name = java
//   keywords = abstract assert boolean ...
//   literal_words = true false null
//   operators = >>>= <<= ++ -- ...
//   punctuation = ( ) { } [ ] ; , . @
//   line_comment = //
//   block_comment = /* */
//   string_delimiters = " '
//   text_block = """
//   identifier_extra = _ $
//   escape = <one character, backslash by default>
class LanguageProfile {
 public:
  static LanguageProfile Java();
  static LanguageProfile Cpp();

  // Parses config text. Throws std::invalid_argument naming the line.
  static LanguageProfile Parse(std::string_view text);
  static LanguageProfile Load(const std::filesystem::path& path);
  // "java", "cpp", or a path to a config file.
  static LanguageProfile Resolve(std::string_view name_or_path);

  // Renders a config that Parse() turns back into an equal profile.
  std::string ToConfigText() const;

  // Throws std::invalid_argument if the profile cannot drive the lexer.
  void Validate() const;

  const std::string& name() const { return name_; }
  const std::set<std::string, std::less<>>& keywords() const { return keywords_; }
  const std::set<std::string, std::less<>>& literal_words() const {
    return literal_words_;
  }
  // Operators and punctuation, longest first.
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::vector<std::string>& line_comments() const { return line_comments_; }
  const std::vector<BlockCommentDelimiters>& block_comments() const {
    return block_comments_;
  }
  const std::string& string_delimiters() const { return string_delimiters_; }
  const std::string& text_block() const { return text_block_; }
  char escape() const { return escape_; }

  bool IsKeyword(std::string_view word) const;
  bool IsLiteralWord(std::string_view word) const;
  bool IsPunctuation(std::string_view symbol) const;
  bool IsIdentifierStart(unsigned char c) const;
  bool IsIdentifierPart(unsigned char c) const;

  friend bool operator==(const LanguageProfile&, const LanguageProfile&) = default;

 private:
  void SortSymbols();

  std::string name_;
  std::set<std::string, std::less<>> keywords_;
  std::set<std::string, std::less<>> literal_words_;
  std::set<std::string, std::less<>> operators_;
  std::set<std::string, std::less<>> punctuation_;
  std::vector<std::string> symbols_;
  std::vector<std::string> line_comments_;
  std::vector<BlockCommentDelimiters> block_comments_;
  std::string string_delimiters_;
  std::string text_block_;
  std::string identifier_extra_;
  char escape_ = '\\';
};

}  // namespace convlearn

#endif  // CONVLEARN_LEXER_LANGUAGE_PROFILE_H_
