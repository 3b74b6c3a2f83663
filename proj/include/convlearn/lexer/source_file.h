#ifndef CONVLEARN_LEXER_SOURCE_FILE_H_
#define CONVLEARN_LEXER_SOURCE_FILE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "convlearn/lexer/format_lexer.h"
#include "convlearn/lexer/language_profile.h"
#include "convlearn/lexer/scope_index.h"
#include "convlearn/lexer/token.h"

namespace convlearn {

// Everything the models need from one file, computed once.
struct SourceFile {
  std::string path;
  std::string text;
  std::vector<Token> tokens;
  std::vector<ByteSpan> comments;
  std::vector<FormatToken> format;
  ScopeIndex scopes;

  // Throws LexError on malformed input.
  static SourceFile Analyze(std::string path, std::string text,
                            const LanguageProfile& profile,
                            int bucket_size = kDefaultBucketSize);
  static SourceFile Read(const std::filesystem::path& path,
                         const LanguageProfile& profile,
                         int bucket_size = kDefaultBucketSize);

  // Lexemes of the naming stream (code tokens, verbatim).
  std::vector<std::string> NameStream() const;
  // Lexemes of the formatting stream.
  std::vector<std::string> FormatStream() const;
};

std::string ReadFileBytes(const std::filesystem::path& path);

}  // namespace convlearn

#endif  // CONVLEARN_LEXER_SOURCE_FILE_H_
