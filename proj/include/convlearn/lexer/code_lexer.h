#ifndef CONVLEARN_LEXER_CODE_LEXER_H_
#define CONVLEARN_LEXER_CODE_LEXER_H_

#include <string_view>
#include <vector>

#include "convlearn/lexer/language_profile.h"
#include "convlearn/lexer/token.h"

namespace convlearn {

struct LexResult {
  std::vector<Token> tokens;
  // Comment spans, in source order. Comments never produce tokens.
  std::vector<ByteSpan> comments;
};

// Splits `source` into classified tokens. Whitespace and comments are
// dropped; string and character literals are single opaque tokens.
// Throws LexError on an unterminated literal or block comment.
LexResult LexCode(std::string_view source, const LanguageProfile& profile);

inline std::vector<Token> TokenizeCode(std::string_view source,
                                       const LanguageProfile& profile) {
  return LexCode(source, profile).tokens;
}

bool IsWhitespaceByte(char c);

}  // namespace convlearn

#endif  // CONVLEARN_LEXER_CODE_LEXER_H_
