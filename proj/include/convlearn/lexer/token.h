#ifndef CONVLEARN_LEXER_TOKEN_H_
#define CONVLEARN_LEXER_TOKEN_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace convlearn {

// Half-open byte range [begin, end) into a source text.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool Contains(std::size_t offset) const {
    return offset >= begin && offset < end;
  }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

enum class TokenKind { kIdentifier, kKeyword, kLiteral, kOperator, kPunctuation };

std::string_view TokenKindName(TokenKind kind);

struct Token {
  std::string lexeme;
  TokenKind kind = TokenKind::kIdentifier;
  ByteSpan span;

  bool is_identifier() const { return kind == TokenKind::kIdentifier; }
};

// Raised for malformed input such as an unterminated string or comment.
class LexError : public std::runtime_error {
 public:
  LexError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Raised when a token stream does not belong to the text it is rendered
// against.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace convlearn

#endif  // CONVLEARN_LEXER_TOKEN_H_
