#include "convlearn/lexer/code_lexer.h"

namespace convlearn {
namespace {

bool StartsWith(std::string_view text, std::size_t pos, std::string_view prefix) {
  return !prefix.empty() && text.substr(pos, prefix.size()) == prefix;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view source, const LanguageProfile& profile)
      : src_(source), profile_(profile) {}

  LexResult Run() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (IsWhitespaceByte(c)) {
        ++pos_;
      } else if (TryComment()) {
      } else if (TryTextBlock() || TryString()) {
      } else if (IsDigit(c) || (c == '.' && pos_ + 1 < src_.size() &&
                                IsDigit(src_[pos_ + 1]))) {
        LexNumber();
      } else if (profile_.IsIdentifierStart(static_cast<unsigned char>(c))) {
        LexWord();
      } else {
        LexSymbol();
      }
    }
    return std::move(result_);
  }

 private:
  bool TryComment() {
    for (const auto& open : profile_.line_comments()) {
      if (StartsWith(src_, pos_, open)) {
        const std::size_t begin = pos_;
        const std::size_t nl = src_.find('\n', pos_);
        pos_ = nl == std::string_view::npos ? src_.size() : nl;
        result_.comments.push_back({begin, pos_});
        return true;
      }
    }
    for (const auto& block : profile_.block_comments()) {
      if (StartsWith(src_, pos_, block.open)) {
        const std::size_t begin = pos_;
        const std::size_t close = src_.find(block.close, pos_ + block.open.size());
        if (close == std::string_view::npos) {
          throw LexError("unterminated comment", begin);
        }
        pos_ = close + block.close.size();
        result_.comments.push_back({begin, pos_});
        return true;
      }
    }
    return false;
  }

  bool TryTextBlock() {
    const std::string& delim = profile_.text_block();
    if (!StartsWith(src_, pos_, delim)) return false;
    const std::size_t begin = pos_;
    std::size_t i = pos_ + delim.size();
    while (true) {
      if (i >= src_.size()) throw LexError("unterminated text block", begin);
      if (src_[i] == profile_.escape()) {
        i += 2;
      } else if (StartsWith(src_, i, delim)) {
        i += delim.size();
        break;
      } else {
        ++i;
      }
    }
    Emit(begin, i, TokenKind::kLiteral);
    return true;
  }

  bool TryString() {
    const char quote = src_[pos_];
    if (profile_.string_delimiters().find(quote) == std::string::npos) {
      return false;
    }
    const std::size_t begin = pos_;
    std::size_t i = pos_ + 1;
    while (true) {
      if (i >= src_.size() || src_[i] == '\n') {
        throw LexError("unterminated literal", begin);
      }
      if (src_[i] == profile_.escape()) {
        i += 2;
      } else if (src_[i] == quote) {
        ++i;
        break;
      } else {
        ++i;
      }
    }
    Emit(begin, i, TokenKind::kLiteral);
    return true;
  }

  void LexNumber() {
    const std::size_t begin = pos_;
    std::size_t i = pos_;
    while (i < src_.size()) {
      const char c = src_[i];
      if (IsDigit(c) || c == '.' || c == '_' || (c >= 'a' && c <= 'z') ||
          (c >= 'A' && c <= 'Z') || c == '\'') {
        ++i;
      } else if ((c == '+' || c == '-') && i > begin &&
                 (src_[i - 1] == 'e' || src_[i - 1] == 'E' ||
                  src_[i - 1] == 'p' || src_[i - 1] == 'P') &&
                 !(src_.size() > begin + 1 && src_[begin] == '0' &&
                   (src_[begin + 1] == 'x' || src_[begin + 1] == 'X') &&
                   (src_[i - 1] == 'e' || src_[i - 1] == 'E'))) {
        ++i;
      } else {
        break;
      }
    }
    // A trailing '.' is left to the punctuation table.
    while (i > begin + 1 && src_[i - 1] == '.') --i;
    Emit(begin, i, TokenKind::kLiteral);
  }

  void LexWord() {
    const std::size_t begin = pos_;
    std::size_t i = pos_;
    while (i < src_.size() &&
           profile_.IsIdentifierPart(static_cast<unsigned char>(src_[i]))) {
      ++i;
    }
    const std::string_view word = src_.substr(begin, i - begin);
    TokenKind kind = TokenKind::kIdentifier;
    if (profile_.IsKeyword(word)) {
      kind = TokenKind::kKeyword;
    } else if (profile_.IsLiteralWord(word)) {
      kind = TokenKind::kLiteral;
    }
    Emit(begin, i, kind);
  }

  void LexSymbol() {
    for (const auto& symbol : profile_.symbols()) {
      if (StartsWith(src_, pos_, symbol)) {
        Emit(pos_, pos_ + symbol.size(),
             profile_.IsPunctuation(symbol) ? TokenKind::kPunctuation
                                            : TokenKind::kOperator);
        return;
      }
    }
    // Bytes the profile does not know become single-byte operators.
    Emit(pos_, pos_ + 1, TokenKind::kOperator);
  }

  void Emit(std::size_t begin, std::size_t end, TokenKind kind) {
    result_.tokens.push_back(
        Token{std::string(src_.substr(begin, end - begin)), kind, {begin, end}});
    pos_ = end;
  }

  std::string_view src_;
  const LanguageProfile& profile_;
  std::size_t pos_ = 0;
  LexResult result_;
};

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier:
      return "identifier";
    case TokenKind::kKeyword:
      return "keyword";
    case TokenKind::kLiteral:
      return "literal";
    case TokenKind::kOperator:
      return "operator";
    case TokenKind::kPunctuation:
      return "punctuation";
  }
  return "unknown";
}

bool IsWhitespaceByte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

LexResult LexCode(std::string_view source, const LanguageProfile& profile) {
  return Lexer(source, profile).Run();
}

}  // namespace convlearn
