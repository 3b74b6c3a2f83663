#include "convlearn/lexer/language_profile.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace convlearn {
namespace {

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string JoinWords(const auto& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

constexpr std::string_view kJavaConfig = R"(name = java
keywords = abstract assert boolean break byte case catch char class const
keywords = continue default do double else enum extends final finally float
keywords = for goto if implements import instanceof int interface long native
keywords = new package private protected public return short static strictfp
keywords = super switch synchronized this throw throws transient try void
keywords = volatile while var
literal_words = true false null
operators = >>>= <<= >>= >>> -> :: ++ -- && || == != <= >= += -= *= /= %=
operators = &= |= ^= << >> + - * / % = < > ! ~ ? : & | ^
punctuation = ... ( ) { } [ ] ; , . @
line_comment = //
block_comment = /* */
string_delimiters = " '
text_block = """
identifier_extra = _ $
escape = \
)";

constexpr std::string_view kCppConfig = R"(name = cpp
keywords = alignas alignof asm auto bool break case catch char char8_t
keywords = char16_t char32_t class concept const consteval constexpr
keywords = constinit const_cast continue co_await co_return co_yield
keywords = decltype default delete do double dynamic_cast else enum explicit
keywords = export extern float for friend goto if inline int long mutable
keywords = namespace new noexcept operator private protected public register
keywords = reinterpret_cast requires return short signed sizeof static
keywords = static_assert static_cast struct switch template this thread_local
keywords = throw try typedef typeid typename union unsigned using virtual void
keywords = volatile wchar_t while
literal_words = true false nullptr
operators = <=> <<= >>= ->* -> :: ++ -- && || == != <= >= += -= *= /= %=
operators = &= |= ^= << >> .* ## + - * / % = < > ! ~ ? : & | ^ #
punctuation = ... ( ) { } [ ] ; , .
line_comment = //
block_comment = /* */
string_delimiters = " '
identifier_extra = _
escape = \
)";

}  // namespace

LanguageProfile LanguageProfile::Java() { return Parse(kJavaConfig); }

LanguageProfile LanguageProfile::Cpp() { return Parse(kCppConfig); }

LanguageProfile LanguageProfile::Parse(std::string_view text) {
  LanguageProfile profile;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("profile line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    const auto words = SplitWords(value);
    if (key == "name") {
      profile.name_ = std::string(value);
    } else if (key == "keywords") {
      profile.keywords_.insert(words.begin(), words.end());
    } else if (key == "literal_words") {
      profile.literal_words_.insert(words.begin(), words.end());
    } else if (key == "operators") {
      profile.operators_.insert(words.begin(), words.end());
    } else if (key == "punctuation") {
      profile.punctuation_.insert(words.begin(), words.end());
    } else if (key == "line_comment") {
      profile.line_comments_.insert(profile.line_comments_.end(), words.begin(),
                                    words.end());
    } else if (key == "block_comment") {
      if (words.size() != 2) {
        throw std::invalid_argument("profile line " + std::to_string(line_no) +
                                    ": block_comment needs open and close");
      }
      profile.block_comments_.push_back({words[0], words[1]});
    } else if (key == "string_delimiters") {
      for (const auto& w : words) {
        if (w.size() != 1) {
          throw std::invalid_argument("profile line " + std::to_string(line_no) +
                                      ": string delimiters are single characters");
        }
        profile.string_delimiters_ += w;
      }
    } else if (key == "text_block") {
      profile.text_block_ = std::string(value);
    } else if (key == "identifier_extra") {
      for (const auto& w : words) profile.identifier_extra_ += w;
    } else if (key == "escape") {
      if (value.size() != 1) {
        throw std::invalid_argument("profile line " + std::to_string(line_no) +
                                    ": escape is a single character");
      }
      profile.escape_ = value.front();
    } else {
      throw std::invalid_argument("profile line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
    }
  }
  profile.SortSymbols();
  profile.Validate();
  return profile;
}

LanguageProfile LanguageProfile::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read profile " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

LanguageProfile LanguageProfile::Resolve(std::string_view name_or_path) {
  if (name_or_path == "java") return Java();
  if (name_or_path == "cpp" || name_or_path == "c++") return Cpp();
  return Load(std::filesystem::path(std::string(name_or_path)));
}

std::string LanguageProfile::ToConfigText() const {
  std::ostringstream out;
  out << "name = " << name_ << "\n";
  out << "keywords = " << JoinWords(keywords_) << "\n";
  if (!literal_words_.empty()) {
    out << "literal_words = " << JoinWords(literal_words_) << "\n";
  }
  if (!operators_.empty()) out << "operators = " << JoinWords(operators_) << "\n";
  if (!punctuation_.empty()) {
    out << "punctuation = " << JoinWords(punctuation_) << "\n";
  }
  for (const auto& c : line_comments_) out << "line_comment = " << c << "\n";
  for (const auto& c : block_comments_) {
    out << "block_comment = " << c.open << " " << c.close << "\n";
  }
  if (!string_delimiters_.empty()) {
    out << "string_delimiters =";
    for (char c : string_delimiters_) out << ' ' << c;
    out << "\n";
  }
  if (!text_block_.empty()) out << "text_block = " << text_block_ << "\n";
  if (!identifier_extra_.empty()) {
    out << "identifier_extra =";
    for (char c : identifier_extra_) out << ' ' << c;
    out << "\n";
  }
  out << "escape = " << escape_ << "\n";
  return out.str();
}

void LanguageProfile::Validate() const {
  if (name_.empty()) throw std::invalid_argument("profile has no name");
  if (keywords_.empty()) throw std::invalid_argument("profile has no keywords");
  const auto check_word = [this](const std::string& w, const char* what) {
    if (w.empty() || !IsIdentifierStart(static_cast<unsigned char>(w[0])) ||
        !std::all_of(w.begin(), w.end(), [this](char c) {
          return IsIdentifierPart(static_cast<unsigned char>(c));
        })) {
      throw std::invalid_argument(std::string("profile ") + what + " '" + w +
                                  "' is not identifier-shaped");
    }
  };
  for (const auto& k : keywords_) check_word(k, "keyword");
  for (const auto& w : literal_words_) {
    check_word(w, "literal word");
    if (keywords_.count(w)) {
      throw std::invalid_argument("'" + w + "' is both keyword and literal");
    }
  }
  for (const auto& s : symbols_) {
    if (IsIdentifierPart(static_cast<unsigned char>(s[0]))) {
      throw std::invalid_argument("symbol '" + s +
                                  "' starts with an identifier character");
    }
  }
  for (const auto& c : block_comments_) {
    if (c.open.empty() || c.close.empty()) {
      throw std::invalid_argument("empty block comment delimiter");
    }
  }
}

bool LanguageProfile::IsKeyword(std::string_view word) const {
  return keywords_.find(word) != keywords_.end();
}

bool LanguageProfile::IsLiteralWord(std::string_view word) const {
  return literal_words_.find(word) != literal_words_.end();
}

bool LanguageProfile::IsPunctuation(std::string_view symbol) const {
  return punctuation_.find(symbol) != punctuation_.end();
}

bool LanguageProfile::IsIdentifierStart(unsigned char c) const {
  if (c >= 0x80) return true;  // UTF-8 sequences
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
  return identifier_extra_.find(static_cast<char>(c)) != std::string::npos;
}

bool LanguageProfile::IsIdentifierPart(unsigned char c) const {
  return IsIdentifierStart(c) || (c >= '0' && c <= '9');
}

void LanguageProfile::SortSymbols() {
  symbols_.clear();
  symbols_.insert(symbols_.end(), operators_.begin(), operators_.end());
  symbols_.insert(symbols_.end(), punctuation_.begin(), punctuation_.end());
  std::sort(symbols_.begin(), symbols_.end(),
            [](const std::string& a, const std::string& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

}  // namespace convlearn
