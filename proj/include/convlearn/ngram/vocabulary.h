#ifndef CONVLEARN_NGRAM_VOCABULARY_H_
#define CONVLEARN_NGRAM_VOCABULARY_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "convlearn/ngram/binary_io.h"

namespace convlearn {

using WordId = std::uint32_t;

inline constexpr WordId kUnkId = 0;
inline constexpr WordId kBosId = 1;
inline constexpr std::string_view kUnkLexeme = "<unk>";
inline constexpr std::string_view kBosLexeme = "<s>";
inline constexpr int kDefaultMinCount = 2;

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

// Lexeme <-> id map. Id 0 is UNK, id 1 the start-of-file marker (context
// only, never predicted); kept lexemes follow in byte order.
class Vocabulary {
 public:
  // Keeps lexemes seen at least `min_count` times. Throws
  // std::invalid_argument on an empty corpus or min_count < 1.
  static Vocabulary Build(std::span<const std::vector<std::string>> streams,
                          int min_count = kDefaultMinCount);

  WordId Lookup(std::string_view lexeme) const;
  bool Contains(std::string_view lexeme) const;
  const std::string& Lexeme(WordId id) const { return lexemes_[id]; }
  // Training frequency; for UNK, the number of tokens mapped to it.
  std::uint64_t Count(WordId id) const { return counts_[id]; }
  std::vector<WordId> Encode(std::span<const std::string> lexemes) const;

  // Number of ids including UNK and the start marker.
  std::size_t size() const { return lexemes_.size(); }
  // Size of the predicted vocabulary V (everything but the start marker).
  std::size_t predicted_size() const { return lexemes_.size() - 1; }
  int min_count() const { return min_count_; }

  void Write(ByteWriter& out) const;
  static Vocabulary Read(ByteReader& in);

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.min_count_ == b.min_count_ && a.lexemes_ == b.lexemes_ &&
           a.counts_ == b.counts_;
  }

 private:
  void Index();

  int min_count_ = kDefaultMinCount;
  std::vector<std::string> lexemes_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, WordId, StringHash, std::equal_to<>> ids_;
};

}  // namespace convlearn

#endif  // CONVLEARN_NGRAM_VOCABULARY_H_
