#include "convlearn/ngram/vocabulary.h"

#include <map>
#include <stdexcept>

namespace convlearn {

Vocabulary Vocabulary::Build(std::span<const std::vector<std::string>> streams,
                             int min_count) {
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
  std::map<std::string, std::uint64_t, std::less<>> counts;
  std::uint64_t total = 0;
  for (const auto& stream : streams) {
    for (const auto& lexeme : stream) {
      ++counts[lexeme];
      ++total;
    }
  }
  if (total == 0) throw std::invalid_argument("cannot build a vocabulary from an empty corpus");

  Vocabulary vocab;
  vocab.min_count_ = min_count;
  vocab.lexemes_ = {std::string(kUnkLexeme), std::string(kBosLexeme)};
  vocab.counts_ = {0, 0};
  for (const auto& [lexeme, count] : counts) {
    if (count >= static_cast<std::uint64_t>(min_count)) {
      vocab.lexemes_.push_back(lexeme);
      vocab.counts_.push_back(count);
    } else {
      vocab.counts_[kUnkId] += count;
    }
  }
  vocab.Index();
  return vocab;
}

void Vocabulary::Index() {
  ids_.clear();
  ids_.reserve(lexemes_.size());
  for (WordId id = 2; id < lexemes_.size(); ++id) ids_.emplace(lexemes_[id], id);
}

WordId Vocabulary::Lookup(std::string_view lexeme) const {
  const auto it = ids_.find(lexeme);
  return it == ids_.end() ? kUnkId : it->second;
}

bool Vocabulary::Contains(std::string_view lexeme) const {
  return ids_.find(lexeme) != ids_.end();
}

std::vector<WordId> Vocabulary::Encode(std::span<const std::string> lexemes) const {
  std::vector<WordId> ids;
  ids.reserve(lexemes.size());
  for (const auto& l : lexemes) ids.push_back(Lookup(l));
  return ids;
}

void Vocabulary::Write(ByteWriter& out) const {
  out.U32(static_cast<std::uint32_t>(min_count_));
  out.U32(static_cast<std::uint32_t>(lexemes_.size() - 2));
  out.U64(counts_[kUnkId]);
  for (std::size_t id = 2; id < lexemes_.size(); ++id) {
    out.Str(lexemes_[id]);
    out.U64(counts_[id]);
  }
}

Vocabulary Vocabulary::Read(ByteReader& in) {
  Vocabulary vocab;
  const std::uint32_t min_count = in.U32();
  if (min_count < 1) in.Fail("vocabulary min_count is 0");
  vocab.min_count_ = static_cast<int>(min_count);
  const std::uint32_t n = in.U32();
  // Each entry takes at least 12 bytes.
  if (static_cast<std::uint64_t>(n) * 12 > in.remaining()) {
    in.Fail("vocabulary size exceeds file");
  }
  vocab.lexemes_ = {std::string(kUnkLexeme), std::string(kBosLexeme)};
  vocab.counts_ = {in.U64(), 0};
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string lexeme = in.Str();
    if (vocab.lexemes_.size() > 2 && !(vocab.lexemes_.back() < lexeme)) {
      in.Fail("vocabulary is not sorted");
    }
    vocab.lexemes_.push_back(std::move(lexeme));
    vocab.counts_.push_back(in.U64());
  }
  vocab.Index();
  return vocab;
}

}  // namespace convlearn
