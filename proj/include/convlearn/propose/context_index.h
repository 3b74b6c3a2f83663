#ifndef CONVLEARN_PROPOSE_CONTEXT_INDEX_H_
#define CONVLEARN_PROPOSE_CONTEXT_INDEX_H_

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "convlearn/ngram/binary_io.h"
#include "convlearn/ngram/ngram_model.h"

namespace convlearn {

inline constexpr WordId kHoleId = 0xFFFFFFFFu;

// For every window of n tokens in the training streams (start-padded, no end
// padding) and every identifier position in it, records which lexeme filled
// that position: pattern (alpha _ beta) -> {v' : alpha v' beta occurs}.
class ContextIndex {
 public:
  using Fillers = std::vector<std::pair<WordId, std::uint64_t>>;

  // `holes[s][i]` says whether token i of stream s may be a hole (an
  // identifier). UNK fillers are not recorded.
  static ContextIndex Build(std::span<const std::vector<WordId>> streams,
                            std::span<const std::vector<bool>> holes, int order);

  int order() const { return order_; }
  std::size_t size() const { return entries_.size(); }

  // Fillers of one pattern (a window with exactly one kHoleId), or nullptr.
  const Fillers* Lookup(const NGramKey& pattern) const;

  // Adds fillers of every window of `ids` that contains position p, with the
  // hole at p, to `out` (filler -> summed count).
  void CollectFillers(std::span<const WordId> ids, std::size_t p,
                      std::map<WordId, std::uint64_t>& out) const;

  void Write(ByteWriter& out) const;
  static ContextIndex Read(ByteReader& in);

  friend bool operator==(const ContextIndex&, const ContextIndex&) = default;

 private:
  int order_ = 0;
  std::unordered_map<NGramKey, Fillers, NGramKeyHash> entries_;
};

// Start-padded window of `ids` ending at `end` (inclusive) with the hole at
// absolute position `hole`.
NGramKey HoledWindow(std::span<const WordId> ids, std::size_t end, int order,
                     std::size_t hole);

}  // namespace convlearn

#endif  // CONVLEARN_PROPOSE_CONTEXT_INDEX_H_
