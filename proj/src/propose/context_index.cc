#include "convlearn/propose/context_index.h"

#include <algorithm>
#include <stdexcept>

namespace convlearn {

NGramKey HoledWindow(std::span<const WordId> ids, std::size_t end, int order,
                     std::size_t hole) {
  NGramKey key;
  key.size = static_cast<std::uint8_t>(order);
  for (int j = 0; j < order; ++j) {
    const std::size_t back = static_cast<std::size_t>(order - 1 - j);
    if (back > end) {
      key.ids[j] = kBosId;
    } else {
      const std::size_t pos = end - back;
      key.ids[j] = pos == hole ? kHoleId : ids[pos];
    }
  }
  return key;
}

ContextIndex ContextIndex::Build(std::span<const std::vector<WordId>> streams,
                                 std::span<const std::vector<bool>> holes,
                                 int order) {
  if (order < 1 || order > kMaxOrder) throw std::invalid_argument("bad order");
  if (streams.size() != holes.size()) {
    throw std::invalid_argument("hole masks do not match streams");
  }
  std::unordered_map<NGramKey, std::map<WordId, std::uint64_t>, NGramKeyHash> raw;
  for (std::size_t s = 0; s < streams.size(); ++s) {
    const auto& ids = streams[s];
    const auto& mask = holes[s];
    if (mask.size() != ids.size()) throw std::invalid_argument("hole mask size");
    for (std::size_t p = 0; p < ids.size(); ++p) {
      if (!mask[p] || ids[p] == kUnkId) continue;
      for (std::size_t end = p; end < p + order && end < ids.size(); ++end) {
        ++raw[HoledWindow(ids, end, order, p)][ids[p]];
      }
    }
  }
  ContextIndex index;
  index.order_ = order;
  index.entries_.reserve(raw.size());
  for (auto& [key, fillers] : raw) {
    index.entries_.emplace(key, Fillers(fillers.begin(), fillers.end()));
  }
  return index;
}

const ContextIndex::Fillers* ContextIndex::Lookup(const NGramKey& pattern) const {
  const auto it = entries_.find(pattern);
  return it == entries_.end() ? nullptr : &it->second;
}

void ContextIndex::CollectFillers(std::span<const WordId> ids, std::size_t p,
                                  std::map<WordId, std::uint64_t>& out) const {
  for (std::size_t end = p; end < p + order_ && end < ids.size(); ++end) {
    if (const Fillers* fillers = Lookup(HoledWindow(ids, end, order_, p))) {
      for (const auto& [id, count] : *fillers) out[id] += count;
    }
  }
}

void ContextIndex::Write(ByteWriter& out) const {
  std::vector<const std::pair<const NGramKey, Fillers>*> sorted;
  sorted.reserve(entries_.size());
  for (const auto& entry : entries_) sorted.push_back(&entry);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  out.U32(static_cast<std::uint32_t>(order_));
  out.U64(sorted.size());
  for (const auto* entry : sorted) {
    for (int j = 0; j < order_; ++j) out.U32(entry->first.ids[j]);
    out.U32(static_cast<std::uint32_t>(entry->second.size()));
    for (const auto& [id, count] : entry->second) {
      out.U32(id);
      out.U64(count);
    }
  }
}

ContextIndex ContextIndex::Read(ByteReader& in) {
  ContextIndex index;
  index.order_ = static_cast<int>(in.U32());
  if (index.order_ < 1 || index.order_ > kMaxOrder) in.Fail("bad context index order");
  const std::uint64_t n = in.U64();
  if (n > in.remaining() / (4ULL * index.order_ + 4)) in.Fail("context index exceeds file");
  index.entries_.reserve(n);
  for (std::uint64_t e = 0; e < n; ++e) {
    NGramKey key;
    key.size = static_cast<std::uint8_t>(index.order_);
    int holes = 0;
    for (int j = 0; j < index.order_; ++j) {
      key.ids[j] = in.U32();
      holes += key.ids[j] == kHoleId;
    }
    if (holes != 1) in.Fail("context pattern without exactly one hole");
    const std::uint32_t m = in.U32();
    if (m > in.remaining() / 12) in.Fail("filler list exceeds file");
    Fillers fillers;
    fillers.reserve(m);
    for (std::uint32_t f = 0; f < m; ++f) {
      const WordId id = in.U32();
      fillers.emplace_back(id, in.U64());
    }
    if (!index.entries_.emplace(key, std::move(fillers)).second) {
      in.Fail("duplicate context pattern");
    }
  }
  return index;
}

}  // namespace convlearn
