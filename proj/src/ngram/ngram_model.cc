#include "convlearn/ngram/ngram_model.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace convlearn {
namespace {

constexpr std::string_view kModelMagic = "CLNG";
constexpr std::uint32_t kModelVersion = 1;
constexpr double kMinMass = 1e-12;

void CheckOptions(const NGramOptions& options) {
  if (options.order < 1 || options.order > kMaxOrder) {
    throw std::invalid_argument("order must be in [1, " + std::to_string(kMaxOrder) +
                                "], got " + std::to_string(options.order));
  }
  if (options.discount_cutoff < 0) {
    throw std::invalid_argument("discount cutoff must be >= 0");
  }
}

}  // namespace

NGramKey NGramKey::Of(std::span<const WordId> words) {
  if (words.size() > kMaxOrder) throw std::invalid_argument("n-gram too long");
  NGramKey key;
  std::copy(words.begin(), words.end(), key.ids.begin());
  key.size = static_cast<std::uint8_t>(words.size());
  return key;
}

NGramKey NGramKey::Tail() const { return Of(view().subspan(1)); }

NGramKey NGramKey::Head() const { return Of(view().first(size - 1)); }

std::size_t NGramKeyHash::operator()(const NGramKey& key) const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ key.size;
  for (std::uint8_t i = 0; i < key.size; ++i) {
    h = (h ^ key.ids[i]) * 0x9E3779B97F4A7C15ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

CountTable::CountTable(int order) : order_(order), by_order_(order) {
  if (order < 1 || order > kMaxOrder) throw std::invalid_argument("bad order");
}

void CountTable::AddStream(std::span<const WordId> ids) {
  std::vector<WordId> padded(order_ - 1, kBosId);
  padded.insert(padded.end(), ids.begin(), ids.end());
  for (std::size_t i = order_ - 1; i < padded.size(); ++i) {
    for (int k = 1; k <= order_; ++k) {
      ++by_order_[k - 1][NGramKey::Of({padded.data() + i + 1 - k, static_cast<std::size_t>(k)})];
    }
  }
}

void CountTable::RemoveStream(std::span<const WordId> ids) {
  std::vector<WordId> padded(order_ - 1, kBosId);
  padded.insert(padded.end(), ids.begin(), ids.end());
  for (std::size_t i = order_ - 1; i < padded.size(); ++i) {
    for (int k = 1; k <= order_; ++k) {
      auto& table = by_order_[k - 1];
      const auto it = table.find(
          NGramKey::Of({padded.data() + i + 1 - k, static_cast<std::size_t>(k)}));
      if (it == table.end()) throw std::logic_error("removing an unseen n-gram");
      if (--it->second == 0) table.erase(it);
    }
  }
}

void CountTable::Merge(const CountTable& other) {
  if (other.order_ != order_) throw std::invalid_argument("order mismatch");
  for (int k = 0; k < order_; ++k) {
    for (const auto& [key, count] : other.by_order_[k]) by_order_[k][key] += count;
  }
}

void CountTable::Add(const NGramKey& key, std::uint64_t count) {
  if (key.size < 1 || key.size > order_) throw std::invalid_argument("bad n-gram size");
  if (count > 0) by_order_[key.size - 1][key] += count;
}

std::vector<std::pair<NGramKey, std::uint64_t>> CountTable::Sorted(int k) const {
  std::vector<std::pair<NGramKey, std::uint64_t>> out(by_order_[k - 1].begin(),
                                                      by_order_[k - 1].end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::uint64_t CountTable::Get(std::span<const WordId> ngram) const {
  if (ngram.empty() || static_cast<int>(ngram.size()) > order_) return 0;
  const auto& table = by_order_[ngram.size() - 1];
  const auto it = table.find(NGramKey::Of(ngram));
  return it == table.end() ? 0 : it->second;
}

std::vector<double> GoodTuringDiscounts(std::span<const std::uint64_t> n,
                                        int cutoff) {
  std::vector<double> d(cutoff + 1, 1.0);
  const auto at = [&](int r) -> double {
    return r < static_cast<int>(n.size()) ? static_cast<double>(n[r]) : 0.0;
  };
  if (at(1) == 0) return d;
  int k = cutoff;
  while (k > 0 && at(k + 1) == 0) --k;
  if (k == 0) return d;
  const double common = (k + 1) * at(k + 1) / at(1);
  if (common >= 1.0) return d;
  for (int r = 1; r <= k; ++r) {
    if (at(r) == 0) continue;
    const double coeff0 = (r + 1) * at(r + 1) / (r * at(r));
    const double coeff = (coeff0 - common) / (1.0 - common);
    if (std::isfinite(coeff) && coeff > 0.0 && coeff0 <= 1.0) d[r] = coeff;
  }
  return d;
}

NGramModel NGramModel::Train(std::span<const std::vector<WordId>> streams,
                             Vocabulary vocab, NGramOptions options) {
  CheckOptions(options);
  CountTable counts(options.order);
  bool any = false;
  for (const auto& s : streams) {
    if (!s.empty()) any = true;
    counts.AddStream(s);
  }
  if (!any) throw std::invalid_argument("cannot train on an empty corpus");
  return FromCounts(std::move(vocab), std::move(counts), options);
}

NGramModel NGramModel::FromCounts(Vocabulary vocab, CountTable counts,
                                  NGramOptions options) {
  CheckOptions(options);
  if (counts.order() != options.order) throw std::invalid_argument("order mismatch");
  if (counts.Order(1).empty()) throw std::invalid_argument("cannot train on an empty corpus");
  NGramModel model;
  model.options_ = options;
  model.vocab_ = std::move(vocab);
  model.counts_ = std::move(counts);
  for (const auto& [key, count] : model.counts_.Order(1)) {
    if (key.ids[0] >= model.vocab_.size() || key.ids[0] == kBosId) {
      throw std::invalid_argument("count table uses ids outside the vocabulary");
    }
  }
  model.Estimate();
  return model;
}

NGramModel NGramModel::TrainOnLexemes(
    std::span<const std::vector<std::string>> streams, NGramOptions options,
    int min_count) {
  Vocabulary vocab = Vocabulary::Build(streams, min_count);
  std::vector<std::vector<WordId>> encoded;
  encoded.reserve(streams.size());
  for (const auto& s : streams) encoded.push_back(vocab.Encode(s));
  return Train(encoded, std::move(vocab), options);
}

void NGramModel::EstimateDiscounts() {
  const int cutoff = options_.discount_cutoff;
  discounts_.assign(options_.order + 1, {});
  for (int k = 1; k <= options_.order; ++k) {
    std::vector<std::uint64_t> count_of_counts(cutoff + 2, 0);
    for (const auto& [key, count] : counts_.Order(k)) {
      if (count <= static_cast<std::uint64_t>(cutoff + 1)) ++count_of_counts[count];
    }
    discounts_[k] = GoodTuringDiscounts(count_of_counts, cutoff);
  }
}

double NGramModel::Discount(int k, std::uint64_t r) const {
  if (k < 1 || k > options_.order) throw std::out_of_range("bad order");
  const auto& d = discounts_[k];
  return r < d.size() ? d[r] : 1.0;
}

double NGramModel::SeenProb(int k, const ContextStats& stats,
                            std::uint64_t count) const {
  return stats.scale * Discount(k, count) * static_cast<double>(count) /
         static_cast<double>(stats.total);
}

void NGramModel::Estimate() {
  EstimateDiscounts();
  const double v = static_cast<double>(vocab_.predicted_size());

  // Unigrams.
  const auto unigrams = counts_.Sorted(1);
  double total = 0;
  for (const auto& [key, count] : unigrams) total += static_cast<double>(count);
  double seen_mass = 0;
  for (const auto& [key, count] : unigrams) {
    seen_mass += Discount(1, count) * static_cast<double>(count) / total;
  }
  double reserved = 1.0 - seen_mass;
  double scale = 1.0;
  if (reserved < kMinMass) {
    reserved = 1.0 / (total + 1.0);
    scale = (1.0 - reserved) / seen_mass;
  }
  unigram_.assign(vocab_.size(), reserved / v);
  unigram_[kBosId] = 0.0;
  for (const auto& [key, count] : unigrams) {
    unigram_[key.ids[0]] +=
        scale * Discount(1, count) * static_cast<double>(count) / total;
  }

  // Higher orders, lowest first: alpha at order k needs finished order k-1.
  contexts_.assign(options_.order + 1, {});
  for (int k = 2; k <= options_.order; ++k) {
    const auto grams = counts_.Sorted(k);
    auto& contexts = contexts_[k];
    contexts.reserve(grams.size() / 2 + 1);
    std::size_t begin = 0;
    while (begin < grams.size()) {
      const NGramKey context = grams[begin].first.Head();
      std::size_t end = begin;
      std::uint64_t context_total = 0;
      while (end < grams.size() && grams[end].first.Head() == context) {
        context_total += grams[end].second;
        ++end;
      }
      ContextStats stats;
      stats.total = context_total;
      double seen = 0;
      for (std::size_t i = begin; i < end; ++i) seen += SeenProb(k, stats, grams[i].second);
      const std::size_t followers = end - begin;
      if (static_cast<double>(followers) >= v) {
        stats.scale = 1.0 / seen;
        stats.alpha = 0.0;
      } else {
        double beta = 1.0 - seen;
        if (beta < kMinMass) {
          beta = 1.0 / (static_cast<double>(context_total) + 1.0);
          stats.scale = (1.0 - beta) / seen;
        }
        const NGramKey lower_context = context.Tail();
        double lower = 0;
        for (std::size_t i = begin; i < end; ++i) {
          lower += Prob(lower_context.view(), grams[i].first.ids[k - 1]);
        }
        const double denominator = 1.0 - lower;
        if (denominator <= 0.0) {
          stats.scale = 1.0 / seen;
          stats.alpha = 0.0;
        } else {
          stats.alpha = beta / denominator;
        }
      }
      contexts.emplace(context, stats);
      begin = end;
    }
  }
}

double NGramModel::Prob(std::span<const WordId> history, WordId w) const {
  if (w >= vocab_.size() || w == kBosId) w = kUnkId;
  const std::size_t m = std::min<std::size_t>(history.size(), options_.order - 1);
  NGramKey key;
  std::copy(history.end() - m, history.end(), key.ids.begin());
  double bow = 1.0;
  for (std::size_t h = m; h >= 1; --h) {
    NGramKey context;
    std::copy(key.ids.begin() + (m - h), key.ids.begin() + m, context.ids.begin());
    context.size = static_cast<std::uint8_t>(h);
    const auto& contexts = contexts_[h + 1];
    const auto stats = contexts.find(context);
    if (stats == contexts.end()) continue;
    NGramKey full = context;
    full.ids[h] = w;
    full.size = static_cast<std::uint8_t>(h + 1);
    const auto& table = counts_.Order(static_cast<int>(h + 1));
    const auto count = table.find(full);
    if (count != table.end()) {
      return bow * SeenProb(static_cast<int>(h + 1), stats->second, count->second);
    }
    bow *= stats->second.alpha;
  }
  return bow * unigram_[w];
}

double NGramModel::BackoffWeight(std::span<const WordId> context) const {
  const std::size_t k = context.size() + 1;
  if (k < 2 || k > static_cast<std::size_t>(options_.order)) return 1.0;
  const auto& contexts = contexts_[k];
  const auto it = contexts.find(NGramKey::Of(context));
  return it == contexts.end() ? 1.0 : it->second.alpha;
}

std::uint64_t NGramModel::Count(std::span<const WordId> ngram) const {
  return counts_.Get(ngram);
}

std::uint64_t NGramModel::ContextCount(std::span<const WordId> context) const {
  const std::size_t k = context.size() + 1;
  if (k > static_cast<std::size_t>(options_.order)) return 0;
  if (k == 1) {
    std::uint64_t total = 0;
    for (const auto& [key, count] : counts_.Order(1)) total += count;
    return total;
  }
  const auto& contexts = contexts_[k];
  const auto it = contexts.find(NGramKey::Of(context));
  return it == contexts.end() ? 0 : it->second.total;
}

std::vector<NGramKey> NGramModel::ObservedContexts(int k) const {
  std::vector<NGramKey> out;
  if (k == 1) return {NGramKey{}};
  if (k < 2 || k > options_.order) return out;
  for (const auto& [key, stats] : contexts_[k]) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

std::string NGramModel::DumpText() const {
  std::ostringstream out;
  for (int k = 1; k <= options_.order; ++k) {
    for (const auto& [key, count] : counts_.Sorted(k)) {
      out << k << '\t';
      for (std::uint8_t i = 0; i < key.size; ++i) {
        if (i) out << ' ';
        out << vocab_.Lexeme(key.ids[i]);
      }
      out << '\t' << count << '\n';
    }
  }
  return out.str();
}

void NGramModel::Write(ByteWriter& out) const {
  out.Raw(kModelMagic);
  out.U32(kModelVersion);
  out.U32(static_cast<std::uint32_t>(options_.order));
  out.U32(static_cast<std::uint32_t>(options_.discount_cutoff));
  vocab_.Write(out);
  for (int k = 1; k <= options_.order; ++k) {
    const auto grams = counts_.Sorted(k);
    out.U64(grams.size());
    for (const auto& [key, count] : grams) {
      for (std::uint8_t i = 0; i < key.size; ++i) out.U32(key.ids[i]);
      out.U64(count);
    }
  }
}

NGramModel NGramModel::Read(ByteReader& in) {
  in.Expect(kModelMagic, "n-gram model");
  const std::size_t version_at = in.offset();
  const std::uint32_t version = in.U32();
  if (version != kModelVersion) {
    throw LoadError("unsupported n-gram model version " + std::to_string(version),
                    version_at);
  }
  NGramOptions options;
  options.order = static_cast<int>(in.U32());
  options.discount_cutoff = static_cast<int>(in.U32());
  if (options.order < 1 || options.order > kMaxOrder || options.discount_cutoff > 1000) {
    in.Fail("bad model options");
  }
  Vocabulary vocab = Vocabulary::Read(in);
  CountTable counts(options.order);
  for (int k = 1; k <= options.order; ++k) {
    const std::uint64_t n = in.U64();
    if (n > in.remaining() / (4ULL * k + 8)) in.Fail("count table exceeds file");
    NGramKey previous;
    for (std::uint64_t e = 0; e < n; ++e) {
      NGramKey key;
      key.size = static_cast<std::uint8_t>(k);
      for (int i = 0; i < k; ++i) {
        key.ids[i] = in.U32();
        if (key.ids[i] >= vocab.size()) in.Fail("word id out of range");
      }
      if (key.ids[k - 1] == kBosId) in.Fail("start marker in predicted position");
      if (e > 0 && !(previous < key)) in.Fail("count table is not sorted");
      const std::uint64_t count = in.U64();
      if (count == 0) in.Fail("zero count");
      counts.Add(key, count);
      previous = key;
    }
  }
  if (counts.Order(1).empty()) in.Fail("empty model");
  return FromCounts(std::move(vocab), std::move(counts), options);
}

std::string NGramModel::Serialize() const {
  ByteWriter out;
  Write(out);
  return out.Take();
}

NGramModel NGramModel::Deserialize(std::string_view bytes) {
  ByteReader in(bytes);
  NGramModel model = Read(in);
  if (!in.done()) in.Fail("trailing bytes after model");
  return model;
}

}  // namespace convlearn
