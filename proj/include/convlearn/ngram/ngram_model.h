#ifndef CONVLEARN_NGRAM_NGRAM_MODEL_H_
#define CONVLEARN_NGRAM_NGRAM_MODEL_H_

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "convlearn/ngram/binary_io.h"
#include "convlearn/ngram/vocabulary.h"

namespace convlearn {

inline constexpr int kMaxOrder = 8;
inline constexpr int kDefaultOrder = 5;
inline constexpr int kDefaultDiscountCutoff = 5;

struct NGramKey {
  std::array<WordId, kMaxOrder> ids{};
  std::uint8_t size = 0;

  static NGramKey Of(std::span<const WordId> words);
  std::span<const WordId> view() const { return {ids.data(), size}; }
  // Drops the first word (the lower-order context).
  NGramKey Tail() const;
  // Drops the last word.
  NGramKey Head() const;

  friend bool operator==(const NGramKey& a, const NGramKey& b) {
    return a.size == b.size &&
           std::equal(a.ids.begin(), a.ids.begin() + a.size, b.ids.begin());
  }
  friend bool operator<(const NGramKey& a, const NGramKey& b) {
    return std::lexicographical_compare(a.ids.begin(), a.ids.begin() + a.size,
                                        b.ids.begin(), b.ids.begin() + b.size);
  }
};

struct NGramKeyHash {
  std::size_t operator()(const NGramKey& key) const;
};

using NGramCounts = std::unordered_map<NGramKey, std::uint64_t, NGramKeyHash>;

// Raw k-gram counts for k = 1..order. Every stream is preceded by order-1
// start markers; there is no end marker and no window crosses two streams.
class CountTable {
 public:
  explicit CountTable(int order = kDefaultOrder);

  void AddStream(std::span<const WordId> ids);
  // Removes a stream previously added. Throws std::logic_error if the
  // counts would go negative.
  void RemoveStream(std::span<const WordId> ids);
  void Merge(const CountTable& other);
  void Add(const NGramKey& key, std::uint64_t count);

  int order() const { return order_; }
  const NGramCounts& Order(int k) const { return by_order_[k - 1]; }
  std::vector<std::pair<NGramKey, std::uint64_t>> Sorted(int k) const;
  std::uint64_t Get(std::span<const WordId> ngram) const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  int order_;
  std::vector<NGramCounts> by_order_;
};

struct NGramOptions {
  int order = kDefaultOrder;
  // Good-Turing discounting applies to counts 1..discount_cutoff.
  int discount_cutoff = kDefaultDiscountCutoff;
};

// Katz back-off model with Good-Turing discounts.
//
//   P(w|h) = d(c(hw)) c(hw) / c(h)          if c(hw) > 0
//          = alpha(h) P(w|h')                otherwise, h' = h minus its oldest word
//
// with c(h) = sum_w c(hw). The unigram level spreads the discounted mass
// uniformly over V. Two guards keep every distribution proper and nonzero:
// when all of V follows h the seen estimates are renormalized, and when the
// discounts leave (numerically) no mass, 1/(c(h)+1) is reserved for unseen
// words.
class NGramModel {
 public:
  static NGramModel Train(std::span<const std::vector<WordId>> streams,
                          Vocabulary vocab, NGramOptions options = {});
  static NGramModel FromCounts(Vocabulary vocab, CountTable counts,
                               NGramOptions options);
  // Builds the vocabulary and trains in one step.
  static NGramModel TrainOnLexemes(
      std::span<const std::vector<std::string>> streams,
      NGramOptions options = {}, int min_count = kDefaultMinCount);

  int order() const { return options_.order; }
  const NGramOptions& options() const { return options_; }
  const Vocabulary& vocab() const { return vocab_; }
  const CountTable& counts() const { return counts_; }

  // P(w | history). Only the last order-1 ids of `history` are used; callers
  // supply kBosId padding at the start of a file.
  double Prob(std::span<const WordId> history, WordId w) const;
  double LogProb(std::span<const WordId> history, WordId w) const {
    return std::log(Prob(history, w));
  }

  // Good-Turing coefficient for a k-gram seen r times (1 when undiscounted).
  double Discount(int k, std::uint64_t r) const;
  // alpha(context); 1 for contexts never observed.
  double BackoffWeight(std::span<const WordId> context) const;
  std::uint64_t Count(std::span<const WordId> ngram) const;
  // c(h) = sum over w of c(hw).
  std::uint64_t ContextCount(std::span<const WordId> context) const;
  // Contexts of length k-1 that were observed at order k, sorted.
  std::vector<NGramKey> ObservedContexts(int k) const;

  // One k-gram per line: "k<TAB>lexemes<TAB>count", sorted.
  std::string DumpText() const;

  void Write(ByteWriter& out) const;
  static NGramModel Read(ByteReader& in);
  std::string Serialize() const;
  // Throws LoadError.
  static NGramModel Deserialize(std::string_view bytes);

 private:
  struct ContextStats {
    std::uint64_t total = 0;
    double scale = 1.0;
    double alpha = 1.0;
  };

  void Estimate();
  void EstimateDiscounts();
  double SeenProb(int k, const ContextStats& stats, std::uint64_t count) const;

  NGramOptions options_;
  Vocabulary vocab_;
  CountTable counts_;
  // discounts_[k][r] for r in 0..cutoff; beyond the cutoff the coefficient is 1.
  std::vector<std::vector<double>> discounts_;
  // contexts_[k] holds the contexts of order k (k >= 2).
  std::vector<std::unordered_map<NGramKey, ContextStats, NGramKeyHash>> contexts_;
  std::vector<double> unigram_;
};

// Good-Turing coefficients d_1..d_cutoff from count-of-counts n_1..n_{cutoff+1}
// (index r of the result; index 0 unused). Returns all ones when the
// estimates are unusable.
std::vector<double> GoodTuringDiscounts(std::span<const std::uint64_t> count_of_counts,
                                        int cutoff);

}  // namespace convlearn

#endif  // CONVLEARN_NGRAM_NGRAM_MODEL_H_
