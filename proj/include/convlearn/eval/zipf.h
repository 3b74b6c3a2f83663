#ifndef CONVLEARN_EVAL_ZIPF_H_
#define CONVLEARN_EVAL_ZIPF_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace convlearn {

inline constexpr double kJunkZipfSlope = 1.08;

// Discrete Zipf law over ranks 1..n: P(k) proportional to k^-s.
class ZipfSampler {
 public:
  ZipfSampler(std::size_t n, double s);

  // 1-based rank.
  std::size_t operator()(std::mt19937_64& rng);
  std::size_t n() const { return n_; }
  double s() const { return s_; }
  double Probability(std::size_t rank) const;

 private:
  std::size_t n_;
  double s_;
  std::vector<double> cdf_;
};

// Count-weighted least-squares slope of log(count) against log(rank) over
// the leading ranks with at least `min_count` draws, negated (a Zipf law
// gives back s).
// counts[0] is rank 1.
double FitZipfSlope(std::span<const std::uint64_t> counts, std::uint64_t min_count = 5);

// Pronounceable nonsense identifiers ("kovimu"), distinct and reproducible:
// Name(i) is a fixed function of i. Names in `taken` are skipped.
class NonceNames {
 public:
  explicit NonceNames(std::set<std::string, std::less<>> taken = {},
                      std::uint64_t offset = 0);

  // The i-th name not in `taken`.
  const std::string& Name(std::size_t i);
  // A name never returned before by Next() or Name(), and not taken.
  std::string Next();

 private:
  std::string Raw(std::uint64_t index) const;

  std::set<std::string, std::less<>> taken_;
  std::uint64_t offset_;
  std::uint64_t cursor_ = 0;
  std::vector<std::string> names_;
};

// Junk names drawn by Zipf rank over a pool of nonce names.
class JunkNames {
 public:
  JunkNames(std::set<std::string, std::less<>> taken, std::size_t pool = 1000,
            double s = kJunkZipfSlope);

  std::string Draw(std::mt19937_64& rng);
  bool IsJunk(std::string_view name) const { return pool_set_.count(name) > 0; }
  const std::vector<std::string>& pool() const { return pool_; }

 private:
  ZipfSampler zipf_;
  std::vector<std::string> pool_;
  std::set<std::string, std::less<>> pool_set_;
};

}  // namespace convlearn

#endif  // CONVLEARN_EVAL_ZIPF_H_
