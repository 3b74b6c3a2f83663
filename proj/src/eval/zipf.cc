#include "convlearn/eval/zipf.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace convlearn {
namespace {

constexpr std::string_view kConsonants = "bdfgklmnprstvz";
constexpr std::string_view kVowels = "aeiou";
constexpr std::uint64_t kSyllables = 14 * 5;
constexpr std::uint64_t kSpace = kSyllables * kSyllables * kSyllables;
// Coprime with kSpace; spreads consecutive indices over the name space.
constexpr std::uint64_t kStride = 104729;

}  // namespace

ZipfSampler::ZipfSampler(std::size_t n, double s) : n_(n), s_(s) {
  if (n == 0) throw std::invalid_argument("Zipf support must be non-empty");
  cdf_.resize(n);
  double total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    total += std::pow(static_cast<double>(k), -s);
    cdf_[k - 1] = total;
  }
  for (double& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

std::size_t ZipfSampler::operator()(std::mt19937_64& rng) {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return static_cast<std::size_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) -
                                  cdf_.begin()) +
         1;
}

double ZipfSampler::Probability(std::size_t rank) const {
  if (rank == 0 || rank > n_) return 0.0;
  return cdf_[rank - 1] - (rank > 1 ? cdf_[rank - 2] : 0.0);
}

double FitZipfSlope(std::span<const std::uint64_t> counts, std::uint64_t min_count) {
  // Weighted by the count: log(count) has variance about 1/count.
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t r = 0; r < counts.size() && counts[r] >= min_count; ++r) {
    const double w = static_cast<double>(counts[r]);
    const double x = std::log(static_cast<double>(r + 1));
    const double y = std::log(w);
    sw += w;
    sx += w * x;
    sy += w * y;
    sxx += w * x * x;
    sxy += w * x * y;
    ++m;
  }
  if (m < 2) return 0.0;
  return -(sw * sxy - sx * sy) / (sw * sxx - sx * sx);
}

NonceNames::NonceNames(std::set<std::string, std::less<>> taken, std::uint64_t offset)
    : taken_(std::move(taken)), offset_(offset) {}

std::string NonceNames::Raw(std::uint64_t index) const {
  std::uint64_t v = (index % kSpace) * kStride % kSpace;
  std::string name;
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t syllable = v % kSyllables;
    v /= kSyllables;
    name += kConsonants[syllable / 5];
    name += kVowels[syllable % 5];
  }
  if (index >= kSpace) name += std::to_string(index / kSpace);
  return name;
}

const std::string& NonceNames::Name(std::size_t i) {
  while (names_.size() <= i) {
    std::string name = Raw(offset_ + cursor_++);
    if (!taken_.count(name)) names_.push_back(std::move(name));
  }
  return names_[i];
}

std::string NonceNames::Next() { return Name(names_.size()); }

JunkNames::JunkNames(std::set<std::string, std::less<>> taken, std::size_t pool, double s)
    : zipf_(pool, s) {
  NonceNames names(std::move(taken));
  for (std::size_t i = 0; i < pool; ++i) pool_.push_back(names.Name(i));
  pool_set_.insert(pool_.begin(), pool_.end());
}

std::string JunkNames::Draw(std::mt19937_64& rng) { return pool_[zipf_(rng) - 1]; }

}  // namespace convlearn
