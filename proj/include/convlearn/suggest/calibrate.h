#ifndef CONVLEARN_SUGGEST_CALIBRATE_H_
#define CONVLEARN_SUGGEST_CALIBRATE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "convlearn/lexer/source_file.h"
#include "convlearn/suggest/convention_model.h"
#include "convlearn/suggest/engine.h"

namespace convlearn {

inline constexpr std::size_t kMinSpanTokens = 20;
inline constexpr std::size_t kMaxSpanTokens = 200;
inline constexpr std::size_t kDefaultCalibrationSamples = 500;
inline constexpr std::size_t kMinEligibleSpans = 50;
inline constexpr std::uint32_t kGridPoints = 101;

// Too few spans to calibrate on.
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CodeSpan {
  std::size_t file = 0;
  TokenRange range;

  friend bool operator==(const CodeSpan& a, const CodeSpan& b) {
    return a.file == b.file && a.range.begin == b.range.begin && a.range.end == b.range.end;
  }
};

// Brace regions (from '{' to '}') whose token count lies in [min, max].
std::vector<CodeSpan> EligibleSpans(std::span<const SourceFile> files,
                                    std::size_t min_tokens = kMinSpanTokens,
                                    std::size_t max_tokens = kMaxSpanTokens);

// `count` spans drawn with mt19937_64(seed): without replacement while the
// pool lasts, with replacement beyond it.
std::vector<CodeSpan> SampleSpans(std::span<const CodeSpan> eligible, std::size_t count,
                                  std::uint64_t seed);

// G of each span.
std::vector<double> SpanScores(const Engine& engine, std::span<const SourceFile> files,
                               std::span<const CodeSpan> spans, DecisionMode mode);

// Fraction of scores above `threshold`.
double EstimateFpr(std::span<const double> scores, double threshold);

// Evenly spaced over [lo, hi]; a single point when lo == hi.
std::vector<double> ThresholdGrid(double lo, double hi, std::uint32_t points = kGridPoints);

struct ThresholdChoice {
  double threshold = 0.0;
  double fpr = 0.0;
  double grid_min = 0.0;
  double grid_max = 0.0;
  std::uint32_t grid_points = 0;
  bool warning = false;
};

// Smallest grid value whose FPR is at most alpha; the largest grid value,
// with a warning, when none is. The grid spans the finite scores.
ThresholdChoice ChooseThreshold(std::span<const double> scores, double alpha,
                                std::uint32_t points = kGridPoints);

// Throws CalibrationError when fewer than kMinEligibleSpans spans exist.
CalibrationRecord CalibrateThreshold(const Engine& engine,
                                     std::span<const SourceFile> files, double alpha,
                                     DecisionMode mode, std::uint64_t seed,
                                     std::size_t samples = kDefaultCalibrationSamples);

}  // namespace convlearn

#endif  // CONVLEARN_SUGGEST_CALIBRATE_H_
