#include "convlearn/suggest/calibrate.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace convlearn {

std::vector<CodeSpan> EligibleSpans(std::span<const SourceFile> files,
                                    std::size_t min_tokens, std::size_t max_tokens) {
  std::vector<CodeSpan> out;
  for (std::size_t f = 0; f < files.size(); ++f) {
    const auto& regions = files[f].scopes.regions();
    for (std::size_t r = 1; r < regions.size(); ++r) {
      const ScopeRegion& region = regions[r];
      const std::size_t n = region.end - region.begin;
      if (n >= min_tokens && n <= max_tokens) {
        out.push_back({f, {region.begin, region.end}});
      }
    }
  }
  return out;
}

std::vector<CodeSpan> SampleSpans(std::span<const CodeSpan> eligible, std::size_t count,
                                  std::uint64_t seed) {
  std::vector<CodeSpan> out;
  if (eligible.empty()) return out;
  std::mt19937_64 rng(seed);
  std::vector<CodeSpan> pool(eligible.begin(), eligible.end());
  const std::size_t distinct = std::min(count, pool.size());
  for (std::size_t i = 0; i < distinct; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
    out.push_back(pool[i]);
  }
  std::uniform_int_distribution<std::size_t> any(0, pool.size() - 1);
  while (out.size() < count) out.push_back(pool[any(rng)]);
  return out;
}

std::vector<double> SpanScores(const Engine& engine, std::span<const SourceFile> files,
                               std::span<const CodeSpan> spans, DecisionMode mode) {
  std::vector<double> scores;
  scores.reserve(spans.size());
  std::vector<std::optional<PreparedFile>> prepared(files.size());
  for (const CodeSpan& s : spans) {
    auto& p = prepared.at(s.file);
    if (!p) p = engine.Prepare(files[s.file]);
    scores.push_back(engine.Decide(*p, s.range, mode, kPositiveInfinity).g);
  }
  return scores;
}

double EstimateFpr(std::span<const double> scores, double threshold) {
  if (scores.empty()) return 0.0;
  const auto rejected = std::count_if(scores.begin(), scores.end(),
                                      [&](double g) { return g > threshold; });
  return static_cast<double>(rejected) / static_cast<double>(scores.size());
}

std::vector<double> ThresholdGrid(double lo, double hi, std::uint32_t points) {
  if (points < 2 || lo == hi) return {lo};
  std::vector<double> grid(points);
  for (std::uint32_t i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  grid.back() = hi;
  return grid;
}

ThresholdChoice ChooseThreshold(std::span<const double> scores, double alpha,
                                std::uint32_t points) {
  double lo = kPositiveInfinity;
  double hi = kNegativeInfinity;
  for (double g : scores) {
    if (!std::isfinite(g)) continue;
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  if (lo > hi) lo = hi = 0.0;

  ThresholdChoice choice;
  const auto grid = ThresholdGrid(lo, hi, points);
  choice.grid_min = grid.front();
  choice.grid_max = grid.back();
  choice.grid_points = static_cast<std::uint32_t>(grid.size());
  for (double t : grid) {
    const double fpr = EstimateFpr(scores, t);
    if (fpr <= alpha) {
      choice.threshold = t;
      choice.fpr = fpr;
      return choice;
    }
  }
  choice.threshold = grid.back();
  choice.fpr = EstimateFpr(scores, grid.back());
  choice.warning = true;
  return choice;
}

CalibrationRecord CalibrateThreshold(const Engine& engine,
                                     std::span<const SourceFile> files, double alpha,
                                     DecisionMode mode, std::uint64_t seed,
                                     std::size_t samples) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  const auto eligible = EligibleSpans(files);
  if (eligible.size() < kMinEligibleSpans) {
    throw CalibrationError("corpus too small to calibrate: " +
                           std::to_string(eligible.size()) + " spans of " +
                           std::to_string(kMinSpanTokens) + "-" +
                           std::to_string(kMaxSpanTokens) + " tokens, need " +
                           std::to_string(kMinEligibleSpans));
  }
  const auto spans = SampleSpans(eligible, samples, seed);
  const auto scores = SpanScores(engine, files, spans, mode);
  const ThresholdChoice choice = ChooseThreshold(scores, alpha);

  CalibrationRecord record;
  record.alpha = alpha;
  record.threshold = choice.threshold;
  record.mode = mode;
  record.seed = seed;
  record.samples = spans.size();
  record.eligible_spans = eligible.size();
  record.grid_min = choice.grid_min;
  record.grid_max = choice.grid_max;
  record.grid_points = choice.grid_points;
  record.estimated_fpr = choice.fpr;
  record.warning = choice.warning;
  return record;
}

}  // namespace convlearn
