#include "convlearn/ngram/score.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace convlearn {
namespace {

// Fills `buffer` with the order-1 ids preceding position i, start-padded.
std::span<const WordId> History(std::span<const WordId> ids, std::size_t i,
                                int order, std::array<WordId, kMaxOrder>& buffer) {
  const std::size_t h = static_cast<std::size_t>(order - 1);
  for (std::size_t j = 0; j < h; ++j) {
    const std::size_t back = h - j;  // distance from i
    buffer[j] = back > i ? kBosId : ids[i - back];
  }
  return {buffer.data(), h};
}

}  // namespace

double TokenProb(const NGramModel& model, std::span<const WordId> ids,
                 std::size_t i) {
  std::array<WordId, kMaxOrder> buffer;
  return model.Prob(History(ids, i, model.order(), buffer), ids[i]);
}

double TokenLogProb(const NGramModel& model, std::span<const WordId> ids,
                    std::size_t i) {
  return std::log(TokenProb(model, ids, i));
}

double LogProbRange(const NGramModel& model, std::span<const WordId> ids,
                    std::size_t begin, std::size_t end) {
  double sum = 0;
  for (std::size_t i = begin; i < end && i < ids.size(); ++i) {
    sum += TokenLogProb(model, ids, i);
  }
  return sum;
}

double Score(const NGramModel& model, std::span<const WordId> ids) {
  if (ids.empty()) throw std::invalid_argument("cannot score an empty sequence");
  return LogProbRange(model, ids, 0, ids.size()) / static_cast<double>(ids.size());
}

double Gap(const NGramModel& model, std::span<const WordId> y,
           std::span<const WordId> z) {
  return Score(model, y) - Score(model, z);
}

std::vector<std::size_t> AffectedPositions(std::span<const std::size_t> locations,
                                           int order, std::size_t length) {
  std::vector<std::size_t> out;
  for (std::size_t p : locations) {
    for (std::size_t i = p; i < p + static_cast<std::size_t>(order) && i < length; ++i) {
      out.push_back(i);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double GapFast(const NGramModel& model, std::span<const WordId> y,
               std::span<const WordId> z,
               std::span<const std::size_t> diff_locations, GapStats* stats) {
  GapStats local;
  GapStats& s = stats ? *stats : local;
  s = {};
  bool shaped = y.size() == z.size() && !y.empty();
  if (shaped) {
    std::vector<bool> allowed(y.size(), false);
    for (std::size_t p : diff_locations) {
      if (p >= y.size()) {
        shaped = false;
        break;
      }
      allowed[p] = true;
    }
    for (std::size_t i = 0; shaped && i < y.size(); ++i) {
      if (y[i] != z[i] && !allowed[i]) shaped = false;
    }
  }
  if (!shaped) {
    s.fell_back = true;
    s.windows_examined = y.size() + z.size();
    return Gap(model, y, z);
  }
  std::vector<std::size_t> changed;
  for (std::size_t p : diff_locations) {
    if (y[p] != z[p]) changed.push_back(p);
  }
  double diff = 0;
  for (std::size_t i : AffectedPositions(changed, model.order(), y.size())) {
    diff += TokenLogProb(model, y, i) - TokenLogProb(model, z, i);
    ++s.windows_examined;
  }
  return diff / static_cast<double>(y.size());
}

CrossProjectModel::CrossProjectModel(const NGramModel& global,
                                     const NGramModel& local, double lambda)
    : global_(&global), local_(&local), lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must be in [0, 1]");
  }
}

double CrossProjectModel::LogProbRange(std::span<const std::string> lexemes,
                                       std::size_t begin, std::size_t end) const {
  end = std::min(end, lexemes.size());
  if (begin >= end) return 0.0;
  // Each component only needs its own encoding of the window plus history.
  const std::size_t from_g = begin >= static_cast<std::size_t>(global_->order() - 1)
                                 ? begin - (global_->order() - 1)
                                 : 0;
  const std::size_t from_a = begin >= static_cast<std::size_t>(local_->order() - 1)
                                 ? begin - (local_->order() - 1)
                                 : 0;
  const std::size_t from = std::min(from_g, from_a);
  const auto window = lexemes.subspan(from, end - from);
  const std::vector<WordId> g = global_->vocab().Encode(window);
  const std::vector<WordId> a = local_->vocab().Encode(window);
  std::array<WordId, kMaxOrder> gbuf;
  std::array<WordId, kMaxOrder> abuf;
  double sum = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const std::size_t local_i = i - from;
    const auto history = [&](const NGramModel& m, const std::vector<WordId>& ids,
                             std::array<WordId, kMaxOrder>& buf) {
      const std::size_t h = static_cast<std::size_t>(m.order() - 1);
      for (std::size_t j = 0; j < h; ++j) {
        const std::size_t back = h - j;
        buf[j] = back > i ? kBosId : ids[local_i - back];
      }
      return std::span<const WordId>(buf.data(), h);
    };
    const double pg = global_->Prob(history(*global_, g, gbuf), g[local_i]);
    const double pa = local_->Prob(history(*local_, a, abuf), a[local_i]);
    sum += std::log(lambda_ * pg + (1.0 - lambda_) * pa);
  }
  return sum;
}

double ScoreCrossProject(const CrossProjectModel& model,
                         std::span<const std::string> lexemes) {
  if (lexemes.empty()) throw std::invalid_argument("cannot score an empty sequence");
  return model.LogProbRange(lexemes, 0, lexemes.size()) /
         static_cast<double>(lexemes.size());
}

}  // namespace convlearn
