#include "convlearn/cli/check.h"

#include <algorithm>
#include <charconv>

namespace convlearn {
namespace {

std::size_t ParseNumber(std::string_view s) {
  std::size_t v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

std::string StripPrefix(std::string_view path) {
  const auto tab = path.find('\t');
  if (tab != std::string_view::npos) path = path.substr(0, tab);
  if (path.starts_with("a/") || path.starts_with("b/")) path.remove_prefix(2);
  return std::string(path);
}

}  // namespace

std::vector<FileChange> ParseUnifiedDiff(std::string_view diff) {
  std::vector<FileChange> out;
  bool active = false;
  std::size_t at = 0;
  while (at < diff.size()) {
    auto end = diff.find('\n', at);
    if (end == std::string_view::npos) end = diff.size();
    std::string_view line = diff.substr(at, end - at);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    at = end + 1;

    if (line.starts_with("+++ ")) {
      const std::string_view path = line.substr(4);
      active = path != "/dev/null" && !path.starts_with("/dev/null\t");
      if (active) out.push_back({StripPrefix(path), {}});
      continue;
    }
    if (!active || !line.starts_with("@@ ")) continue;
    // @@ -a[,b] +c[,d] @@
    const auto plus = line.find(" +");
    if (plus == std::string_view::npos) continue;
    std::string_view spec = line.substr(plus + 2);
    spec = spec.substr(0, spec.find(' '));
    const auto comma = spec.find(',');
    const std::size_t start = ParseNumber(spec.substr(0, comma));
    const std::size_t count =
        comma == std::string_view::npos ? 1 : ParseNumber(spec.substr(comma + 1));
    if (count == 0) continue;
    out.back().lines.push_back({start, start + count - 1});
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const FileChange& c) { return c.lines.empty(); }),
            out.end());
  return out;
}

std::vector<TokenRange> ChangedTokenRanges(const SourceFile& file,
                                           const std::vector<LineRange>& lines) {
  std::vector<std::size_t> line_starts{0};
  for (std::size_t i = 0; i < file.text.size(); ++i) {
    if (file.text[i] == '\n') line_starts.push_back(i + 1);
  }
  const auto line_of = [&](std::size_t offset) {
    return static_cast<std::size_t>(
        std::upper_bound(line_starts.begin(), line_starts.end(), offset) -
        line_starts.begin());
  };
  std::vector<TokenRange> out;
  for (std::size_t i = 0; i < file.tokens.size(); ++i) {
    const std::size_t line = line_of(file.tokens[i].span.begin);
    const bool changed = std::any_of(lines.begin(), lines.end(), [&](const LineRange& r) {
      return line >= r.first && line <= r.last;
    });
    if (!changed) continue;
    if (!out.empty() && out.back().end == i) {
      out.back().end = i + 1;
    } else {
      out.push_back({i, i + 1});
    }
  }
  return out;
}

Decision CheckTargets(const Engine& engine, const std::vector<CheckTarget>& targets,
                      DecisionMode mode, double threshold) {
  Decision total;
  total.threshold = threshold;
  for (const CheckTarget& t : targets) {
    PreparedFile prepared = engine.Prepare(t.file);
    for (const TokenRange& range : t.ranges) {
      Decision d = engine.Decide(prepared, range, mode, threshold);
      total.locations += d.locations;
      if (d.worst && (!total.worst || d.g > total.g)) {
        total.g = d.g;
        total.worst = std::move(d.worst);
      }
    }
  }
  total.reject = threshold == kNegativeInfinity || total.g > threshold;
  return total;
}

}  // namespace convlearn
