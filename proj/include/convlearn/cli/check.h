#ifndef CONVLEARN_CLI_CHECK_H_
#define CONVLEARN_CLI_CHECK_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "convlearn/lexer/source_file.h"
#include "convlearn/suggest/engine.h"

namespace convlearn {

// Inclusive 1-based line range of the new side of a hunk.
struct LineRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct FileChange {
  std::string path;
  std::vector<LineRange> lines;
};

// Reads the "+++" headers and "@@" hunk headers of a unified diff. Pure
// deletions and deleted files contribute nothing; an "a/" or "b/" prefix is
// stripped.
std::vector<FileChange> ParseUnifiedDiff(std::string_view diff);

// Token ranges covering the tokens that start on the given lines; adjacent
// ranges are merged.
std::vector<TokenRange> ChangedTokenRanges(const SourceFile& file,
                                           const std::vector<LineRange>& lines);

struct CheckTarget {
  SourceFile file;
  std::vector<TokenRange> ranges;
};

// One decision over all targets: G is the largest G of any range.
Decision CheckTargets(const Engine& engine, const std::vector<CheckTarget>& targets,
                      DecisionMode mode, double threshold);

}  // namespace convlearn

#endif  // CONVLEARN_CLI_CHECK_H_
