#ifndef CONVLEARN_CLI_CORPUS_H_
#define CONVLEARN_CLI_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "convlearn/lexer/language_profile.h"
#include "convlearn/lexer/source_file.h"

namespace convlearn {

// Which files make up a training corpus. Globs are fnmatch patterns matched
// against the path relative to its root; a file is kept when it matches some
// include pattern (or there are none) and no exclude pattern.
struct CorpusSpec {
  std::vector<std::filesystem::path> roots;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  // With leading dot, e.g. ".java". Empty accepts every extension.
  std::vector<std::string> extensions;
  std::uint64_t max_file_bytes = 1 << 20;
  // Paths left out, e.g. the test file of a leave-one-out run.
  std::vector<std::filesystem::path> holdouts;
};

// Sorted, de-duplicated file list. A root may also be a single file, which
// is kept regardless of the globs.
std::vector<std::filesystem::path> ResolveCorpus(const CorpusSpec& spec,
                                                 std::vector<std::string>* warnings = nullptr);

// Reads and analyzes each file; unreadable or unlexable files are skipped
// and reported in `warnings`.
std::vector<SourceFile> LoadCorpus(const std::vector<std::filesystem::path>& paths,
                                   const LanguageProfile& profile, int bucket_size,
                                   std::vector<std::string>* warnings = nullptr);

}  // namespace convlearn

#endif  // CONVLEARN_CLI_CORPUS_H_
