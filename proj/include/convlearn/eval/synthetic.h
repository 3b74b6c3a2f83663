#ifndef CONVLEARN_EVAL_SYNTHETIC_H_
#define CONVLEARN_EVAL_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace convlearn {

enum class IndentStyle { kTwo, kFour, kTab };

std::string_view IndentStyleName(IndentStyle style);

// One value for each of the five formatter settings covered by the shipped
// snippet library.
struct SyntheticStyle {
  bool brace_next_line = false;
  bool space_around_operators = true;
  bool space_after_keyword = true;
  IndentStyle indent = IndentStyle::kFour;
  bool blank_line_before_close = false;

  friend bool operator==(const SyntheticStyle&, const SyntheticStyle&) = default;
};

struct SyntheticOptions {
  // Files in a fixed-style corpus; base files in a balanced one.
  int files = 40;
  int methods_per_file = 6;
  std::uint64_t seed = 1;
  SyntheticStyle style;
  // Adds a method whose names occur once in the whole corpus.
  bool rare_names = false;
  // Renders every base file under all 32 combinations of the five settings
  // (indent two or four), so each setting is split 50/50 independently of
  // the others.
  bool balanced = false;
};

struct SyntheticFile {
  std::string path;
  std::string text;
  SyntheticStyle style;
};

// Java files of one class built from a fixed set of method templates. Every
// identifier and every whitespace choice is a function of its context.
std::vector<SyntheticFile> GenerateSynthetic(const SyntheticOptions& options);

// Renders one method template body (canonical form) in `style`; exposed for
// tests.
std::string RenderTemplate(std::string_view canonical, const SyntheticStyle& style,
                           int base_depth = 0);

void WriteSynthetic(const std::vector<SyntheticFile>& files,
                    const std::filesystem::path& directory);

}  // namespace convlearn

#endif  // CONVLEARN_EVAL_SYNTHETIC_H_
