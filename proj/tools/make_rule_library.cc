// Writes the starter snippet library for `convlearn genrule`.
//
//   make_rule_library <directory>
//
// Each setting gets one small snippet rendered once per value and, for every
// value, once per combination of the other settings that change its layout.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "convlearn/eval/synthetic.h"

namespace fs = std::filesystem;
using convlearn::IndentStyle;
using convlearn::SyntheticStyle;

namespace {

// Canonical form: '~' marks an operator space, '^' the keyword-paren space.
// The snippets are built from common idioms so that their contexts are
// likely to be attested in a training corpus; an unattested context makes
// the score depend on backoff rather than on the setting.
constexpr std::string_view kBlocks = R"(public class Sample {
public int sumValues(List<Integer> values) {
return values.size();
}
})";

constexpr std::string_view kOperators = R"(public class Sample {
public int sumValues(List<Integer> values) {
int total~=~0;
total~+=~values.size();
return total;
}
})";

constexpr std::string_view kKeywords = R"(public class Sample {
public List<String> filterEmpty(List<String> lines) {
for^(String line : lines) {
if^(line.isEmpty()) {
return lines;
}
}
return lines;
}
})";

struct Axis {
  std::string name;
  std::vector<std::string> values;
  std::function<void(SyntheticStyle&, const std::string&)> set;
};

const std::vector<Axis>& Axes() {
  static const std::vector<Axis> axes = {
      {"brace_placement",
       {"end_of_line", "next_line"},
       [](SyntheticStyle& s, const std::string& v) { s.brace_next_line = v == "next_line"; }},
      {"indent_width",
       {"2", "4", "tab"},
       [](SyntheticStyle& s, const std::string& v) {
         s.indent = v == "2" ? IndentStyle::kTwo : v == "4" ? IndentStyle::kFour : IndentStyle::kTab;
       }},
      {"blank_line_before_closing_brace",
       {"false", "true"},
       [](SyntheticStyle& s, const std::string& v) { s.blank_line_before_close = v == "true"; }},
      {"space_around_operators",
       {"false", "true"},
       [](SyntheticStyle& s, const std::string& v) { s.space_around_operators = v == "true"; }},
      {"space_after_keyword",
       {"false", "true"},
       [](SyntheticStyle& s, const std::string& v) { s.space_after_keyword = v == "true"; }},
  };
  return axes;
}

// Short tag of a nuisance value in file names.
std::string Tag(const std::string& axis, const std::string& value) {
  if (axis == "brace_placement") return value == "next_line" ? "next" : "eol";
  if (axis == "indent_width") return value;
  if (axis == "blank_line_before_closing_brace") return value == "true" ? "blank" : "noblank";
  return value;
}

void Write(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text << "\n";
}

// Renders `canonical` for every value of `setting` under every combination
// of `nuisance` axes.
void Emit(const fs::path& root, const std::string& setting, std::string_view canonical,
          const std::vector<std::string>& nuisance) {
  const auto& axes = Axes();
  const auto find = [&](const std::string& name) -> const Axis& {
    for (const Axis& a : axes) {
      if (a.name == name) return a;
    }
    throw std::logic_error("unknown axis " + name);
  };
  const Axis& target = find(setting);
  fs::create_directories(root / setting);
  std::vector<std::size_t> choice(nuisance.size(), 0);
  for (;;) {
    for (const std::string& value : target.values) {
      SyntheticStyle style;
      target.set(style, value);
      std::string name = value;
      std::string tags;
      for (std::size_t i = 0; i < nuisance.size(); ++i) {
        const Axis& a = find(nuisance[i]);
        a.set(style, a.values[choice[i]]);
        tags += (tags.empty() ? "" : "-") + Tag(a.name, a.values[choice[i]]);
      }
      if (!tags.empty()) name += "." + tags;
      Write(root / setting / (name + ".java"), convlearn::RenderTemplate(canonical, style));
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == find(nuisance[i]).values.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_rule_library <directory>\n";
    return 2;
  }
  const fs::path root = argv[1];
  Emit(root, "brace_placement", kBlocks, {"indent_width", "blank_line_before_closing_brace"});
  Emit(root, "indent_width", kBlocks, {"brace_placement", "blank_line_before_closing_brace"});
  Emit(root, "blank_line_before_closing_brace", kBlocks, {"brace_placement", "indent_width"});
  const std::vector<std::string> layout = {"brace_placement", "indent_width",
                                           "blank_line_before_closing_brace"};
  Emit(root, "space_around_operators", kOperators, layout);
  Emit(root, "space_after_keyword", kKeywords, layout);
  return 0;
}
