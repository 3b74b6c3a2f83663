#include "convlearn/eval/synthetic.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>

#include "convlearn/eval/zipf.h"

namespace convlearn {
namespace {

// One statement per line; braces drive indentation. `~` marks the space
// around a binary operator, `^` the space between a keyword and '('.
constexpr std::string_view kTemplates[] = {
    R"(public int sumValues(List<Integer> values) {
int total~=~0;
for^(int value : values) {
total~+=~value;
}
return total;
})",
    R"(public String joinNames(List<String> names, String separator) {
StringBuilder builder~=~new StringBuilder();
for^(int index~=~0; index~<~names.size(); index++) {
if^(index~>~0) {
builder.append(separator);
}
builder.append(names.get(index));
}
return builder.toString();
})",
    R"(public int findIndex(int[] items, int target) {
int low~=~0;
int high~=~items.length~-~1;
while^(low~<=~high) {
int middle~=~(low~+~high)~/~2;
if^(items[middle]~==~target) {
return middle;
} else if^(items[middle]~<~target) {
low~=~middle~+~1;
} else {
high~=~middle~-~1;
}
}
return -1;
})",
    R"(public Map<String, Integer> countWords(String text) {
Map<String, Integer> counts~=~new HashMap<>();
for^(String word : text.split(" ")) {
counts.merge(word, 1, Integer::sum);
}
return counts;
})",
    R"(public void closeQuietly(Closeable resource) {
try {
resource.close();
} catch^(IOException ignored) {
logger.warning("close failed");
}
})",
    R"(public double average(double[] samples) {
if^(samples.length~==~0) {
return 0.0;
}
double sum~=~0.0;
for^(double sample : samples) {
sum~+=~sample;
}
return sum~/~samples.length;
})",
    R"(public List<String> filterEmpty(List<String> lines) {
List<String> result~=~new ArrayList<>();
for^(String line : lines) {
if^(!line.isEmpty()) {
result.add(line);
}
}
return result;
})",
    R"(public int maxOf(int first, int second) {
if^(first~>~second) {
return first;
}
return second;
})",
    R"(public String describe(Object value) {
switch^(value.hashCode()~%~3) {
case 0:
return "zero";
case 1:
return "one";
default:
return "many";
}
})",
    R"(public void copyInto(int[] source, int[] destination) {
int limit~=~Math.min(source.length, destination.length);
for^(int cursor~=~0; cursor~<~limit; cursor++) {
destination[cursor]~=~source[cursor];
}
})",
    R"(public boolean containsKey(Map<String, String> table, String key) {
String found~=~table.get(key);
while^(found~!=~null~&&~found.isEmpty()) {
found~=~table.get(found);
}
return found~!=~null;
})",
    R"(public long factorial(int number) {
long product~=~1;
do {
product~*=~number;
number--;
} while^(number~>~1);
return product;
})",
};

constexpr std::string_view kRareTemplate = R"(public void register(Registry registry) {
registry.add($RARE1$);
registry.bind("key", $RARE2$);
registry.flush();
})";

constexpr std::string_view kHeader = R"(package synth;

import java.io.Closeable;
import java.io.IOException;
import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;
)";

std::string Indent(const SyntheticStyle& style, int depth) {
  switch (style.indent) {
    case IndentStyle::kTwo:
      return std::string(2 * depth, ' ');
    case IndentStyle::kFour:
      return std::string(4 * depth, ' ');
    case IndentStyle::kTab:
      return std::string(depth, '\t');
  }
  return {};
}

std::string Strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t at = s.find(from); at != std::string::npos;
       at = s.find(from, at + to.size())) {
    s.replace(at, from.size(), to);
  }
}

std::string RenderFile(const std::vector<std::string>& methods, const SyntheticStyle& style) {
  std::string out(kHeader);
  out += "\n";
  std::string body = "public class Widget {\n";
  for (std::size_t i = 0; i < methods.size(); ++i) {
    if (i > 0) body += "\n";
    body += methods[i] + "\n";
  }
  body += "}";
  out += RenderTemplate(body, style);
  out += "\n";
  return out;
}

SyntheticStyle StyleOfIndex(int v) {
  SyntheticStyle s;
  s.brace_next_line = v & 1;
  s.space_around_operators = v & 2;
  s.space_after_keyword = v & 4;
  s.indent = (v & 8) ? IndentStyle::kFour : IndentStyle::kTwo;
  s.blank_line_before_close = v & 16;
  return s;
}

}  // namespace

std::string_view IndentStyleName(IndentStyle style) {
  switch (style) {
    case IndentStyle::kTwo:
      return "2";
    case IndentStyle::kFour:
      return "4";
    case IndentStyle::kTab:
      return "tab";
  }
  return "?";
}

std::string RenderTemplate(std::string_view canonical, const SyntheticStyle& style,
                           int base_depth) {
  std::vector<std::string> lines;
  int depth = base_depth;
  bool after_open = false;
  const auto emit = [&](const std::string& text) {
    lines.push_back(text.empty() ? text : Indent(style, depth) + text);
  };
  std::size_t at = 0;
  while (at <= canonical.size()) {
    auto end = canonical.find('\n', at);
    if (end == std::string_view::npos) end = canonical.size();
    const std::string line = Strip(canonical.substr(at, end - at));
    at = end + 1;
    if (line.empty()) {
      lines.emplace_back();
      continue;
    }
    const bool closes = line.front() == '}';
    const bool opens = line.back() == '{';
    if (closes) {
      --depth;
      if (style.blank_line_before_close && !after_open && !lines.empty() &&
          !lines.back().empty()) {
        lines.emplace_back();
      }
    }
    if (closes && opens) {
      if (style.brace_next_line) {
        emit("}");
        emit(Strip(std::string_view(line).substr(1, line.size() - 2)));
        emit("{");
      } else {
        emit(line);
      }
      ++depth;
    } else if (opens) {
      if (style.brace_next_line) {
        emit(Strip(std::string_view(line).substr(0, line.size() - 1)));
        emit("{");
      } else {
        emit(line);
      }
      ++depth;
    } else {
      emit(line);
    }
    after_open = opens;
  }
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += "\n";
    out += lines[i];
  }
  ReplaceAll(out, "~", style.space_around_operators ? " " : "");
  ReplaceAll(out, "^", style.space_after_keyword ? " " : "");
  return out;
}

std::vector<SyntheticFile> GenerateSynthetic(const SyntheticOptions& options) {
  constexpr int kTemplateCount = static_cast<int>(std::size(kTemplates));
  if (options.files <= 0) throw std::invalid_argument("need at least one file");
  const int per_file = std::clamp(options.methods_per_file, 1, kTemplateCount);

  std::mt19937_64 rng(options.seed);
  NonceNames rare;
  std::vector<SyntheticFile> out;
  for (int f = 0; f < options.files; ++f) {
    std::vector<int> order(kTemplateCount);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(per_file);
    std::vector<std::string> methods;
    for (int t : order) methods.emplace_back(kTemplates[t]);
    if (options.rare_names) {
      std::string method(kRareTemplate);
      ReplaceAll(method, "$RARE1$", rare.Next());
      ReplaceAll(method, "$RARE2$", rare.Next());
      const auto slot = std::uniform_int_distribution<std::size_t>(0, methods.size())(rng);
      methods.insert(methods.begin() + static_cast<std::ptrdiff_t>(slot), std::move(method));
    }

    char name[48];
    if (options.balanced) {
      for (int v = 0; v < 32; ++v) {
        const SyntheticStyle style = StyleOfIndex(v);
        std::snprintf(name, sizeof name, "synth/Widget%03d_%02d.java", f, v);
        out.push_back({name, RenderFile(methods, style), style});
      }
    } else {
      std::snprintf(name, sizeof name, "synth/Widget%03d.java", f);
      out.push_back({name, RenderFile(methods, options.style), options.style});
    }
  }
  return out;
}

void WriteSynthetic(const std::vector<SyntheticFile>& files,
                    const std::filesystem::path& directory) {
  for (const SyntheticFile& f : files) {
    const auto path = directory / f.path;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << f.text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
  }
}

}  // namespace convlearn
