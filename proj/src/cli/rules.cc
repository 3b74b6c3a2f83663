#include "convlearn/cli/rules.h"

#include <algorithm>
#include <cstdio>
#include <map>

#include "convlearn/ngram/score.h"

namespace convlearn {
namespace {

namespace fs = std::filesystem;

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// "true.next-tab.java" is a rendering of value "true".
std::string ValueOf(const fs::path& file) {
  const std::string name = file.filename().string();
  return name.substr(0, name.find('.'));
}

Rule ScoreSetting(const ConventionModel& model, const fs::path& dir) {
  Rule rule;
  rule.setting = dir.filename().string();
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  std::map<std::string, RuleVariant> best;
  std::vector<std::string> first_tokens;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string name = files[i].filename().string();
    SourceFile file;
    try {
      file = model.Analyze(files[i].string(), ReadFileBytes(files[i]));
    } catch (const std::exception& e) {
      rule.warning = name + ": " + e.what();
      return rule;
    }
    if (file.tokens.empty()) {
      rule.warning = name + ": no code tokens";
      return rule;
    }
    auto tokens = file.NameStream();
    if (i == 0) {
      first_tokens = std::move(tokens);
    } else if (tokens != first_tokens) {
      rule.warning = name + " differs from " + files[0].filename().string() + " in code tokens";
      return rule;
    }
    const auto ids = model.format().vocab().Encode(file.FormatStream());
    const RuleVariant v{ValueOf(files[i]), Score(model.format(), ids), name};
    auto [it, inserted] = best.emplace(v.value, v);
    if (!inserted && v.score > it->second.score) it->second = v;
  }
  if (best.size() < 2) {
    rule.warning = "needs at least two values";
    return rule;
  }
  for (auto& [value, v] : best) rule.variants.push_back(std::move(v));
  std::stable_sort(rule.variants.begin(), rule.variants.end(),
                   [](const RuleVariant& a, const RuleVariant& b) { return a.score > b.score; });
  rule.gap = rule.variants[0].score - rule.variants[1].score;
  return rule;
}

}  // namespace

RuleSet GenerateRules(const ConventionModel& model, const fs::path& library,
                      double min_gap) {
  RuleSet set;
  set.min_gap = min_gap;
  if (!fs::is_directory(library)) {
    throw std::invalid_argument("not a directory: " + library.string());
  }
  std::vector<fs::path> settings;
  for (const auto& e : fs::directory_iterator(library)) {
    if (e.is_directory()) settings.push_back(e.path());
  }
  std::sort(settings.begin(), settings.end());
  for (const auto& dir : settings) {
    Rule rule = ScoreSetting(model, dir);
    if (rule.warning.empty() && rule.gap >= min_gap) rule.value = rule.variants[0].value;
    set.rules.push_back(std::move(rule));
  }
  return set;
}

nlohmann::json RuleSetToJson(const RuleSet& rules) {
  nlohmann::json out;
  out["min_gap"] = rules.min_gap;
  out["settings"] = nlohmann::json::array();
  for (const Rule& r : rules.rules) {
    nlohmann::json j;
    j["setting"] = r.setting;
    j["decided"] = r.value.has_value();
    j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
    j["gap"] = r.gap;
    j["variants"] = nlohmann::json::array();
    for (const RuleVariant& v : r.variants) {
      j["variants"].push_back(
          {{"value", v.value}, {"score", v.score}, {"rendering", v.rendering}});
    }
    if (!r.warning.empty()) j["warning"] = r.warning;
    out["settings"].push_back(std::move(j));
  }
  return out;
}

std::string RenderKeyValue(const RuleSet& rules) {
  std::string out;
  for (const Rule& r : rules.rules) {
    if (r.value) {
      out += r.setting + " = " + *r.value + "  # gap " + FormatDouble(r.gap) + "\n";
    } else if (!r.warning.empty()) {
      out += "# " + r.setting + ": undecided (" + r.warning + ")\n";
    } else {
      out += "# " + r.setting + ": undecided (gap " + FormatDouble(r.gap) + ")\n";
    }
  }
  return out;
}

}  // namespace convlearn
