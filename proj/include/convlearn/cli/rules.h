#ifndef CONVLEARN_CLI_RULES_H_
#define CONVLEARN_CLI_RULES_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "convlearn/suggest/convention_model.h"

namespace convlearn {

inline constexpr double kDefaultRuleGap = 0.05;

struct RuleVariant {
  std::string value;
  // Mean log-probability of the snippet's formatting stream; the best one
  // when the value has several renderings.
  double score = 0.0;
  // File that produced the score.
  std::string rendering;
};

struct Rule {
  std::string setting;
  // Empty when undecided: the formatter default is left untouched.
  std::optional<std::string> value;
  // Best score minus runner-up score.
  double gap = 0.0;
  std::vector<RuleVariant> variants;  // best first
  std::string warning;
};

struct RuleSet {
  double min_gap = kDefaultRuleGap;
  std::vector<Rule> rules;  // sorted by setting
};

// A snippet library is a directory holding one subdirectory per setting;
// each file in it renders one value of the setting and is named after the
// value ("space_after_keyword/true.java"). A value may have several
// renderings that differ in other settings ("true.tab.java"); it scores as
// its best one. All files of a setting must contain the same code tokens.
RuleSet GenerateRules(const ConventionModel& model, const std::filesystem::path& library,
                      double min_gap = kDefaultRuleGap);

nlohmann::json RuleSetToJson(const RuleSet& rules);

// "setting = value" lines; undecided settings are commented out.
std::string RenderKeyValue(const RuleSet& rules);

}  // namespace convlearn

#endif  // CONVLEARN_CLI_RULES_H_
