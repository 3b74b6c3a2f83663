#ifndef CONVLEARN_CLI_REPORT_H_
#define CONVLEARN_CLI_REPORT_H_

#include <string>

#include "json.hpp"

#include "convlearn/suggest/convention_model.h"
#include "convlearn/suggest/engine.h"

namespace convlearn {

nlohmann::json LocationToJson(const Location& location);
// Location, suggestions, and with `candidates` the full ranked list.
nlohmann::json ReportToJson(const LocationReport& report, bool candidates = false);
nlohmann::json ProfileToJson(const StyleProfile& profile);
nlohmann::json DecisionToJson(const Decision& decision);
nlohmann::json CalibrationToJson(const CalibrationRecord& record);
nlohmann::json StatsToJson(const ConventionModel& model);

// Human-readable renderings, for stderr.
std::string RenderReport(const LocationReport& report);
std::string RenderProfile(const StyleProfile& profile);
std::string RenderDecision(const Decision& decision);

}  // namespace convlearn

#endif  // CONVLEARN_CLI_REPORT_H_
