#include "convlearn/cli/report.h"

#include <cmath>
#include <cstdio>

namespace convlearn {
namespace {

using nlohmann::json;

// JSON has no infinities.
json Number(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

std::string Fixed(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string Where(const Location& loc) {
  return loc.file + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

json EditsToJson(const std::vector<Edit>& edits) {
  json out = json::array();
  for (const Edit& e : edits) out.push_back({{"position", e.position}, {"lexeme", e.lexeme}});
  return out;
}

}  // namespace

json LocationToJson(const Location& loc) {
  json j;
  j["kind"] = LocationKindName(loc.kind);
  j["file"] = loc.file;
  j["line"] = loc.line;
  j["column"] = loc.column;
  j["offset"] = loc.bytes.begin;
  j["position"] = loc.position;
  j["original"] = loc.original;
  j["occurrences"] = loc.focus.size();
  if (loc.kind == LocationKind::kName) j["category"] = IdentifierCategoryName(loc.category);
  return j;
}

json ReportToJson(const LocationReport& report, bool candidates) {
  json j;
  j["location"] = LocationToJson(report.location);
  j["top_gap"] = report.top_gap;
  j["contexts"] = report.contexts;
  j["improvement"] = report.improvement;
  j["original_score"] = report.scored.original_score;
  j["suggestions"] = json::array();
  for (const Suggestion& s : report.suggestions) {
    j["suggestions"].push_back({{"lexeme", s.lexeme},
                                {"rank", s.rank},
                                {"score", s.score},
                                {"gap", s.gap},
                                {"edits", EditsToJson(s.edits)}});
  }
  if (candidates) {
    j["candidates"] = json::array();
    for (const ScoredCandidate& c : report.scored.ranked) {
      j["candidates"].push_back({{"lexeme", c.candidate.lexeme},
                                 {"unk", c.candidate.is_unk},
                                 {"original", c.candidate.keeps_original},
                                 {"frequency", c.candidate.frequency},
                                 {"score", c.score},
                                 {"gap", c.gap}});
    }
  }
  return j;
}

json ProfileToJson(const StyleProfile& profile) {
  json j;
  j["locations_examined"] = profile.locations_examined;
  j["entries"] = json::array();
  for (const LocationReport& r : profile.entries) j["entries"].push_back(ReportToJson(r));
  return j;
}

json DecisionToJson(const Decision& d) {
  json j;
  j["reject"] = d.reject;
  j["g"] = Number(d.g);
  j["threshold"] = Number(d.threshold);
  j["locations"] = d.locations;
  j["worst"] = d.worst ? ReportToJson(*d.worst) : json(nullptr);
  return j;
}

json CalibrationToJson(const CalibrationRecord& r) {
  return {{"alpha", r.alpha},
          {"threshold", r.threshold},
          {"mode", DecisionModeName(r.mode)},
          {"seed", r.seed},
          {"samples", r.samples},
          {"eligible_spans", r.eligible_spans},
          {"grid_min", r.grid_min},
          {"grid_max", r.grid_max},
          {"grid_points", r.grid_points},
          {"estimated_fpr", r.estimated_fpr},
          {"warning", r.warning}};
}

json StatsToJson(const ConventionModel& model) {
  const CorpusStats& s = model.stats();
  const TrainConfig& c = model.config();
  json j;
  j["files"] = s.files;
  j["tokens"] = s.tokens;
  j["unk_tokens"] = s.unk_tokens;
  j["unk_rate"] = s.unk_rate();
  j["format_tokens"] = s.format_tokens;
  j["format_unk_tokens"] = s.format_unk_tokens;
  j["name_vocab"] = model.names().vocab().size();
  j["format_vocab"] = model.format().vocab().size();
  j["config"] = {{"order", c.order},
                 {"format_order", c.format_order},
                 {"bucket_size", c.bucket_size},
                 {"min_count", c.min_count},
                 {"discount_cutoff", c.discount_cutoff},
                 {"language", model.profile().name()}};
  j["training_hash"] = model.training_hash();
  j["calibration"] = model.calibration() ? CalibrationToJson(*model.calibration())
                                         : json(nullptr);
  return j;
}

std::string RenderReport(const LocationReport& r) {
  const Location& loc = r.location;
  std::string out = Where(loc) + ": " + std::string(LocationKindName(loc.kind)) + " '" +
                    loc.original + "'";
  if (loc.kind == LocationKind::kName) {
    out += " (" + std::to_string(loc.focus.size()) + " occurrence" +
           (loc.focus.size() == 1 ? "" : "s") + ")";
  }
  out += "\n";
  if (r.suggestions.empty()) return out + "  no suggestion\n";
  for (const Suggestion& s : r.suggestions) {
    out += "  " + std::to_string(s.rank) + ". " + s.lexeme + "  gap " + Fixed(s.gap) + "\n";
  }
  return out;
}

std::string RenderProfile(const StyleProfile& profile) {
  std::string out = std::to_string(profile.locations_examined) + " locations examined, " +
                    std::to_string(profile.entries.size()) + " surprising\n";
  for (const LocationReport& r : profile.entries) {
    out += Where(r.location) + "  '" + r.location.original + "'  improvement " +
           Fixed(r.improvement);
    if (!r.scored.ranked.empty()) out += "  -> " + r.scored.ranked.front().candidate.lexeme;
    out += "\n";
  }
  return out;
}

std::string RenderDecision(const Decision& d) {
  std::string out = (d.reject ? "REJECT" : "ACCEPT");
  out += "  G = " + Fixed(d.g) + ", T = " + Fixed(d.threshold) + ", " +
         std::to_string(d.locations) + " locations\n";
  if (d.reject && d.worst) {
    const LocationReport& w = *d.worst;
    out += "  worst: " + Where(w.location) + " '" + w.location.original + "'";
    if (!w.scored.ranked.empty()) {
      out += ", try '" + w.scored.ranked.front().candidate.lexeme + "'";
    }
    out += "\n";
  }
  return out;
}

}  // namespace convlearn
