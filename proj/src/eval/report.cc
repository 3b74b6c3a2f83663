#include "convlearn/eval/report.h"

#include <cmath>
#include <cstdio>
#include <limits>

namespace convlearn {
namespace {

std::string Num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json JsonNumber(double v) {
  if (std::isfinite(v)) return v;
  return Num(v);
}

}  // namespace

void EvalReport::Add(std::string experiment, std::string point, std::string metric,
                     double value, std::uint64_t trials) {
  rows.push_back({std::move(experiment), std::move(point), std::move(metric), value, trials});
}

double EvalReport::Value(std::string_view experiment, std::string_view point,
                         std::string_view metric) const {
  for (const EvalRow& r : rows) {
    if (r.experiment == experiment && r.point == point && r.metric == metric) return r.value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

void EvalReport::Append(const EvalReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  series.insert(series.end(), other.series.begin(), other.series.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string EvalReport::ToCsv() const {
  std::string out = "experiment,point,metric,value,trials,seed,config_hash\n";
  for (const EvalRow& r : rows) {
    out += CsvField(r.experiment) + "," + CsvField(r.point) + "," + CsvField(r.metric) + "," +
           Num(r.value) + "," + std::to_string(r.trials) + "," + std::to_string(seed) + "," +
           std::to_string(config_hash) + "\n";
  }
  return out;
}

nlohmann::json EvalReport::ToJson() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["config_hash"] = config_hash;
  j["rows"] = nlohmann::json::array();
  for (const EvalRow& r : rows) {
    j["rows"].push_back({{"experiment", r.experiment},
                         {"point", r.point},
                         {"metric", r.metric},
                         {"value", JsonNumber(r.value)},
                         {"trials", r.trials},
                         {"seed", seed},
                         {"config_hash", config_hash}});
  }
  j["series"] = nlohmann::json::array();
  for (const PlotSeries& s : series) {
    nlohmann::json xs = nlohmann::json::array();
    nlohmann::json ys = nlohmann::json::array();
    for (double x : s.x) xs.push_back(JsonNumber(x));
    for (double y : s.y) ys.push_back(JsonNumber(y));
    j["series"].push_back(
        {{"name", s.name}, {"x_label", s.x_label}, {"y_label", s.y_label}, {"x", xs}, {"y", ys}});
  }
  j["notes"] = notes;
  return j;
}

std::string EvalReport::ToPlotData() const {
  std::string out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const PlotSeries& s = series[i];
    if (i > 0) out += "\n";
    out += "# " + s.name + " (" + s.x_label + ", " + s.y_label + ")\n";
    for (std::size_t j = 0; j < s.x.size() && j < s.y.size(); ++j) {
      out += Num(s.x[j]) + " " + Num(s.y[j]) + "\n";
    }
  }
  return out;
}

}  // namespace convlearn
