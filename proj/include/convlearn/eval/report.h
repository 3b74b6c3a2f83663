#ifndef CONVLEARN_EVAL_REPORT_H_
#define CONVLEARN_EVAL_REPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace convlearn {

struct EvalRow {
  std::string experiment;
  // Parameter point, e.g. "k=5,f=0.50".
  std::string point;
  std::string metric;
  double value = 0.0;
  // Events behind the value, so intervals can be recomputed.
  std::uint64_t trials = 0;
};

// One x/y series of a curve.
struct PlotSeries {
  std::string name;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<double> y;
};

struct EvalReport {
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
  std::vector<EvalRow> rows;
  std::vector<PlotSeries> series;
  std::vector<std::string> notes;

  void Add(std::string experiment, std::string point, std::string metric, double value,
           std::uint64_t trials);
  // Looks up a value; NaN when absent.
  double Value(std::string_view experiment, std::string_view point,
               std::string_view metric) const;
  void Append(const EvalReport& other);

  // experiment,point,metric,value,trials,seed,config_hash
  std::string ToCsv() const;
  nlohmann::json ToJson() const;
  // "# name (x_label, y_label)" followed by "x y" lines, blank line between
  // series.
  std::string ToPlotData() const;
};

}  // namespace convlearn

#endif  // CONVLEARN_EVAL_REPORT_H_
