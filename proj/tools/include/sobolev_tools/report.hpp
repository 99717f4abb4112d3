#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sobolev::tools {

struct Column {
  std::string name;
  bool integer = false;
};

/// Result of one CLI experiment. The CSV view (rows only) is byte-stable for a
/// given configuration; the JSON view adds diagnostics and wall time.
struct ExperimentReport {
  std::string id;
  nlohmann::json config = nlohmann::json::object();
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json diagnostics = nlohmann::json::object();
  nlohmann::json spectral; ///< (Z, w) data used, for --dump-spectral
  double wall_seconds = 0.0;

  void add_row(std::vector<double> row);
};

/// Header row then one line per row; reals as %.16e, integer columns as %d.
std::string to_csv(const ExperimentReport& report);
nlohmann::json to_json(const ExperimentReport& report);

} // namespace sobolev::tools
