#include "sobolev_tools/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sobolev::tools {

void ExperimentReport::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("ExperimentReport: row width does not match columns");
  }
  rows.push_back(std::move(row));
}

namespace {

std::string format_cell(double v, bool integer) {
  char buf[64];
  if (integer) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(v)));
  } else {
    std::snprintf(buf, sizeof buf, "%.16e", v);
  }
  return buf;
}

} // namespace

std::string to_csv(const ExperimentReport& report) {
  std::string out;
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    if (c) out += ',';
    out += report.columns[c].name;
  }
  out += '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_cell(row[c], report.columns[c].integer);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["experiment"] = report.id;
  j["config"] = report.config;
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : report.columns) cols.push_back(c.name);
  j["columns"] = cols;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (report.columns[c].integer) {
        r.push_back(std::llround(row[c]));
      } else if (std::isfinite(row[c])) {
        r.push_back(row[c]);
      } else {
        r.push_back(nullptr);
      }
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  j["diagnostics"] = report.diagnostics;
  j["wall_seconds"] = report.wall_seconds;
  return j;
}

} // namespace sobolev::tools
