#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "labcli/config.hpp"

namespace labcli {

using json = nlohmann::ordered_json;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  std::string render() const;
};

struct Outcome {
  std::string experiment;
  json results = json::array();
  CsvTable csv;
  bool pass = true;
};

// {experiment, version, config, conventions, results, pass}
json report_json(const Outcome& o, const Config& c);
std::string render_report(const Outcome& o, const Config& c);

// Writes <dir>/<experiment>.json and <dir>/<experiment>.csv; returns the paths.
std::vector<std::string> write_outcome(const Outcome& o, const Config& c, const std::string& dir);

void write_text(const std::string& path, const std::string& text);

}  // namespace labcli
