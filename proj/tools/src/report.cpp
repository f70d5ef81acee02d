#include "labcli/report.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "fraclab/conventions.hpp"

namespace labcli {

std::string CsvTable::render() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

json report_json(const Outcome& o, const Config& c) {
  json cfg = json::object();
  for (const auto& [k, v] : echo(c)) cfg[k] = v;
  json j = json::object();
  j["experiment"] = o.experiment;
  j["version"] = fraclab::kVersion;
  j["config"] = cfg;
  j["conventions"] = json::parse(fraclab::conventions_json());
  j["results"] = o.results;
  j["pass"] = o.pass;
  return j;
}

std::string render_report(const Outcome& o, const Config& c) { return report_json(o, c).dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

std::vector<std::string> write_outcome(const Outcome& o, const Config& c, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string base = (std::filesystem::path(dir) / o.experiment).string();
  write_text(base + ".json", render_report(o, c));
  write_text(base + ".csv", o.csv.render());
  return {base + ".json", base + ".csv"};
}

}  // namespace labcli
