#include "labcli/frozen.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "labcli/config.hpp"

#ifndef FRACLAB_FROZEN_DEFAULT
#define FRACLAB_FROZEN_DEFAULT "frozen_constants"
#endif

namespace labcli {

std::string Frozen::default_path() {
  if (const char* env = std::getenv("FRACLAB_FROZEN"); env && *env) return env;
  return FRACLAB_FROZEN_DEFAULT;
}

Frozen Frozen::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open frozen constants '" + path + "'");
  Frozen out;
  std::string raw;
  int line = 0;
  while (std::getline(f, raw)) {
    ++line;
    const std::string body = raw.substr(0, raw.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = body.find('=');
    std::istringstream k(body.substr(0, eq)), v(eq == std::string::npos ? "" : body.substr(eq + 1));
    std::string key;
    double value = 0.0;
    if (!(k >> key) || !(v >> value))
      throw ConfigError(path + ":" + std::to_string(line) + ": expected 'key = number'");
    out.values_[key] = value;
  }
  return out;
}

double Frozen::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw std::out_of_range("frozen constant '" + key + "' is missing");
  return it->second;
}

std::string Frozen::render() const {
  std::string out =
      "# Regression baselines measured by `fraclab-lab calibrate`.\n"
      "# Bounds carry the margins applied at calibration time; rerun calibrate to refresh.\n";
  for (const auto& [k, v] : values_) out += k + " = " + format_double(v) + "\n";
  return out;
}

}  // namespace labcli
