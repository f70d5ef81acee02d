#pragma once

#include <map>
#include <string>

namespace labcli {

// Measured regression constants, stored as `key = value` lines. Written once
// by `calibrate` and checked in at the repository root.
class Frozen {
public:
  static Frozen load(const std::string& path);
  // FRACLAB_FROZEN from the environment, else the checked-in file.
  static std::string default_path();

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  // Throws std::out_of_range naming the key.
  double get(const std::string& key) const;
  void set(const std::string& key, double v) { values_[key] = v; }
  const std::map<std::string, double>& values() const { return values_; }
  std::string render() const;

private:
  std::map<std::string, double> values_;
};

}  // namespace labcli
