#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace labcli {

// Raised for unreadable files, unknown keys and malformed values. The message
// names the file, line and key; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 512;
  double radius = 16.0;
  double sigma = 0.25;
  double p = 4.0;
  double q = 2.0;
  double r = 2.0;
  int count = 100;
  std::uint64_t seed = 7;
  double delta = 1.0;
  std::string estimate = "firstope";
  std::vector<int> refinements{256, 512, 1024};
  std::string output_dir = "out";

  // Keys set by a file or a flag, in the order they were applied.
  std::vector<std::string> explicit_keys;
};

// The keys accepted in config files, in echo order.
const std::vector<std::string>& config_keys();

// Defaults of one subcommand (identities, ratios, eps, roots, kernels, calibrate).
Config default_config(const std::string& subcommand);

// Applies `section.key = value` lines on top of `base`. '#' starts a comment.
Config parse_config(const std::string& text, const std::string& origin, Config base);
Config load_config(const std::string& path, Config base);

// key -> value as written back into reports, in config_keys() order. The
// output directory is left out so that reports do not depend on where they go.
std::vector<std::pair<std::string, std::string>> echo(const Config& c);

// Shortest round-trip decimal form used for every number in reports.
std::string format_double(double v);

}  // namespace labcli
