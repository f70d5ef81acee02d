#include "labcli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace labcli {

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{"grid.n",         "grid.radius",   "sigma",         "p",
                                             "q",              "r",             "ensemble.count", "ensemble.seed",
                                             "ensemble.delta", "estimate",      "refinements",   "output.dir"};
  return keys;
}

Config default_config(const std::string& subcommand) {
  Config c;
  if (subcommand == "identities") {
    c.n = 1024;
    c.count = 1;
    c.estimate = "all";
  } else if (subcommand == "eps") {
    c.n = 128;
    c.radius = 8.0;
    c.count = 50;
    c.estimate = "0,0.05,0.5,10";
    c.refinements = {128};
  } else if (subcommand == "roots") {
    c.n = 50;
    c.count = 50;
    c.estimate = "b";
    c.refinements = {};
  } else if (subcommand == "kernels") {
    c.n = 256;
    c.count = 1;
    c.p = 2.0;
    c.estimate = "all";
    c.refinements = {256};
  }
  return c;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& key, const std::string& what) {
  std::ostringstream os;
  os << origin << ":" << line << ": ";
  if (!key.empty()) os << "key '" << key << "': ";
  os << what;
  throw ConfigError(os.str());
}

double to_double(const std::string& v, const std::string& origin, int line, const std::string& key) {
  if (v == "inf") return std::numeric_limits<double>::infinity();
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(out))
    fail(origin, line, key, "expected a number, got '" + v + "'");
  return out;
}

template <class Int>
Int to_int(const std::string& v, const std::string& origin, int line, const std::string& key) {
  Int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) fail(origin, line, key, "expected an integer, got '" + v + "'");
  return out;
}

void assign(Config& c, const std::string& key, const std::string& v, const std::string& origin, int line) {
  if (key == "grid.n") {
    c.n = to_int<int>(v, origin, line, key);
    if (c.n < 1) fail(origin, line, key, "must be positive");
  } else if (key == "grid.radius") {
    c.radius = to_double(v, origin, line, key);
    if (!(c.radius > 0.0)) fail(origin, line, key, "must be positive");
  } else if (key == "sigma") {
    c.sigma = to_double(v, origin, line, key);
  } else if (key == "p") {
    c.p = to_double(v, origin, line, key);
  } else if (key == "q") {
    c.q = to_double(v, origin, line, key);
  } else if (key == "r") {
    c.r = to_double(v, origin, line, key);
  } else if (key == "ensemble.count") {
    c.count = to_int<int>(v, origin, line, key);
    if (c.count < 1) fail(origin, line, key, "must be >= 1");
  } else if (key == "ensemble.seed") {
    c.seed = to_int<std::uint64_t>(v, origin, line, key);
  } else if (key == "ensemble.delta") {
    c.delta = to_double(v, origin, line, key);
    if (!(c.delta > 0.0)) fail(origin, line, key, "must be positive");
  } else if (key == "estimate") {
    if (v.empty()) fail(origin, line, key, "empty value");
    c.estimate = v;
  } else if (key == "refinements") {
    c.refinements.clear();
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const int n = to_int<int>(trim(item), origin, line, key);
      if (n < 8 || (n & (n - 1)) != 0) fail(origin, line, key, "'" + trim(item) + "' is not a power of two >= 8");
      c.refinements.push_back(n);
    }
  } else if (key == "output.dir") {
    if (v.empty()) fail(origin, line, key, "empty value");
    c.output_dir = v;
  } else {
    fail(origin, line, key, "unknown key");
  }
  c.explicit_keys.push_back(key);
}

}  // namespace

Config parse_config(const std::string& text, const std::string& origin, Config base) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(origin, line, "", "expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) fail(origin, line, "", "missing key");
    assign(base, key, value, origin, line);
  }
  return base;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path, std::move(base));
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::pair<std::string, std::string>> echo(const Config& c) {
  std::string refs;
  for (std::size_t i = 0; i < c.refinements.size(); ++i) refs += (i ? "," : "") + std::to_string(c.refinements[i]);
  return {{"grid.n", std::to_string(c.n)},
          {"grid.radius", format_double(c.radius)},
          {"sigma", format_double(c.sigma)},
          {"p", format_double(c.p)},
          {"q", format_double(c.q)},
          {"r", format_double(c.r)},
          {"ensemble.count", std::to_string(c.count)},
          {"ensemble.seed", std::to_string(c.seed)},
          {"ensemble.delta", format_double(c.delta)},
          {"estimate", c.estimate},
          {"refinements", refs}};
}

}  // namespace labcli
