#include "labcli/app.hpp"

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "labcli/experiments.hpp"

namespace labcli {

namespace {

struct Globals {
  std::string config = "default";
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 1;
};

Config resolve(const std::string& sub, const Globals& gl) {
  Config base = sub == "ratios" ? standard_config("firstope") : default_config(sub);
  Config c = gl.config == "default" ? base : load_config(gl.config, base);
  if (!gl.out.empty()) c.output_dir = gl.out;
  if (gl.seed_set) c.seed = gl.seed;
  return c;
}

Frozen frozen_or_empty() {
  const std::string path = Frozen::default_path();
  if (!std::filesystem::exists(path)) {
    std::cerr << "warning: no frozen constants at '" << path << "', regression bounds skipped\n";
    return {};
  }
  return Frozen::load(path);
}

void print_summary(const Outcome& o) {
  for (const auto& r : o.results) {
    std::string name;
    for (const char* k : {"identity", "estimate", "label", "constant"})
      if (r.contains(k)) name = r[k].get<std::string>();
    if (name.empty() && r.contains("eps")) name = "eps=" + format_double(r["eps"].get<double>());
    if (name.empty()) name = o.experiment;
    if (r.contains("pass")) std::cout << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << name << "\n";
  }
}

int run(const std::string& sub, const Globals& gl) {
  const Config c = resolve(sub, gl);
  if (gl.threads < 1) throw ConfigError("--threads must be >= 1");
  Outcome o;
  if (sub == "identities") {
    o = run_identities(c, gl.threads);
  } else if (sub == "ratios") {
    o = run_ratios(c, gl.threads, frozen_or_empty());
  } else if (sub == "eps") {
    o = run_eps(c, gl.threads);
  } else if (sub == "roots") {
    o = run_roots(c, frozen_or_empty());
  } else if (sub == "kernels") {
    o = run_kernels(c, c.output_dir);
  } else if (sub == "calibrate") {
    const Frozen f = run_calibration(c, gl.threads, o);
    std::filesystem::create_directories(c.output_dir);
    const std::string path = (std::filesystem::path(c.output_dir) / "frozen_constants").string();
    write_text(path, f.render());
    std::cout << "wrote " << path << "\n";
  }
  for (const auto& p : write_outcome(o, c, c.output_dir)) std::cout << "wrote " << p << "\n";
  print_summary(o);
  return o.pass ? 0 : 1;
}

}  // namespace

int run_app(int argc, char** argv) {
  CLI::App app{"Numerical lab for fractional operators, two-point kernels and multi-commutators"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--config", gl.config, "config file, or 'default'");
  app.add_option("--out", gl.out, "output directory (overrides output.dir)");
  auto* seed = app.add_option("--seed", gl.seed, "ensemble seed (overrides ensemble.seed)");
  app.add_option("--threads", gl.threads, "worker threads; reports do not depend on it");
  for (const char* name : {"identities", "ratios", "eps", "roots", "kernels", "calibrate"})
    app.add_subcommand(name)->fallthrough();
  app.get_subcommand("identities")->description("closed-form identities along a refinement schedule");
  app.get_subcommand("ratios")->description("ensemble sweeps of the compensation and kernel-norm estimates");
  app.get_subcommand("eps")->description("smallest singular value of the epsilon-regularity operator");
  app.get_subcommand("roots")->description("root study of the PV antiderivative equation");
  app.get_subcommand("kernels")->description("dump kernels and their norms");
  app.get_subcommand("calibrate")->description("measure and write frozen_constants");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  gl.seed_set = seed->count() > 0;
  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    return run(sub, gl);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid setting: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace labcli
