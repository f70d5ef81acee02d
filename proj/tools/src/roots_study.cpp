#include <algorithm>
#include <cmath>

#include "fraclab/roots.hpp"
#include "labcli/experiments.hpp"

namespace labcli {

Outcome run_roots(const Config& c, const Frozen& frozen) {
  if (c.count < 2) throw ConfigError("roots: ensemble.count must be >= 2");
  Outcome o;
  o.experiment = "roots";
  o.csv.header = {"x", "b", "residual", "iterations", "bracketed"};
  double bmin = 0.5, bmax = 0.0, worst = 0.0;
  bool ok = true;
  for (int k = 0; k < c.count; ++k) {
    const double x = -0.49 + 0.48 * k / (c.count - 1);
    const fraclab::RootResult r = fraclab::solve_root(x);
    o.csv.add({format_double(x), format_double(r.b), format_double(r.residual), std::to_string(r.iterations),
               r.bracketed ? "1" : "0"});
    ok = ok && r.bracketed && r.b > 0.0 && r.b < 0.5;
    bmin = std::min(bmin, r.b);
    bmax = std::max(bmax, r.b);
    worst = std::max(worst, r.residual);
  }
  json j = json::object();
  j["samples"] = c.count;
  j["x_range"] = {-0.49, -0.01};
  j["b_min"] = bmin;
  j["b_max"] = bmax;
  j["gap_to_half"] = 0.5 - bmax;
  j["max_residual"] = worst;
  j["residual_tolerance"] = 1e-12;
  bool pass = ok && worst <= 1e-12;
  if (frozen.has("roots.floor")) {
    j["floor"] = frozen.get("roots.floor");
    pass = pass && bmin >= frozen.get("roots.floor");
  }
  j["pass"] = pass;
  o.results.push_back(j);
  o.pass = pass;
  return o;
}

}  // namespace labcli
