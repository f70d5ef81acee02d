#include <algorithm>
#include <cmath>

#include "fraclab/ensemble.hpp"
#include "fraclab/norms.hpp"
#include "fraclab/parallel.hpp"
#include "labcli/experiments.hpp"

namespace labcli {

using namespace fraclab;

Config standard_config(const std::string& name) {
  if (name == "identities") return default_config("identities");
  if (name == "eps" || name == "roots" || name == "kernels") return default_config(name);
  Config c = default_config("ratios");
  c.estimate = name;
  if (name == "firstope" || name == "ablation") {
    c.count = 100;
  } else if (name == "compensation") {
    c.count = 50;
  } else if (name == "intro-a") {
    c.count = 50;
    c.refinements = {256, 512};
  } else if (name == "sq") {
    c.count = 30;
  } else if (name == "vpq" || name == "estl21") {
    c.count = 50;
  } else if (name == "adjoint") {
    c.count = 50;
    c.p = 2.0;
    c.refinements = {256};
  } else {
    throw ConfigError("no standard config named '" + name + "'");
  }
  return c;
}

NormBrackets measure_norm_brackets(const Config& c, int threads) {
  NormBrackets b;
  b.n = c.refinements;
  const int N = static_cast<int>(c.refinements.size());
  std::vector<std::array<double, 3>> cell(static_cast<std::size_t>(N) * c.count);
  parallel_for(static_cast<int>(cell.size()), threads, [&](int t) {
    const Grid g = make_grid(c.radius, c.refinements[t / c.count]);
    const VectorField f =
        VectorField::scalar(g, smooth_random_function(g, trial_seed(c.seed, t % c.count), c.delta, 1.0));
    const double sp = sobolev_spectral(f, 0.5).value, sm = sobolev_spectral(f, -0.5).value;
    cell[t] = {besov_difference(f, 0.5, 2.0, 2.0).value / sp, dyadic_besov(f, 0.5, 2.0, 2.0).value / sp,
               dyadic_besov(f, -0.5, 2.0, 2.0).value / sm};
  });
  for (int i = 0; i < N; ++i) {
    double dlo = INFINITY, dhi = 0, ylo = INFINITY, yhi = 0;
    for (int t = 0; t < c.count; ++t) {
      const auto& v = cell[i * c.count + t];
      dlo = std::min(dlo, v[0]);
      dhi = std::max(dhi, v[0]);
      ylo = std::min({ylo, v[1], v[2]});
      yhi = std::max({yhi, v[1], v[2]});
    }
    b.diff_lo.push_back(dlo);
    b.diff_hi.push_back(dhi);
    b.dyadic_lo.push_back(ylo);
    b.dyadic_hi.push_back(yhi);
  }
  return b;
}

namespace {

double field(const json& results, const std::string& estimate, const std::string& key, bool take_max) {
  for (const auto& r : results)
    if (r["estimate"] == estimate) {
      const auto& v = r[key];
      return take_max ? *std::max_element(v.begin(), v.end()) : *std::min_element(v.begin(), v.end());
    }
  throw std::logic_error("calibration: no result for " + estimate);
}

}  // namespace

Frozen run_calibration(const Config& c, int threads, Outcome& summary) {
  const Frozen none;
  Frozen f;
  summary = Outcome{};
  summary.experiment = "calibrate";
  summary.csv.header = {"constant", "measured", "frozen", "margin"};
  auto record = [&](const std::string& key, double measured, double margin) {
    const double value = measured * margin;
    f.set(key, value);
    summary.csv.add({key, format_double(measured), format_double(value), format_double(margin)});
    json j = json::object();
    j["constant"] = key;
    j["measured"] = measured;
    j["frozen"] = value;
    summary.results.push_back(j);
  };
  auto seeded = [&](Config s) {
    s.seed = c.seed;
    return s;
  };

  // upper bounds get 25% headroom, floors and lower brackets 20%
  for (const std::string est : {"firstope", "compensation", "sq", "vpq", "estl21"}) {
    const Outcome o = run_ratios(seeded(standard_config(est)), threads, none);
    for (const auto& r : o.results) record(r["estimate"].get<std::string>() + ".max", field(o.results, r["estimate"], "max", true), 1.25);
  }
  {
    const Outcome o = run_ratios(seeded(standard_config("intro-a")), threads, none);
    record("intro_a.lo", field(o.results, "intro-a", "min", false), 0.8);
    record("intro_a.hi", field(o.results, "intro-a", "max", true), 1.25);
  }
  {
    const Outcome o = run_roots(seeded(standard_config("roots")), none);
    record("roots.floor", o.results[0]["b_min"].get<double>(), 0.8);
  }
  {
    Config e = seeded(standard_config("eps"));
    e.estimate = "0.05";
    const Outcome o = run_eps(e, threads);
    record("eps.sigma_min_005", o.results[0]["sigma_min_min"].get<double>(), 0.8);
  }
  {
    const std::vector<Series> ss = identity_series(seeded(standard_config("identities")), threads);
    for (const Series& s : ss)
      if (s.min_order > 0.0) record("order." + s.name, s.order, 0.8);
  }
  {
    Config nb = seeded(default_config("ratios"));
    nb.count = 50;
    const NormBrackets b = measure_norm_brackets(nb, threads);
    record("norms.diff_spectral.lo", *std::min_element(b.diff_lo.begin(), b.diff_lo.end()), 0.95);
    record("norms.diff_spectral.hi", *std::max_element(b.diff_hi.begin(), b.diff_hi.end()), 1.05);
    record("norms.dyadic_spectral.lo", *std::min_element(b.dyadic_lo.begin(), b.dyadic_lo.end()), 0.95);
    record("norms.dyadic_spectral.hi", *std::max_element(b.dyadic_hi.begin(), b.dyadic_hi.end()), 1.05);
  }
  return f;
}

}  // namespace labcli
