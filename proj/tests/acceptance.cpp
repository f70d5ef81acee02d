// Acceptance suite: one PASS/FAIL line per criterion 1-10.
//
//   fraclab_acceptance [--threads k] [--only 3,4] [--known-fail 4]
//
// Exit status is 0 when every criterion passes or is listed in --known-fail,
// 1 otherwise. Known failures still print FAIL.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "labcli/experiments.hpp"

using namespace labcli;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "!") + what;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict identity_group(const std::string& group, int threads, double budget_s) {
  Config c = standard_config("identities");
  c.estimate = group;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Series> ss = identity_series(c, threads);
  const double dt = seconds_since(t0);
  Verdict v;
  for (const Series& s : ss) {
    std::string what = s.name + " e=" + fmt(s.residual.back());
    if (s.min_order > 0.0) what += " order=" + fmt(s.order);
    v.require(s.pass, what);
  }
  v.require(dt <= budget_s, "runtime " + fmt(dt) + "s <= " + fmt(budget_s) + "s");
  return v;
}

const json& only_result(const Outcome& o) { return o.results.at(0); }

Verdict criterion1(int threads) {
  Verdict v = identity_group("backend", threads, 10.0);
  // pinned here rather than trusted from the series definition
  Config c = standard_config("identities");
  c.estimate = "backend";
  for (const Series& s : identity_series(c, threads)) {
    const auto at = std::find(s.n.begin(), s.n.end(), 1024);
    v.require(at != s.n.end() && s.residual[at - s.n.begin()] <= 1e-3, s.name + " <= 1e-3 at n=1024");
    bool halving = true;
    for (std::size_t i = 1; i < s.residual.size(); ++i) halving = halving && s.residual[i] <= 0.55 * s.residual[i - 1];
    v.require(halving, s.name + " halves per doubling");
  }
  return v;
}

Verdict criterion2(int threads) { return identity_group("exact", threads, 5.0); }

Verdict criterion3(int threads) {
  Verdict v = identity_group("kernel", threads, 120.0);
  Config c = standard_config("identities");
  c.estimate = "kernel";
  for (const Series& s : identity_series(c, threads)) {
    const auto at = std::find(s.n.begin(), s.n.end(), 512);
    v.require(at != s.n.end() && s.residual[at - s.n.begin()] <= 5e-2, s.name + " <= 5e-2 at n=512");
    v.require(s.order >= 0.4, s.name + " order >= 0.4");
  }
  return v;
}

Verdict criterion4(int threads, const Frozen& frozen) {
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome first = run_ratios(standard_config("firstope"), threads, frozen);
  const Outcome abl = run_ratios(standard_config("ablation"), threads, frozen);
  const double dt = seconds_since(t0);
  Verdict v;
  const json& f = only_result(first);
  const json& a = only_result(abl);
  bool finite = true;
  for (double m : f["max"]) finite = finite && std::isfinite(m);
  v.require(finite && f["degenerate"] == 0, "firstope max finite");
  v.require(f["max_variation"].get<double>() <= 2.0, "firstope variation " + fmt(f["max_variation"]) + " <= 2");
  v.require(first.pass, "firstope report");
  const std::vector<double> am = a["max"];
  const double growth = am.back() / am.front();
  v.require(growth >= 3.0, "ablation growth " + fmt(growth) + " >= 3");
  v.require(dt <= 300.0, "runtime " + fmt(dt) + "s <= 300s");
  return v;
}

Verdict criterion5(int threads, const Frozen& frozen) {
  Verdict v;
  v.require(frozen.has("intro_a.lo") && frozen.has("intro_a.hi"), "frozen bracket present");
  if (!v.pass) return v;
  const double lo = frozen.get("intro_a.lo"), hi = frozen.get("intro_a.hi");
  v.require(hi / lo <= 10.0, "bracket width " + fmt(hi / lo) + " <= 10");
  const Config c = standard_config("intro-a");
  v.require(c.count == 50 && c.refinements.size() == 2 && c.sigma == 0.25, "50 trials, two refinements, sigma 1/4");
  const Outcome o = run_ratios(c, threads, frozen);
  const json& r = only_result(o);
  double mn = INFINITY, mx = 0.0;
  for (double x : r["min"]) mn = std::min(mn, x);
  for (double x : r["max"]) mx = std::max(mx, x);
  v.require(mn >= lo && mx <= hi, "ratios [" + fmt(mn) + ", " + fmt(mx) + "] in [" + fmt(lo) + ", " + fmt(hi) + "]");
  return v;
}

Verdict criterion6(int threads, const Frozen& frozen) {
  Config c = standard_config("adjoint");
  Verdict v;
  v.require(c.count == 50 && c.sigma == 0.25 && c.p == 2.0 && c.q == 2.0, "50 trials, (s,p,q) = (-1/4,2,2)");
  const Outcome o = run_ratios(c, threads, frozen);
  const json& r = only_result(o);
  double mx = 0.0;
  for (double x : r["max"]) mx = std::max(mx, x);
  v.require(mx <= 1.0 + 1e-10, "max ratio " + fmt(mx) + " <= 1 + 1e-10");
  return v;
}

Verdict criterion7(int threads, const Frozen& frozen) {
  const Config c = standard_config("sq");
  Verdict v;
  v.require(c.count == 30, "30 trials");
  const Outcome o = run_ratios(c, threads, frozen);
  for (const json& r : o.results) {
    bool finite = true;
    for (double m : r["max"]) finite = finite && std::isfinite(m);
    v.require(finite && r["degenerate"] == 0, r["estimate"].get<std::string>() + " max finite");
    v.require(r["max_variation"].get<double>() <= 2.0,
              r["estimate"].get<std::string>() + " variation " + fmt(r["max_variation"]) + " <= 2");
  }
  v.require(o.results.size() == 2, "p in {2, 4}");
  return v;
}

Verdict criterion8(int threads) {
  Config c = standard_config("eps");
  c.estimate = "0,0.05";
  const Outcome o = run_eps(c, threads);
  const double base = std::sqrt(std::numbers::pi / c.radius);
  Verdict v;
  v.require(c.count == 50, "50 trials");
  const json& e0 = o.results.at(0);
  const json& e1 = o.results.at(1);
  const double dev = std::abs(e0["sigma_min_min"].get<double>() - base);
  v.require(dev <= 1e-8, "eps=0 deviation " + fmt(dev) + " <= 1e-8");
  const double m = e1["sigma_min_min"].get<double>();
  v.require(m >= 0.5 * base, "eps=0.05 min " + fmt(m) + " >= " + fmt(0.5 * base));
  return v;
}

Verdict criterion9(const Frozen& frozen) {
  Verdict v;
  v.require(frozen.has("roots.floor"), "frozen floor present");
  if (!v.pass) return v;
  const Config c = standard_config("roots");
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome o = run_roots(c, frozen);
  const double dt = seconds_since(t0);
  const json& r = only_result(o);
  v.require(c.count == 50, "50 samples");
  v.require(r["b_max"].get<double>() < 0.5, "b < 1/2");
  v.require(r["max_residual"].get<double>() <= 1e-12, "residual " + fmt(r["max_residual"]) + " <= 1e-12");
  v.require(r["b_min"].get<double>() >= frozen.get("roots.floor"),
            "b_min " + fmt(r["b_min"]) + " >= floor " + fmt(frozen.get("roots.floor")));
  v.require(o.pass, "all roots bracketed");
  v.require(dt <= 1.0, "runtime " + fmt(dt) + "s <= 1s");
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Runs every experiment kind twice at --threads 1 and once at 4 through the
// report writer and compares the written bytes.
Verdict criterion10(const Frozen& frozen) {
  std::vector<std::pair<std::string, Config>> runs;
  Config ident = standard_config("identities");
  ident.estimate = "exact";
  runs.emplace_back("identities", ident);
  for (const std::string est : {"firstope", "compensation", "sq", "estl21", "adjoint"}) {
    Config c = standard_config(est);
    c.count = 4;
    c.refinements = {64, 128};
    runs.emplace_back("ratios", c);
  }
  Config eps = standard_config("eps");
  eps.count = 4;
  eps.n = 32;
  eps.refinements = {32};
  runs.emplace_back("eps", eps);
  runs.emplace_back("roots", standard_config("roots"));
  Config ker = standard_config("kernels");
  ker.n = 64;
  ker.refinements = {64};
  runs.emplace_back("kernels", ker);

  const fs::path root = fs::temp_directory_path() / "fraclab_acceptance_determinism";
  Verdict v;
  for (const auto& [kind, c] : runs) {
    std::vector<fs::path> dirs;
    for (int rep = 0; rep < 3; ++rep) {
      const int threads = rep == 1 ? 4 : 1;
      const fs::path dir = root / (kind + "_" + c.estimate + "_" + std::to_string(rep));
      fs::remove_all(dir);
      fs::create_directories(dir);
      Outcome o;
      if (kind == "identities") o = run_identities(c, threads);
      if (kind == "ratios") o = run_ratios(c, threads, frozen);
      if (kind == "eps") o = run_eps(c, threads);
      if (kind == "roots") o = run_roots(c, frozen);
      if (kind == "kernels") o = run_kernels(c, dir.string());
      write_outcome(o, c, dir.string());
      dirs.push_back(dir);
    }
    bool same = true;
    int files = 0;
    for (const auto& e : fs::directory_iterator(dirs[0])) {
      ++files;
      const fs::path name = e.path().filename();
      const std::string ref = slurp(e.path());
      same = same && slurp(dirs[1] / name) == ref && slurp(dirs[2] / name) == ref;
    }
    v.require(same && files >= 2, kind + (kind == "ratios" ? " " + c.estimate : "") + " (" + std::to_string(files) + " files)");
  }
  fs::remove_all(root);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int threads = 1;
  std::vector<int> only, known;
  app.add_option("--threads", threads, "worker threads");
  app.add_option("--only", only, "run only these criteria")->delimiter(',');
  app.add_option("--known-fail", known, "criteria whose FAIL does not fail the run")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::string path = Frozen::default_path();
  Frozen frozen;
  if (fs::exists(path)) frozen = Frozen::load(path);
  else std::cout << "no frozen constants at " << path << "\n";

  const std::set<int> wanted(only.begin(), only.end()), expected(known.begin(), known.end());
  int unexpected = 0;
  for (int k = 1; k <= 10; ++k) {
    if (!wanted.empty() && !wanted.count(k)) continue;
    Verdict v;
    try {
      switch (k) {
        case 1: v = criterion1(threads); break;
        case 2: v = criterion2(threads); break;
        case 3: v = criterion3(threads); break;
        case 4: v = criterion4(threads, frozen); break;
        case 5: v = criterion5(threads, frozen); break;
        case 6: v = criterion6(threads, frozen); break;
        case 7: v = criterion7(threads, frozen); break;
        case 8: v = criterion8(threads); break;
        case 9: v = criterion9(frozen); break;
        case 10: v = criterion10(frozen); break;
      }
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL");
    if (!v.pass && expected.count(k)) std::cout << " (known)";
    std::cout << "  " << v.detail << std::endl;
    if (!v.pass && !expected.count(k)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
