#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ffscale/harness/config.hpp"
#include "ffscale/harness/csv.hpp"
#include "ffscale/harness/scenario.hpp"
#include "ffscale/models/eigenbasis.hpp"

using namespace ffscale::harness;
namespace fs = std::filesystem;

namespace {

const char* kMinimal = R"(# comment line
model = two_level_z_basis
schedule.omega0 = 5
schedule.gamma0 = 0.1   # trailing comment
rescaling.T = 10
rescaling.T_FF = 1
phase.mode = optimal
grid.steps = 1000
)";

std::string error_of(const std::string& text) {
  try {
    parse_config(text, "cfg.txt");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

ScenarioConfig with_steps(ScenarioConfig c, std::size_t steps) {
  c.steps = steps;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ffscale_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse a minimal config") {
  const auto cfg = parse_config(kMinimal, "dir/minimal.cfg");
  CHECK(cfg.name == "minimal");
  CHECK(cfg.model == Model::TwoLevelZBasis);
  CHECK(cfg.gamma0 == 0.1);
  CHECK(cfg.steps == 1000);
  CHECK(cfg.axis == SweepAxis::None);
  CHECK(cfg.output_path == "minimal.csv");
}

TEST_CASE("config errors carry key and line context") {
  std::string text = kMinimal;
  CHECK(error_of(text + "bogus.key = 3\n").find("cfg.txt:9: unknown key 'bogus.key'") != std::string::npos);
  const std::string dup = error_of(text + "rescaling.T = 3\n");
  CHECK(dup.find("duplicate key 'rescaling.T'") != std::string::npos);
  CHECK(dup.find("line 5") != std::string::npos);

  std::string missing = kMinimal;
  missing.replace(missing.find("rescaling.T_FF = 1\n"), 19, "");
  CHECK(error_of(missing).find("rescaling.T_FF") != std::string::npos);

  std::string bad = kMinimal;
  bad.replace(bad.find("= 5"), 3, "= five");
  CHECK(error_of(bad).find("cfg.txt:3: schedule.omega0") != std::string::npos);

  std::string model = kMinimal;
  model.replace(model.find("two_level_z_basis"), 17, "three_level");
  CHECK(error_of(model).find("unknown model 'three_level'") != std::string::npos);

  CHECK(error_of(text + "grid.steps = 10\n").find("duplicate") != std::string::npos);
  std::string coarse = kMinimal;
  coarse.replace(coarse.find("1000"), 4, "999");
  CHECK(error_of(coarse).find("grid.steps") != std::string::npos);
  CHECK(error_of(text + "sweep.axis = delta\nsweep.values = 0.001\n").find("modulated") != std::string::npos);
  CHECK(error_of(text + "ising.n = 3\n").find("ising.n") != std::string::npos);
  CHECK(error_of("model = two_level_z_basis\n  no equals sign\n").find("cfg.txt:2") != std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/config.cfg"), ConfigError);
}

TEST_CASE("sweep ranges") {
  const auto cfg = parse_config(std::string(kMinimal) + "sweep.axis = gamma0\nsweep.range = 0.1:0.5:5\n", "x");
  REQUIRE(cfg.sweep_values.size() == 5);
  CHECK(cfg.sweep_values[2] == doctest::Approx(0.3));
  CHECK(cfg.sweep_values.back() == 0.5);
  CHECK(error_of(std::string(kMinimal) + "sweep.axis = gamma0\nsweep.range = 0.5:0.1:5\n").find("sweep.range") !=
        std::string::npos);
  const auto points = sweep_points(cfg);
  CHECK(points[0].label == "gamma0=0.1");
  CHECK(points[0].config.gamma0 == 0.1);
}

TEST_CASE("bundled presets") {
  const auto names = preset_names();
  for (const char* n : {"fig1", "fig1-left", "fig1-right", "fig2", "fig3", "zbasis", "annealing"}) {
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK_FALSE(preset_description(n).empty());
    CHECK_NOTHROW(preset_configs(n));
  }
  const auto fig1 = preset_configs("fig1");
  REQUIRE(fig1.size() == 2);
  for (const auto& c : fig1) {
    CHECK(c.model == Model::TwoLevelEigenbasis);
    CHECK(c.omega0 == 5.0);
    CHECK(c.T == 10.0);
    CHECK(c.T_FF == 1.0);
    CHECK(c.axis == SweepAxis::Gap);
  }
  CHECK(fig1[1].sweep_values.size() == 20);
  CHECK(fig1[1].sweep_values.front() == 0.25);
  CHECK(fig1[1].sweep_values.back() == 5.0);
  CHECK_THROWS_AS(preset_configs("fig9"), ConfigError);
}

TEST_CASE("fig1-left traces") {
  const auto cfg = with_steps(preset_configs("fig1-left").front(), 1000);
  const auto ds = run_scenario(cfg, 1);
  CHECK(ds.names.size() == 2 + 3 * 5);
  CHECK(ds.rows() == 1001);
  CHECK(ds.column("t").back() == 1.0);
  CHECK(ds.column("s").back() == 10.0);
  const auto& t = ds.column("t");
  for (const char* label : {"gap=0.2", "gap=0.4", "gap=0.8"}) {
    const auto& r = ds.column(std::string("dC_ratio[") + label + "]");
    const auto peak = std::max_element(r.begin(), r.end());
    CHECK(std::abs(t[static_cast<std::size_t>(peak - r.begin())] - 0.5) < 0.05);
  }
  const auto& narrow = ds.column("dC_ratio[gap=0.2]");
  CHECK(*std::max_element(narrow.begin(), narrow.end()) > 1.0);
}

TEST_CASE("fig1-right totals are all below the standard cost") {
  const auto ds = run_scenario(with_steps(preset_configs("fig1-right").front(), 1000), 1);
  CHECK(ds.rows() == 20);
  for (double v : ds.column("C_ratio")) CHECK(v < 1.0);
  for (double v : ds.column("C_std")) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("time-independent frames stay under the standard cost") {
  for (const char* name : {"zbasis", "annealing"}) {
    const auto cfg = with_steps(preset_configs(name).front(), 1000);
    const auto ds = run_scenario(cfg, 1);
    for (std::size_t c = 0; c < ds.names.size(); ++c) {
      if (ds.names[c].rfind("dC_ratio", 0) != 0) continue;
      for (double v : ds.columns[c]) CHECK(v <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("fig2 modulated trace is suppressed at the crossing") {
  const auto ds = run_scenario(with_steps(preset_configs("fig2").front(), 1000), 1);
  const auto& t = ds.column("t");
  const auto mid = static_cast<std::size_t>(std::find(t.begin(), t.end(), 0.5) - t.begin());
  REQUIRE(mid < t.size());
  CHECK(ds.column("dC_ratio[delta=0.00326]")[mid] < 0.05);
  CHECK(ds.column("dC_ratio[delta=0]")[mid] > 1.0);
}

TEST_CASE("model-level errors are reported with scenario context") {
  auto cfg = preset_configs("fig2").front();
  cfg.steps = 1000;
  cfg.axis = SweepAxis::Gamma0;
  cfg.sweep_values = {0.1, 0.0};
  cfg.name = "gap_closing";
  try {
    run_scenario(cfg, 1);
    FAIL("expected a ScenarioError");
  } catch (const ScenarioError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("gap_closing [gamma0=0]") != std::string::npos);
  }
  cfg.axis = SweepAxis::TFF;
  cfg.sweep_values = {1.0, 2.0};
  CHECK_THROWS_AS(run_scenario(cfg, 1), ScenarioError);
}

TEST_CASE("parallel sweeps give identical bytes") {
  const auto cfg = with_steps(preset_configs("fig3").front(), 1000);
  const std::string a = to_csv(run_scenario(cfg, 1));
  const std::string b = to_csv(run_scenario(cfg, 4));
  CHECK(a == b);
}

TEST_CASE("grid refinement changes emitted values by at most 1e-6 relative") {
  for (const char* name : {"fig1-left", "fig2", "zbasis", "annealing"}) {
    const auto base = preset_configs(name).front();
    const auto coarse = run_scenario(with_steps(base, 2000), 1);
    const auto fine = run_scenario(with_steps(base, 4000), 1);
    REQUIRE(coarse.names == fine.names);
    double worst = 0.0;
    for (std::size_t c = 0; c < coarse.columns.size(); ++c) {
      for (std::size_t k = 0; k < coarse.rows(); ++k) {
        const double a = coarse.columns[c][k];
        const double b = fine.columns[c][2 * k];
        worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
      }
    }
    INFO(name);
    CHECK(worst <= 1e-6);
  }
  const auto base = preset_configs("fig1-right").front();
  const auto a = run_scenario(with_steps(base, 2000), 1).column("C_ratio");
  const auto b = run_scenario(with_steps(base, 4000), 1).column("C_ratio");
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-6));
}

TEST_CASE("delta sweep") {
  auto cfg = with_steps(preset_configs("fig2").front(), 10000);
  const auto family = sweep_delta(cfg, 0.002, 0.004);
  CHECK(family.names.size() == 2 + 22 * 5);
  const double opt = ffscale::models::modulation_delta(5.0, 0.1, 10.0, 4);
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, opt).ptr;
  const std::string opt_col = "dC_ratio[delta_opt=" + std::string(buf, end) + "]";
  const auto& optimized = family.column(opt_col);

  // Envelope continuity: neighbouring delta samples give neighbouring traces.
  std::vector<const std::vector<double>*> traces;
  for (std::size_t c = 0; c < family.names.size(); ++c) {
    if (family.names[c].rfind("dC_ratio[delta=", 0) == 0) traces.push_back(&family.columns[c]);
  }
  REQUIRE(traces.size() == 21);
  double top = 0.0;
  for (const auto* tr : traces) top = std::max(top, *std::max_element(tr->begin(), tr->end()));
  // Peak cost as a function of delta has no jump beyond 2 sqrt2 max|dtheta/dt| / min||H||.
  const double bound = 2.0 * std::sqrt(2.0) * 50.0 / (std::sqrt(2.0) * 0.1);
  double prev_peak = -1.0;
  for (std::size_t c = 0; c < family.names.size(); ++c) {
    if (family.names[c].rfind("dC[delta=", 0) != 0) continue;
    const double peak = *std::max_element(family.columns[c].begin(), family.columns[c].end());
    if (prev_peak >= 0.0) CHECK(std::abs(peak - prev_peak) <= bound);
    prev_peak = peak;
  }
  for (std::size_t i = 1; i < traces.size(); ++i) {
    double jump = 0.0;
    for (std::size_t k = 0; k < family.rows(); ++k) jump = std::max(jump, std::abs((*traces[i])[k] - (*traces[i - 1])[k]));
    CHECK(jump < 0.25 * top);
  }

  // The optimized trace never exceeds the family maximum. It can drop below
  // the sampled minimum where the cost has a sharp minimum in delta between
  // samples; the sampled minimum then sits on a sample bracketing delta_opt.
  const std::size_t upper = static_cast<std::size_t>(std::ceil((opt - 0.002) / 1e-4));
  REQUIRE(upper >= 1);
  std::size_t below = 0;
  for (std::size_t k = 0; k < family.rows(); ++k) {
    std::size_t arg = 0;
    double hi = 0.0;
    for (std::size_t i = 0; i < traces.size(); ++i) {
      if ((*traces[i])[k] < (*traces[arg])[k]) arg = i;
      hi = std::max(hi, (*traces[i])[k]);
    }
    CHECK(optimized[k] <= hi * (1.0 + 1e-9));
    if (optimized[k] < (*traces[arg])[k] * (1.0 - 1e-9)) {
      ++below;
      CHECK((arg == upper || arg + 1 == upper));
    }
  }
  CHECK(below > 0);

  const auto single = sweep_delta(cfg, 0.003, 0.003);
  CHECK(single.names.size() == 2 + 5);
  cfg.axis = SweepAxis::None;
  cfg.sweep_values.clear();
  cfg.delta = 0.003;
  const auto fixed = run_scenario(cfg, 1);
  CHECK(single.columns.back() == fixed.columns.back());
  CHECK(single.column("dC_ratio[delta=0.003]") == fixed.column("dC_ratio"));
  CHECK_THROWS_AS(sweep_delta(cfg, 0.004, 0.002), ScenarioError);
}

TEST_CASE("csv output") {
  FigureDataset ds;
  ds.add("a", {1.0, -0.5, 0.0});
  ds.add("b", {1e-7, 123456.789, 2.0 / 3.0});
  const std::string text = to_csv(ds);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.back() == '\n');
  CHECK(text.rfind("a,b\n", 0) == 0);
  CHECK(text.find('e') == std::string::npos);
  for (double x : {2.0 / 3.0, 1e-7 / 3.0, 98765.4321, -1.0 / 7.0, 123.0}) {
    const std::string s = format_decimal(x);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(std::abs(back - x) <= 1e-13 * std::abs(x));
  }
  CHECK(format_decimal(0.0) == "0");
  CHECK_THROWS(format_decimal(NAN));

  FigureDataset empty;
  CHECK_THROWS(to_csv(empty));
  FigureDataset ragged;
  ragged.add("a", {1.0});
  ragged.add("b", {1.0, 2.0});
  CHECK_THROWS(to_csv(ragged));

  const fs::path dir = scratch("csv");
  emit_csv(ds, (dir / "out.csv").string());
  CHECK(slurp(dir / "out.csv") == text);
  try {
    emit_csv(ds, "/nonexistent-dir/out.csv");
    FAIL("expected an I/O error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") != std::string::npos);
  }
}

TEST_CASE("command-line interface") {
  const fs::path dir = scratch("cli");
  const std::string cli = FFSCALE_CLI;
  auto run = [&](const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " > \"" + (dir / "log.txt").string() + "\" 2>&1";
    return std::system(cmd.c_str());
  };
  CHECK(run("list-presets") == 0);
  CHECK(slurp(dir / "log.txt").find("fig2") != std::string::npos);

  {
    std::ofstream cfg(dir / "mini.cfg");
    cfg << kMinimal;
  }
  CHECK(run("run \"" + (dir / "mini.cfg").string() + "\" --out \"" + (dir / "mini.csv").string() + "\"") == 0);
  CHECK(fs::exists(dir / "mini.csv"));
  CHECK(slurp(dir / "mini.csv").rfind("t,s,dC_ratio,dC,dC_std,ff_norm,norm\n", 0) == 0);

  CHECK(run("preset annealing --steps 1000 --out \"" + (dir / "p").string() + "\"") == 0);
  CHECK(fs::exists(dir / "p" / "annealing.csv"));

  CHECK(run("preset nope") != 0);
  CHECK(slurp(dir / "log.txt").find("unknown preset") != std::string::npos);
  CHECK(run("run \"" + (dir / "missing.cfg").string() + "\"") != 0);
  {
    std::ofstream cfg(dir / "bad.cfg");
    cfg << kMinimal << "color = blue\n";
  }
  CHECK(run("run \"" + (dir / "bad.cfg").string() + "\"") != 0);
  CHECK(slurp(dir / "log.txt").find("unknown key 'color'") != std::string::npos);
  CHECK(run("preset fig2 --steps 10") != 0);
  CHECK(run("") != 0);
}
