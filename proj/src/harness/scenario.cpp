#include "ffscale/harness/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

#include "ffscale/engine/fast_forward.hpp"
#include "ffscale/models/annealing.hpp"
#include "ffscale/models/eigenbasis.hpp"
#include "ffscale/models/two_level.hpp"

namespace ffscale::harness {

namespace {

std::string shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double resolved_delta(const ScenarioConfig& cfg) {
  return cfg.delta ? *cfg.delta : models::modulation_delta(cfg.omega0, cfg.gamma0, cfg.T, cfg.k);
}

}  // namespace

void FigureDataset::add(std::string name, std::vector<double> values) {
  names.push_back(std::move(name));
  columns.push_back(std::move(values));
}

const std::vector<double>& FigureDataset::column(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return columns[i];
  }
  throw std::out_of_range("FigureDataset: no column '" + name + "'");
}

void FigureDataset::validate() const {
  if (columns.empty()) throw std::invalid_argument("FigureDataset: no columns");
  if (names.size() != columns.size()) throw std::invalid_argument("FigureDataset: name/column count mismatch");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].size() != columns.front().size()) {
      throw std::invalid_argument("FigureDataset: column '" + names[i] + "' has a different length");
    }
  }
}

std::vector<ScenarioPoint> sweep_points(const ScenarioConfig& cfg) {
  std::vector<ScenarioPoint> points;
  if (cfg.axis == SweepAxis::None) {
    points.push_back({"", 0.0, cfg});
    return points;
  }
  for (double v : cfg.sweep_values) {
    ScenarioPoint p{to_string(cfg.axis) + "=" + shortest(v), v, cfg};
    switch (cfg.axis) {
      case SweepAxis::Gamma0: p.config.gamma0 = v; break;
      case SweepAxis::Gap: p.config.gamma0 = 0.5 * v; break;
      case SweepAxis::Omega0: p.config.omega0 = v; break;
      case SweepAxis::Delta: p.config.delta = v; break;
      case SweepAxis::IsingGamma: p.config.ising_gamma = v; break;
      case SweepAxis::TFF: p.config.T_FF = v; break;
      case SweepAxis::None: break;
    }
    points.push_back(std::move(p));
  }
  if (cfg.include_optimized) {
    ScenarioConfig c = cfg;
    c.delta.reset();
    const double d = resolved_delta(c);
    c.delta = d;
    points.push_back({"delta_opt=" + shortest(d), d, std::move(c)});
  }
  return points;
}

CostReport evaluate_point(const ScenarioConfig& cfg) {
  const Rescaling r = Rescaling::linear(cfg.T, cfg.T_FF);
  const TimeGrid grid(0.0, cfg.T_FF, cfg.steps);

  switch (cfg.model) {
    case Model::TwoLevelZBasis: {
      const auto sched = models::TwoLevelSchedule::magnetization_reversal(cfg.omega0, cfg.gamma0, cfg.T);
      const HamiltonianFn h = models::two_level_hamiltonian_fn(sched);
      const MeasurementFrame frame = models::pauli_z_frame();
      const PhaseProfile phases =
          cfg.phase_mode == PhaseMode::Optimal ? optimal_phase(h, r, frame, grid) : PhaseProfile::zero(2);
      return evaluate_costs(h, r, frame, phases, cfg.steps);
    }
    case Model::TwoLevelEigenbasis: {
      const auto sched = models::TwoLevelSchedule::magnetization_reversal(cfg.omega0, cfg.gamma0, cfg.T);
      const HamiltonianFn h = models::two_level_hamiltonian_fn(sched);
      const MeasurementFrame frame = models::eigenframe_two_level(sched, r);
      PhaseProfile phases = PhaseProfile::zero(2);
      if (cfg.phase_mode == PhaseMode::Optimal) {
        phases = models::eigenbasis_first_term_phase(sched, r, grid);
      } else if (cfg.phase_mode == PhaseMode::Modulated) {
        models::ModulationParams p{cfg.k, resolved_delta(cfg), cfg.omega0, cfg.gamma0, cfg.T, cfg.T_FF};
        phases = models::modulated_phase(p);
      }
      return evaluate_costs(h, r, frame, phases, cfg.steps);
    }
    case Model::IsingAnnealing: {
      const auto inst = models::IsingInstance::random(cfg.n_spins, cfg.seed, cfg.ising_gamma, cfg.T);
      const bool sub = cfg.phase_mode == PhaseMode::Suboptimal;
      return evaluate_costs(
          [&](double t) {
            return sub ? std::sqrt(models::qa_suboptimal_ff_norm_sq(inst, r, t))
                       : r.ds_dt(t) * std::sqrt(models::qa_hs_norm_sq(inst, r.s(t)));
          },
          [&](double s) { return std::sqrt(models::qa_hs_norm_sq(inst, s)); }, r, cfg.steps);
    }
  }
  throw ScenarioError("unknown model");
}

unsigned threads_from_env() {
  const char* v = std::getenv("FFSCALE_THREADS");
  if (v == nullptr) return 1;
  unsigned n = 0;
  const std::string s(v);
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc{} || p != s.data() + s.size() || n == 0) return 1;
  return n;
}

FigureDataset run_scenario(const ScenarioConfig& cfg) { return run_scenario(cfg, threads_from_env()); }

FigureDataset run_scenario(const ScenarioConfig& cfg, unsigned threads) {
  cfg.validate();
  if (cfg.axis == SweepAxis::TFF && cfg.output == OutputKind::Traces) {
    throw ScenarioError(cfg.name + ": a T_FF sweep changes the time grid; use output.kind = totals");
  }
  const std::vector<ScenarioPoint> points = sweep_points(cfg);
  std::vector<std::optional<CostReport>> reports(points.size());
  std::vector<std::exception_ptr> errors(points.size());

  auto work = [&](std::size_t i) {
    try {
      reports[i] = evaluate_point(points[i].config);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), points.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < points.size(); i += workers) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!errors[i]) continue;
    const std::string where = points[i].label.empty() ? cfg.name : cfg.name + " [" + points[i].label + "]";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw ScenarioError(where + ": " + e.what());
    }
  }

  FigureDataset ds;
  if (cfg.output == OutputKind::Totals) {
    std::vector<double> axis, ratio, c, c_std, ffi, origi;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const CostReport& rep = *reports[i];
      axis.push_back(points[i].axis_value);
      ratio.push_back(rep.C / rep.C_std);
      c.push_back(rep.C);
      c_std.push_back(rep.C_std);
      ffi.push_back(rep.ff_integral);
      origi.push_back(rep.original_integral);
    }
    ds.add(cfg.axis == SweepAxis::None ? "point" : to_string(cfg.axis), std::move(axis));
    ds.add("C_ratio", std::move(ratio));
    ds.add("C", std::move(c));
    ds.add("C_std", std::move(c_std));
    ds.add("ff_integral", std::move(ffi));
    ds.add("orig_integral", std::move(origi));
    return ds;
  }

  const TimeGrid& grid = reports.front()->grid;
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < grid.n_points(); ++k) {
    bool defined = true;
    for (const auto& rep : reports) defined = defined && rep->delta_C[k].has_value();
    if (defined) rows.push_back(k);
  }
  const Rescaling r = Rescaling::linear(cfg.T, cfg.T_FF);
  std::vector<double> t, s;
  for (std::size_t k : rows) {
    t.push_back(grid.at(k));
    s.push_back(r.s(grid.at(k)));
  }
  ds.add("t", std::move(t));
  ds.add("s", std::move(s));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const CostReport& rep = *reports[i];
    const std::string suffix = points[i].label.empty() ? "" : "[" + points[i].label + "]";
    std::vector<double> ratio, dc, dc_std, ff, orig;
    for (std::size_t k : rows) {
      ratio.push_back(*rep.delta_C[k] / rep.delta_C_std[k]);
      dc.push_back(*rep.delta_C[k]);
      dc_std.push_back(rep.delta_C_std[k]);
      ff.push_back(rep.ff_norm[k]);
      orig.push_back(rep.original_norm[k]);
    }
    ds.add("dC_ratio" + suffix, std::move(ratio));
    ds.add("dC" + suffix, std::move(dc));
    ds.add("dC_std" + suffix, std::move(dc_std));
    ds.add("ff_norm" + suffix, std::move(ff));
    ds.add("norm" + suffix, std::move(orig));
  }
  return ds;
}

FigureDataset sweep_delta(ScenarioConfig cfg, double lo, double hi, std::size_t count) {
  if (cfg.model != Model::TwoLevelEigenbasis) throw ScenarioError(cfg.name + ": delta sweeps need two_level_eigenbasis");
  if (!(hi >= lo)) throw ScenarioError(cfg.name + ": delta range must satisfy lo <= hi");
  cfg.phase_mode = PhaseMode::Modulated;
  cfg.delta.reset();
  cfg.axis = SweepAxis::Delta;
  cfg.output = OutputKind::Traces;
  cfg.sweep_values.clear();
  if (lo == hi) {
    cfg.sweep_values.push_back(lo);
    cfg.include_optimized = false;
  } else {
    if (count < 2) throw ScenarioError(cfg.name + ": a delta range needs at least two samples");
    for (std::size_t i = 0; i < count; ++i) {
      cfg.sweep_values.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    cfg.sweep_values.back() = hi;
    cfg.include_optimized = true;
  }
  return run_scenario(cfg);
}

}  // namespace ffscale::harness
