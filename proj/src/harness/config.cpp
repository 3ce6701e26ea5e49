#include "ffscale/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

namespace ffscale::harness {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

struct Entry {
  std::string value;
  int line;
};

class Reader {
 public:
  Reader(std::map<std::string, Entry> entries, std::string source)
      : entries_(std::move(entries)), source_(std::move(source)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    const auto it = entries_.find(key);
    const std::string where = it == entries_.end() ? source_ : source_ + ":" + std::to_string(it->second.line);
    throw ConfigError(where + ": " + key + ": " + what);
  }

  void require(const std::string& key) const {
    if (!has(key)) throw ConfigError(source_ + ": missing required key '" + key + "'");
  }

  const std::string& raw(const std::string& key) const { return entries_.at(key).value; }

  double number(const std::string& key) const {
    const double v = parse_number(raw(key), key);
    return v;
  }

  std::size_t count(const std::string& key) const {
    const std::string& s = raw(key);
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) fail(key, "expected a nonnegative integer, got '" + s + "'");
    return v;
  }

  int integer(const std::string& key) const {
    const std::string& s = raw(key);
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) fail(key, "expected an integer, got '" + s + "'");
    return v;
  }

  bool boolean(const std::string& key) const {
    const std::string& s = raw(key);
    if (s == "true") return true;
    if (s == "false") return false;
    fail(key, "expected true or false, got '" + s + "'");
  }

  std::vector<double> list(const std::string& key) const {
    std::vector<double> out;
    std::stringstream ss(raw(key));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(trim(item), key));
    if (out.empty()) fail(key, "empty list");
    return out;
  }

  std::vector<double> range(const std::string& key) const {
    std::vector<std::string> parts;
    std::stringstream ss(raw(key));
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(trim(item));
    if (parts.size() != 3) fail(key, "expected lo:hi:count");
    const double lo = parse_number(parts[0], key);
    const double hi = parse_number(parts[1], key);
    std::size_t n = 0;
    const auto [p, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
    if (ec != std::errc{} || p != parts[2].data() + parts[2].size() || n == 0) fail(key, "count must be a positive integer");
    if (hi < lo) fail(key, "hi must not be below lo");
    if (lo == hi) return {lo};
    if (n == 1) fail(key, "a non-degenerate range needs at least two samples");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    out.back() = hi;
    return out;
  }

 private:
  double parse_number(const std::string& s, const std::string& key) const {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v)) {
      fail(key, "expected a finite number, got '" + s + "'");
    }
    return v;
  }

  std::map<std::string, Entry> entries_;
  std::string source_;
};

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "name",          "model",          "schedule.omega0", "schedule.gamma0", "ising.n",
      "ising.seed",    "ising.gamma",    "rescaling.T",     "rescaling.T_FF",  "rescaling.shape",
      "phase.mode",    "phase.k",        "phase.delta",     "grid.steps",      "sweep.axis",
      "sweep.values",  "sweep.range",    "sweep.include_optimized",           "output.kind",
      "output.path"};
  return keys;
}

bool is_two_level(Model m) { return m != Model::IsingAnnealing; }

}  // namespace

std::string to_string(Model m) {
  switch (m) {
    case Model::TwoLevelZBasis: return "two_level_z_basis";
    case Model::IsingAnnealing: return "ising_annealing";
    case Model::TwoLevelEigenbasis: return "two_level_eigenbasis";
  }
  return "?";
}

std::string to_string(PhaseMode m) {
  switch (m) {
    case PhaseMode::None: return "none";
    case PhaseMode::Optimal: return "optimal";
    case PhaseMode::Suboptimal: return "suboptimal";
    case PhaseMode::Modulated: return "modulated";
  }
  return "?";
}

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::None: return "none";
    case SweepAxis::Gamma0: return "gamma0";
    case SweepAxis::Gap: return "gap";
    case SweepAxis::Omega0: return "omega0";
    case SweepAxis::Delta: return "delta";
    case SweepAxis::IsingGamma: return "ising_gamma";
    case SweepAxis::TFF: return "T_FF";
  }
  return "?";
}

void ScenarioConfig::validate() const {
  auto fail = [this](const std::string& what) { throw ConfigError(name + ": " + what); };
  if (!(T > 0.0)) fail("rescaling.T must be positive");
  if (!(T_FF > 0.0)) fail("rescaling.T_FF must be positive");
  if (steps < 1000) fail("grid.steps must be at least 1000");
  const bool gap_swept = axis == SweepAxis::Gamma0 || axis == SweepAxis::Gap;
  if (model == Model::TwoLevelEigenbasis && !gap_swept && !(gamma0 > 0.0)) {
    fail("schedule.gamma0 must be positive in the eigenbasis (the gap must stay open)");
  }
  if (model == Model::IsingAnnealing && (n_spins == 0 || n_spins > 12)) fail("ising.n must be between 1 and 12");

  switch (model) {
    case Model::TwoLevelZBasis:
      if (phase_mode != PhaseMode::None && phase_mode != PhaseMode::Optimal) {
        fail("phase.mode " + to_string(phase_mode) + " is not available for two_level_z_basis");
      }
      break;
    case Model::IsingAnnealing:
      if (phase_mode != PhaseMode::None && phase_mode != PhaseMode::Suboptimal) {
        fail("phase.mode " + to_string(phase_mode) + " is not available for ising_annealing");
      }
      break;
    case Model::TwoLevelEigenbasis:
      if (phase_mode == PhaseMode::Suboptimal) fail("phase.mode suboptimal is not available for two_level_eigenbasis");
      break;
  }
  if (delta && phase_mode != PhaseMode::Modulated) fail("phase.delta requires phase.mode = modulated");
  if (delta && !(std::abs(*delta) < 0.1)) fail("phase.delta must satisfy |delta| < 0.1");

  if (axis == SweepAxis::None) {
    if (!sweep_values.empty()) fail("sweep values given without sweep.axis");
  } else {
    if (sweep_values.empty()) fail("sweep.axis set but no sweep.values or sweep.range");
    for (double v : sweep_values) {
      if (!std::isfinite(v)) fail("sweep values must be finite");
    }
  }
  switch (axis) {
    case SweepAxis::Gamma0:
    case SweepAxis::Gap:
    case SweepAxis::Omega0:
      if (!is_two_level(model)) fail("sweep.axis " + to_string(axis) + " needs a two-level model");
      break;
    case SweepAxis::Delta:
      if (phase_mode != PhaseMode::Modulated) fail("sweep.axis delta needs phase.mode = modulated");
      for (double v : sweep_values) {
        if (!(std::abs(v) < 0.1)) fail("delta sweep values must satisfy |delta| < 0.1");
      }
      break;
    case SweepAxis::IsingGamma:
      if (model != Model::IsingAnnealing) fail("sweep.axis ising_gamma needs ising_annealing");
      break;
    case SweepAxis::TFF:
      for (double v : sweep_values) {
        if (!(v > 0.0)) fail("T_FF sweep values must be positive");
      }
      break;
    case SweepAxis::None:
      break;
  }
  if (include_optimized && axis != SweepAxis::Delta) fail("sweep.include_optimized needs sweep.axis = delta");
}

ScenarioConfig parse_config(const std::string& text, const std::string& source) {
  std::map<std::string, Entry> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value', got '" + body + "'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": empty key");
    bool known = false;
    for (const auto& k : known_keys()) known = known || k == key;
    if (!known) throw ConfigError(where + ": unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(where + ": key '" + key + "' has no value");
    if (const auto it = entries.find(key); it != entries.end()) {
      throw ConfigError(where + ": duplicate key '" + key + "' (first set on line " + std::to_string(it->second.line) +
                        ")");
    }
    entries.emplace(key, Entry{value, lineno});
  }

  const Reader r(std::move(entries), source);
  ScenarioConfig cfg;
  cfg.name = r.has("name") ? r.raw("name") : std::filesystem::path(source).stem().string();

  r.require("model");
  const std::string& model = r.raw("model");
  if (model == "two_level_z_basis") {
    cfg.model = Model::TwoLevelZBasis;
  } else if (model == "ising_annealing") {
    cfg.model = Model::IsingAnnealing;
  } else if (model == "two_level_eigenbasis") {
    cfg.model = Model::TwoLevelEigenbasis;
  } else {
    r.fail("model", "unknown model '" + model + "'");
  }

  if (is_two_level(cfg.model)) {
    r.require("schedule.omega0");
    r.require("schedule.gamma0");
    cfg.omega0 = r.number("schedule.omega0");
    cfg.gamma0 = r.number("schedule.gamma0");
  } else {
    r.require("ising.n");
    r.require("ising.seed");
    cfg.n_spins = r.count("ising.n");
    const std::string& seed = r.raw("ising.seed");
    const auto [p, ec] = std::from_chars(seed.data(), seed.data() + seed.size(), cfg.seed);
    if (ec != std::errc{} || p != seed.data() + seed.size()) r.fail("ising.seed", "expected an unsigned 64-bit integer");
    if (r.has("ising.gamma")) cfg.ising_gamma = r.number("ising.gamma");
  }
  for (const char* key : {"schedule.omega0", "schedule.gamma0"}) {
    if (!is_two_level(cfg.model) && r.has(key)) r.fail(key, "only valid for two-level models");
  }
  for (const char* key : {"ising.n", "ising.seed", "ising.gamma"}) {
    if (is_two_level(cfg.model) && r.has(key)) r.fail(key, "only valid for ising_annealing");
  }

  r.require("rescaling.T");
  r.require("rescaling.T_FF");
  cfg.T = r.number("rescaling.T");
  cfg.T_FF = r.number("rescaling.T_FF");
  if (r.has("rescaling.shape") && r.raw("rescaling.shape") != "linear") {
    r.fail("rescaling.shape", "only 'linear' is supported");
  }

  r.require("phase.mode");
  const std::string& mode = r.raw("phase.mode");
  if (mode == "none") {
    cfg.phase_mode = PhaseMode::None;
  } else if (mode == "optimal") {
    cfg.phase_mode = PhaseMode::Optimal;
  } else if (mode == "suboptimal") {
    cfg.phase_mode = PhaseMode::Suboptimal;
  } else if (mode == "modulated") {
    cfg.phase_mode = PhaseMode::Modulated;
  } else {
    r.fail("phase.mode", "unknown phase mode '" + mode + "'");
  }
  if (r.has("phase.k")) cfg.k = r.integer("phase.k");
  if (r.has("phase.delta")) cfg.delta = r.number("phase.delta");

  if (r.has("grid.steps")) cfg.steps = r.count("grid.steps");

  if (r.has("sweep.axis")) {
    const std::string& axis = r.raw("sweep.axis");
    bool found = false;
    for (SweepAxis a : {SweepAxis::None, SweepAxis::Gamma0, SweepAxis::Gap, SweepAxis::Omega0, SweepAxis::Delta,
                        SweepAxis::IsingGamma, SweepAxis::TFF}) {
      if (to_string(a) == axis) {
        cfg.axis = a;
        found = true;
      }
    }
    if (!found) r.fail("sweep.axis", "unknown sweep axis '" + axis + "'");
  }
  if (r.has("sweep.values") && r.has("sweep.range")) r.fail("sweep.range", "give sweep.values or sweep.range, not both");
  if (r.has("sweep.values")) cfg.sweep_values = r.list("sweep.values");
  if (r.has("sweep.range")) cfg.sweep_values = r.range("sweep.range");
  if (r.has("sweep.include_optimized")) cfg.include_optimized = r.boolean("sweep.include_optimized");

  if (r.has("output.kind")) {
    const std::string& kind = r.raw("output.kind");
    if (kind == "traces") {
      cfg.output = OutputKind::Traces;
    } else if (kind == "totals") {
      cfg.output = OutputKind::Totals;
    } else {
      r.fail("output.kind", "expected traces or totals, got '" + kind + "'");
    }
  }
  cfg.output_path = r.has("output.path") ? r.raw("output.path") : cfg.name + ".csv";

  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

}  // namespace ffscale::harness
