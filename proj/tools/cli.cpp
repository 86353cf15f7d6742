// Copyright 2026 The jcq Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "jcq/closedform.hpp"
#include "jcq/dynamics.hpp"
#include "jcq/entanglement.hpp"
#include "jcq/error.hpp"
#include "jcq/esd.hpp"
#include "jcq/jcmodel.hpp"
#include "jcq/verification.hpp"

namespace jcq::cli {

namespace {

constexpr double pi = std::numbers::pi;
using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Round-trip decimal text for CSV cells.
std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct Settings {
  std::string config;
  std::string family = "phi";
  double alpha = pi / 4;
  double alpha_deg = 45.0;
  double omega0 = 5.0;
  double omega = 5.0;
  double g = 0.5;
  int n_max = 1;
  double t_max = 0.0;  // unset: two Rabi periods
  int steps = 200;
  std::string engine = "analytic";
  double tol = 1e-12;
  double agree_tol = 1e-9;
  std::string format = "csv";
  std::string output;
  // sweep
  double alpha_min = 0.0;
  double alpha_max = pi / 2;
  int alpha_points = 21;
  std::string pair = "all";
  // esd
  double samples_per_period = 512.0;
  double min_width = 0.0;  // unset: 1e-6 of a Rabi period
  // verify
  int time_points = 41;
  bool json_flag = false;
  bool inject_fault = false;
};

struct Command {
  CLI::App* app = nullptr;
  Settings s;
};

void add_io_options(CLI::App* sub, Settings& s,
                    std::vector<std::string> formats = {"csv", "json"}) {
  sub->add_option("--config", s.config, "key = value file; flags override it");
  sub->add_option("--format", s.format, "output format")
      ->check(CLI::IsMember(std::move(formats)));
  sub->add_option("--output,-o", s.output, "output file (default stdout)");
}

void add_model_options(CLI::App* sub, Settings& s) {
  sub->add_option("--family", s.family, "initial state family")
      ->check(CLI::IsMember({"phi", "psi"}));
  sub->add_option("--omega0", s.omega0, "atomic transition frequency");
  sub->add_option("--omega", s.omega, "cavity mode frequency");
  sub->add_option("--g", s.g, "atom-cavity coupling");
  sub->add_option("--n-max", s.n_max, "Fock cutoff per cavity")
      ->check(CLI::PositiveNumber);
  sub->add_option("--t-max", s.t_max, "end of the time window");
  sub->add_option("--steps", s.steps, "time intervals in the window");
  sub->add_option("--tol", s.tol, "concurrence at or below this is zero");
  sub->add_option("--agree-tol", s.agree_tol,
                  "allowed analytic/numeric concurrence gap with engine=both");
}

void add_alpha_options(CLI::App* sub, Settings& s) {
  sub->add_option("--alpha", s.alpha, "superposition angle in radians");
  sub->add_option("--alpha-deg", s.alpha_deg, "superposition angle in degrees");
}

void add_engine_option(CLI::App* sub, Settings& s,
                       std::vector<std::string> engines) {
  sub->add_option("--engine", s.engine, "evolution engine")
      ->check(CLI::IsMember(std::move(engines)));
}

void add_pair_option(CLI::App* sub, Settings& s) {
  sub->add_option("--pair", s.pair, "pair label or 'all'")
      ->check(CLI::IsMember({"all", "AB", "ab", "Aa", "Bb", "Ab", "Ba"}));
}

// The later of --alpha / --alpha-deg on the (config-expanded) command line
// wins.
void resolve_alpha(const std::vector<std::string>& args, Settings& s) {
  auto last = [&](const std::string& flag) {
    std::ptrdiff_t pos = -1;
    for (std::size_t i = 0; i < args.size(); ++i)
      if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0)
        pos = static_cast<std::ptrdiff_t>(i);
    return pos;
  };
  const auto rad = last("--alpha");
  const auto deg = last("--alpha-deg");
  if (deg >= 0 && deg > rad) s.alpha = s.alpha_deg * pi / 180.0;
}

// --- config file -----------------------------------------------------------

std::string trim(const std::string& x) {
  const auto b = x.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = x.find_last_not_of(" \t\r");
  return x.substr(b, e - b + 1);
}

std::vector<std::pair<std::string, std::string>> read_config(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config")
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": invalid key");
    entries.emplace_back(key, value);
  }
  if (in.bad()) throw IoError("error reading config file '" + path + "'");
  return entries;
}

std::optional<std::string> find_config_path(const std::vector<std::string>& a) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == "--config" && i + 1 < a.size()) path = a[i + 1];
    if (a[i].rfind("--config=", 0) == 0) path = a[i].substr(9);
  }
  return path;
}

// --- output ------------------------------------------------------------------

void emit(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.output.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(s.output, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file '" + s.output + "'");
  f << text;
  f.flush();
  if (!f) throw IoError("error writing output file '" + s.output + "'");
}

// --- shared run setup --------------------------------------------------------

struct Run {
  Family family;
  JCParams params;
  double G;
  double t_max;
  std::vector<Engine> engines;  // one, or analytic + numeric for "both"
};

Engine parse_engine(const std::string& e) {
  if (e == "analytic") return Engine::analytic;
  if (e == "numeric") return Engine::numeric;
  if (e == "closed") return Engine::closed_form;
  throw std::invalid_argument("unknown engine '" + e + "'");
}

Run prepare_run(const Settings& s) {
  Run r{parse_family(s.family), {s.omega0, s.omega, s.g}, 0.0, 0.0, {}};
  r.params.validate();
  r.G = 2.0 * s.g;
  r.t_max = s.t_max > 0.0 ? s.t_max : 4.0 * pi / r.G;
  if (!std::isfinite(s.alpha))
    throw std::invalid_argument("alpha must be finite");
  if (!(std::isfinite(s.t_max) && s.t_max >= 0.0))
    throw std::invalid_argument("--t-max must be positive");
  if (s.steps < 1) throw std::invalid_argument("--steps must be >= 1");
  if (!(s.tol >= 0.0) || !(s.agree_tol >= 0.0))
    throw std::invalid_argument("tolerances must be non-negative");
  if (s.engine == "both")
    r.engines = {Engine::analytic, Engine::numeric};
  else
    r.engines = {parse_engine(s.engine)};
  return r;
}

std::vector<PairLabel> selected_pairs(const std::string& pair) {
  if (pair == "all") return {kAllPairs.begin(), kAllPairs.end()};
  return {parse_pair(pair)};
}

double max_gap(const PairTable& a, const PairTable& b) {
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) worst = std::max(worst, std::abs(a[k].C - b[k].C));
  return worst;
}

double q_or_nan(const ConcurrenceResult& r) {
  const auto q = r.q();
  return q ? *q : std::nan("");
}

json run_header(const char* command, const Settings& s, const Run& r) {
  json h;
  h["command"] = command;
  h["family"] = s.family;
  h["engine"] = s.engine;
  h["omega0"] = s.omega0;
  h["omega"] = s.omega;
  h["g"] = s.g;
  h["G"] = r.G;
  h["n_max"] = s.n_max;
  h["t_max"] = r.t_max;
  h["tol"] = s.tol;
  return h;
}

// --- evolve ------------------------------------------------------------------

int run_evolve(const Settings& s, std::ostream& out, std::ostream& err) {
  const Run r = prepare_run(s);
  std::vector<PairEvaluator> evals;
  for (Engine e : r.engines) evals.emplace_back(r.family, r.params, e, s.n_max);
  const bool both = evals.size() == 2;

  std::vector<std::string> columns = {"t",    "Gt",   "alpha", "C_AB", "C_ab",
                                      "C_Aa", "C_Bb", "C_Ab",  "C_Ba", "Q_AB",
                                      "Q_ab", "Q_Aa", "Q_Ab"};
  if (both) columns.push_back("max_engine_disagreement");

  std::vector<std::vector<double>> rows;
  double worst = 0.0;
  for (int k = 0; k <= s.steps; ++k) {
    const double t = r.t_max * k / s.steps;
    const PairTable table = evals[0].evaluate(s.alpha, t);
    std::vector<double> row = {t, r.G * t, s.alpha};
    for (PairLabel p : kAllPairs) row.push_back(at(table, p).C);
    for (PairLabel p : {PairLabel::AB, PairLabel::ab, PairLabel::Aa, PairLabel::Ab})
      row.push_back(q_or_nan(at(table, p)));
    if (both) {
      const double gap = max_gap(table, evals[1].evaluate(s.alpha, t));
      worst = std::max(worst, gap);
      row.push_back(gap);
    }
    rows.push_back(std::move(row));
  }

  std::string text;
  if (s.format == "json") {
    json doc = run_header("evolve", s, r);
    doc["alpha"] = s.alpha;
    doc["columns"] = columns;
    json jrows = json::array();
    for (const auto& row : rows) {
      json jr = json::array();
      for (double v : row) jr.push_back(jnum(v));
      jrows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(jrows);
    if (both) doc["max_engine_disagreement"] = worst;
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (std::size_t c = 0; c < columns.size(); ++c)
      os << (c ? "," : "") << columns[c];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        os << (c ? "," : "") << num(row[c]);
      os << "\n";
    }
    text = os.str();
  }
  emit(s, text, out);

  if (both && worst > s.agree_tol) {
    err << "jcq: engines disagree: max |C_analytic - C_numeric| = " << num(worst)
        << " exceeds " << num(s.agree_tol) << "\n";
    return kVerification;
  }
  return kOk;
}

// --- sweep -------------------------------------------------------------------

int run_sweep(const Settings& s, std::ostream& out, std::ostream& err) {
  const Run r = prepare_run(s);
  if (s.alpha_points < 1)
    throw std::invalid_argument("--alpha-points must be >= 1");
  const std::vector<double> alphas =
      linspace(s.alpha_min, s.alpha_max, static_cast<std::size_t>(s.alpha_points));
  const std::vector<double> times =
      linspace(0.0, r.t_max, static_cast<std::size_t>(s.steps) + 1);
  const std::vector<PairLabel> pairs = selected_pairs(s.pair);

  std::vector<SweepTable> tables;
  for (Engine e : r.engines)
    tables.push_back(sweep_table(r.family, alphas, times, r.params, e, s.n_max));
  double worst = 0.0;
  if (tables.size() == 2)
    for (std::size_t c = 0; c < tables[0].cells.size(); ++c)
      worst = std::max(worst, max_gap(tables[0].cells[c], tables[1].cells[c]));
  const SweepTable& table = tables[0];

  std::string text;
  if (s.format == "json") {
    json doc = run_header("sweep", s, r);
    doc["pairs"] = json::array();
    for (PairLabel p : pairs) doc["pairs"].push_back(std::string(pair_name(p)));
    json rows = json::array();
    for (std::size_t i = 0; i < alphas.size(); ++i)
      for (std::size_t j = 0; j < times.size(); ++j)
        for (PairLabel p : pairs) {
          const ConcurrenceResult& c = at(table.cell(i, j), p);
          json row;
          row["alpha"] = alphas[i];
          row["t"] = times[j];
          row["Gt"] = r.G * times[j];
          row["pair"] = std::string(pair_name(p));
          row["C"] = c.C;
          row["Q"] = jnum(q_or_nan(c));
          row["is_zero"] = c.C <= s.tol;
          rows.push_back(std::move(row));
        }
    doc["rows"] = std::move(rows);
    if (r.family == Family::Phi) {
      const EsdMap m = esd_map(table, r.family, PairLabel::AB, r.G, s.tol);
      json boundary = json::array();
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        json b;
        b["alpha"] = alphas[i];
        if (m.boundary[i]) {
          b["t_lo"] = m.boundary[i]->first;
          b["t_hi"] = m.boundary[i]->second;
        } else {
          b["t_lo"] = nullptr;
          b["t_hi"] = nullptr;
        }
        boundary.push_back(std::move(b));
      }
      doc["boundary_AB"] = std::move(boundary);
    }
    if (tables.size() == 2) doc["max_engine_disagreement"] = worst;
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "alpha,t,Gt,pair,C,Q,is_zero\n";
    for (std::size_t i = 0; i < alphas.size(); ++i)
      for (std::size_t j = 0; j < times.size(); ++j)
        for (PairLabel p : pairs) {
          const ConcurrenceResult& c = at(table.cell(i, j), p);
          os << num(alphas[i]) << ',' << num(times[j]) << ','
             << num(r.G * times[j]) << ',' << pair_name(p) << ',' << num(c.C)
             << ',' << num(q_or_nan(c)) << ','
             << (c.C <= s.tol ? "true" : "false") << "\n";
        }
    text = os.str();
  }
  emit(s, text, out);

  if (tables.size() == 2 && worst > s.agree_tol) {
    err << "jcq: engines disagree: max |C_analytic - C_numeric| = " << num(worst)
        << " exceeds " << num(s.agree_tol) << "\n";
    return kVerification;
  }
  return kOk;
}

// --- esd ---------------------------------------------------------------------

int run_esd(const Settings& s, std::ostream& out) {
  if (s.engine == "both")
    throw std::invalid_argument("esd needs a single engine");
  const Run r = prepare_run(s);
  if (!(s.samples_per_period > 0.0))
    throw std::invalid_argument("--samples-per-period must be positive");
  const double period = 2.0 * pi / r.G;
  ZeroScanOptions opt;
  opt.samples = std::max<std::size_t>(
      16, static_cast<std::size_t>(std::ceil(s.samples_per_period * r.t_max / period)));
  opt.tol = s.tol;
  opt.min_width = s.min_width > 0.0 ? s.min_width : 1e-6 * period;

  const PairEvaluator eval(r.family, r.params, r.engines[0], s.n_max);
  std::vector<std::pair<PairLabel, std::vector<ZeroInterval>>> found;
  for (PairLabel p : selected_pairs(s.pair))
    found.emplace_back(p, zero_intervals(eval.curve(s.alpha, p), 0.0, r.t_max, opt));

  std::optional<std::pair<double, double>> boundary;
  if (r.family == Family::Phi && s.alpha > 0.0 && s.alpha < pi / 2)
    boundary = esd_boundary_phi_AB(s.alpha);

  std::string text;
  if (s.format == "csv") {
    std::ostringstream os;
    os << "pair,kind,t_lo,t_hi,Gt_lo,Gt_hi\n";
    for (const auto& [p, zs] : found)
      for (const ZeroInterval& z : zs)
        os << pair_name(p) << ',' << zero_kind_name(z.kind) << ',' << num(z.t_lo)
           << ',' << num(z.t_hi) << ',' << num(r.G * z.t_lo) << ','
           << num(r.G * z.t_hi) << "\n";
    text = os.str();
  } else {
    json doc = run_header("esd", s, r);
    doc["alpha"] = s.alpha;
    doc["samples"] = opt.samples;
    doc["min_width"] = opt.min_width;
    json jpairs = json::array();
    for (const auto& [p, zs] : found) {
      json jp;
      jp["pair"] = std::string(pair_name(p));
      json list = json::array();
      std::size_t deaths = 0;
      for (const ZeroInterval& z : zs) {
        json jz;
        jz["kind"] = std::string(zero_kind_name(z.kind));
        jz["t_lo"] = z.t_lo;
        jz["t_hi"] = z.t_hi;
        jz["Gt_lo"] = r.G * z.t_lo;
        jz["Gt_hi"] = r.G * z.t_hi;
        list.push_back(std::move(jz));
        deaths += z.kind == ZeroKind::sudden_death;
      }
      jp["intervals"] = std::move(list);
      jp["sudden_death_count"] = deaths;
      jpairs.push_back(std::move(jp));
    }
    doc["pairs"] = std::move(jpairs);
    if (r.family == Family::Phi) {
      if (boundary) {
        doc["boundary_AB"] = {{"Gt_lo", boundary->first},
                              {"Gt_hi", boundary->second},
                              {"t_lo", boundary->first / r.G},
                              {"t_hi", boundary->second / r.G}};
      } else {
        doc["boundary_AB"] = nullptr;
      }
    }
    text = doc.dump(2) + "\n";
  }
  emit(s, text, out);
  return kOk;
}

// --- verify ------------------------------------------------------------------

int run_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  VerifyOptions o;
  o.params = resonant(s.omega0, s.g);
  o.alpha_points = static_cast<std::size_t>(std::max(s.alpha_points, 0));
  o.time_points = static_cast<std::size_t>(std::max(s.time_points, 0));
  o.agree_tol = s.agree_tol;
  o.fault = s.inject_fault ? 0.05 : 0.0;
  const std::vector<CheckResult> checks = run_verification(o);
  const bool ok = all_passed(checks);

  std::string text;
  if (s.json_flag || s.format == "json") {
    json doc;
    doc["passed"] = ok;
    doc["fault_injected"] = s.inject_fault;
    json list = json::array();
    for (const CheckResult& c : checks)
      list.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", jnum(c.measured)},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
    doc["checks"] = std::move(list);
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const CheckResult& c : checks)
      os << (c.passed ? "PASS " : "FAIL ") << c.name << " measured=" << num(c.measured)
         << " tolerance=" << num(c.tolerance) << "  " << c.detail << "\n";
    text = os.str();
  }
  emit(s, text, out);

  if (!ok) {
    err << "jcq: verification failed:";
    for (const CheckResult& c : checks)
      if (!c.passed) err << ' ' << c.name;
    err << "\n";
    return kVerification;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Four-qubit double Jaynes-Cummings entanglement dynamics", "jcq"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  Command evolve{app.add_subcommand("evolve", "concurrence time series"), {}};
  Command sweep{app.add_subcommand("sweep", "(alpha, t) concurrence table"), {}};
  Command esd{app.add_subcommand("esd", "zero intervals of concurrence curves"), {}};
  Command verify{app.add_subcommand("verify", "run the invariant suite"), {}};

  for (Command* c : {&evolve, &sweep, &esd}) {
    add_io_options(c->app, c->s);
    add_model_options(c->app, c->s);
  }
  add_alpha_options(evolve.app, evolve.s);
  add_alpha_options(esd.app, esd.s);
  add_engine_option(evolve.app, evolve.s, {"analytic", "numeric", "both", "closed"});
  add_engine_option(sweep.app, sweep.s, {"analytic", "numeric", "both", "closed"});
  add_engine_option(esd.app, esd.s, {"analytic", "numeric", "closed"});

  sweep.app->add_option("--alpha-min", sweep.s.alpha_min, "first alpha (radians)");
  sweep.app->add_option("--alpha-max", sweep.s.alpha_max, "last alpha (radians)");
  sweep.app->add_option("--alpha-points", sweep.s.alpha_points, "alpha grid size");
  add_pair_option(sweep.app, sweep.s);

  esd.s.format = "json";
  esd.app->add_option("--samples-per-period", esd.s.samples_per_period,
                      "scan resolution per Rabi period");
  esd.app->add_option("--min-width", esd.s.min_width,
                      "zero sets wider than this (time units) are sudden death");
  add_pair_option(esd.app, esd.s);

  add_io_options(verify.app, verify.s, {"text", "json"});
  verify.s.format = "text";
  verify.app->add_option("--omega0", verify.s.omega0, "resonant frequency");
  verify.app->add_option("--g", verify.s.g, "atom-cavity coupling");
  verify.app->add_option("--alpha-points", verify.s.alpha_points, "alpha grid size");
  verify.app->add_option("--time-points", verify.s.time_points, "Gt grid size");
  verify.app->add_option("--agree-tol", verify.s.agree_tol, "engine agreement tolerance");
  verify.app->add_flag("--json", verify.s.json_flag, "JSON report");
  verify.app->add_flag("--inject-fault", verify.s.inject_fault,
                       "perturb one Hamiltonian coupling (negative control)");

  std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
  try {
    // Config entries go right after the subcommand name so that later
    // command-line flags take precedence.
    if (const auto path = find_config_path(argv); path && !argv.empty()) {
      CLI::App* sub = app.get_subcommand_no_throw(argv[0]);
      if (sub == nullptr)
        throw std::invalid_argument("--config must follow a subcommand");
      std::vector<std::string> injected;
      for (const auto& [key, value] : read_config(*path)) {
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) {
          bool known = false;
          for (const CLI::App* other : app.get_subcommands({}))
            known = known || other->get_option_no_throw("--" + key) != nullptr;
          if (!known)
            throw std::invalid_argument("unknown config key '" + key + "'");
          continue;  // meant for another subcommand
        }
        injected.push_back("--" + key + "=" + value);
      }
      argv.insert(argv.begin() + 1, injected.begin(), injected.end());
    }

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      const auto subs = app.get_subcommands();
      out << (subs.empty() ? app.help() : subs[0]->help());
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "jcq: " << e.what() << "\n";
      if (app.get_subcommands().empty()) err << "run 'jcq --help' for usage\n";
      return kUsage;
    }

    if (evolve.app->parsed()) {
      resolve_alpha(argv, evolve.s);
      return run_evolve(evolve.s, out, err);
    }
    if (sweep.app->parsed()) return run_sweep(sweep.s, out, err);
    if (esd.app->parsed()) {
      resolve_alpha(argv, esd.s);
      return run_esd(esd.s, out);
    }
    return run_verify(verify.s, out, err);
  } catch (const IoError& e) {
    err << "jcq: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "jcq: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "jcq: error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace jcq::cli
