// Copyright 2026 The qfi-lab Authors
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

// qfi_lab: command-line front end for the qfilab headers.
//
//   qfi_lab qfi        --channel ad --eta 0.5 --state ancilla-pair --gamma 0.7071
//   qfi_lab fig 2a     --out fig2a.csv
//   qfi_lab simulate   --channel ad --eta 0.5 --state max-entangled --nu 100000 --seed 42
//   qfi_lab experiment --channel depolarizing --p 0.4
//   qfi_lab optimize   --channel ad --eta 0.75 --family ancilla-pair
//   qfi_lab noon4-audit --grid 0:0.9:10
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfilab/channel.hpp"
#include "qfilab/estimate.hpp"
#include "qfilab/fisher.hpp"
#include "qfilab/optimize.hpp"
#include "qfilab/parallel.hpp"
#include "qfilab/photonics.hpp"
#include "qfilab/qstate.hpp"
#include "qfilab/report.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qfilab;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  std::string channel = "identity";
  std::optional<double> eta, p1, p2, p3, p;
  std::string state = "single";
  double eps = 1.0 / std::sqrt(2.0);
  double alpha = 0.0;
  double gamma = 1.0 / std::sqrt(2.0);
  std::vector<double> params;  // generic2
  std::optional<std::size_t> probes;
  std::optional<double> phi;
  std::uint64_t nu = 100000;
  std::uint64_t seed = 42;
  std::size_t rounds = 10;
  std::string grid;
  std::string out;
  std::string format;
  std::string observable;
  std::string family = "single";
  std::size_t phi_steps = 17;
};

void add_channel_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--channel", cfg.channel, "Noise model")
      ->check(CLI::IsMember({"ad", "pauli", "dephasing", "depolarizing", "identity"}));
  app->add_option("--eta", cfg.eta, "Amplitude-damping decay probability");
  app->add_option("--p1", cfg.p1, "Pauli X probability");
  app->add_option("--p2", cfg.p2, "Pauli Y probability");
  app->add_option("--p3", cfg.p3, "Pauli Z probability (also dephasing)");
  app->add_option("--p", cfg.p, "Depolarizing strength");
}

void add_state_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--state", cfg.state, "Input state family")
      ->check(CLI::IsMember({"single", "ancilla-pair", "max-entangled", "noon2", "noon4", "generic2"}));
  app->add_option("--eps", cfg.eps, "single: amplitude of |0>");
  app->add_option("--alpha", cfg.alpha, "single: relative phase of |1>");
  app->add_option("--gamma", cfg.gamma, "ancilla-pair: amplitude of |00>");
  app->add_option("--params", cfg.params, "generic2: six parameters")->expected(6);
  app->add_option("--probes", cfg.probes, "Number of leading qubits that are probes");
}

KrausChannel build_channel(const RunConfig& cfg) {
  auto require = [](const std::optional<double>& v, const char* flag) {
    if (!v) throw DomainError(std::string("missing required option ") + flag);
    return *v;
  };
  if (cfg.channel == "ad") return amplitude_damping(require(cfg.eta, "--eta"));
  if (cfg.channel == "pauli")
    return pauli_channel(cfg.p1.value_or(0.0), cfg.p2.value_or(0.0), cfg.p3.value_or(0.0));
  if (cfg.channel == "dephasing") return dephasing(require(cfg.p3, "--p3"));
  if (cfg.channel == "depolarizing") return depolarizing(require(cfg.p, "--p"));
  return identity_channel();
}

std::pair<PureState, Layout> build_state(const RunConfig& cfg) {
  StateFamily fam;
  std::size_t probes = 1, total = 1;
  if (cfg.state == "single") {
    fam = family::Single{cfg.eps, cfg.alpha};
  } else if (cfg.state == "ancilla-pair") {
    fam = family::AncillaPair{cfg.gamma};
    total = 2;
  } else if (cfg.state == "max-entangled") {
    fam = family::MaxEntangled{};
    total = 2;
  } else if (cfg.state == "noon2") {
    fam = family::Noon{2};
    probes = total = 2;
  } else if (cfg.state == "noon4") {
    fam = family::FourQubitNoon{};
    probes = 2;
    total = 4;
  } else {
    if (cfg.params.size() != 6) throw DomainError("generic2 needs --params with six values");
    family::GenericTwoQubit g;
    std::copy(cfg.params.begin(), cfg.params.end(), g.params.begin());
    fam = g;
    probes = total = 2;
  }
  if (cfg.probes) {
    if (*cfg.probes < 1 || *cfg.probes > total) throw DomainError("--probes out of range");
    probes = *cfg.probes;
  }
  return {make_state(fam), Layout::probes_then_ancillas(probes, total - probes)};
}

json channel_json(const KrausChannel& ch) {
  return {{"model", std::string(to_string(ch.model))}, {"params", ch.params}};
}

bool near_half(double x) { return std::abs(x - 1.0 / std::sqrt(2.0)) < 1e-3; }

/// The reference closed form that applies to this configuration, if any.
std::optional<std::pair<std::string, double>> matching_closed_form(const RunConfig& cfg,
                                                                   const KrausChannel& ch,
                                                                   const Layout& layout, double phi) {
  const bool one_probe_one_ancilla = layout.probes.size() == 1 && layout.n_total == 2;
  const bool ent = (cfg.state == "max-entangled" || (cfg.state == "ancilla-pair" && near_half(cfg.gamma))) &&
                   one_probe_one_ancilla;
  const bool single_opt = cfg.state == "single" && near_half(cfg.eps);
  const auto& p = ch.params;
  switch (ch.model) {
    case NoiseModel::AmplitudeDamping:
      if (single_opt) return std::pair{"ad_single", closed_form(closed::AdSingle{p[0]})};
      if (ent) return std::pair{"ad_gamma_half", closed_form(closed::AdGammaHalf{p[0]})};
      if (cfg.state == "noon4" && layout.probes.size() == 2)
        return std::pair{"ad_noon4", closed_form(closed::AdNoon4{p[0], phi})};
      break;
    case NoiseModel::Dephasing:
      if (single_opt || ent) return std::pair{"dephasing", closed_form(closed::Dephasing{p[0]})};
      break;
    case NoiseModel::Depolarizing:
      if (single_opt) return std::pair{"depolarizing_single", closed_form(closed::DepolarizingSingle{p[0]})};
      if (ent) return std::pair{"depolarizing_ancilla", closed_form(closed::DepolarizingAncilla{p[0]})};
      break;
    case NoiseModel::Pauli:
      if (cfg.state == "single")
        return std::pair{"pauli_na",
                         closed_form(closed::PauliNoAncilla{p[0], p[1], p[2], cfg.eps, cfg.alpha, phi})};
      if (cfg.state == "max-entangled" && one_probe_one_ancilla)
        return std::pair{"pauli_ancilla", closed_form(closed::PauliAncilla{p[0], p[1], p[2]})};
      break;
    case NoiseModel::Identity:
      break;
  }
  return std::nullopt;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + cfg.out);
  f << text;
}

//-------------------------------------------------------------------------
// Commands
//-------------------------------------------------------------------------

int cmd_qfi(const RunConfig& cfg) {
  const auto ch = build_channel(cfg);
  const auto [psi, layout] = build_state(cfg);
  const double phi = cfg.phi.value_or(kPi / 2.0);
  const PhaseScenario s{ch, psi, layout, phi};
  const double j = qfi_scenario(s);

  json out{{"command", "qfi"},
           {"channel", channel_json(ch)},
           {"state", cfg.state},
           {"probes", layout.probes.size()},
           {"ancillas", layout.ancillas.size()},
           {"phi", phi},
           {"qfi", j}};
  if (auto cf = matching_closed_form(cfg, ch, layout, phi)) {
    out["closed_form"] = {{"id", cf->first}, {"value", cf->second}, {"difference", j - cf->second}};
  } else {
    out["closed_form"] = nullptr;
  }
  if (ch.model == NoiseModel::AmplitudeDamping && layout.ancillas.empty()) {
    out["upper_bound"] = {{"id", "durkin_bound"},
                          {"value", format_number(closed_form(closed::DurkinBound{
                                        static_cast<int>(layout.probes.size()), ch.params[0]}))}};
  }
  emit(cfg, out.dump(2) + "\n");
  return 0;
}

int cmd_fig(const std::string& id, const RunConfig& cfg) {
  Table t;
  if (id == "2a") t = fig2a(cfg.grid.empty() ? Grid{0.0, 1.0, 101} : Grid::parse(cfg.grid));
  else if (id == "2b") t = fig2b(cfg.grid.empty() ? Grid{0.0, 1.0, 101} : Grid::parse(cfg.grid));
  else t = fig3(cfg.grid.empty() ? Grid{0.0, 1.0, 51} : Grid::parse(cfg.grid));

  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json row = json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (!r[c]) row[t.columns[c]] = nullptr;
        else if (std::isfinite(*r[c])) row[t.columns[c]] = *r[c];
        else row[t.columns[c]] = format_number(*r[c]);
      }
      rows.push_back(std::move(row));
    }
    emit(cfg, json{{"figure", id}, {"columns", t.columns}, {"rows", rows}}.dump(2) + "\n");
  } else {
    emit(cfg, t.to_csv());
  }
  return 0;
}

ObservableId default_observable(const RunConfig& cfg, const KrausChannel& ch) {
  if (!cfg.observable.empty()) return parse_observable_id(cfg.observable);
  if (cfg.state == "noon4") return ObservableId::AdNoon4;
  if (cfg.state == "single") return ObservableId::DepolarizingSingle;
  if (ch.model == NoiseModel::Pauli) return ObservableId::PauliAncilla;
  return ObservableId::AdAncilla;
}

int cmd_simulate(const RunConfig& cfg) {
  if (cfg.nu < 1) throw DomainError("--nu must be >= 1");
  if (cfg.rounds < 1) throw DomainError("--rounds must be >= 1");
  const auto ch = build_channel(cfg);
  const auto [psi, layout] = build_state(cfg);
  const auto obs = observable_catalog(default_observable(cfg, ch));
  if (obs.matrix.dim() != psi.amplitudes.size())
    throw DomainError("observable " + obs.name + " does not fit the chosen state");
  const PhaseScenario truth{ch, psi, layout, cfg.phi.value_or(1.0)};

  AdaptiveOptions opt;
  opt.rounds = static_cast<std::size_t>(std::min<std::uint64_t>(cfg.rounds, cfg.nu));
  opt.shots_per_round = cfg.nu / opt.rounds;
  opt.seed = cfg.seed;
  opt.workers = worker_count();
  const auto run = adaptive_run(truth, obs, opt);
  const double bound = qcr_bound(truth, run.nu);

  json rounds = json::array();
  for (const auto& r : run.rounds) {
    rounds.push_back({{"feedback_phase", r.feedback_phase},
                      {"counts", r.counts},
                      {"estimate", r.estimate},
                      {"variance", std::isfinite(r.variance) ? json(r.variance) : json(nullptr)},
                      {"clipped", r.clipped}});
  }
  json warnings = json::array();
  if (run.low_nu) warnings.push_back("low nu: variance estimate is unreliable below 100 shots");
  if (run.nu != cfg.nu) warnings.push_back("nu rounded down to a multiple of the round count");
  json out{{"command", "simulate"},
           {"channel", channel_json(ch)},
           {"state", cfg.state},
           {"observable", obs.name},
           {"seed", run.seed},
           {"nu", run.nu},
           {"true_phi", truth.phi},
           {"target_operating_point", run.target_operating_point},
           {"estimate", run.estimate},
           {"sample_variance", std::isfinite(run.sample_variance) ? json(run.sample_variance) : json(nullptr)},
           {"qcr_bound", bound},
           {"ratio", std::isfinite(run.sample_variance) ? json(run.sample_variance / bound) : json(nullptr)},
           {"warnings", warnings},
           {"rounds", rounds}};
  emit(cfg, out.dump(2) + "\n");
  return 0;
}

int cmd_experiment(const RunConfig& cfg) {
  const auto noise = build_channel(cfg);
  double phi = 0.0;
  bool sweet = false;
  if (cfg.phi) {
    phi = *cfg.phi;
  } else {
    phi = photonics::click_fisher_sweet_spot(noise).first;
    sweet = true;
  }
  const auto dist = photonics::detect(photonics::evolve(photonics::prepare(), phi, noise));
  const double f = photonics::click_fisher(noise, phi);
  const double j = qfi_scenario(
      {noise, make_state(family::MaxEntangled{}), Layout::probes_then_ancillas(1, 1), phi});

  json p = json::object();
  const char* labels[] = {"BS1+", "BS1-", "BS2+", "BS2-"};
  for (std::size_t k = 0; k < 4; ++k) p[labels[k]] = dist.p[k];
  json out{{"command", "experiment"},
           {"channel", channel_json(noise)},
           {"phi", phi},
           {"phi_is_sweet_spot", sweet},
           {"probabilities", p},
           {"click_fisher", f},
           {"qfi", j}};
  if (cfg.nu > 0) {
    const auto counts = sample_counts(dist.p, cfg.nu, cfg.seed, 0, worker_count());
    json c = json::object();
    for (std::size_t k = 0; k < 4; ++k) c[labels[k]] = counts[k];
    out["sampled"] = {{"nu", cfg.nu}, {"seed", cfg.seed}, {"counts", c}};
  }
  emit(cfg, out.dump(2) + "\n");
  return 0;
}

int cmd_optimize(const RunConfig& cfg) {
  const auto ch = build_channel(cfg);
  const double phi = cfg.phi.value_or(kPi / 2.0);
  OptResult r;
  if (cfg.family == "single") {
    r = optimize_family(ch, FamilyShape::Single, phi, Layout::probes_then_ancillas(1, 0));
  } else if (cfg.family == "ancilla-pair") {
    r = optimize_family(ch, FamilyShape::AncillaPair, phi, Layout::probes_then_ancillas(1, 1));
  } else {
    r = optimize_two_probes(ch, phi);
  }
  json out{{"command", "optimize"},
           {"channel", channel_json(ch)},
           {"family", cfg.family},
           {"phi", phi},
           {"best_params", r.best_params},
           {"best_qfi", r.best_qfi},
           {"evaluations", r.evaluations},
           {"converged", r.converged}};
  emit(cfg, out.dump(2) + "\n");
  return 0;
}

int cmd_noon4_audit(const RunConfig& cfg) {
  const Grid etas = cfg.grid.empty() ? Grid{0.0, 0.95, 20} : Grid::parse(cfg.grid);
  if (cfg.phi_steps < 2) throw DomainError("--phi-steps must be >= 2");
  const Grid phis{0.0, kPi / 2.0, cfg.phi_steps};
  Table t{{"eta", "phi", "numeric", "reference", "discrepancy"}, {}};
  t.rows.resize(etas.steps * phis.steps);
  parallel_for(t.rows.size(), [&](std::size_t idx) {
    const auto c = compare_noon4(etas.at(idx / phis.steps), phis.at(idx % phis.steps));
    t.rows[idx] = {c.eta, c.phi, c.numeric, c.reference, c.discrepancy()};
  });
  double worst = 0.0;
  for (const auto& r : t.rows) worst = std::max(worst, *r[4]);
  std::cerr << "noon4 audit: max |numeric - reference| = " << format_number(worst)
            << (worst <= 1e-6 ? " (agree)" : " (disagree)") << "\n";
  emit(cfg, t.to_csv());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qfi_lab: quantum Fisher information of noisy phase estimation with entangled ancillas"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* qfi = app.add_subcommand("qfi", "QFI of one scenario, with the matching closed form");
  add_channel_options(qfi, cfg);
  add_state_options(qfi, cfg);
  qfi->add_option("--phi", cfg.phi, "Phase (default pi/2)");
  qfi->add_option("--out", cfg.out, "Output path (default stdout)");

  std::string fig_id;
  auto* fig = app.add_subcommand("fig", "Figure-reproduction dataset");
  fig->add_option("figure", fig_id, "Figure id")->required()->check(CLI::IsMember({"2a", "2b", "3"}));
  fig->add_option("--grid", cfg.grid, "start:stop:steps");
  fig->add_option("--out", cfg.out, "Output path (default stdout)");
  fig->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* sim = app.add_subcommand("simulate", "Adaptive Monte Carlo estimation");
  add_channel_options(sim, cfg);
  add_state_options(sim, cfg);
  sim->add_option("--phi", cfg.phi, "True phase (default 1.0)");
  sim->add_option("--nu", cfg.nu, "Total repetitions");
  sim->add_option("--rounds", cfg.rounds, "Feedback rounds");
  sim->add_option("--seed", cfg.seed, "RNG seed");
  sim->add_option("--observable", cfg.observable, "ad_ancilla | depolarizing_single | pauli_ancilla | ad_noon4");
  sim->add_option("--out", cfg.out, "Output path (default stdout)");
  sim->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));

  auto* exp = app.add_subcommand("experiment", "Single-photon polarization/path experiment");
  add_channel_options(exp, cfg);
  exp->add_option("--phi", cfg.phi, "Phase (default: sweet spot)");
  std::uint64_t exp_nu = 0;
  exp->add_option("--nu", exp_nu, "Sample this many photons (default: none)");
  exp->add_option("--seed", cfg.seed, "RNG seed for sampling");
  exp->add_option("--out", cfg.out, "Output path (default stdout)");
  exp->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));

  auto* optc = app.add_subcommand("optimize", "Maximize the QFI over a probe-state family");
  add_channel_options(optc, cfg);
  optc->add_option("--family", cfg.family, "single | ancilla-pair | generic2")
      ->check(CLI::IsMember({"single", "ancilla-pair", "generic2"}));
  optc->add_option("--phi", cfg.phi, "Phase (default pi/2)");
  optc->add_option("--out", cfg.out, "Output path (default stdout)");

  auto* audit = app.add_subcommand("noon4-audit", "Numeric vs reference four-qubit NOON QFI");
  audit->add_option("--grid", cfg.grid, "eta grid start:stop:steps (default 0:0.95:20)");
  audit->add_option("--phi-steps", cfg.phi_steps, "phi grid points on [0, pi/2]");
  audit->add_option("--out", cfg.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*qfi) return cmd_qfi(cfg);
    if (*fig) return cmd_fig(fig_id, cfg);
    if (*sim) return cmd_simulate(cfg);
    if (*exp) {
      cfg.nu = exp_nu;
      return cmd_experiment(cfg);
    }
    if (*optc) return cmd_optimize(cfg);
    if (*audit) return cmd_noon4_audit(cfg);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
