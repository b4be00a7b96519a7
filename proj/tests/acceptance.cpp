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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "qfilab/estimate.hpp"
#include "qfilab/fisher.hpp"
#include "qfilab/optimize.hpp"
#include "qfilab/photonics.hpp"
#include "qfilab/report.hpp"
#include "support.hpp"

namespace qfilab {
namespace {

using testing::Rng;
using testing::uniform;

const double kH = 1.0 / std::sqrt(2.0);
const Layout kL10 = Layout::probes_then_ancillas(1, 0);
const Layout kL11 = Layout::probes_then_ancillas(1, 1);

// Collects failed checks and free-form notes for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void near(double got, double want, double tol, const std::string& what) {
    worst_ = std::max(worst_, std::abs(got - want));
    std::ostringstream os;
    os << what << ": got " << format_number(got) << ", want " << format_number(want) << " (tol " << tol << ")";
    expect(std::abs(got - want) <= tol, os.str());
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  double worst() const { return worst_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  double worst_ = 0.0;
  std::vector<std::string> failures_, notes_;
};

bool run_criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream lim;
  lim << "runtime " << format_number(secs) << " s exceeds " << limit_s << " s";
  c.expect(secs <= limit_s, lim.str());
  std::printf("%s %d %s [%zu checks, %.2f s, limit %.0f s]\n", c.ok() ? "PASS" : "FAIL", id, title, c.checks(), secs,
              limit_s);
  for (const auto& n : c.notes()) std::printf("     %s\n", n.c_str());
  for (const auto& f : c.failures()) std::printf("     failed: %s\n", f.c_str());
  if (c.failed() > c.failures().size()) std::printf("     ... %zu failures in total\n", c.failed());
  std::fflush(stdout);
  return c.ok();
}

//-------------------------------------------------------------------------

void closed_form_suite(Check& c) {
  auto both = [&](const PhaseScenario& s, double want, const std::string& what) {
    const auto rho = output_state(s).matrix;
    const auto drho = output_derivative(s);
    c.near(qfi(rho, drho), want, 1e-9, what);
    // Independent SLD solve: guards against a shared bug in the two.
    c.near(oracle::sld_qfi(rho, drho), want, 1e-7, what + " (sld oracle)");
  };
  for (int i = 0; i < 50; ++i) {
    const double x = i / 49.0, phi = 0.1 + 0.05 * i;
    const std::string at = " x=" + format_number(x);
    both({amplitude_damping(x), make_state(family::Single{}), kL10, phi}, closed_form(closed::AdSingle{x}),
         "1-eta" + at);
    both({amplitude_damping(x), make_state(family::AncillaPair{kH}), kL11, phi},
         closed_form(closed::AdGammaHalf{x}), "2(1-eta)/(2-eta)" + at);
    both({amplitude_damping(x), make_state(family::AncillaPair{oracle::optimal_gamma(x)}), kL11, phi},
         closed_form(closed::AdGammaOpt{x}), "4(1-eta)/(sqrt(1-eta)+1)^2" + at);
    both({dephasing(x), make_state(family::Single{}), kL10, phi}, closed_form(closed::Dephasing{x}),
         "(1-2p3)^2" + at);
    both({depolarizing(x), make_state(family::Single{}), kL10, phi}, closed_form(closed::DepolarizingSingle{x}),
         "(1-p)^2" + at);
    both({depolarizing(x), make_state(family::MaxEntangled{}), kL11, phi},
         closed_form(closed::DepolarizingAncilla{x}), "2(1-p)^2/(2-p)" + at);
  }
  // Ancilla Pauli formula on a 50-point simplex lattice.
  int n = 0;
  for (int a = 0; a <= 7 && n < 50; ++a)
    for (int b = 0; a + b <= 7 && n < 50; ++b)
      for (int d = 0; a + b + d <= 7 && n < 50; ++d, ++n) {
        const double p1 = a / 7.0, p2 = b / 7.0, p3 = d / 7.0;
        both({pauli_channel(p1, p2, p3), make_state(family::MaxEntangled{}), kL11, 0.37},
             closed_form(closed::PauliAncilla{p1, p2, p3}), "pauli ancilla");
      }
  // No-ancilla Pauli formula where it is exact: the optimized value at
  // ε = 1/√2 (50 simplex points) and the p1 = p2 family (50 points).
  Rng rng(2026);
  for (int i = 0; i < 50; ++i) {
    const auto p = testing::random_simplex(rng);
    double best = 0.0;
    for (double alpha : {0.0, kPi / 2.0})
      best = std::max(best, qfi_scenario({pauli_channel(p[0], p[1], p[2]), make_state(family::Single{kH, alpha}), kL10, 0.0}));
    c.near(best, pauli_no_ancilla_max_alpha(p[0], p[1], p[2]), 1e-9, "pauli no-ancilla, max over alpha");
  }
  for (int i = 0; i < 50; ++i) {
    const double p12 = uniform(rng, 0.0, 0.5), p3 = uniform(rng, 0.0, 1.0 - 2.0 * p12);
    const double eps = uniform(rng), alpha = uniform(rng, 0.0, 2.0 * kPi), phi = uniform(rng, -kPi, kPi);
    both({pauli_channel(p12, p12, p3), make_state(family::Single{eps, alpha}), kL10, phi},
         closed_form(closed::PauliNoAncilla{p12, p12, p3, eps, alpha, phi}), "pauli no-ancilla, p1=p2");
  }
  // Outside those sets the reference no-ancilla form is not the QFI.
  double gap = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto p = testing::random_simplex(rng);
    const double eps = uniform(rng, 0.05, 0.95), alpha = uniform(rng, 0.0, 2.0 * kPi);
    const double numeric = qfi_scenario({pauli_channel(p[0], p[1], p[2]), make_state(family::Single{eps, alpha}), kL10, 0.0});
    gap = std::max(gap, std::abs(numeric - closed_form(closed::PauliNoAncilla{p[0], p[1], p[2], eps, alpha, 0.0})));
  }
  c.note("max |numeric - reference| on the closed-form grids: " + format_number(c.worst()));
  c.note("pauli no-ancilla at generic (p, eps, alpha), 200 draws: max gap " + format_number(gap) +
         " (reference form omits the Bloch mixedness term and swaps p1/p2 weights; exact on the checked sets)");
}

void fig2a_ordering(Check& c) {
  const auto t = fig2a({0.0, 1.0, 101});
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    const double single = *r[1], half = *r[2], opt = *r[3];
    c.expect(half > single, "gamma_half > single at eta=" + format_number(*r[0]));
    c.expect(opt > single, "gamma_opt > single at eta=" + format_number(*r[0]));
    c.expect(opt >= half - 1e-9, "gamma_opt >= gamma_half at eta=" + format_number(*r[0]));
    margin = std::min({margin, half - single, opt - single});
  }
  for (std::size_t i : {std::size_t{0}, t.rows.size() - 1}) {
    const auto& r = t.rows[i];
    c.expect(*r[2] - *r[1] >= -1e-9 && *r[3] - *r[1] >= -1e-9, "endpoint ordering");
  }
  c.note("smallest interior ancilla advantage: " + format_number(margin));
}

void fig2b_crossing(Check& c) {
  auto gap = [](double eta) {
    return qfi_scenario(noon4_scenario(eta, kPi / 2)) - optimize_two_probes(amplitude_damping(eta), kPi / 2).best_qfi;
  };
  double lo = 0.5, hi = 0.9;
  c.expect(gap(lo) > 0.0 && gap(hi) < 0.0, "crossing bracketed in [0.5, 0.9]");
  for (int it = 0; it < 30; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  const double star = 0.5 * (lo + hi);
  c.expect(star >= 0.6 && star <= 0.8, "eta* in [0.6, 0.8]");
  c.note("eta* = " + format_number(star));
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 50; ++i) {
    const double eta = 0.5 + 0.01 * i;
    const auto ch = amplitude_damping(eta);
    const double opt2 = optimize_two_probes(ch, kPi / 2).best_qfi;
    const double bound = closed_form(closed::DurkinBound{2, eta});
    const double noon2 = qfi_scenario({ch, make_state(family::Noon{2}), Layout::probes_then_ancillas(2, 0), kPi / 2});
    c.expect(opt2 <= bound + 1e-12, "opt2 <= bound at eta=" + format_number(eta));
    c.expect(opt2 >= noon2 - 1e-12, "opt2 >= noon2 at eta=" + format_number(eta));
    worst = std::max(worst, opt2 - bound);
  }
  const double opt95 = optimize_two_probes(amplitude_damping(0.95), kPi / 2).best_qfi;
  const double b95 = closed_form(closed::DurkinBound{2, 0.95});
  c.expect(opt95 >= 0.95 * b95, "opt2 within 5% of the bound at eta=0.95");
  c.note("max (opt2 - bound) on eta in [0.5, 0.99]: " + format_number(worst));
  c.note("eta=0.95: opt2 = " + format_number(opt95) + ", bound = " + format_number(b95) + ", ratio " +
         format_number(opt95 / b95));
}

void pauli_advantage(Check& c) {
  Rng rng(4);
  double slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10000; ++i) {
    const auto p = testing::random_simplex(rng);
    const double ja = closed_form(closed::PauliAncilla{p[0], p[1], p[2]});
    const double jna = pauli_no_ancilla_max_alpha(p[0], p[1], p[2]);
    slack = std::min(slack, ja - jna);
    c.expect(ja - jna >= -1e-9, "ja >= max_alpha jna");
  }
  c.note("min (ja - max_alpha jna) over 10000 samples: " + format_number(slack));
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    for (const auto& ch : {pauli_channel(0.0, x, 1.0 - x), pauli_channel(x, 0.0, 1.0 - x)}) {
      const double j = qfi_scenario({ch, make_state(family::MaxEntangled{}), kL11, 0.7});
      c.near(j, 1.0, 1e-12, "orthogonal noise line");
      worst = std::max(worst, std::abs(j - 1.0));
    }
    c.near(closed_form(closed::PauliAncilla{0.0, x, 1.0 - x}), 1.0, 1e-12, "reference form, p1=0 line");
    c.near(closed_form(closed::PauliAncilla{x, 0.0, 1.0 - x}), 1.0, 1e-12, "reference form, p2=0 line");
  }
  c.note("max |J - 1| on orthogonal-noise lines: " + format_number(worst));
}

void qcr_saturation(Check& c) {
  const auto ad_obs = observable_catalog(ObservableId::AdAncilla);
  for (int i = 0; i < 20; ++i) {
    const double eta = 0.05 * i;
    const PhaseScenario s{amplitude_damping(eta), make_state(family::MaxEntangled{}), kL11, kPi / 2};
    c.near(error_propagation_variance(s, ad_obs) * qfi_scenario(s), 1.0, 1e-9, "ad_ancilla at pi/2");
  }
  // Symbolic variance expression at 20 (η, φ) points.
  for (int i = 0; i < 20; ++i) {
    const double eta = 0.045 * i, phi = 0.3 + 0.13 * i;
    const PhaseScenario s{amplitude_damping(eta), make_state(family::MaxEntangled{}), kL11, phi};
    const double cs = std::cos(phi), sn = std::sin(phi);
    const double want = (1.0 - eta / 2.0 - (1.0 - eta) * cs * cs) / ((1.0 - eta) * sn * sn);
    c.near(error_propagation_variance(s, ad_obs), want, 1e-9 * std::max(1.0, want), "ad_ancilla variance expression");
  }
  const auto dep_obs = observable_catalog(ObservableId::DepolarizingSingle);
  for (double p : {0.05, 0.2, 0.4, 0.6, 0.8}) {
    PhaseScenario s{depolarizing(p), make_state(family::Single{}), kL10, 0.0};
    s.phi = find_sweet_spot(s, dep_obs).phi;
    c.near(error_propagation_variance(s, dep_obs) * qfi_scenario(s), 1.0, 1e-9, "depolarizing_single at sweet spot");
  }
  // The Bell-pair Pauli observable saturates on p0·p2 = p1·p3; off that
  // set its Fisher information is (p0 + p1 − p2 − p3)².
  const auto pauli_obs = observable_catalog(ObservableId::PauliAncilla);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const double a = uniform(rng, 0.02, 1.0), b = uniform(rng, 0.02, 1.0), d = uniform(rng, 0.02, 1.0);
    const double z = a + b + d + a * d / b;
    const PhaseScenario s{pauli_channel(a / z, b / z, d / z), make_state(family::MaxEntangled{}), kL11, kPi / 2};
    c.near(error_propagation_variance(s, pauli_obs) * qfi_scenario(s), 1.0, 1e-9, "pauli_ancilla at pi/2");
  }
  {
    const PhaseScenario s{pauli_channel(0.3, 0.0, 0.2), make_state(family::MaxEntangled{}), kL11, kPi / 2};
    c.note("pauli_ancilla off p0*p2 = p1*p3, (p1,p2,p3) = (0.3,0,0.2): F/J = " +
           format_number(1.0 / (error_propagation_variance(s, pauli_obs) * qfi_scenario(s))));
  }
  const auto noon_obs = observable_catalog(ObservableId::AdNoon4);
  for (int i = 0; i < 10; ++i) {
    const double eta = 0.09 * i;
    for (int n : {1, 3}) {
      const auto s = noon4_scenario(eta, 2.0 * kPi * n / 8.0);
      c.near(error_propagation_variance(s, noon_obs) * qfi_scenario(s), 1.0, 1e-9, "ad_noon4 at 2 pi n/8, n odd");
    }
  }
  c.note("max |Var * J - 1| (or expression residual): " + format_number(c.worst()));
}

void monte_carlo(Check& c) {
  const auto o = observable_catalog(ObservableId::AdAncilla);
  const PhaseScenario truth{amplitude_damping(0.5), make_state(family::MaxEntangled{}), kL11, 1.0};
  const double bound = qcr_bound(truth, 100000);
  int within = 0;
  std::ostringstream ratios;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    AdaptiveOptions opt;
    opt.rounds = 10;
    opt.shots_per_round = 10000;
    opt.seed = seed;
    const auto run = adaptive_run(truth, o, opt);
    const double r = run.sample_variance / bound;
    ratios << (seed > 1 ? " " : "") << format_number(std::round(r * 1e4) / 1e4);
    if (std::abs(r - 1.0) <= 0.1) ++within;
  }
  c.expect(within >= 9, "sample variance within 10% of 1/(nu J) for >= 9 of 10 seeds");
  c.note("variance / QCR for seeds 1..10: " + ratios.str() + " (" + std::to_string(within) + "/10 within 10%)");

  // Cross-seed spread of the final estimate, the frequentist counterpart.
  std::vector<double> est;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    AdaptiveOptions opt;
    opt.rounds = 10;
    opt.shots_per_round = 10000;
    opt.seed = 100000 + seed;
    opt.target = kPi / 2;
    est.push_back(adaptive_run(truth, o, opt).estimate);
  }
  double m = 0.0, v = 0.0;
  for (double e : est) m += e / est.size();
  for (double e : est) v += (e - m) * (e - m) / (est.size() - 1);
  c.expect(std::abs(v / bound - 1.0) <= 0.25, "empirical spread over 400 seeds within 25% of 1/(nu J)");
  c.note("empirical variance over 400 seeds / QCR: " + format_number(v / bound));

  const std::size_t rounds = 10;
  std::vector<std::vector<double>> dist(rounds);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    AdaptiveOptions opt;
    opt.rounds = rounds;
    opt.shots_per_round = 1000;
    opt.seed = seed;
    opt.target = kPi / 2;
    const auto run = adaptive_run({amplitude_damping(0.5), make_state(family::MaxEntangled{}), kL11, 0.6}, o, opt);
    for (std::size_t r = 0; r < rounds; ++r) dist[r].push_back(std::abs(run.rounds[r].operating_point - kPi / 2));
  }
  std::ostringstream med;
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < rounds; ++r) {
    std::nth_element(dist[r].begin(), dist[r].begin() + 50, dist[r].end());
    const double md = dist[r][50];
    c.expect(md < prev, "median |op - pi/2| decreases at round " + std::to_string(r));
    med << (r ? " " : "") << format_number(std::round(md * 1e5) / 1e5);
    prev = md;
  }
  c.note("median |operating point - pi/2| by round: " + med.str());
}

void photonics_equivalence(Check& c) {
  namespace ph = photonics;
  Rng rng(7);
  const auto bell = bell_basis();
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto noise = testing::random_channel(rng);
    const double phi = uniform(rng, -kPi, kPi);
    const auto out = ph::evolve(ph::prepare(), phi, noise);
    const CMat rho = output_state({noise, make_state(family::MaxEntangled{}), kL11, phi}).matrix;
    const double d = max_abs_diff(ph::to_qubit_order(out.rho), rho);
    c.expect(d <= 1e-12, "optical state vs abstract");
    worst = std::max(worst, d);
    const auto p = ph::detect(out).p;
    for (std::size_t k = 0; k < 4; ++k) {
      const double want = inner(bell[k].amplitudes, rho.apply(bell[k].amplitudes)).real();
      c.expect(std::abs(p[k] - want) <= 1e-12, "click probability vs Bell projector");
      worst = std::max(worst, std::abs(p[k] - want));
    }
  }
  c.note("max entrywise deviation from the abstract pipeline: " + format_number(worst));
  for (double phi : {0.2, 1.0, kPi / 2, 2.5}) c.near(ph::click_fisher(identity_channel(), phi), 1.0, 1e-9, "identity F = 1");
  for (double p : {0.1, 0.4, 0.7}) {
    const auto [phi, f] = ph::click_fisher_sweet_spot(depolarizing(p));
    c.near(f, qfi_scenario({depolarizing(p), make_state(family::MaxEntangled{}), kL11, phi}), 1e-9,
           "depolarizing F at sweet spot = ancilla QFI");
  }
}

std::string serialize(const EstimationRun& run) {
  std::ostringstream os;
  os << format_number(run.estimate) << ' ' << format_number(run.sample_variance) << '\n';
  for (const auto& r : run.rounds) {
    os << format_number(r.feedback_phase) << ' ' << format_number(r.estimate);
    for (auto k : r.counts) os << ' ' << k;
    os << '\n';
  }
  return os.str();
}

void hygiene(Check& c) {
  Rng rng(8);
  double worst_fd = 0.0;
  for (int t = 0; t < 200; ++t) {
    auto s = testing::random_scenario(rng);
    const double h = 1e-5, phi = s.phi;
    s.phi = phi + h;
    const CMat up = output_state(s).matrix;
    s.phi = phi - h;
    const CMat dn = output_state(s).matrix;
    s.phi = phi;
    const double d = max_abs_diff(output_derivative(s), (up - dn) * (1.0 / (2.0 * h)));
    c.expect(d <= 1e-8, "analytic vs finite-difference derivative");
    worst_fd = std::max(worst_fd, d);
  }
  c.note("max |analytic - central difference| derivative: " + format_number(worst_fd));
  double worst_eig = 0.0;
  for (std::size_t dim : {2u, 4u, 16u})
    for (int t = 0; t < 1000; ++t) {
      const CMat m = testing::random_hermitian(rng, dim);
      const double d = max_abs_diff(reconstruct(eigh(m)), m);
      c.expect(d <= 1e-10, "eigensolver reconstruction");
      worst_eig = std::max(worst_eig, d);
    }
  c.note("max eigensolver reconstruction error (3000 matrices): " + format_number(worst_eig));
  const auto o = observable_catalog(ObservableId::AdAncilla);
  const PhaseScenario truth{amplitude_damping(0.5), make_state(family::MaxEntangled{}), kL11, 1.0};
  std::string ref;
  for (unsigned w : {1u, 2u, 3u, 8u}) {
    AdaptiveOptions opt;
    opt.seed = 42;
    opt.workers = w;
    const auto text = serialize(adaptive_run(truth, o, opt));
    if (ref.empty()) ref = text;
    c.expect(text == ref, "Monte Carlo report identical for " + std::to_string(w) + " workers");
  }
  const std::vector<double> probs{0.1, 0.2, 0.3, 0.4};
  const auto base = sample_counts(probs, 1000003, 9, 0, 1);
  for (unsigned w : {2u, 5u, 16u}) c.expect(sample_counts(probs, 1000003, 9, 0, w) == base, "sample_counts worker independence");
}

void noon4_audit(Check& c) {
  const Grid eta_grid{0.0, 0.95, 20};
  double max_gap = 0.0, at_eta = 0.0, at_phi = 0.0, max_gap_quarter = 0.0, max_closed = 0.0;
  std::size_t agree = 0, total = 0;
  for (std::size_t i = 0; i < eta_grid.steps; ++i)
    for (int k = 0; k <= 16; ++k) {
      const double eta = eta_grid.at(i), phi = kPi / 2.0 * k / 16.0;
      const auto cmp = compare_noon4(eta, phi);
      ++total;
      if (cmp.agrees(1e-9)) ++agree;
      if (cmp.discrepancy() > max_gap) {
        max_gap = cmp.discrepancy();
        at_eta = eta;
        at_phi = phi;
      }
      if (k % 8 == 0) max_gap_quarter = std::max(max_gap_quarter, cmp.discrepancy());
      const double u = (1.0 - eta) * (1.0 - eta);
      max_closed = std::max(max_closed, std::abs(cmp.numeric - 8.0 * u / (1.0 + u)));
    }
  c.expect(total == 340, "audit grid produced");
  c.note("numeric QFI = 8u/(1+u), u = (1-eta)^2, independent of phi: max deviation " + format_number(max_closed));
  c.note("reference cos(8 phi) form agrees at " + std::to_string(agree) + " of " + std::to_string(total) +
         " grid points; max discrepancy at phi = n pi/4: " + format_number(max_gap_quarter));
  c.note("max discrepancy " + format_number(max_gap) + " at eta = " + format_number(at_eta) +
         ", phi = " + format_number(at_phi));
}

}  // namespace
}  // namespace qfilab

int main() {
  using namespace qfilab;
  bool ok = true;
  ok &= run_criterion(1, "closed-form oracle suite", 10, closed_form_suite);
  ok &= run_criterion(2, "fig 2a ordering", 5, fig2a_ordering);
  ok &= run_criterion(3, "fig 2b crossing and two-probe bound", 300, fig2b_crossing);
  ok &= run_criterion(4, "pauli ancilla advantage", 60, pauli_advantage);
  ok &= run_criterion(5, "QCR saturation of catalog observables", 10, qcr_saturation);
  ok &= run_criterion(6, "Monte Carlo achievability", 120, monte_carlo);
  ok &= run_criterion(7, "photonics equivalence", 10, photonics_equivalence);
  ok &= run_criterion(8, "numerical hygiene", 60, hygiene);
  ok &= run_criterion(9, "four-qubit NOON formula audit", 60, noon4_audit);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
