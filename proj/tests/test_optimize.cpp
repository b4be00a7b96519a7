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

#include <gtest/gtest.h>

#include "qfilab/fisher.hpp"
#include "qfilab/optimize.hpp"

namespace qfilab {
namespace {

const Layout kSingle = Layout::probes_then_ancillas(1, 0);
const Layout kPair = Layout::probes_then_ancillas(1, 1);

double noon2_qfi(const KrausChannel& ch) {
  return qfi_scenario({ch, make_state(family::Noon{2}), Layout::probes_then_ancillas(2, 0), kPi / 2});
}

// Optimal ancilla amplitude: γ*² = √(1−η)/(1+√(1−η)).
double gamma_star(double eta) {
  const double r = std::sqrt(1.0 - eta);
  return std::sqrt(r / (1.0 + r));
}

TEST(NelderMead, Quadratic) {
  auto f = [](std::span<const double> x) { return (x[0] - 1.0) * (x[0] - 1.0) + 3.0 * (x[1] + 2.0) * (x[1] + 2.0); };
  const auto r = nelder_mead(f, {0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], -2.0, 1e-6);
}

TEST(NelderMead, Rosenbrock) {
  auto f = [](std::span<const double> x) {
    return 100.0 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1.0 - x[0]) * (1.0 - x[0]);
  };
  const auto r = nelder_mead(f, {-1.2, 1.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], 1.0, 1e-5);
}

TEST(NelderMead, EvaluationCap) {
  SimplexOptions so;
  so.max_evaluations = 20;
  auto f = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2]; };
  const auto r = nelder_mead(f, {5.0, 5.0, 5.0}, so);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, 20u);
}

TEST(OptimizeFamily, SingleQubitAmplitudeDamping) {
  const auto r = optimize_family(amplitude_damping(0.5), FamilyShape::Single, kPi / 2, kSingle);
  EXPECT_NEAR(r.best_params[0], 1.0 / std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(r.best_qfi, 0.5, 1e-9);
}

TEST(OptimizeFamily, AncillaPairMatchesClosedForm) {
  for (double eta : {0.0, 0.1, 0.3, 0.5, 0.75, 0.9, 0.99}) {
    const auto r = optimize_family(amplitude_damping(eta), FamilyShape::AncillaPair, kPi / 2, kPair);
    const double want = closed_form(closed::AdGammaOpt{eta});
    EXPECT_NEAR(r.best_qfi, want, 1e-6) << eta;
    if (eta > 0.0) {
      EXPECT_NEAR(r.best_params[0], gamma_star(eta), 1e-3) << eta;
    }
  }
  const auto r = optimize_family(amplitude_damping(0.75), FamilyShape::AncillaPair, kPi / 2, kPair);
  EXPECT_NEAR(r.best_qfi, 4.0 / 9.0, 1e-6);
}

TEST(OptimizeFamily, DepolarizingSingle) {
  for (double p : {0.0, 0.2, 0.5, 0.9}) {
    const auto r = optimize_family(depolarizing(p), FamilyShape::Single, kPi / 2, kSingle);
    EXPECT_NEAR(r.best_qfi, (1.0 - p) * (1.0 - p), 1e-9) << p;
  }
}

TEST(OptimizeFamily, BestAtLeastEverySeed) {
  OptimizeOptions opt;
  const auto ch = amplitude_damping(0.4);
  const auto r = optimize_family(ch, FamilyShape::Single, kPi / 2, kSingle, opt);
  for (std::size_t i = 0; i < 17; ++i)
    for (std::size_t k = 0; k < 17; ++k) {
      const double eps = i / 16.0, alpha = 2.0 * kPi * k / 17.0;
      const double q = qfi_scenario({ch, make_state(family::Single{eps, alpha}), kSingle, kPi / 2});
      EXPECT_GE(r.best_qfi, q - 1e-12);
    }
}

TEST(OptimizeFamily, Deterministic) {
  const auto a = optimize_family(amplitude_damping(0.3), FamilyShape::Single, kPi / 2, kSingle);
  const auto b = optimize_family(amplitude_damping(0.3), FamilyShape::Single, kPi / 2, kSingle);
  EXPECT_EQ(a.best_params, b.best_params);
  EXPECT_EQ(a.best_qfi, b.best_qfi);
}

TEST(OptimizeFamily, RestartOffsetsAgree) {
  struct Case {
    KrausChannel ch;
    FamilyShape shape;
    Layout layout;
  };
  const std::vector<Case> cases{{amplitude_damping(0.5), FamilyShape::Single, kSingle},
                                {amplitude_damping(0.6), FamilyShape::AncillaPair, kPair},
                                {depolarizing(0.3), FamilyShape::Single, kSingle},
                                {pauli_channel(0.1, 0.2, 0.3), FamilyShape::Single, kSingle}};
  for (const auto& c : cases) {
    std::vector<double> best;
    for (double off : {0.0, 0.13, 0.37, 0.61, 0.89}) {
      OptimizeOptions opt;
      opt.grid_offset = off;
      best.push_back(optimize_family(c.ch, c.shape, kPi / 2, c.layout, opt).best_qfi);
    }
    const auto [lo, hi] = std::minmax_element(best.begin(), best.end());
    EXPECT_LT(*hi - *lo, 1e-5) << static_cast<int>(c.ch.model);
  }
}

TEST(OptimizeTwoProbes, NoiselessReachesHeisenberg) {
  const auto r = optimize_two_probes(identity_channel(), kPi / 2);
  EXPECT_NEAR(r.best_qfi, 4.0, 1e-9);
  // The optimum is NOON-like: equal weight on |00⟩ and |11⟩ only.
  const auto psi = state_from_result(r);
  EXPECT_NEAR(std::norm(psi.amplitudes[0]), 0.5, 1e-4);
  EXPECT_NEAR(std::norm(psi.amplitudes[3]), 0.5, 1e-4);
}

TEST(OptimizeTwoProbes, BoundedAndFeasible) {
  for (double eta : {0.1, 0.5, 0.7, 0.9}) {
    const auto ch = amplitude_damping(eta);
    const auto r = optimize_two_probes(ch, kPi / 2);
    EXPECT_GE(r.best_qfi, noon2_qfi(ch) - 1e-12) << eta;
    if (eta >= 0.5) {
      EXPECT_LE(r.best_qfi, closed_form(closed::DurkinBound{2, eta}) + 1e-12) << eta;
    }
  }
  const auto hi = optimize_two_probes(amplitude_damping(0.9), kPi / 2);
  EXPECT_GT(hi.best_qfi / closed_form(closed::DurkinBound{2, 0.9}), 0.85);
}

TEST(OptimizeTwoProbes, RestartOffsetsAgree) {
  std::vector<double> best;
  for (double off : {0.0, 0.13, 0.37, 0.61, 0.89}) {
    OptimizeOptions opt;
    opt.grid_offset = off;
    best.push_back(optimize_two_probes(amplitude_damping(0.6), kPi / 2, opt).best_qfi);
  }
  const auto [lo, hi] = std::minmax_element(best.begin(), best.end());
  EXPECT_LT(*hi - *lo, 1e-5);
}

TEST(OptimizeTwoProbes, WorkerCountDoesNotChangeResult) {
  OptimizeOptions opt;
  opt.workers = 1;
  const auto a = optimize_two_probes(amplitude_damping(0.4), kPi / 2, opt);
  opt.workers = 3;
  const auto b = optimize_two_probes(amplitude_damping(0.4), kPi / 2, opt);
  EXPECT_EQ(a.best_params, b.best_params);
  EXPECT_EQ(a.best_qfi, b.best_qfi);
}

// The four-qubit NOON state with ancillas beats the best two-probe state
// only below some η* in [0.6, 0.8].
TEST(OptimizeTwoProbes, NoonCrossing) {
  auto gap = [](double eta) {
    return qfi_scenario(noon4_scenario(eta, kPi / 2)) - optimize_two_probes(amplitude_damping(eta), kPi / 2).best_qfi;
  };
  double lo = 0.6, hi = 0.8;
  ASSERT_GT(gap(lo), 0.0);
  ASSERT_LT(gap(hi), 0.0);
  for (int it = 0; it < 12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  EXPECT_GE(lo, 0.6);
  EXPECT_LE(hi, 0.8);
}

}  // namespace
}  // namespace qfilab
