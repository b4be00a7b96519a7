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

#ifndef QFILAB_PHOTONICS_HPP
#define QFILAB_PHOTONICS_HPP

#include <array>
#include <cmath>

#include "qfilab/channel.hpp"
#include "qfilab/matcore.hpp"
#include "qfilab/qstate.hpp"

// Single photon carrying two qubits: polarization (H/V, the probe) and
// path (a/b, the ancilla). Optical basis order is {Ha, Va, Hb, Vb}, i.e.
// index = 2·path + polarization.

namespace qfilab::photonics {

enum Mode : std::size_t { Ha = 0, Va = 1, Hb = 2, Vb = 3 };

struct OpticalState {
  CMat rho{4};

  static OpticalState pure(std::span<const cplx> amplitudes) {
    return {CMat::outer(amplitudes, amplitudes)};
  }
};

/// Click probabilities in detector order BS1+, BS1−, BS2+, BS2−.
struct ClickDistribution {
  std::array<double, 4> p{};
};

/// PBS1 transmits H (stays in a) and reflects V (into b): a CNOT with
/// polarization as control and path as target.
inline CMat pbs_cnot() {
  CMat m(4);
  m(Ha, Ha) = 1.0;
  m(Vb, Va) = 1.0;
  m(Hb, Hb) = 1.0;
  m(Va, Vb) = 1.0;
  return m;
}

/// (|Ha⟩ + |Vb⟩)/√2 from (|H⟩ + |V⟩)/√2 in path a.
inline OpticalState prepare() {
  const double h = 1.0 / std::sqrt(2.0);
  const CVec input{h, h, 0.0, 0.0};
  return OpticalState::pure(pbs_cnot().apply(input));
}

/// Polarization operator lifted to the optical space (identity on path).
inline CMat on_polarization(const CMat& op) { return tensor(CMat::identity(2), op); }

/// Phase e^{iφ} on V, then the noise channel on polarization.
inline OpticalState evolve(const OpticalState& in, double phi, const KrausChannel& noise) {
  const CMat u = on_polarization(CMat::diag({1.0, std::polar(1.0, phi)}));
  const CMat rotated = u * in.rho * u.adjoint();
  CMat out(4);
  for (const auto& a : noise.kraus) {
    const CMat k = on_polarization(a);
    out += k * rotated * k.adjoint();
  }
  return {out};
}

/// ∂/∂φ of evolve(in, φ, noise).rho.
inline CMat evolve_derivative(const OpticalState& in, double phi, const KrausChannel& noise) {
  const CMat u = on_polarization(CMat::diag({1.0, std::polar(1.0, phi)}));
  const CMat g = on_polarization(CMat::diag({0.0, 1.0}));
  const CMat rotated = u * in.rho * u.adjoint();
  const CMat comm = (g * rotated - rotated * g) * kI;
  CMat out(4);
  for (const auto& a : noise.kraus) {
    const CMat k = on_polarization(a);
    out += k * comm * k.adjoint();
  }
  return out;
}

/// Output ports: BS1 projects onto (|Ha⟩ ± |Vb⟩)/√2, BS2 onto (|Va⟩ ± |Hb⟩)/√2.
inline std::array<CVec, 4> detector_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  return {CVec{h, 0.0, 0.0, h}, CVec{h, 0.0, 0.0, -h}, CVec{0.0, h, h, 0.0},
          CVec{0.0, h, -h, 0.0}};
}

inline std::array<double, 4> project_all(const CMat& m) {
  const auto basis = detector_basis();
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = inner(basis[k], m.apply(basis[k])).real();
  return out;
}

inline ClickDistribution detect(const OpticalState& s) {
  ClickDistribution d{project_all(s.rho)};
  for (auto& x : d.p) x = std::max(x, 0.0);
  return d;
}

/// Classical Fisher information Σ (dp_k/dφ)²/p_k of the click statistics.
/// Outcomes with p_k < 1e-12 are dropped.
inline double click_fisher(const KrausChannel& noise, double phi) {
  const auto prepared = prepare();
  const auto p = detect(evolve(prepared, phi, noise)).p;
  const auto dp = project_all(evolve_derivative(prepared, phi, noise));
  double f = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (p[k] < 1e-12) continue;
    f += dp[k] * dp[k] / p[k];
  }
  return f;
}

/// Reorders a 4×4 operator from the optical basis {Ha, Va, Hb, Vb} to the
/// two-qubit basis with polarization as qubit 0 (H→0, V→1) and path as
/// qubit 1 (a→0, b→1).
inline CMat to_qubit_order(const CMat& optical) {
  auto qubit_index = [](std::size_t o) { return 2 * (o & 1U) + (o >> 1); };
  CMat m(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(qubit_index(i), qubit_index(j)) = optical(i, j);
  return m;
}

/// Maximizes click_fisher over φ ∈ (0, π) by golden-section search.
inline std::pair<double, double> click_fisher_sweet_spot(const KrausChannel& noise) {
  auto f = [&](double phi) { return click_fisher(noise, phi); };
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 1e-6, b = kPi - 1e-6;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-10) {
    if (f1 > f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - g * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + g * (b - a); f2 = f(x2);
    }
  }
  return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace qfilab::photonics

#endif  // QFILAB_PHOTONICS_HPP
