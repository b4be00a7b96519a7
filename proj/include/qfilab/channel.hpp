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

#ifndef QFILAB_CHANNEL_HPP
#define QFILAB_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "qfilab/matcore.hpp"
#include "qfilab/qstate.hpp"

namespace qfilab {

enum class NoiseModel { AmplitudeDamping, Pauli, Dephasing, Depolarizing, Identity };

inline std::string_view to_string(NoiseModel m) {
  switch (m) {
    case NoiseModel::AmplitudeDamping: return "amplitude_damping";
    case NoiseModel::Pauli: return "pauli";
    case NoiseModel::Dephasing: return "dephasing";
    case NoiseModel::Depolarizing: return "depolarizing";
    case NoiseModel::Identity: return "identity";
  }
  return "unknown";
}

/// Single-qubit CPTP map in Kraus form, tagged with the model it came from.
struct KrausChannel {
  NoiseModel model = NoiseModel::Identity;
  std::vector<double> params;
  std::vector<CMat> kraus;

  /// Σ A†A, which must equal the identity.
  CMat completeness() const {
    CMat s(2);
    for (const auto& a : kraus) s += a.adjoint() * a;
    return s;
  }

  /// True when the map commutes with the phase unitary, so the QFI does
  /// not depend on φ.
  bool commutes_with_phase() const {
    switch (model) {
      case NoiseModel::AmplitudeDamping:
      case NoiseModel::Dephasing:
      case NoiseModel::Depolarizing:
      case NoiseModel::Identity:
        return true;
      case NoiseModel::Pauli:
        return params.size() == 3 && params[0] == params[1];
    }
    return false;
  }
};

namespace detail {

inline void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace detail

inline KrausChannel identity_channel() {
  return {NoiseModel::Identity, {}, {CMat::identity(2)}};
}

/// A0 = diag(1, √(1−η)), A1 = √η |0⟩⟨1|; η is the decay probability.
inline KrausChannel amplitude_damping(double eta) {
  detail::check_probability(eta, "eta");
  return {NoiseModel::AmplitudeDamping,
          {eta},
          {CMat{{1.0, 0.0}, {0.0, std::sqrt(1.0 - eta)}},
           CMat{{0.0, std::sqrt(eta)}, {0.0, 0.0}}}};
}

inline KrausChannel pauli_channel(double p1, double p2, double p3) {
  detail::check_probability(p1, "p1");
  detail::check_probability(p2, "p2");
  detail::check_probability(p3, "p3");
  const double p0 = 1.0 - p1 - p2 - p3;
  if (p0 < -1e-12) {
    throw DomainError("p1 + p2 + p3 must not exceed 1, got " + std::to_string(p1 + p2 + p3));
  }
  const double q0 = std::max(p0, 0.0);
  return {NoiseModel::Pauli,
          {p1, p2, p3},
          {pauli::I() * std::sqrt(q0), pauli::X() * std::sqrt(p1), pauli::Y() * std::sqrt(p2),
           pauli::Z() * std::sqrt(p3)}};
}

inline KrausChannel dephasing(double p3) {
  auto ch = pauli_channel(0.0, 0.0, p3);
  ch.model = NoiseModel::Dephasing;
  ch.params = {p3};
  return ch;
}

/// Pauli channel with p1 = p2 = p3 = p/4.
inline KrausChannel depolarizing(double p) {
  detail::check_probability(p, "p");
  auto ch = pauli_channel(p / 4.0, p / 4.0, p / 4.0);
  ch.model = NoiseModel::Depolarizing;
  ch.params = {p};
  return ch;
}

/// Generic factory. Parameter order: AD {η}; Pauli {p1, p2, p3};
/// dephasing {p3}; depolarizing {p}; identity {}.
inline KrausChannel make_channel(NoiseModel model, std::span<const double> params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw DomainError(std::string(to_string(model)) + " expects " + std::to_string(n) +
                        " parameter(s), got " + std::to_string(params.size()));
    }
  };
  switch (model) {
    case NoiseModel::AmplitudeDamping: need(1); return amplitude_damping(params[0]);
    case NoiseModel::Pauli: need(3); return pauli_channel(params[0], params[1], params[2]);
    case NoiseModel::Dephasing: need(1); return dephasing(params[0]);
    case NoiseModel::Depolarizing: need(1); return depolarizing(params[0]);
    case NoiseModel::Identity: need(0); return identity_channel();
  }
  throw DomainError("unknown noise model");
}

inline KrausChannel make_channel(NoiseModel model, std::initializer_list<double> params) {
  return make_channel(model, std::span<const double>(params.begin(), params.size()));
}

//=========================================================================
// Layout and scenario
//=========================================================================

/// Which qubits go through the phase + noise (probes) and which are
/// carried along untouched (ancillas).
struct Layout {
  std::size_t n_total = 1;
  std::vector<std::size_t> probes{0};
  std::vector<std::size_t> ancillas;

  static Layout probes_then_ancillas(std::size_t n_probes, std::size_t n_ancillas) {
    Layout l;
    l.n_total = n_probes + n_ancillas;
    l.probes.clear();
    for (std::size_t q = 0; q < l.n_total; ++q) (q < n_probes ? l.probes : l.ancillas).push_back(q);
    return l;
  }

  void validate() const {
    if (probes.empty()) throw DomainError("layout: at least one probe is required");
    std::vector<int> seen(n_total, 0);
    for (auto q : probes) {
      if (q >= n_total) throw DomainError("layout: probe index out of range");
      ++seen[q];
    }
    for (auto q : ancillas) {
      if (q >= n_total) throw DomainError("layout: ancilla index out of range");
      ++seen[q];
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
      throw DomainError("layout: probes and ancillas must partition all qubits");
    }
  }

  /// Number of probe qubits in state |index⟩ (the phase generator eigenvalue).
  int probe_excitations(std::size_t index) const {
    int g = 0;
    for (auto q : probes) g += static_cast<int>((index >> (n_total - 1 - q)) & 1U);
    return g;
  }
};

struct PhaseScenario {
  KrausChannel channel;
  PureState input;
  Layout layout;
  double phi = 0.0;

  void validate() const {
    layout.validate();
    if (input.n_qubits != layout.n_total ||
        input.amplitudes.size() != (std::size_t{1} << layout.n_total)) {
      throw DomainError("scenario: input qubit count does not match layout");
    }
    if (std::abs(input.norm2() - 1.0) > 1e-12) throw DomainError("scenario: input not normalized");
  }
};

//=========================================================================
// Evolution
//=========================================================================

/// Σ_k A_k ρ A_k† with each A_k acting on `qubit` of an n-qubit register.
inline CMat apply_local_channel(const CMat& rho, std::span<const CMat> kraus, std::size_t qubit,
                                std::size_t n_qubits) {
  const std::size_t dim = rho.dim();
  const std::size_t bit = std::size_t{1} << (n_qubits - 1 - qubit);
  CMat out(dim);
  CMat tmp(dim);
  for (const auto& a : kraus) {
    // tmp = (A on qubit) ρ
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const std::size_t i1 = i | bit;
      for (std::size_t j = 0; j < dim; ++j) {
        const cplx r0 = rho(i, j), r1 = rho(i1, j);
        tmp(i, j) = a(0, 0) * r0 + a(0, 1) * r1;
        tmp(i1, j) = a(1, 0) * r0 + a(1, 1) * r1;
      }
    }
    // out += tmp (A on qubit)†
    for (std::size_t j = 0; j < dim; ++j) {
      if (j & bit) continue;
      const std::size_t j1 = j | bit;
      for (std::size_t i = 0; i < dim; ++i) {
        const cplx t0 = tmp(i, j), t1 = tmp(i, j1);
        out(i, j) += t0 * std::conj(a(0, 0)) + t1 * std::conj(a(0, 1));
        out(i, j1) += t0 * std::conj(a(1, 0)) + t1 * std::conj(a(1, 1));
      }
    }
  }
  return out;
}

/// Applies the channel independently to every probe qubit.
inline CMat apply_noise(const CMat& rho, const KrausChannel& ch, const Layout& layout) {
  CMat out = rho;
  for (auto q : layout.probes) out = apply_local_channel(out, ch.kraus, q, layout.n_total);
  return out;
}

/// U_φ ρ U_φ† with U_φ = |0⟩⟨0| + e^{iφ}|1⟩⟨1| on every probe.
inline CMat apply_phase(const CMat& rho, const Layout& layout, double phi) {
  CMat out = rho;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      const int dg = layout.probe_excitations(i) - layout.probe_excitations(j);
      if (dg != 0) out(i, j) *= std::polar(1.0, dg * phi);
    }
  return out;
}

/// i[G, ρ] for G = Σ_probes |1⟩⟨1|.
inline CMat phase_generator_commutator(const CMat& rho, const Layout& layout) {
  CMat out(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      const int dg = layout.probe_excitations(i) - layout.probe_excitations(j);
      if (dg != 0) out(i, j) = kI * static_cast<double>(dg) * rho(i, j);
    }
  return out;
}

/// ρ_φ = E^{⊗probes}[U_φ ρ U_φ†]: phase first, then noise.
inline DensityMatrix output_state(const PhaseScenario& s) {
  s.validate();
  const CMat rho = density(s.input).matrix;
  return {s.layout.n_total, apply_noise(apply_phase(rho, s.layout, s.phi), s.channel, s.layout)};
}

/// ∂ρ_φ/∂φ = E^{⊗probes}[i[G, U_φ ρ U_φ†]]; the noise is linear and
/// φ-independent.
inline CMat output_derivative(const PhaseScenario& s) {
  s.validate();
  const CMat rho = density(s.input).matrix;
  const CMat rotated = apply_phase(rho, s.layout, s.phi);
  return apply_noise(phase_generator_commutator(rotated, s.layout), s.channel, s.layout);
}

/// Central finite difference of output_state; an independent check on
/// output_derivative.
inline CMat output_derivative_fd(PhaseScenario s, double h = 1e-6) {
  const double phi = s.phi;
  s.phi = phi + h;
  CMat plus = output_state(s).matrix;
  s.phi = phi - h;
  CMat minus = output_state(s).matrix;
  return (plus - minus) * (1.0 / (2.0 * h));
}

}  // namespace qfilab

#endif  // QFILAB_CHANNEL_HPP
