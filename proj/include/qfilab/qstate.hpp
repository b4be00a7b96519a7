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

#ifndef QFILAB_QSTATE_HPP
#define QFILAB_QSTATE_HPP

#include <array>
#include <cmath>
#include <string>
#include <type_traits>
#include <variant>

#include "qfilab/matcore.hpp"

namespace qfilab {

/// Normalized amplitude vector over n qubits; qubit 0 is the most
/// significant bit of the basis index.
struct PureState {
  std::size_t n_qubits = 0;
  CVec amplitudes;

  double norm2() const {
    double s = 0.0;
    for (auto a : amplitudes) s += std::norm(a);
    return s;
  }
};

/// Density matrix over n qubits. Stored as a plain CMat.
struct DensityMatrix {
  std::size_t n_qubits = 0;
  CMat matrix;
};

namespace family {

/// ε|0⟩ + √(1−ε²) e^{iα}|1⟩
struct Single {
  double eps = 1.0 / std::sqrt(2.0);
  double alpha = 0.0;
};
/// γ|00⟩ + √(1−γ²)|11⟩, probe first.
struct AncillaPair {
  double gamma = 1.0 / std::sqrt(2.0);
};
/// |Φ⁺⟩
struct MaxEntangled {};
/// |+⟩
struct Plus {};
/// (|0…0⟩ + |1…1⟩)/√2 over n qubits.
struct Noon {
  std::size_t n = 2;
};
/// (|0000⟩ + |1111⟩)/√2
struct FourQubitNoon {};
/// Three hypersphere angles for the amplitude magnitudes followed by
/// three relative phases; amplitude 0 is real and non-negative.
struct GenericTwoQubit {
  std::array<double, 6> params{};
};

}  // namespace family

using StateFamily = std::variant<family::Single, family::AncillaPair, family::MaxEntangled,
                                 family::Plus, family::Noon, family::FourQubitNoon,
                                 family::GenericTwoQubit>;

namespace detail {

inline void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

inline PureState ghz(std::size_t n) {
  if (n == 0 || n > 4) throw DomainError("noon: qubit count must be in [1, 4]");
  PureState s{n, CVec(std::size_t{1} << n)};
  s.amplitudes.front() = 1.0 / std::sqrt(2.0);
  s.amplitudes.back() = 1.0 / std::sqrt(2.0);
  return s;
}

}  // namespace detail

inline PureState make_state(const StateFamily& fam) {
  using namespace family;
  return std::visit(
      [](const auto& f) -> PureState {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Single>) {
          detail::check_unit(f.eps, "eps");
          if (!(f.alpha >= 0.0 && f.alpha < 2.0 * kPi)) {
            throw DomainError("alpha must lie in [0, 2pi), got " + std::to_string(f.alpha));
          }
          return {1, {f.eps, std::sqrt(1.0 - f.eps * f.eps) * std::polar(1.0, f.alpha)}};
        } else if constexpr (std::is_same_v<T, AncillaPair>) {
          detail::check_unit(f.gamma, "gamma");
          return {2, {f.gamma, 0.0, 0.0, std::sqrt(1.0 - f.gamma * f.gamma)}};
        } else if constexpr (std::is_same_v<T, MaxEntangled>) {
          return detail::ghz(2);
        } else if constexpr (std::is_same_v<T, Plus>) {
          return detail::ghz(1);
        } else if constexpr (std::is_same_v<T, Noon>) {
          return detail::ghz(f.n);
        } else if constexpr (std::is_same_v<T, FourQubitNoon>) {
          return detail::ghz(4);
        } else {
          const auto& p = f.params;
          for (double x : p)
            if (!std::isfinite(x)) throw DomainError("generic_two_qubit parameters must be finite");
          const double s1 = std::sin(p[0]), s2 = std::sin(p[1]);
          const std::array<double, 4> mag{std::cos(p[0]), s1 * std::cos(p[1]),
                                          s1 * s2 * std::cos(p[2]), s1 * s2 * std::sin(p[2])};
          // Fix the global phase on amplitude 0 (absorbs a sign from cos).
          const double sign0 = mag[0] < 0.0 ? -1.0 : 1.0;
          return {2,
                  {sign0 * mag[0], sign0 * mag[1] * std::polar(1.0, p[3]),
                   sign0 * mag[2] * std::polar(1.0, p[4]), sign0 * mag[3] * std::polar(1.0, p[5])}};
        }
      },
      fam);
}

inline DensityMatrix density(const PureState& psi) {
  return {psi.n_qubits, CMat::outer(psi.amplitudes, psi.amplitudes)};
}

/// Φ⁺, Φ⁻, Ψ⁺, Ψ⁻ in that order.
inline std::array<PureState, 4> bell_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  return {PureState{2, {h, 0.0, 0.0, h}}, PureState{2, {h, 0.0, 0.0, -h}},
          PureState{2, {0.0, h, h, 0.0}}, PureState{2, {0.0, h, -h, 0.0}}};
}

inline double fidelity(const PureState& a, const PureState& b) {
  return std::norm(inner(a.amplitudes, b.amplitudes));
}

}  // namespace qfilab

#endif  // QFILAB_QSTATE_HPP
