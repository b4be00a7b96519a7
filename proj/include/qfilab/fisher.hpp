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

#ifndef QFILAB_FISHER_HPP
#define QFILAB_FISHER_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "qfilab/channel.hpp"
#include "qfilab/matcore.hpp"
#include "qfilab/qstate.hpp"

namespace qfilab {

/// Relative threshold below which λ_j + λ_k counts as zero.
inline constexpr double kEigenPairCutoff = 1e-12;

/// Quantum Fisher information
///   J = Σ_{λj+λk>0} 2 |⟨j|ρ'|k⟩|² / (λj + λk)
/// over the eigendecomposition of ρ.
inline double qfi(const CMat& rho, const CMat& drho) {
  if (rho.dim() != drho.dim()) throw DomainError("qfi: rho and drho dimensions differ");
  const auto eig = eigh(rho);
  const std::size_t n = rho.dim();
  const double lmax = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
  const double cutoff = kEigenPairCutoff * std::max(1.0, lmax);

  // ⟨j|ρ'|k⟩ for all pairs: W = V† ρ' V
  std::vector<CVec> dv(n);
  for (std::size_t k = 0; k < n; ++k) dv[k] = drho.apply(eig.eigenvectors[k]);

  double j_total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      const double denom = eig.eigenvalues[j] + eig.eigenvalues[k];
      if (denom <= cutoff) continue;
      const double w = std::norm(inner(eig.eigenvectors[j], dv[k]));
      j_total += (j == k ? 2.0 : 4.0) * w / denom;
    }
  }
  return std::max(j_total, 0.0);
}

inline double qfi(const DensityMatrix& rho, const CMat& drho) { return qfi(rho.matrix, drho); }

/// Pure-state shortcut 4(⟨ψ'|ψ'⟩ − |⟨ψ|ψ'⟩|²).
inline double qfi_pure(const PureState& psi, std::span<const cplx> dpsi) {
  const double dd = inner(dpsi, dpsi).real();
  const double overlap = std::norm(inner(psi.amplitudes, dpsi));
  return std::max(4.0 * (dd - overlap), 0.0);
}

/// d/dφ of U_φ|ψ⟩.
inline CVec phase_state_derivative(const PureState& psi, const Layout& layout, double phi) {
  CVec d(psi.amplitudes.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int g = layout.probe_excitations(i);
    d[i] = kI * static_cast<double>(g) * std::polar(1.0, g * phi) * psi.amplitudes[i];
  }
  return d;
}

inline double qfi_scenario(const PhaseScenario& s) {
  return qfi(output_state(s), output_derivative(s));
}

//=========================================================================
// Closed-form catalog
//=========================================================================

namespace closed {

/// 1 − η: optimal single probe, no ancilla.
struct AdSingle { double eta; };
/// 2(1−η)/(2−η): maximally entangled probe + ancilla.
struct AdGammaHalf { double eta; };
/// 4(1−η)/(√(1−η)+1)²: γ-optimized probe + ancilla.
struct AdGammaOpt { double eta; };
/// Reference expression for (|0000⟩+|1111⟩)/√2 with two damped probes.
struct AdNoon4 { double eta; double phi; };
/// (1 − 2 p3)²
struct Dephasing { double p3; };
/// (1 − p)²
struct DepolarizingSingle { double p; };
/// 2(1−p)²/(2−p)
struct DepolarizingAncilla { double p; };
/// Single probe ε|0⟩+√(1−ε²)e^{iα}|1⟩ through a Pauli channel, as written.
struct PauliNoAncilla { double p1, p2, p3, eps, alpha, phi; };
/// Maximally entangled probe + ancilla through a Pauli channel.
struct PauliAncilla { double p1, p2, p3; };
/// Upper bound N(1−η)/η for N damped probes without ancillas.
struct DurkinBound { int n; double eta; };

}  // namespace closed

using ClosedFormId =
    std::variant<closed::AdSingle, closed::AdGammaHalf, closed::AdGammaOpt, closed::AdNoon4,
                 closed::Dephasing, closed::DepolarizingSingle, closed::DepolarizingAncilla,
                 closed::PauliNoAncilla, closed::PauliAncilla, closed::DurkinBound>;

namespace detail {

inline void check_simplex(double p1, double p2, double p3) {
  check_probability(p1, "p1");
  check_probability(p2, "p2");
  check_probability(p3, "p3");
  if (p1 + p2 + p3 > 1.0 + 1e-12) throw DomainError("p1 + p2 + p3 must not exceed 1");
}

}  // namespace detail

inline double closed_form(const ClosedFormId& id) {
  using namespace closed;
  return std::visit(
      [](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, AdSingle>) {
          detail::check_probability(c.eta, "eta");
          return 1.0 - c.eta;
        } else if constexpr (std::is_same_v<T, AdGammaHalf>) {
          detail::check_probability(c.eta, "eta");
          return 2.0 * (1.0 - c.eta) / (2.0 - c.eta);
        } else if constexpr (std::is_same_v<T, AdGammaOpt>) {
          detail::check_probability(c.eta, "eta");
          const double r = std::sqrt(1.0 - c.eta) + 1.0;
          return 4.0 * (1.0 - c.eta) / (r * r);
        } else if constexpr (std::is_same_v<T, AdNoon4>) {
          detail::check_probability(c.eta, "eta");
          const double e = c.eta;
          const double q = (e - 2.0) * e + 2.0;
          return 8.0 * (e - 1.0) * (e - 1.0) *
                 (2.0 * (e - 1.0) * (e - 1.0) * std::cos(8.0 * c.phi) + (e - 2.0) * e * q + 2.0) /
                 (q * q * q);
        } else if constexpr (std::is_same_v<T, Dephasing>) {
          detail::check_probability(c.p3, "p3");
          return (1.0 - 2.0 * c.p3) * (1.0 - 2.0 * c.p3);
        } else if constexpr (std::is_same_v<T, DepolarizingSingle>) {
          detail::check_probability(c.p, "p");
          return (1.0 - c.p) * (1.0 - c.p);
        } else if constexpr (std::is_same_v<T, DepolarizingAncilla>) {
          detail::check_probability(c.p, "p");
          return 2.0 * (1.0 - c.p) * (1.0 - c.p) / (2.0 - c.p);
        } else if constexpr (std::is_same_v<T, PauliNoAncilla>) {
          detail::check_simplex(c.p1, c.p2, c.p3);
          detail::check_probability(c.eps, "eps");
          const double p1 = c.p1, p2 = c.p2, p3 = c.p3, e2 = c.eps * c.eps;
          return 4.0 * e2 * (e2 - 1.0) *
                 (p1 * (2.0 - 4.0 * p3) + 4.0 * p3 - 4.0 * p3 * (p2 + p3) - 1.0 - 2.0 * p1 * p1 -
                  2.0 * (-1.0 + p2) * p2 +
                  2.0 * (p1 - p2) * std::cos(2.0 * (c.alpha + c.phi)) * (p1 + p2 + 2.0 * p3 - 1.0));
        } else if constexpr (std::is_same_v<T, PauliAncilla>) {
          detail::check_simplex(c.p1, c.p2, c.p3);
          const double s12 = c.p1 + c.p2;
          // Both terms vanish in their removable limits.
          const double first = s12 > 0.0 ? (c.p1 - c.p2) * (c.p1 - c.p2) / s12 : 0.0;
          const double rest = 1.0 - s12;
          const double num = c.p1 + c.p2 + 2.0 * c.p3 - 1.0;
          const double second = rest > 0.0 ? num * num / rest : 0.0;
          return first + second;
        } else {
          if (c.n < 1) throw DomainError("durkin_bound: N must be positive");
          detail::check_probability(c.eta, "eta");
          if (c.eta == 0.0) return std::numeric_limits<double>::infinity();
          return c.n * (1.0 - c.eta) / c.eta;
        }
      },
      id);
}

/// max over α of the reference no-ancilla Pauli expression at ε = 1/√2.
/// The expression depends on α only through cos(2(α+φ)), so the extrema
/// sit at cos = ±1; a golden-section pass over α confirms it.
inline double pauli_no_ancilla_max_alpha(double p1, double p2, double p3) {
  const double eps = 1.0 / std::sqrt(2.0);
  auto f = [&](double alpha) { return closed_form(closed::PauliNoAncilla{p1, p2, p3, eps, alpha, 0.0}); };
  double best = std::max(f(0.0), f(kPi / 2.0));

  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0, b = kPi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
    if (f1 > f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - g * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + g * (b - a); f2 = f(x2);
    }
  }
  return std::max({best, f1, f2});
}

/// Side-by-side numeric QFI vs the reference four-qubit NOON expression.
struct Noon4Comparison {
  double eta = 0.0;
  double phi = 0.0;
  double numeric = 0.0;
  double reference = 0.0;
  double discrepancy() const { return std::abs(numeric - reference); }
  bool agrees(double tol = 1e-6) const { return discrepancy() <= tol; }
};

inline PhaseScenario noon4_scenario(double eta, double phi) {
  return {amplitude_damping(eta), make_state(family::FourQubitNoon{}),
          Layout::probes_then_ancillas(2, 2), phi};
}

inline Noon4Comparison compare_noon4(double eta, double phi) {
  return {eta, phi, qfi_scenario(noon4_scenario(eta, phi)),
          closed_form(closed::AdNoon4{eta, phi})};
}

}  // namespace qfilab

#endif  // QFILAB_FISHER_HPP
