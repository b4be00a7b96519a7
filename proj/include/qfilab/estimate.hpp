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

#ifndef QFILAB_ESTIMATE_HPP
#define QFILAB_ESTIMATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "qfilab/channel.hpp"
#include "qfilab/fisher.hpp"
#include "qfilab/matcore.hpp"
#include "qfilab/parallel.hpp"
#include "qfilab/qstate.hpp"
#include "qfilab/rng.hpp"

namespace qfilab {

/// d⟨O⟩/dφ vanishes: the operating point carries no first-order information.
class StationaryPointError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The scenario's QFI is zero, so no finite Cramér–Rao bound exists.
class ZeroQfiError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

//=========================================================================
// Observables
//=========================================================================

/// Hermitian observable with its projective outcome model. `branch_lo` and
/// `branch_hi` bound the phase interval on which ⟨O⟩(φ) is monotone for
/// the scenario it was designed for.
struct Observable {
  std::string name;
  CMat matrix;
  std::vector<double> values;
  std::vector<CMat> projectors;
  double branch_lo = 0.0;
  double branch_hi = kPi;

  double expectation(const CMat& rho) const { return trace_product(matrix, rho); }
};

/// Builds the spectral decomposition, grouping eigenvalues closer than 1e-9.
inline Observable make_observable(std::string name, const CMat& matrix, double branch_lo = 0.0,
                                  double branch_hi = kPi) {
  if (!is_hermitian(matrix)) throw DomainError("observable must be Hermitian");
  const auto eig = eigh(matrix);
  Observable o{std::move(name), matrix.hermitian_part(), {}, {}, branch_lo, branch_hi};
  for (std::size_t j = 0; j < eig.eigenvalues.size(); ++j) {
    const double lam = eig.eigenvalues[j];
    const CMat proj = CMat::outer(eig.eigenvectors[j], eig.eigenvectors[j]);
    if (!o.values.empty() && std::abs(lam - o.values.back()) < 1e-9) {
      o.projectors.back() += proj;
    } else {
      o.values.push_back(std::abs(lam - std::round(lam)) < 1e-9 ? std::round(lam) : lam);
      o.projectors.push_back(proj);
    }
  }
  return o;
}

enum class ObservableId { AdAncilla, DepolarizingSingle, PauliAncilla, AdNoon4 };

inline std::string_view to_string(ObservableId id) {
  switch (id) {
    case ObservableId::AdAncilla: return "ad_ancilla";
    case ObservableId::DepolarizingSingle: return "depolarizing_single";
    case ObservableId::PauliAncilla: return "pauli_ancilla";
    case ObservableId::AdNoon4: return "ad_noon4";
  }
  return "unknown";
}

inline ObservableId parse_observable_id(std::string_view s) {
  for (auto id : {ObservableId::AdAncilla, ObservableId::DepolarizingSingle,
                  ObservableId::PauliAncilla, ObservableId::AdNoon4})
    if (to_string(id) == s) return id;
  throw DomainError("unknown observable id: " + std::string(s));
}

namespace detail {

inline CMat basis_projector(std::size_t dim, std::size_t index) {
  CMat m(dim);
  m(index, index) = 1.0;
  return m;
}

}  // namespace detail

inline Observable observable_catalog(ObservableId id) {
  const auto bell = bell_basis();
  switch (id) {
    case ObservableId::AdAncilla: {
      // Π_ψ + 2|Φ⁺⟩⟨Φ⁺|, Π_ψ = |01⟩⟨01| + |10⟩⟨10|
      const CMat pi_psi = detail::basis_projector(4, 1) + detail::basis_projector(4, 2);
      const CMat phi_plus = density(bell[0]).matrix;
      return make_observable("ad_ancilla", pi_psi + phi_plus * 2.0);
    }
    case ObservableId::DepolarizingSingle:
      return make_observable("depolarizing_single", density(make_state(family::Plus{})).matrix);
    case ObservableId::PauliAncilla:
      return make_observable("pauli_ancilla", density(bell[1]).matrix + density(bell[3]).matrix);
    case ObservableId::AdNoon4: {
      // 2|N⟩⟨N| + Σ, |N⟩ = (|0000⟩ − |1111⟩)/√2, Σ over |0011⟩, |0111⟩, |1011⟩.
      CVec n(16);
      n[0] = 1.0 / std::sqrt(2.0);
      n[15] = -1.0 / std::sqrt(2.0);
      const CMat sigma = detail::basis_projector(16, 0b0011) + detail::basis_projector(16, 0b0111) +
                         detail::basis_projector(16, 0b1011);
      // The encoded relative phase is 2φ, so ⟨O⟩ is monotone on (0, π/2).
      return make_observable("ad_noon4", CMat::outer(n, n) * 2.0 + sigma, 0.0, kPi / 2.0);
    }
  }
  throw DomainError("unknown observable id");
}

//=========================================================================
// Error propagation and the Cramér–Rao bound
//=========================================================================

struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  double slope = 0.0;  // d⟨O⟩/dφ
};

inline MomentSummary observable_moments(const PhaseScenario& s, const Observable& o) {
  const auto rho = output_state(s).matrix;
  if (rho.dim() != o.matrix.dim()) throw DomainError("observable dimension does not match scenario");
  const double mean = o.expectation(rho);
  const double second = trace_product(o.matrix * o.matrix, rho);
  const double slope = trace_product(o.matrix, output_derivative(s));
  return {mean, std::max(second - mean * mean, 0.0), slope};
}

/// Δφ² = ΔO² / (d⟨O⟩/dφ)² for a single shot.
inline double error_propagation_variance(const PhaseScenario& s, const Observable& o) {
  const auto m = observable_moments(s, o);
  if (std::abs(m.slope) < 1e-10) {
    throw StationaryPointError("d<O>/dphi vanishes at phi = " + std::to_string(s.phi));
  }
  return m.variance / (m.slope * m.slope);
}

/// 1 / (ν J).
inline double qcr_bound(const PhaseScenario& s, std::uint64_t nu) {
  if (nu < 1) throw DomainError("qcr_bound: nu must be >= 1");
  const double j = qfi_scenario(s);
  if (j <= 1e-12) throw ZeroQfiError("quantum Fisher information is zero; no finite bound");
  return 1.0 / (static_cast<double>(nu) * j);
}

struct SweetSpot {
  double phi = 0.0;
  double variance = 0.0;
};

/// Minimizes the error-propagation variance over the observable's branch
/// by golden-section search.
inline SweetSpot find_sweet_spot(PhaseScenario s, const Observable& o) {
  auto f = [&](double phi) {
    s.phi = phi;
    try {
      return error_propagation_variance(s, o);
    } catch (const StationaryPointError&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  const double margin = 1e-6 * (o.branch_hi - o.branch_lo);
  double a = o.branch_lo + margin, b = o.branch_hi - margin;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - g * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + g * (b - a); f2 = f(x2);
    }
  }
  const double phi = f1 < f2 ? x1 : x2;
  return {phi, std::min(f1, f2)};
}

//=========================================================================
// Sampling and inversion
//=========================================================================

/// Born probabilities tr(Π_k ρ_φ), clamped at zero and renormalized.
inline std::vector<double> outcome_probabilities(const PhaseScenario& s, const Observable& o) {
  const auto rho = output_state(s).matrix;
  std::vector<double> p;
  p.reserve(o.projectors.size());
  for (const auto& proj : o.projectors) p.push_back(std::max(0.0, trace_product(proj, rho)));
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= total;
  return p;
}

/// ν i.i.d. categorical draws. Draw i always uses counter i of stream
/// (seed, stream), so the merged counts do not depend on `workers`.
inline std::vector<std::uint64_t> sample_counts(std::span<const double> probs, std::uint64_t nu,
                                                std::uint64_t seed, std::uint64_t stream = 0,
                                                unsigned workers = 1) {
  const CounterRng rng(seed, stream);
  std::vector<double> cdf(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cdf.begin());
  // The last non-empty outcome absorbs rounding in the cumulative sum.
  std::size_t last = 0;
  for (std::size_t k = 0; k < probs.size(); ++k)
    if (probs[k] > 0.0) last = k;

  workers = std::max(1U, workers);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(probs.size()));
  const std::uint64_t chunk = (nu + workers - 1) / workers;
  parallel_for(
      workers,
      [&](std::size_t w) {
        const std::uint64_t lo = w * chunk, hi = std::min<std::uint64_t>(nu, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
          const double u = rng.uniform(i);
          std::size_t k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
          if (k > last) k = last;
          ++partial[w][k];
        }
      },
      workers);
  std::vector<std::uint64_t> counts(probs.size(), 0);
  for (const auto& part : partial)
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += part[k];
  return counts;
}

inline std::vector<std::uint64_t> sample_outcomes(const PhaseScenario& s, const Observable& o,
                                                  std::uint64_t nu, std::uint64_t seed,
                                                  std::uint64_t stream = 0, unsigned workers = 1) {
  if (nu < 1) throw DomainError("sample_outcomes: nu must be >= 1");
  const auto p = outcome_probabilities(s, o);
  return sample_counts(p, nu, seed, stream, workers);
}

struct Inversion {
  double phi = 0.0;
  bool clipped = false;
};

/// Solves ⟨O⟩(φ) = mean on the observable's branch by bisection.
inline Inversion invert_mean(double mean, PhaseScenario s, const Observable& o) {
  auto m = [&](double phi) {
    s.phi = phi;
    return o.expectation(output_state(s).matrix);
  };
  double lo = o.branch_lo, hi = o.branch_hi;
  const double mlo = m(lo), mhi = m(hi);
  const bool increasing = mhi > mlo;
  const double mmin = std::min(mlo, mhi), mmax = std::max(mlo, mhi);
  if (!(mean > mmin)) return {increasing ? lo : hi, mean < mmin};
  if (!(mean < mmax)) return {increasing ? hi : lo, mean > mmax};
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((m(mid) < mean) == increasing) lo = mid;
    else hi = mid;
  }
  return {0.5 * (lo + hi), false};
}

inline double sample_mean(std::span<const std::uint64_t> counts, const Observable& o) {
  double sum = 0.0;
  std::uint64_t n = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    sum += o.values[k] * static_cast<double>(counts[k]);
    n += counts[k];
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

/// Unbiased (n − 1) sample variance of the outcome values.
inline double sample_value_variance(std::span<const std::uint64_t> counts, const Observable& o) {
  const double mean = sample_mean(counts, o);
  double ss = 0.0;
  std::uint64_t n = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double d = o.values[k] - mean;
    ss += d * d * static_cast<double>(counts[k]);
    n += counts[k];
  }
  return n > 1 ? ss / static_cast<double>(n - 1) : 0.0;
}

inline Inversion invert_estimate(std::span<const std::uint64_t> counts, const PhaseScenario& s,
                                 const Observable& o) {
  return invert_mean(sample_mean(counts, o), s, o);
}

//=========================================================================
// Adaptive estimation
//=========================================================================

struct RoundRecord {
  double feedback_phase = 0.0;   // control c applied this round
  double operating_point = 0.0;  // φ_true + c (diagnostic; unknown to the estimator)
  std::vector<std::uint64_t> counts;
  double estimate = 0.0;   // this round's estimate of φ_true
  double variance = 0.0;   // this round's variance estimate
  bool clipped = false;
};

struct EstimationRun {
  std::uint64_t seed = 0;
  std::uint64_t nu = 0;
  std::vector<RoundRecord> rounds;
  double estimate = 0.0;
  double sample_variance = 0.0;
  double target_operating_point = kPi / 2.0;
  bool low_nu = false;
};

struct AdaptiveOptions {
  std::size_t rounds = 10;
  std::uint64_t shots_per_round = 1000;
  std::uint64_t seed = 0;
  double initial_control = 0.0;
  double damping = 0.5;
  /// Operating point the controller drives toward. NaN: use the
  /// observable's sweet spot found numerically.
  double target = std::numeric_limits<double>::quiet_NaN();
  unsigned workers = 1;
};

/// Rounds of sampling at φ_true + c. After each round the pooled estimate
/// φ̂ updates the control as c ← c + damping·((target − φ̂) − c).
/// Round estimates are pooled with inverse-variance weights; each round's
/// variance is the empirical outcome variance over n·(d⟨O⟩/dφ)² at the
/// estimated operating point.
inline EstimationRun adaptive_run(const PhaseScenario& truth, const Observable& o,
                                  const AdaptiveOptions& opt) {
  if (opt.rounds < 1) throw DomainError("adaptive_run: rounds must be >= 1");
  if (opt.shots_per_round < 1) throw DomainError("adaptive_run: shots_per_round must be >= 1");
  truth.validate();

  EstimationRun run;
  run.seed = opt.seed;
  run.nu = opt.rounds * opt.shots_per_round;
  run.low_nu = run.nu < 100;
  run.target_operating_point = std::isnan(opt.target) ? find_sweet_spot(truth, o).phi : opt.target;

  double control = opt.initial_control;
  double weight_sum = 0.0, weighted = 0.0;
  for (std::size_t r = 0; r < opt.rounds; ++r) {
    RoundRecord rec;
    rec.feedback_phase = control;
    rec.operating_point = truth.phi + control;

    PhaseScenario at = truth;
    at.phi = rec.operating_point;
    rec.counts = sample_outcomes(at, o, opt.shots_per_round, opt.seed, r, opt.workers);

    const auto inv = invert_estimate(rec.counts, truth, o);
    rec.clipped = inv.clipped;
    rec.estimate = inv.phi - control;

    PhaseScenario est = truth;
    est.phi = inv.phi;
    const auto mom = observable_moments(est, o);
    const double n = static_cast<double>(opt.shots_per_round);
    const double value_var = opt.shots_per_round > 1 ? sample_value_variance(rec.counts, o) : mom.variance;
    const double slope2 = mom.slope * mom.slope;
    rec.variance = (slope2 > 1e-20 && value_var > 0.0) ? value_var / (n * slope2)
                                                      : std::numeric_limits<double>::infinity();
    if (std::isfinite(rec.variance)) {
      weight_sum += 1.0 / rec.variance;
      weighted += rec.estimate / rec.variance;
    }
    const double current = weight_sum > 0.0 ? weighted / weight_sum : rec.estimate;
    control += opt.damping * ((run.target_operating_point - current) - control);
    run.rounds.push_back(std::move(rec));
  }
  if (weight_sum > 0.0) {
    run.estimate = weighted / weight_sum;
    run.sample_variance = 1.0 / weight_sum;
  } else {
    run.estimate = run.rounds.back().estimate;
    run.sample_variance = std::numeric_limits<double>::infinity();
  }
  return run;
}

}  // namespace qfilab

#endif  // QFILAB_ESTIMATE_HPP
