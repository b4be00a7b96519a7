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

#ifndef QFILAB_OPTIMIZE_HPP
#define QFILAB_OPTIMIZE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "qfilab/channel.hpp"
#include "qfilab/fisher.hpp"
#include "qfilab/parallel.hpp"
#include "qfilab/qstate.hpp"

namespace qfilab {

//=========================================================================
// Nelder–Mead simplex (minimization)
//=========================================================================

struct SimplexOptions {
  double initial_step = 0.1;
  double diameter_tol = 1e-7;
  std::size_t max_evaluations = 10000;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Derivative-free minimization with reflection, expansion, contraction
/// and shrink steps. Stops when the simplex diameter (max vertex distance
/// from the best vertex) drops below `diameter_tol` or the evaluation cap
/// is hit.
template <typename F>
SimplexResult nelder_mead(F&& f, std::vector<double> start, const SimplexOptions& opt = {}) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> pts(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
  std::vector<double> vals(n + 1);
  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(std::span<const double>(x));
  };
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  auto diameter = [&](std::size_t best) {
    double d = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += (pts[i][k] - pts[best][k]) * (pts[i][k] - pts[best][k]);
      d = std::max(d, std::sqrt(s));
    }
    return d;
  };

  bool converged = false;
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (diameter(best) < opt.diameter_tol) {
      converged = true;
      break;
    }
    // Worst case per iteration: reflect, contract, then shrink n vertices.
    if (evals + n + 2 > opt.max_evaluations) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);

    for (std::size_t k = 0; k < n; ++k) xr[k] = centroid[k] + (centroid[k] - pts[worst][k]);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      for (std::size_t k = 0; k < n; ++k) xe[k] = centroid[k] + 2.0 * (centroid[k] - pts[worst][k]);
      const double fe = eval(xe);
      if (fe < fr) { pts[worst] = xe; vals[worst] = fe; }
      else { pts[worst] = xr; vals[worst] = fr; }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    // Contraction: outside if the reflected point improved on the worst.
    const bool outside = fr < vals[worst];
    const auto& anchor = outside ? xr : pts[worst];
    for (std::size_t k = 0; k < n; ++k) xc[k] = centroid[k] + 0.5 * (anchor[k] - centroid[k]);
    const double fc = eval(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      vals[i] = eval(pts[i]);
    }
  }
  const std::size_t best =
      static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  return {pts[best], vals[best], evals, converged};
}

//=========================================================================
// QFI maximization over probe-state families
//=========================================================================

enum class FamilyShape { Single, AncillaPair, GenericTwoQubit };

struct OptResult {
  FamilyShape shape = FamilyShape::Single;
  std::vector<double> best_params;
  double best_qfi = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct OptimizeOptions {
  std::size_t grid_points_per_dim = 17;
  /// Quasi-random seeding size for the 6-parameter family.
  std::size_t lattice_points = 1024;
  /// Fraction of a cell by which the seeding grid is shifted.
  double grid_offset = 0.0;
  std::size_t refine_top = 4;
  SimplexOptions simplex{};
  unsigned workers = 1;
  std::vector<std::vector<double>> extra_seeds;
};

namespace detail {

struct Box {
  std::vector<double> lo, hi;
  std::vector<bool> periodic;
};

inline Box family_box(FamilyShape shape) {
  const double h = kPi / 2.0, t = 2.0 * kPi;
  switch (shape) {
    case FamilyShape::Single: return {{0.0, 0.0}, {1.0, t}, {false, true}};
    case FamilyShape::AncillaPair: return {{0.0}, {1.0}, {false}};
    case FamilyShape::GenericTwoQubit:
      return {{0, 0, 0, 0, 0, 0}, {h, h, h, t, t, t}, {false, false, false, true, true, true}};
  }
  return {};
}

/// Wraps periodic coordinates and clamps the rest; returns squared
/// distance moved by clamping.
inline double project(std::vector<double>& x, const Box& box) {
  double moved = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (box.periodic[k]) {
      const double w = box.hi[k] - box.lo[k];
      x[k] = box.lo[k] + std::fmod(std::fmod(x[k] - box.lo[k], w) + w, w);
      if (x[k] >= box.hi[k]) x[k] = box.lo[k];
    } else {
      const double c = std::clamp(x[k], box.lo[k], box.hi[k]);
      moved += (c - x[k]) * (c - x[k]);
      x[k] = c;
    }
  }
  return moved;
}

inline StateFamily family_from_params(FamilyShape shape, std::span<const double> p) {
  switch (shape) {
    case FamilyShape::Single: return family::Single{p[0], p[1]};
    case FamilyShape::AncillaPair: return family::AncillaPair{p[0]};
    case FamilyShape::GenericTwoQubit: {
      family::GenericTwoQubit g;
      std::copy(p.begin(), p.end(), g.params.begin());
      return g;
    }
  }
  throw DomainError("unknown family shape");
}

inline std::vector<std::vector<double>> seed_points(FamilyShape shape, const Box& box,
                                                    const OptimizeOptions& opt) {
  const std::size_t dim = box.lo.size();
  std::vector<std::vector<double>> seeds;
  if (dim <= 2) {
    const std::size_t g = std::max<std::size_t>(opt.grid_points_per_dim, 2);
    std::size_t total = 1;
    for (std::size_t k = 0; k < dim; ++k) total *= g;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<double> x(dim);
      std::size_t r = idx;
      for (std::size_t k = 0; k < dim; ++k) {
        const std::size_t i = r % g;
        r /= g;
        // Closed grid for bounded axes, half-open for periodic ones.
        const double frac = box.periodic[k]
                                ? (static_cast<double>(i) + opt.grid_offset) / static_cast<double>(g)
                                : std::min(1.0, (static_cast<double>(i) + opt.grid_offset) /
                                                    static_cast<double>(g - 1));
        x[k] = box.lo[k] + frac * (box.hi[k] - box.lo[k]);
      }
      seeds.push_back(std::move(x));
    }
  } else {
    // Additive recurrence with the generalized golden ratio for `dim`:
    // every coordinate takes `lattice_points` distinct values.
    double phi_d = 2.0;
    for (int it = 0; it < 60; ++it) phi_d = std::pow(1.0 + phi_d, 1.0 / static_cast<double>(dim + 1));
    std::vector<double> alpha(dim);
    for (std::size_t k = 0; k < dim; ++k) alpha[k] = std::fmod(std::pow(1.0 / phi_d, static_cast<double>(k + 1)), 1.0);
    for (std::size_t i = 0; i < opt.lattice_points; ++i) {
      std::vector<double> x(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        const double frac = std::fmod(0.5 + opt.grid_offset + static_cast<double>(i) * alpha[k], 1.0);
        x[k] = box.lo[k] + frac * (box.hi[k] - box.lo[k]);
      }
      seeds.push_back(std::move(x));
    }
  }
  (void)shape;
  for (const auto& s : opt.extra_seeds)
    if (s.size() == dim) seeds.push_back(s);
  return seeds;
}

/// Higher QFI wins; near-ties go to the lexicographically smaller vector.
inline bool better(double qa, const std::vector<double>& a, double qb, const std::vector<double>& b) {
  if (std::abs(qa - qb) > 1e-12) return qa > qb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// Maximizes the QFI over a probe-state family: grid (or quasi-random
/// lattice) seeding, then simplex refinement from the best seeds.
inline OptResult optimize_family(const KrausChannel& channel, FamilyShape shape, double phi,
                                 const Layout& layout, const OptimizeOptions& opt = {}) {
  const auto box = detail::family_box(shape);
  auto qfi_at = [&](std::span<const double> params) {
    PhaseScenario s{channel, make_state(detail::family_from_params(shape, params)), layout, phi};
    return qfi_scenario(s);
  };

  auto seeds = detail::seed_points(shape, box, opt);
  std::vector<double> seed_qfi(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) {
    detail::project(seeds[i], box);
    seed_qfi[i] = qfi_at(seeds[i]);
  }, opt.workers);

  OptResult result;
  result.shape = shape;
  result.evaluations = seeds.size();
  std::vector<std::size_t> order(seeds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return detail::better(seed_qfi[a], seeds[a], seed_qfi[b], seeds[b]);
  });
  result.best_params = seeds[order.front()];
  result.best_qfi = seed_qfi[order.front()];

  const std::size_t top = std::min(opt.refine_top, order.size());
  std::vector<SimplexResult> refined(top);
  parallel_for(top, [&](std::size_t r) {
    auto objective = [&](std::span<const double> x) {
      std::vector<double> p(x.begin(), x.end());
      const double moved = detail::project(p, box);
      return -qfi_at(p) + 1e3 * moved;
    };
    SimplexOptions so = opt.simplex;
    refined[r] = nelder_mead(objective, seeds[order[r]], so);
    detail::project(refined[r].x, box);
    refined[r].value = qfi_at(refined[r].x);
  }, opt.workers);

  bool any_converged = false;
  for (const auto& r : refined) {
    result.evaluations += r.evaluations + 1;
    any_converged = any_converged || r.converged;
    if (detail::better(r.value, r.x, result.best_qfi, result.best_params)) {
      result.best_qfi = r.value;
      result.best_params = r.x;
    }
  }
  result.converged = any_converged;
  return result;
}

/// Best two-probe state (no ancillas) for a channel acting independently
/// on both probes. The NOON state is included as a seed.
inline OptResult optimize_two_probes(const KrausChannel& channel, double phi,
                                     OptimizeOptions opt = {}) {
  opt.extra_seeds.push_back({kPi / 4.0, kPi / 2.0, kPi / 2.0, 0.0, 0.0, 0.0});
  return optimize_family(channel, FamilyShape::GenericTwoQubit, phi,
                         Layout::probes_then_ancillas(2, 0), opt);
}

inline PureState state_from_result(const OptResult& r) {
  return make_state(detail::family_from_params(r.shape, r.best_params));
}

}  // namespace qfilab

#endif  // QFILAB_OPTIMIZE_HPP
