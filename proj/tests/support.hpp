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

// Random instance generators shared by the test binaries. These use
// std::mt19937_64 on purpose: the library's own counter RNG is under test
// elsewhere and should not also be the source of test inputs.

#ifndef QFILAB_TESTS_SUPPORT_HPP
#define QFILAB_TESTS_SUPPORT_HPP

#include <random>

#include "qfilab/channel.hpp"
#include "qfilab/matcore.hpp"
#include "qfilab/qstate.hpp"

namespace qfilab::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline CMat random_hermitian(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  CMat m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = cplx(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline CVec random_vector(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  CVec v(dim);
  double n2 = 0.0;
  for (auto& x : v) {
    x = cplx(g(rng), g(rng));
    n2 += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(n2);
  return v;
}

inline PureState random_pure(Rng& rng, std::size_t n_qubits) {
  return {n_qubits, random_vector(rng, std::size_t{1} << n_qubits)};
}

/// Random density matrix of the given rank via a sum of weighted projectors.
inline CMat random_density(Rng& rng, std::size_t dim, std::size_t rank) {
  CMat rho(dim);
  double total = 0.0;
  std::vector<double> w(rank);
  for (auto& x : w) total += (x = uniform(rng, 0.05, 1.0));
  for (std::size_t r = 0; r < rank; ++r) {
    const auto v = random_vector(rng, dim);
    rho += CMat::outer(v, v) * cplx(w[r] / total);
  }
  return rho;
}

/// Uniform sample of (p1, p2, p3) with p1 + p2 + p3 <= 1 (Dirichlet(1,1,1,1)).
inline std::array<double, 3> random_simplex(Rng& rng) {
  std::exponential_distribution<double> e;
  std::array<double, 4> x{e(rng), e(rng), e(rng), e(rng)};
  const double s = x[0] + x[1] + x[2] + x[3];
  return {x[1] / s, x[2] / s, x[3] / s};
}

inline KrausChannel random_channel(Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return amplitude_damping(uniform(rng));
    case 1: {
      const auto p = random_simplex(rng);
      return pauli_channel(p[0], p[1], p[2]);
    }
    case 2: return dephasing(uniform(rng));
    case 3: return depolarizing(uniform(rng));
    default: return identity_channel();
  }
}

/// Random scenario with 1-2 probes and 0-2 ancillas.
inline PhaseScenario random_scenario(Rng& rng) {
  const std::size_t np = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  const std::size_t na = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  return {random_channel(rng), random_pure(rng, np + na), Layout::probes_then_ancillas(np, na),
          uniform(rng, -kPi, kPi)};
}

}  // namespace qfilab::testing

#endif  // QFILAB_TESTS_SUPPORT_HPP
