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

#ifndef QFILAB_MATCORE_HPP
#define QFILAB_MATCORE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfilab {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Raised for inputs outside a parameter domain or with mismatched shapes.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative numerical routine fails (eigensolver cap).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

//=========================================================================
// CMat: dense square complex matrix, row-major
//=========================================================================

class CMat {
 public:
  CMat() = default;
  explicit CMat(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  CMat(std::size_t dim, CVec entries) : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
      throw DomainError("CMat: entry count " + std::to_string(data_.size()) +
                        " != dim^2 for dim " + std::to_string(dim_));
    }
  }
  CMat(std::initializer_list<std::initializer_list<cplx>> rows)
      : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& r : rows) {
      if (r.size() != dim_) throw DomainError("CMat: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static CMat identity(std::size_t dim) {
    CMat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
  static CMat diag(std::span<const cplx> d) {
    CMat m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static CMat diag(std::initializer_list<cplx> d) {
    return diag(std::span<const cplx>(d.begin(), d.size()));
  }
  /// |a><b|
  static CMat outer(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw DomainError("outer: size mismatch");
    CMat m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
    return m;
  }

  std::size_t dim() const { return dim_; }
  std::span<const cplx> entries() const { return data_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  CMat adjoint() const {
    CMat m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  /// (M + M†)/2
  CMat hermitian_part() const {
    CMat m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return m;
  }

  CVec apply(std::span<const cplx> v) const {
    if (v.size() != dim_) throw DomainError("apply: size mismatch");
    CVec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  CMat& operator+=(const CMat& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  CMat& operator-=(const CMat& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  CMat& operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(CMat a, cplx s) { return a *= s; }
  friend CMat operator*(cplx s, CMat a) { return a *= s; }
  friend CMat operator*(const CMat& a, const CMat& b) {
    a.check_same(b);
    const std::size_t n = a.dim_;
    CMat m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < n; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend bool operator==(const CMat&, const CMat&) = default;

 private:
  void check_same(const CMat& o) const {
    if (o.dim_ != dim_) {
      throw DomainError("CMat: dimension mismatch " + std::to_string(dim_) +
                        " vs " + std::to_string(o.dim_));
    }
  }

  std::size_t dim_ = 0;
  CVec data_;
};

inline double max_abs_diff(const CMat& a, const CMat& b) { return (a - b).max_abs(); }

/// Element-wise closeness with tolerance scaled by max(1, largest |entry|).
inline bool approx_equal(const CMat& a, const CMat& b, double tol = 1e-12) {
  if (a.dim() != b.dim()) return false;
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return max_abs_diff(a, b) <= tol * scale;
}

inline bool is_hermitian(const CMat& m, double tol = 1e-12) {
  return max_abs_diff(m, m.adjoint()) <= tol * std::max(1.0, m.max_abs());
}

/// Kronecker product; the left factor is the more significant index.
inline CMat tensor(const CMat& a, const CMat& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  CMat m(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return m;
}

inline CVec tensor(std::span<const cplx> a, std::span<const cplx> b) {
  CVec v;
  v.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) v.push_back(x * y);
  return v;
}

inline cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DomainError("inner: size mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

/// Real part of tr(a b), both assumed Hermitian.
inline double trace_product(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw DomainError("trace_product: dimension mismatch");
  double t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t += (a(i, j) * b(j, i)).real();
  return t;
}

/// Trace out every subsystem whose index is not in `keep`.
/// `dims` lists subsystem dimensions, most significant first.
inline CMat partial_trace(const CMat& m, std::span<const std::size_t> dims,
                          std::span<const std::size_t> keep) {
  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                            std::multiplies<>());
  if (dims.empty() || total != m.dim()) {
    throw DomainError("partial_trace: product of dims " + std::to_string(total) +
                      " != matrix dim " + std::to_string(m.dim()));
  }
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size() || kept[k]) throw DomainError("partial_trace: bad keep index");
    kept[k] = true;
  }
  if (keep.empty()) throw DomainError("partial_trace: keep set is empty");

  const std::size_t ns = dims.size();
  std::size_t kept_dim = 1;
  for (std::size_t s = 0; s < ns; ++s)
    if (kept[s]) kept_dim *= dims[s];
  CMat out(kept_dim);

  // Enumerate full indices; split digits into kept/traced parts.
  std::vector<std::size_t> digits(ns);
  auto split = [&](std::size_t idx, std::size_t& kidx, std::size_t& tidx) {
    for (std::size_t s = ns; s-- > 0;) {
      digits[s] = idx % dims[s];
      idx /= dims[s];
    }
    kidx = 0;
    tidx = 0;
    for (std::size_t s = 0; s < ns; ++s) {
      if (kept[s]) kidx = kidx * dims[s] + digits[s];
      else tidx = tidx * dims[s] + digits[s];
    }
  };
  std::vector<std::size_t> kid(total), tid(total);
  for (std::size_t i = 0; i < total; ++i) split(i, kid[i], tid[i]);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (tid[i] == tid[j]) out(kid[i], kid[j]) += m(i, j);
  return out;
}

inline CMat partial_trace(const CMat& m, std::initializer_list<std::size_t> dims,
                          std::initializer_list<std::size_t> keep) {
  return partial_trace(m, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

//=========================================================================
// Hermitian eigendecomposition (cyclic complex Jacobi)
//=========================================================================

struct EigDecomposition {
  std::vector<double> eigenvalues;  // ascending
  std::vector<CVec> eigenvectors;   // eigenvectors[j] pairs with eigenvalues[j]
};

namespace detail {

inline double off_diagonal_norm2(const CMat& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (M + M†)/2 first. Throws NumericalError if the sweep cap is reached.
inline EigDecomposition eigh(const CMat& input, int max_sweeps = 100) {
  CMat a = input.hermitian_part();
  const std::size_t n = a.dim();
  CMat v = CMat::identity(n);

  double total = 0.0;
  for (auto z : a.entries()) total += std::norm(z);
  const double target = 1e-28 * std::max(total, 1e-300);

  bool converged = n <= 1;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (detail::off_diagonal_norm2(a) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Skip entries that are negligible relative to both diagonals.
        if (sweep > 3 && std::abs(app) + 1e3 * r == std::abs(app) &&
            std::abs(aqq) + 1e3 * r == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const cplx phase = apq / r;  // e^{i theta}
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rotation block on (p, q): [[c, s], [-s e^{-i theta}, c e^{-i theta}]].
        const cplx vpp = c, vpq = s;
        const cplx vqp = -s * std::conj(phase), vqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A V
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- V† A
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // V <- V V_pq
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * vpp + vkq * vqp;
          v(k, q) = vkp * vpq + vkq * vqq;
        }
      }
    }
  }
  if (!converged && detail::off_diagonal_norm2(a) > target) {
    throw NumericalError("eigh: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  EigDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (auto j : order) {
    out.eigenvalues.push_back(a(j, j).real());
    CVec col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v(k, j);
    out.eigenvectors.push_back(std::move(col));
  }
  return out;
}

/// Σ λ_j v_j v_j†
inline CMat reconstruct(const EigDecomposition& e) {
  const std::size_t n = e.eigenvalues.size();
  CMat m(n);
  for (std::size_t j = 0; j < n; ++j) m += CMat::outer(e.eigenvectors[j], e.eigenvectors[j]) * e.eigenvalues[j];
  return m;
}

//=========================================================================
// Pauli matrices
//=========================================================================

namespace pauli {
inline CMat I() { return CMat::identity(2); }
inline CMat X() { return CMat{{0.0, 1.0}, {1.0, 0.0}}; }
inline CMat Y() { return CMat{{0.0, -kI}, {kI, 0.0}}; }
inline CMat Z() { return CMat{{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

/// Embed a single-qubit operator on `qubit` of an n-qubit register
/// (qubit 0 is the leftmost factor).
inline CMat embed(const CMat& op, std::size_t qubit, std::size_t n_qubits) {
  if (op.dim() != 2 || qubit >= n_qubits) throw DomainError("embed: bad operator or qubit");
  CMat m = CMat::identity(1);
  for (std::size_t q = 0; q < n_qubits; ++q) m = tensor(m, q == qubit ? op : pauli::I());
  return m;
}

}  // namespace qfilab

#endif  // QFILAB_MATCORE_HPP
