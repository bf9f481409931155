#pragma once

// Counter-splittable random number generation. The generators here avoid the
// standard-library distributions on purpose: <random> distributions are
// implementation-defined, and reports produced from a fixed (seed, stream,
// trial) triple must be reproducible everywhere.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace qgeom {

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic pseudo-random source. `Rng(seed, stream, trial)` yields an
/// independent sequence per (stream, trial) counter pair, so trial-level
/// parallelism cannot change any drawn value.
template <typename Scalar = double>
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t trial = 0) {
    state_ = seed;
    state_ = splitmix64_next(state_) ^ (0x243f6a8885a308d3ULL * (stream + 1));
    state_ = splitmix64_next(state_) ^ (0x13198a2e03707344ULL * (trial + 1));
    splitmix64_next(state_);
  }

  std::uint64_t next_bits() { return splitmix64_next(state_); }

  /// Uniform draw in (0, 1]; never returns 0, so it is log-safe.
  Scalar uniform() {
    const std::uint64_t bits = next_bits() >> 11;  // 53 bits
    return (static_cast<Scalar>(bits) + Scalar(1)) / Scalar(9007199254740992.0);
  }

  Scalar uniform(Scalar lo, Scalar hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  Scalar gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const Scalar u1 = uniform();
    const Scalar u2 = uniform();
    const Scalar r = std::sqrt(Scalar(-2) * std::log(u1));
    const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
  }

  /// Standard complex normal: unit-variance real and imaginary parts.
  std::complex<Scalar> complex_gaussian() { return {gaussian(), gaussian()}; }

  RealVector<Scalar> gaussian_vector(Eigen::Index n) {
    RealVector<Scalar> v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  ComplexVector<Scalar> complex_gaussian_vector(Eigen::Index n) {
    ComplexVector<Scalar> v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = complex_gaussian();
    return v;
  }

  RealMatrix<Scalar> gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    RealMatrix<Scalar> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gaussian();
    return m;
  }

  ComplexMatrix<Scalar> complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix<Scalar> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
    return m;
  }

  /// GUE-style random Hermitian matrix: (M + M^dagger)/2 with i.i.d. standard
  /// complex Gaussian entries.
  ComplexMatrix<Scalar> gue_matrix(Eigen::Index n) {
    ComplexMatrix<Scalar> m = complex_gaussian_matrix(n, n);
    return ((m + m.adjoint()) / Scalar(2)).eval();
  }

  /// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
  /// of the R diagonal divided out.
  ComplexMatrix<Scalar> haar_unitary(Eigen::Index n) {
    ComplexMatrix<Scalar> m = complex_gaussian_matrix(n, n);
    Eigen::HouseholderQR<ComplexMatrix<Scalar>> qr(m);
    ComplexMatrix<Scalar> q = qr.householderQ();
    ComplexMatrix<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
      const std::complex<Scalar> d = r(j, j);
      const Scalar a = std::abs(d);
      const std::complex<Scalar> phase = a > Scalar(0) ? d / a : std::complex<Scalar>(1, 0);
      q.col(j) *= phase;
    }
    return q;
  }

  /// Haar-random unit vector in C^n.
  ComplexVector<Scalar> unit_vector(Eigen::Index n) {
    ComplexVector<Scalar> v = complex_gaussian_vector(n);
    return (v / v.norm()).eval();
  }

 private:
  std::uint64_t state_ = 0;
  Scalar spare_ = 0;
  bool has_spare_ = false;
};

}  // namespace qgeom
