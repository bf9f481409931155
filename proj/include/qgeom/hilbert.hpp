#pragma once

// Points of a finite-dimensional Hilbert space in the real chart
// x = (q_1..q_N, p_1..p_N), z_a = q_a + i p_a, together with the Hermitian /
// anti-Hermitian matrix types used throughout.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgeom/rng.hpp"

namespace qgeom {

inline constexpr double kHermitianTol = 1e-12;  // absolute, entrywise

template <typename Scalar = double>
class HilbertPoint {
 public:
  using Complex = std::complex<Scalar>;

  /// Construct from the real chart (q_1..q_N, p_1..p_N).
  explicit HilbertPoint(RealVector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.size() <= 0 || coords_.size() % 2 != 0)
      throw std::invalid_argument("HilbertPoint: coordinate vector must have even positive size");
  }

  /// Construct from complex amplitudes z_a = q_a + i p_a. Exact round trip.
  static HilbertPoint from_complex(const ComplexVector<Scalar>& z) {
    RealVector<Scalar> x(2 * z.size());
    x.head(z.size()) = z.real();
    x.tail(z.size()) = z.imag();
    return HilbertPoint(std::move(x));
  }

  Eigen::Index dim() const { return coords_.size() / 2; }
  const RealVector<Scalar>& coords() const { return coords_; }

  auto q() const { return coords_.head(dim()); }
  auto p() const { return coords_.tail(dim()); }

  ComplexVector<Scalar> complex_vector() const {
    const Eigen::Index n = dim();
    ComplexVector<Scalar> z(n);
    for (Eigen::Index a = 0; a < n; ++a) z[a] = Complex(coords_[a], coords_[n + a]);
    return z;
  }

  Scalar norm_squared() const { return coords_.squaredNorm(); }
  Scalar norm() const { return coords_.norm(); }
  bool is_zero() const { return norm_squared() == Scalar(0); }

  HilbertPoint scaled(Scalar s) const { return HilbertPoint((s * coords_).eval()); }

  /// Action of u in C_0: z -> u z (phase and dilation along the fibre).
  HilbertPoint complex_scaled(Complex u) const {
    return from_complex((u * complex_vector()).eval());
  }

 private:
  RealVector<Scalar> coords_;
};

template <typename Scalar>
Scalar max_abs(const RealMatrix<Scalar>& m) {
  return m.size() == 0 ? Scalar(0) : m.cwiseAbs().maxCoeff();
}

template <typename Scalar>
Scalar max_abs(const ComplexMatrix<Scalar>& m) {
  return m.size() == 0 ? Scalar(0) : m.cwiseAbs().maxCoeff();
}

/// Element of u*_N: a Hermitian matrix. Construction symmetrises the input and
/// rejects it when the Hermiticity residual max|M - M^dagger| exceeds the
/// absolute tolerance.
template <typename Scalar = double>
class HermitianMatrix {
 public:
  using Complex = std::complex<Scalar>;

  explicit HermitianMatrix(const ComplexMatrix<Scalar>& m,
                           Scalar tol = Scalar(kHermitianTol)) {
    if (m.rows() != m.cols()) throw std::invalid_argument("HermitianMatrix: matrix must be square");
    const Scalar residual = max_abs<Scalar>((m - m.adjoint()).eval());
    if (!(residual <= tol))
      throw std::invalid_argument("HermitianMatrix: Hermiticity residual " +
                                  std::to_string(static_cast<double>(residual)) +
                                  " exceeds tolerance");
    mat_ = ((m + m.adjoint()) / Scalar(2)).eval();
  }

  static HermitianMatrix zero(Eigen::Index n) {
    return HermitianMatrix(ComplexMatrix<Scalar>::Zero(n, n));
  }
  static HermitianMatrix identity(Eigen::Index n) {
    return HermitianMatrix(ComplexMatrix<Scalar>::Identity(n, n));
  }

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix<Scalar>& matrix() const { return mat_; }

  RealMatrix<Scalar> real_part() const { return mat_.real(); }
  RealMatrix<Scalar> imag_part() const { return mat_.imag(); }

  Scalar trace() const { return mat_.trace().real(); }

 private:
  ComplexMatrix<Scalar> mat_;
};

/// Element of the Lie algebra u_N: anti-Hermitian, T = -T^dagger.
template <typename Scalar = double>
class AntiHermitianMatrix {
 public:
  explicit AntiHermitianMatrix(const ComplexMatrix<Scalar>& m,
                               Scalar tol = Scalar(kHermitianTol)) {
    if (m.rows() != m.cols())
      throw std::invalid_argument("AntiHermitianMatrix: matrix must be square");
    const Scalar residual = max_abs<Scalar>((m + m.adjoint()).eval());
    if (!(residual <= tol))
      throw std::invalid_argument("AntiHermitianMatrix: anti-Hermiticity residual " +
                                  std::to_string(static_cast<double>(residual)) +
                                  " exceeds tolerance");
    mat_ = ((m - m.adjoint()) / Scalar(2)).eval();
  }

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix<Scalar>& matrix() const { return mat_; }

 private:
  ComplexMatrix<Scalar> mat_;
};

/// hat: u*_N -> u_N, A -> -iA. Exact.
template <typename Scalar>
AntiHermitianMatrix<Scalar> hat(const HermitianMatrix<Scalar>& a) {
  return AntiHermitianMatrix<Scalar>(
      (std::complex<Scalar>(0, -1) * a.matrix()).eval());
}

/// unhat: u_N -> u*_N, T -> iT. Inverse of hat, exact round trip.
template <typename Scalar>
HermitianMatrix<Scalar> unhat(const AntiHermitianMatrix<Scalar>& t) {
  return HermitianMatrix<Scalar>((std::complex<Scalar>(0, 1) * t.matrix()).eval());
}

/// The Pauli matrices; index 0 is the 2x2 identity.
template <typename Scalar = double>
HermitianMatrix<Scalar> pauli(int k) {
  using C = std::complex<Scalar>;
  ComplexMatrix<Scalar> m(2, 2);
  switch (k) {
    case 0: m << C(1), C(0), C(0), C(1); break;
    case 1: m << C(0), C(1), C(1), C(0); break;
    case 2: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case 3: m << C(1), C(0), C(0), C(-1); break;
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
  return HermitianMatrix<Scalar>(m);
}

/// Orthonormal basis of u*_N for the scalar product <A,B> = Tr(AB)/2:
/// sqrt(2/N)*I, then for each pair j<k the symmetric and antisymmetric
/// off-diagonal generators, then the diagonal traceless generators. For N = 2
/// this is exactly {I, sigma_1, sigma_2, sigma_3}.
template <typename Scalar = double>
std::vector<HermitianMatrix<Scalar>> hermitian_basis(Eigen::Index n) {
  using C = std::complex<Scalar>;
  if (n < 1) throw std::invalid_argument("hermitian_basis: dimension must be positive");
  std::vector<HermitianMatrix<Scalar>> basis;
  basis.reserve(static_cast<std::size_t>(n * n));

  basis.push_back(HermitianMatrix<Scalar>(
      (std::sqrt(Scalar(2) / Scalar(n)) * ComplexMatrix<Scalar>::Identity(n, n)).eval()));

  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix<Scalar> sym = ComplexMatrix<Scalar>::Zero(n, n);
      sym(j, k) = C(1);
      sym(k, j) = C(1);
      basis.push_back(HermitianMatrix<Scalar>(sym));
      ComplexMatrix<Scalar> asym = ComplexMatrix<Scalar>::Zero(n, n);
      asym(j, k) = C(0, -1);
      asym(k, j) = C(0, 1);
      basis.push_back(HermitianMatrix<Scalar>(asym));
    }
  }

  for (Eigen::Index l = 1; l < n; ++l) {
    ComplexMatrix<Scalar> d = ComplexMatrix<Scalar>::Zero(n, n);
    const Scalar norm = std::sqrt(Scalar(2) / Scalar(l * (l + 1)));
    for (Eigen::Index i = 0; i < l; ++i) d(i, i) = C(norm);
    d(l, l) = C(-norm * Scalar(l));
    basis.push_back(HermitianMatrix<Scalar>(d));
  }

  return basis;
}

}  // namespace qgeom
