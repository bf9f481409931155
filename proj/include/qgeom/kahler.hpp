#pragma once

// The canonical Kaehler structure of C^N read as R^2N, Hermitian vector
// fields and their Hamiltonian functions, Lie derivatives along linear
// fields, and the Schroedinger flow.
//
// Conventions, fixed once for the whole library:
//   chart x = (q_1..q_N, p_1..p_N)
//   g     = I_2N                      omega(u,v) = u^T Omega v
//   Omega = [[0, I], [-I, 0]]         J = [[0, -I], [I, 0]],  J^2 = -I
//   f_H(x) = (1/2) <z|H z>            X_{f_H}(x) = W x, W = [[A,B],[-B,A]]
// with H = B + iA Hermitian. Under these choices g(Ju,v) = omega(u,v) holds
// as the exact matrix identity J^T = Omega.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qgeom/hilbert.hpp"
#include "qgeom/tensor.hpp"

namespace qgeom {

template <typename Scalar = double>
RealMatrix<Scalar> symplectic_matrix(Eigen::Index n) {
  RealMatrix<Scalar> omega = RealMatrix<Scalar>::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n) = RealMatrix<Scalar>::Identity(n, n);
  omega.bottomLeftCorner(n, n) = -RealMatrix<Scalar>::Identity(n, n);
  return omega;
}

template <typename Scalar = double>
RealMatrix<Scalar> complex_structure_matrix(Eigen::Index n) {
  return (-symplectic_matrix<Scalar>(n)).eval();
}

template <typename Scalar = double>
struct CanonicalStructures {
  Tensor2<Scalar> metric;             // g, covariant
  Tensor2<Scalar> symplectic;         // omega, covariant
  Tensor2<Scalar> complex_structure;  // J, mixed
  Tensor2<Scalar> cometric;           // G = g^{-1}, contravariant
  Tensor2<Scalar> poisson;            // Lambda, contravariant
};

/// The five canonical tensors (g, omega, J, G, Lambda) on R^2N.
template <typename Scalar = double>
CanonicalStructures<Scalar> canonical_structures(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("canonical_structures: dimension must be >= 1");
  const RealMatrix<Scalar> eye = RealMatrix<Scalar>::Identity(2 * n, 2 * n);
  const RealMatrix<Scalar> omega = symplectic_matrix<Scalar>(n);
  return CanonicalStructures<Scalar>{
      Tensor2<Scalar>(eye, Variance::covariant, Symmetry::symmetric),
      Tensor2<Scalar>(omega, Variance::covariant, Symmetry::antisymmetric),
      Tensor2<Scalar>(complex_structure_matrix<Scalar>(n), Variance::mixed),
      Tensor2<Scalar>(eye, Variance::contravariant, Symmetry::symmetric),
      Tensor2<Scalar>(omega, Variance::contravariant, Symmetry::antisymmetric)};
}

/// Hermitian vector field of H = B + iA: W = [[A, B], [-B, A]]. The field is
/// Killing for g and Hamiltonian for omega with Hamiltonian function f_H.
template <typename Scalar>
LinearVectorField<Scalar> hermitian_field(const HermitianMatrix<Scalar>& h) {
  const Eigen::Index n = h.dim();
  const RealMatrix<Scalar> b = h.real_part();
  const RealMatrix<Scalar> a = h.imag_part();
  RealMatrix<Scalar> w(2 * n, 2 * n);
  w.topLeftCorner(n, n) = a;
  w.topRightCorner(n, n) = b;
  w.bottomLeftCorner(n, n) = -b;
  w.bottomRightCorner(n, n) = a;
  return LinearVectorField<Scalar>(std::move(w), /*hermitian=*/true);
}

/// Symmetric matrix S of the quadratic form f_H(x) = (1/2) x^T S x, so that
/// grad f_H = S x and X_{f_H} = Omega S x.
template <typename Scalar>
RealMatrix<Scalar> quadratic_form_matrix(const HermitianMatrix<Scalar>& h) {
  const Eigen::Index n = h.dim();
  const RealMatrix<Scalar> b = h.real_part();
  const RealMatrix<Scalar> a = h.imag_part();
  RealMatrix<Scalar> s(2 * n, 2 * n);
  s.topLeftCorner(n, n) = b;
  s.topRightCorner(n, n) = -a;
  s.bottomLeftCorner(n, n) = a;
  s.bottomRightCorner(n, n) = b;
  return s;
}

/// Hamiltonian function f_H(z) = (1/2) <z|H z>. Real for Hermitian H.
template <typename Scalar>
Scalar hamiltonian_function(const HermitianMatrix<Scalar>& h, const HilbertPoint<Scalar>& z) {
  if (h.dim() != z.dim())
    throw std::invalid_argument("hamiltonian_function: dimension mismatch");
  const ComplexVector<Scalar> zv = z.complex_vector();
  const std::complex<Scalar> val = zv.dot(h.matrix() * zv);  // Eigen dot conjugates the left arg
  return val.real() / Scalar(2);
}

/// Exact Lie derivative of a constant-coefficient tensor along X_W:
///   covariant      T -> W^T T + T W
///   contravariant  T -> -(W T + T W^T)
///   mixed          T -> T W - W T
template <typename Scalar>
Tensor2<Scalar> lie_derivative(const LinearVectorField<Scalar>& x, const Tensor2<Scalar>& t) {
  if (x.dim() != t.dim()) throw std::invalid_argument("lie_derivative: dimension mismatch");
  const RealMatrix<Scalar>& w = x.matrix();
  const RealMatrix<Scalar>& m = t.matrix();
  switch (t.variance()) {
    case Variance::covariant:
      return Tensor2<Scalar>((w.transpose() * m + m * w).eval(), Variance::covariant);
    case Variance::contravariant:
      return Tensor2<Scalar>((-(w * m + m * w.transpose())).eval(), Variance::contravariant);
    case Variance::mixed:
      return Tensor2<Scalar>((m * w - w * m).eval(), Variance::mixed);
  }
  throw std::logic_error("lie_derivative: unknown variance");
}

/// Lie derivative of a position-dependent tensor field along a linear field,
/// by central differencing of the flow pullback/pushforward with one
/// Richardson extrapolation level (default step 1e-5).
template <typename Scalar>
RealMatrix<Scalar> lie_derivative_field(const LinearVectorField<Scalar>& x,
                                        const TensorField<Scalar>& t,
                                        const RealVector<Scalar>& at,
                                        Scalar step = Scalar(1e-5)) {
  const auto transported = [&](Scalar s) -> RealMatrix<Scalar> {
    const RealMatrix<Scalar> fwd = x.flow(s);
    const RealMatrix<Scalar> bwd = x.flow(-s);
    const RealMatrix<Scalar> value = t((fwd * at).eval());
    switch (t.variance) {
      case Variance::covariant: return fwd.transpose() * value * fwd;
      case Variance::contravariant: return bwd * value * bwd.transpose();
      case Variance::mixed: return bwd * value * fwd;
    }
    throw std::logic_error("lie_derivative_field: unknown variance");
  };
  const auto central = [&](Scalar h) -> RealMatrix<Scalar> {
    return ((transported(h) - transported(-h)) / (Scalar(2) * h)).eval();
  };
  const RealMatrix<Scalar> coarse = central(step);
  const RealMatrix<Scalar> fine = central(step / Scalar(2));
  return ((Scalar(4) * fine - coarse) / Scalar(3)).eval();
}

struct UnitaryConditionFlags {
  bool complex_and_metric = false;      // L_X J = 0 and L_X g = 0
  bool complex_and_symplectic = false;  // L_X J = 0 and L_X omega = 0
  bool metric_and_symplectic = false;   // L_X g = 0 and L_X omega = 0
  bool all() const { return complex_and_metric && complex_and_symplectic && metric_and_symplectic; }
};

/// Tests which pairs of the invariance conditions {L_X J, L_X g, L_X omega}
/// vanish; any one pair characterises a unitary generator.
template <typename Scalar>
UnitaryConditionFlags check_unitary_conditions(const LinearVectorField<Scalar>& x,
                                               Scalar tol = Scalar(1e-10)) {
  const Eigen::Index n = x.hilbert_dim();
  const auto canon = canonical_structures<Scalar>(n);
  const Scalar scale = std::max(Scalar(1), max_abs<Scalar>(x.matrix()));
  const bool metric_ok =
      max_abs<Scalar>(lie_derivative(x, canon.metric).matrix()) <= tol * scale;
  const bool symplectic_ok =
      max_abs<Scalar>(lie_derivative(x, canon.symplectic).matrix()) <= tol * scale;
  const bool complex_ok =
      max_abs<Scalar>(lie_derivative(x, canon.complex_structure).matrix()) <= tol * scale;
  return UnitaryConditionFlags{complex_ok && metric_ok, complex_ok && symplectic_ok,
                               metric_ok && symplectic_ok};
}

template <typename Scalar = double>
struct BracketIdentityValues {
  Scalar lhs_omega, rhs_omega;  // omega(X_{H1}, X_{H2})  vs  f_{-i[H1,H2]}
  Scalar lhs_metric, rhs_metric;  // g(X_{H1}, X_{H2})  vs  f_{H1 H2 + H2 H1}
};

/// Both sides of the structure-function identities
///   omega(X_{H1}, X_{H2}) = f_{-i[H1,H2]},  g(X_{H1}, X_{H2}) = f_{H1H2+H2H1}
/// evaluated at z. The caller asserts closeness.
template <typename Scalar>
BracketIdentityValues<Scalar> bracket_identities(const HermitianMatrix<Scalar>& h1,
                                                 const HermitianMatrix<Scalar>& h2,
                                                 const HilbertPoint<Scalar>& z) {
  if (h1.dim() != h2.dim() || h1.dim() != z.dim())
    throw std::invalid_argument("bracket_identities: dimension mismatch");
  const Eigen::Index n = h1.dim();
  const RealVector<Scalar> x = z.coords();
  const RealVector<Scalar> v1 = hermitian_field(h1).evaluate(x);
  const RealVector<Scalar> v2 = hermitian_field(h2).evaluate(x);

  const ComplexMatrix<Scalar>& m1 = h1.matrix();
  const ComplexMatrix<Scalar>& m2 = h2.matrix();
  const HermitianMatrix<Scalar> comm(
      (std::complex<Scalar>(0, -1) * (m1 * m2 - m2 * m1)).eval());
  const HermitianMatrix<Scalar> anti((m1 * m2 + m2 * m1).eval());

  BracketIdentityValues<Scalar> out;
  out.lhs_omega = v1.dot(symplectic_matrix<Scalar>(n) * v2);
  out.rhs_omega = hamiltonian_function(comm, z);
  out.lhs_metric = v1.dot(v2);
  out.rhs_metric = hamiltonian_function(anti, z);
  return out;
}

/// Unitary propagator exp(-iHt) through the eigendecomposition of H.
template <typename Scalar>
ComplexMatrix<Scalar> unitary_propagator(const HermitianMatrix<Scalar>& h, Scalar t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> es(h.matrix());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("unitary_propagator: eigendecomposition failed");
  const Eigen::Index n = h.dim();
  ComplexVector<Scalar> phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar angle = -es.eigenvalues()[k] * t;
    phases[k] = std::complex<Scalar>(std::cos(angle), std::sin(angle));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Schroedinger flow z(t) = exp(-iHt) z0 (hbar = 1). Norm-preserving up to
/// eigensolver error.
template <typename Scalar>
HilbertPoint<Scalar> schrodinger_flow(const HermitianMatrix<Scalar>& h,
                                      const HilbertPoint<Scalar>& z0, Scalar t) {
  if (h.dim() != z0.dim()) throw std::invalid_argument("schrodinger_flow: dimension mismatch");
  if (!std::isfinite(static_cast<double>(t)))
    throw std::invalid_argument("schrodinger_flow: time must be finite");
  return HilbertPoint<Scalar>::from_complex(
      (unitary_propagator(h, t) * z0.complex_vector()).eval());
}

}  // namespace qgeom
