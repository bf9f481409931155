#pragma once

// Reduction along the C_0 fibration of C^N_0: vertical fields Delta and
// Gamma = -J(Delta), projectability of fields and contravariant tensors, the
// norm-rescaled tensors, and the induced Kaehler structure on the Bloch
// sphere S^2 for N = 2 via (q,p) -> y = (y_1, y_2, y_3).
//
// The sphere S^2 is handled in the ambient R^3 chart with the tangent
// projector P = I - 4 y y^T at y_gamma = 1/2; no local charts.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <stdexcept>

#include "qgeom/kahler.hpp"

namespace qgeom {

/// Levi-Civita symbol on three 0-based indices.
inline constexpr int levi_civita3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

template <typename Scalar = double>
struct VerticalPair {
  Eigen::Index hilbert_dim;
  LinearVectorField<Scalar> delta;  // Euler field, matrix I_2N
  LinearVectorField<Scalar> gamma;  // phase rotation, matrix -J
};

/// Vertical fields of the fibration C^N_0 -> P(C^N): the Euler field
/// Delta = q_a d/dq_a + p_a d/dp_a and Gamma = -J(Delta). They commute, and
/// Gamma is the Hermitian field of the identity with Hamiltonian function
/// y_gamma = ||z||^2 / 2.
template <typename Scalar = double>
VerticalPair<Scalar> vertical_fields(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("vertical_fields: dimension must be >= 1");
  return VerticalPair<Scalar>{
      n, LinearVectorField<Scalar>(RealMatrix<Scalar>::Identity(2 * n, 2 * n)),
      LinearVectorField<Scalar>((-complex_structure_matrix<Scalar>(n)).eval(),
                                /*hermitian=*/true)};
}

/// The su(2) frame on C^2_0: fields X_j of the Pauli matrices together with
/// their Hamiltonian functions y_j and y_gamma.
template <typename Scalar = double>
class PauliFrame {
 public:
  PauliFrame()
      : sigmas_{pauli<Scalar>(1), pauli<Scalar>(2), pauli<Scalar>(3)},
        fields_{hermitian_field(sigmas_[0]), hermitian_field(sigmas_[1]),
                hermitian_field(sigmas_[2])} {}

  const LinearVectorField<Scalar>& field(int j) const { return fields_.at(check_index(j)); }
  const HermitianMatrix<Scalar>& sigma(int j) const { return sigmas_.at(check_index(j)); }

  Scalar y(int j, const HilbertPoint<Scalar>& z) const {
    return hamiltonian_function(sigmas_.at(check_index(j)), z);
  }
  Scalar y_gamma(const HilbertPoint<Scalar>& z) const { return z.norm_squared() / Scalar(2); }

  /// (y_1, y_2, y_3) at z.
  RealVector<Scalar> y_vector(const HilbertPoint<Scalar>& z) const {
    RealVector<Scalar> y(3);
    for (int j = 0; j < 3; ++j) y[j] = this->y(j + 1, z);
    return y;
  }

 private:
  static std::size_t check_index(int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("PauliFrame: index must be 1..3");
    return static_cast<std::size_t>(j - 1);
  }
  std::array<HermitianMatrix<Scalar>, 3> sigmas_;
  std::array<LinearVectorField<Scalar>, 3> fields_;
};

template <typename Scalar = double>
PauliFrame<Scalar> pauli_frame(Eigen::Index n = 2) {
  if (n != 2) throw std::invalid_argument("pauli_frame: only defined for N = 2");
  return PauliFrame<Scalar>();
}

/// A linear field projects to the base of the fibration iff its commutator
/// with each vertical field is vertical. [W, I] = 0 always; the Gamma test is
/// a least-squares membership of [W, Gamma] in span{I, Gamma}.
template <typename Scalar>
bool is_projectable_field(const LinearVectorField<Scalar>& x, const VerticalPair<Scalar>& v,
                          Scalar tol = Scalar(1e-10)) {
  if (x.dim() != 2 * v.hilbert_dim)
    throw std::invalid_argument("is_projectable_field: dimension mismatch");
  const RealMatrix<Scalar>& w = x.matrix();
  const RealMatrix<Scalar>& g = v.gamma.matrix();
  const RealMatrix<Scalar> comm = w * g - g * w;
  const Eigen::Index d = w.rows();
  // span{I, Gamma} is orthogonal in the Frobenius inner product
  const Scalar a = comm.cwiseProduct(RealMatrix<Scalar>::Identity(d, d)).sum() / Scalar(d);
  const Scalar b = comm.cwiseProduct(g).sum() / g.squaredNorm();
  const RealMatrix<Scalar> residual =
      comm - a * RealMatrix<Scalar>::Identity(d, d) - b * g;
  const Scalar scale = std::max(Scalar(1), max_abs<Scalar>(w));
  return max_abs<Scalar>(residual) <= tol * scale;
}

/// A contravariant tensor field descends along the fibration iff its Lie
/// derivatives along Delta and Gamma vanish. Checked by the flow-based finite
/// difference at deterministic sample points.
template <typename Scalar>
bool is_projectable_tensor(const TensorField<Scalar>& t, const VerticalPair<Scalar>& v,
                           Scalar tol = Scalar(1e-6), int sample_points = 4,
                           std::uint64_t seed = 20240901) {
  if (t.variance != Variance::contravariant)
    throw std::invalid_argument("is_projectable_tensor: tensor must be contravariant");
  Rng<Scalar> rng(seed);
  for (int s = 0; s < sample_points; ++s) {
    RealVector<Scalar> x = rng.gaussian_vector(2 * v.hilbert_dim);
    if (x.norm() < Scalar(0.1)) x += RealVector<Scalar>::Ones(x.size());
    const Scalar scale = std::max(Scalar(1), max_abs<Scalar>(t(x)));
    if (max_abs<Scalar>(lie_derivative_field(v.delta, t, x)) > tol * scale) return false;
    if (max_abs<Scalar>(lie_derivative_field(v.gamma, t, x)) > tol * scale) return false;
  }
  return true;
}

template <typename Scalar>
bool is_projectable_tensor(const Tensor2<Scalar>& t, const VerticalPair<Scalar>& v,
                           Scalar tol = Scalar(1e-6)) {
  return is_projectable_tensor(TensorField<Scalar>::constant(t), v, tol);
}

/// The rescaled tensors ||z||^2 (G, Lambda, J); these are degree-zero
/// homogeneous and phase invariant, hence projectable.
template <typename Scalar = double>
class RescaledTensors {
 public:
  explicit RescaledTensors(Eigen::Index n) : n_(n), canon_(canonical_structures<Scalar>(n)) {
    if (n < 2) throw std::invalid_argument("RescaledTensors: dimension must be >= 2");
  }

  Tensor2<Scalar> cometric_at(const HilbertPoint<Scalar>& z) const {
    return Tensor2<Scalar>(scaled(z, canon_.cometric.matrix()), Variance::contravariant);
  }
  Tensor2<Scalar> poisson_at(const HilbertPoint<Scalar>& z) const {
    return Tensor2<Scalar>(scaled(z, canon_.poisson.matrix()), Variance::contravariant);
  }
  Tensor2<Scalar> complex_structure_at(const HilbertPoint<Scalar>& z) const {
    return Tensor2<Scalar>(scaled(z, canon_.complex_structure.matrix()), Variance::mixed);
  }

  TensorField<Scalar> cometric_field() const {
    const RealMatrix<Scalar> base = canon_.cometric.matrix();
    return TensorField<Scalar>{
        [base](const RealVector<Scalar>& x) { return (x.squaredNorm() * base).eval(); },
        Variance::contravariant};
  }
  TensorField<Scalar> poisson_field() const {
    const RealMatrix<Scalar> base = canon_.poisson.matrix();
    return TensorField<Scalar>{
        [base](const RealVector<Scalar>& x) { return (x.squaredNorm() * base).eval(); },
        Variance::contravariant};
  }

 private:
  RealMatrix<Scalar> scaled(const HilbertPoint<Scalar>& z, const RealMatrix<Scalar>& m) const {
    if (z.dim() != n_) throw std::invalid_argument("RescaledTensors: dimension mismatch");
    if (z.is_zero()) throw std::invalid_argument("RescaledTensors: z must be nonzero");
    return (z.norm_squared() * m).eval();
  }
  Eigen::Index n_;
  CanonicalStructures<Scalar> canon_;
};

template <typename Scalar = double>
RescaledTensors<Scalar> rescaled_tensors(Eigen::Index n) {
  return RescaledTensors<Scalar>(n);
}

/// Symplectic duality S: X -> omega(., X), i.e. the covector Omega x for a
/// field value x. S(Delta) is the connection one-form theta_gamma.
template <typename Scalar>
RealVector<Scalar> symplectic_dual(const RealVector<Scalar>& field_value) {
  const Eigen::Index n = field_value.size() / 2;
  return symplectic_matrix<Scalar>(n) * field_value;
}

/// Connection one-form of the U(1) Hopf fibration:
/// theta_gamma = p_a dq_a - q_a dp_a, i.e. the covector Omega x at x.
template <typename Scalar = double>
struct Connection1Form {
  Eigen::Index hilbert_dim;

  RealVector<Scalar> covector_at(const RealVector<Scalar>& x) const {
    if (x.size() != 2 * hilbert_dim)
      throw std::invalid_argument("Connection1Form: dimension mismatch");
    return symplectic_matrix<Scalar>(hilbert_dim) * x;
  }
  /// Pairing with a field value at x.
  Scalar pair(const RealVector<Scalar>& x, const RealVector<Scalar>& field_value) const {
    return covector_at(x).dot(field_value);
  }
};

// ---------------------------------------------------------------------------
// Frame decompositions of the rescaled tensors on C^2_0.
//
// The wedge and epsilon normalisations below were fixed by entrywise
// comparison against ||z||^2 G, ||z||^2 Lambda and ||z||^2 J (the printed
// coefficients in the source formulas are not consistent; the brute-force
// evaluation is authoritative). With A ^ B := A (x) B - B (x) A:
//
//   ||z||^2 G      = Delta (x) Delta + sum_j X_j (x) X_j
//   y_g ||z||^2 L  = sum_{abc} eps_{abc} y_a X_b (x) X_c + y_g (Gamma ^ Delta)
//   ||z||^2 J      = Delta (x) S(Delta) + sum_k X_k (x) S(X_k)
// ---------------------------------------------------------------------------

/// Right-hand side of the cometric split, evaluated at z (N = 2).
template <typename Scalar>
RealMatrix<Scalar> cometric_frame_decomposition(const PauliFrame<Scalar>& frame,
                                                const HilbertPoint<Scalar>& z) {
  const RealVector<Scalar> x = z.coords();
  RealMatrix<Scalar> out = x * x.transpose();
  for (int j = 1; j <= 3; ++j) {
    const RealVector<Scalar> xj = frame.field(j).evaluate(x);
    out += xj * xj.transpose();
  }
  return out;
}

/// Right-hand side of the Poisson split divided by y_gamma, evaluated at z.
template <typename Scalar>
RealMatrix<Scalar> poisson_frame_decomposition(const PauliFrame<Scalar>& frame,
                                               const HilbertPoint<Scalar>& z) {
  const RealVector<Scalar> x = z.coords();
  const Scalar yg = frame.y_gamma(z);
  if (yg == Scalar(0)) throw std::invalid_argument("poisson_frame_decomposition: z must be nonzero");
  const RealVector<Scalar> y = frame.y_vector(z);
  std::array<RealVector<Scalar>, 3> xs;
  for (int j = 0; j < 3; ++j) xs[static_cast<std::size_t>(j)] = frame.field(j + 1).evaluate(x);

  RealMatrix<Scalar> eps_term = RealMatrix<Scalar>::Zero(4, 4);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (const int e = levi_civita3(a, b, c); e != 0)
          eps_term += Scalar(e) * y[a] *
                      (xs[static_cast<std::size_t>(b)] *
                       xs[static_cast<std::size_t>(c)].transpose());

  const RealVector<Scalar> delta = x;
  const RealVector<Scalar> gamma = vertical_fields<Scalar>(2).gamma.evaluate(x);
  const RealMatrix<Scalar> wedge = gamma * delta.transpose() - delta * gamma.transpose();
  return ((eps_term + yg * wedge) / yg).eval();
}

/// Right-hand side of the complex-structure split Delta (x) S(Delta) +
/// X_k (x) S(X_k), evaluated at z (equals ||z||^2 J).
template <typename Scalar>
RealMatrix<Scalar> complex_structure_frame_decomposition(const PauliFrame<Scalar>& frame,
                                                         const HilbertPoint<Scalar>& z) {
  const RealVector<Scalar> x = z.coords();
  RealMatrix<Scalar> out = x * symplectic_dual<Scalar>(x).transpose();
  for (int k = 1; k <= 3; ++k) {
    const RealVector<Scalar> xk = frame.field(k).evaluate(x);
    out += xk * symplectic_dual<Scalar>(xk).transpose();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projection to the Bloch sphere (N = 2)
// ---------------------------------------------------------------------------

/// Point of S^2 embedded at radius 1/2 in the (y_1, y_2, y_3) chart, with
/// y_gamma fixed to 1/2 (the r^2 = 1 slice).
template <typename Scalar = double>
struct SphereChart {
  RealVector<Scalar> y;  // 3 components, sum y_j^2 = 1/4
  Scalar y_gamma = Scalar(0.5);
};

/// Projection C^2_0 -> S^2: the ray [z] as the Bloch point y_j(z)/||z||^2,
/// scaled onto the sphere with sum y_j^2 = y_gamma^2. The default y_gamma =
/// 1/2 is the r^2 = 1 slice; other radii are supported but are not tied to
/// reference values anywhere. Invariant under z -> u z for every u in C_0.
template <typename Scalar>
SphereChart<Scalar> project_point(const HilbertPoint<Scalar>& z, Scalar y_gamma = Scalar(0.5)) {
  if (z.dim() != 2) throw std::invalid_argument("project_point: only defined for N = 2");
  if (z.is_zero()) throw std::invalid_argument("project_point: z must be nonzero");
  if (!(y_gamma > Scalar(0))) throw std::invalid_argument("project_point: y_gamma must be positive");
  const PauliFrame<Scalar> frame;
  return SphereChart<Scalar>{
      (Scalar(2) * y_gamma * frame.y_vector(z) / z.norm_squared()).eval(), y_gamma};
}

/// Exact Jacobian of z -> y_j(z)/||z||^2, a 3 x 4 matrix; used to push
/// fields through the projection.
template <typename Scalar>
RealMatrix<Scalar> projection_jacobian(const HilbertPoint<Scalar>& z) {
  if (z.dim() != 2) throw std::invalid_argument("projection_jacobian: only defined for N = 2");
  if (z.is_zero()) throw std::invalid_argument("projection_jacobian: z must be nonzero");
  const PauliFrame<Scalar> frame;
  const RealVector<Scalar> x = z.coords();
  const Scalar r2 = z.norm_squared();
  RealMatrix<Scalar> jac(3, 4);
  for (int j = 0; j < 3; ++j) {
    const RealVector<Scalar> grad_y = quadratic_form_matrix(frame.sigma(j + 1)) * x;
    const Scalar yj = frame.y(j + 1, z);
    jac.row(j) = (grad_y / r2 - Scalar(2) * yj * x / (r2 * r2)).transpose();
  }
  return jac;
}

/// Pushforward of an upstairs field value through the projection at z.
template <typename Scalar>
RealVector<Scalar> pushforward_field_value(const HilbertPoint<Scalar>& z,
                                           const RealVector<Scalar>& field_value) {
  return projection_jacobian(z) * field_value;
}

/// The rotation generators on the sphere: R_j(y)_b = 2 eps_{jab} y_a. These
/// are the projections of the Pauli fields X_j; they satisfy y_j R_j = 0.
template <typename Scalar>
RealVector<Scalar> sphere_rotation_field(int j, const RealVector<Scalar>& y) {
  if (j < 1 || j > 3) throw std::invalid_argument("sphere_rotation_field: index must be 1..3");
  if (y.size() != 3) throw std::invalid_argument("sphere_rotation_field: ambient point must be 3d");
  RealVector<Scalar> out = RealVector<Scalar>::Zero(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (const int e = levi_civita3(j - 1, a, b); e != 0) out[b] += Scalar(2 * e) * y[a];
  return out;
}

/// The Kaehler structure of S^2 at radius 1/2, in the ambient chart. The
/// numeric normalisations were pinned by inverting the projected tensors:
///   projected cometric  P = I - 4 y y^T          (tangent projector)
///   metric              g(u,v) = u^T P v         (Euclidean restriction;
///                                                 the Fubini-Study metric)
///   two-form            w(u,v) = u^T L v with L_{bc} = 2 eps_{abc} y_a
///   complex structure   Jp = -L on the tangent space, Jp^2 = -I
template <typename Scalar = double>
class SphereKaehler {
 public:
  RealMatrix<Scalar> tangent_projector(const RealVector<Scalar>& y) const {
    check(y);
    return RealMatrix<Scalar>::Identity(3, 3) - Scalar(4) * y * y.transpose();
  }

  RealMatrix<Scalar> projected_cometric(const RealVector<Scalar>& y) const {
    return tangent_projector(y);
  }

  RealMatrix<Scalar> projected_poisson(const RealVector<Scalar>& y) const {
    return levi_civita_matrix(y);
  }

  Scalar metric(const RealVector<Scalar>& y, const RealVector<Scalar>& u,
                const RealVector<Scalar>& v) const {
    return u.dot(tangent_projector(y) * v);
  }

  Scalar two_form(const RealVector<Scalar>& y, const RealVector<Scalar>& u,
                  const RealVector<Scalar>& v) const {
    return u.dot(levi_civita_matrix(y) * v);
  }

  /// Tangent-space complex structure: maps R_k to the tangent projection of
  /// d/dy_k and that back to -R_k.
  RealMatrix<Scalar> complex_structure(const RealVector<Scalar>& y) const {
    return (-levi_civita_matrix(y)).eval();
  }

  /// Exterior derivative of the two-form evaluated on an ambient triple,
  /// using the degree-(-2) homogeneous extension (the scaled solid-angle
  /// form, which is closed); partial derivatives are exact.
  Scalar exterior_derivative(const RealVector<Scalar>& y, const RealVector<Scalar>& u,
                             const RealVector<Scalar>& v, const RealVector<Scalar>& w) const {
    check(y);
    Scalar sum = 0;
    sum += directional_component_derivative(y, u, v, w);
    sum -= directional_component_derivative(y, v, u, w);
    sum += directional_component_derivative(y, w, u, v);
    return sum;
  }

  /// Same quantity by central finite differences with one Richardson level.
  Scalar exterior_derivative_fd(const RealVector<Scalar>& y, const RealVector<Scalar>& u,
                                const RealVector<Scalar>& v, const RealVector<Scalar>& w,
                                Scalar step = Scalar(1e-5)) const {
    check(y);
    const auto omega_ext = [this](const RealVector<Scalar>& at, const RealVector<Scalar>& a,
                                  const RealVector<Scalar>& b) {
      return a.dot(extension_matrix(at) * b);
    };
    const auto dir = [&](const RealVector<Scalar>& d, const RealVector<Scalar>& a,
                         const RealVector<Scalar>& b, Scalar h) {
      return (omega_ext((y + h * d).eval(), a, b) - omega_ext((y - h * d).eval(), a, b)) /
             (Scalar(2) * h);
    };
    const auto richardson = [&](const RealVector<Scalar>& d, const RealVector<Scalar>& a,
                                const RealVector<Scalar>& b) {
      return (Scalar(4) * dir(d, a, b, step / Scalar(2)) - dir(d, a, b, step)) / Scalar(3);
    };
    return richardson(u, v, w) - richardson(v, u, w) + richardson(w, u, v);
  }

  /// L_{bc} = 2 eps_{abc} y_a; the two-form and (minus) the complex structure.
  RealMatrix<Scalar> levi_civita_matrix(const RealVector<Scalar>& y) const {
    check(y);
    RealMatrix<Scalar> l = RealMatrix<Scalar>::Zero(3, 3);
    l(0, 1) = Scalar(2) * y[2];
    l(1, 0) = -Scalar(2) * y[2];
    l(1, 2) = Scalar(2) * y[0];
    l(2, 1) = -Scalar(2) * y[0];
    l(2, 0) = Scalar(2) * y[1];
    l(0, 2) = -Scalar(2) * y[1];
    return l;
  }

 private:
  static void check(const RealVector<Scalar>& y) {
    if (y.size() != 3) throw std::invalid_argument("SphereKaehler: ambient point must be 3d");
  }

  /// Degree-(-2) ambient extension: (1/(8 ||y||^3)) * L(y) on the sphere of
  /// radius 1/2 this equals L(y).
  RealMatrix<Scalar> extension_matrix(const RealVector<Scalar>& y) const {
    const Scalar r = y.norm();
    return (levi_civita_matrix(y) / (Scalar(8) * r * r * r)).eval();
  }

  /// u-directional derivative of omega_ext(v, w), exact.
  Scalar directional_component_derivative(const RealVector<Scalar>& y, const RealVector<Scalar>& u,
                                          const RealVector<Scalar>& v,
                                          const RealVector<Scalar>& w) const {
    const Scalar r = y.norm();
    const Scalar r3 = r * r * r;
    const RealMatrix<Scalar> l = levi_civita_matrix(y);
    const RealMatrix<Scalar> dl = levi_civita_matrix(u);  // linear in its argument
    const Scalar drm3_du = -Scalar(3) * y.dot(u) / (r3 * r * r);
    return v.dot(dl * w) / (Scalar(8) * r3) + drm3_du * v.dot(l * w) / Scalar(8);
  }
};

template <typename Scalar = double>
SphereKaehler<Scalar> sphere_kaehler() {
  return SphereKaehler<Scalar>();
}

// ---------------------------------------------------------------------------
// The bracket of the rescaled Poisson-like tensor is not a Poisson bracket:
// the Jacobi identity fails. Brackets of quadratic Hamiltonians are evaluated
// with exact gradients.
// ---------------------------------------------------------------------------

/// A polynomial function with exact value and gradient, closed under the
/// brackets used in the Jacobi test.
template <typename Scalar = double>
struct SmoothFunction {
  std::function<Scalar(const RealVector<Scalar>&)> value;
  std::function<RealVector<Scalar>(const RealVector<Scalar>&)> gradient;

  static SmoothFunction quadratic(const RealMatrix<Scalar>& s) {
    return SmoothFunction{
        [s](const RealVector<Scalar>& x) { return x.dot(s * x) / Scalar(2); },
        [s](const RealVector<Scalar>& x) { return (s * x).eval(); }};
  }
};

/// Bracket {f, g}(x) = grad f . T(x) grad g for a contravariant tensor field.
template <typename Scalar>
SmoothFunction<Scalar> tensor_bracket(const TensorField<Scalar>& t,
                                      const SmoothFunction<Scalar>& f,
                                      const SmoothFunction<Scalar>& g,
                                      Scalar step = Scalar(1e-5)) {
  auto value = [t, f, g](const RealVector<Scalar>& x) {
    return f.gradient(x).dot(t(x) * g.gradient(x));
  };
  auto gradient = [value, step](const RealVector<Scalar>& x) {
    RealVector<Scalar> grad(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      RealVector<Scalar> e = RealVector<Scalar>::Zero(x.size());
      e[i] = Scalar(1);
      const auto central = [&](Scalar h) {
        return (value((x + h * e).eval()) - value((x - h * e).eval())) / (Scalar(2) * h);
      };
      grad[i] = (Scalar(4) * central(step / Scalar(2)) - central(step)) / Scalar(3);
    }
    return grad;
  };
  return SmoothFunction<Scalar>{value, gradient};
}

/// Jacobiator {f,{g,h}} + {g,{h,f}} + {h,{f,g}} at x.
template <typename Scalar>
Scalar jacobiator(const TensorField<Scalar>& t, const SmoothFunction<Scalar>& f,
                  const SmoothFunction<Scalar>& g, const SmoothFunction<Scalar>& h,
                  const RealVector<Scalar>& x) {
  const auto bracket_value = [&](const SmoothFunction<Scalar>& a, const SmoothFunction<Scalar>& b,
                                 const SmoothFunction<Scalar>& c) {
    return tensor_bracket(t, a, tensor_bracket(t, b, c)).value(x);
  };
  return bracket_value(f, g, h) + bracket_value(g, h, f) + bracket_value(h, f, g);
}

}  // namespace qgeom
