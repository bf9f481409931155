#pragma once

// Unfolding via the momentum map mu(z) = |z><z| of the U(N) action: the
// pairing conventions on u_N / u*_N, coadjoint-orbit tangent frames, the
// pushed-forward metric and Poisson tensors, their inversion on the orbit,
// and the N = 2 cross-check against the reduction route.
//
// Conventions: <A,B> = Tr(AB)/2 on u*_N, hat(A) = -iA, and the bracket
// [A,B]* = -i[A,B]. The frame at mu(z) is
//   phi_a = |e_a><z| + |z><e_a|,  psi_a = i(|z><e_a| - |e_a><z|)
// for an orthonormal complement {e_a} of z, and satisfies
//   [phi_a, mu]* =  ||z||^2 psi_a,   [psi_a, mu]* = -||z||^2 phi_a,
//   <phi_a, phi_b> = <psi_a, psi_b> = ||z||^2 delta_ab, <phi_a, psi_b> = 0.
// The full-trace duality values Tr(frame_i [frame_j, mu]*) form the
// symplectic block pattern with magnitude 2||z||^4 (signs: the psi-phi block
// is +, the phi-psi block is -).

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qgeom/hopf.hpp"
#include "qgeom/kahler.hpp"

namespace qgeom {

/// Pairing of A in u*_N with T in u_N: A(T) = i Tr(AT)/2, real valued.
template <typename Scalar>
Scalar dual_pairing(const HermitianMatrix<Scalar>& a, const AntiHermitianMatrix<Scalar>& t) {
  if (a.dim() != t.dim()) throw std::invalid_argument("dual_pairing: dimension mismatch");
  const std::complex<Scalar> val =
      std::complex<Scalar>(0, 1) * (a.matrix() * t.matrix()).trace() / Scalar(2);
  return val.real();
}

/// Scalar product on u*_N: <A,B> = Tr(AB)/2.
template <typename Scalar>
Scalar scalar_product(const HermitianMatrix<Scalar>& a, const HermitianMatrix<Scalar>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("scalar_product: dimension mismatch");
  return (a.matrix() * b.matrix()).trace().real() / Scalar(2);
}

/// Lie bracket transported to u*_N: [A,B]* = -i(AB - BA), Hermitian.
template <typename Scalar>
HermitianMatrix<Scalar> u_star_bracket(const HermitianMatrix<Scalar>& a,
                                       const HermitianMatrix<Scalar>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("u_star_bracket: dimension mismatch");
  return HermitianMatrix<Scalar>(
      (std::complex<Scalar>(0, -1) * (a.matrix() * b.matrix() - b.matrix() * a.matrix())).eval());
}

/// A point of u*_N together with its coordinates against the orthonormal
/// basis returned by hermitian_basis(N).
template <typename Scalar = double>
struct DualAlgebraPoint {
  HermitianMatrix<Scalar> value;
  RealVector<Scalar> coords;

  /// Reconstruction sum_alpha y_alpha sigma_alpha; equals value up to
  /// round-off for any Hermitian value.
  HermitianMatrix<Scalar> reconstruct() const {
    const auto basis = hermitian_basis<Scalar>(value.dim());
    ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(value.dim(), value.dim());
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha)
      m += coords[static_cast<Eigen::Index>(alpha)] * basis[alpha].matrix();
    return HermitianMatrix<Scalar>(m);
  }
};

template <typename Scalar>
RealVector<Scalar> dual_coordinates(const HermitianMatrix<Scalar>& a) {
  const auto basis = hermitian_basis<Scalar>(a.dim());
  RealVector<Scalar> coords(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t alpha = 0; alpha < basis.size(); ++alpha)
    coords[static_cast<Eigen::Index>(alpha)] = scalar_product(basis[alpha], a);
  return coords;
}

/// Momentum map mu(z) = |z><z|; coordinates y_alpha = Tr(mu sigma_alpha)/2 =
/// f_{sigma_alpha}(z). Positive semi-definite, rank one, trace ||z||^2.
template <typename Scalar>
DualAlgebraPoint<Scalar> momentum_map(const HilbertPoint<Scalar>& z) {
  if (z.is_zero()) throw std::invalid_argument("momentum_map: z must be nonzero");
  const ComplexVector<Scalar> zv = z.complex_vector();
  HermitianMatrix<Scalar> value((zv * zv.adjoint()).eval());
  return DualAlgebraPoint<Scalar>{value, dual_coordinates(value)};
}

/// Exact differential of mu at z applied to a chart vector v:
/// d mu_z[v] = |v><z| + |z><v|.
template <typename Scalar>
HermitianMatrix<Scalar> momentum_differential(const HilbertPoint<Scalar>& z,
                                              const RealVector<Scalar>& v) {
  if (v.size() != 2 * z.dim())
    throw std::invalid_argument("momentum_differential: dimension mismatch");
  const ComplexVector<Scalar> zv = z.complex_vector();
  const ComplexVector<Scalar> vv = HilbertPoint<Scalar>(v).complex_vector();
  return HermitianMatrix<Scalar>((vv * zv.adjoint() + zv * vv.adjoint()).eval());
}

/// Tangent generator of the coadjoint action at mu(z): [A, mu(z)]*.
template <typename Scalar>
HermitianMatrix<Scalar> coadjoint_generator(const HermitianMatrix<Scalar>& a,
                                            const HilbertPoint<Scalar>& z) {
  return u_star_bracket(a, momentum_map(z).value);
}

/// Orthonormal tangent frame {phi_a, psi_a} of the orbit through mu(z),
/// a = 1..N-1, built over a deterministic orthonormal complement of z.
template <typename Scalar = double>
struct OrbitFrame {
  HilbertPoint<Scalar> z;
  Scalar norm_sq;
  ComplexMatrix<Scalar> complement;  // N x (N-1), columns e_a
  std::vector<HermitianMatrix<Scalar>> phis;
  std::vector<HermitianMatrix<Scalar>> psis;

  Eigen::Index count() const { return static_cast<Eigen::Index>(phis.size()); }
};

/// Orthonormal complement of z: the images of the standard basis vectors
/// e_2..e_N under the Householder reflection mapping z/||z|| to (a phase
/// times) e_1. With seed != 0 the complement is rotated by a seeded unitary;
/// every verified orbit quantity must be invariant under this gauge change.
template <typename Scalar>
ComplexMatrix<Scalar> orthonormal_complement(const HilbertPoint<Scalar>& z,
                                             std::uint64_t seed = 0) {
  if (z.is_zero()) throw std::invalid_argument("orthonormal_complement: z must be nonzero");
  using C = std::complex<Scalar>;
  const Eigen::Index n = z.dim();
  const ComplexVector<Scalar> zhat = (z.complex_vector() / z.norm()).eval();

  ComplexMatrix<Scalar> house = ComplexMatrix<Scalar>::Identity(n, n);
  const Scalar a0 = std::abs(zhat[0]);
  const C phase = a0 > Scalar(0) ? zhat[0] / a0 : C(1, 0);
  ComplexVector<Scalar> v = zhat;
  v[0] += phase;  // sign chosen to avoid cancellation
  const Scalar vnorm2 = v.squaredNorm();
  if (vnorm2 > Scalar(kHermitianTol)) {
    house -= (Scalar(2) / vnorm2) * (v * v.adjoint());
  }
  // house maps zhat to -phase * e_1 and is unitary and Hermitian, so its
  // columns 2..N are orthonormal and orthogonal to zhat.
  ComplexMatrix<Scalar> complement = house.rightCols(n - 1);

  if (seed != 0 && n > 1) {
    Rng<Scalar> rng(seed, /*stream=*/0x0b17a11ceULL);
    complement = (complement * rng.haar_unitary(n - 1)).eval();
  }
  return complement;
}

template <typename Scalar>
OrbitFrame<Scalar> build_orbit_frame(const HilbertPoint<Scalar>& z, std::uint64_t seed = 0) {
  if (z.is_zero()) throw std::invalid_argument("build_orbit_frame: z must be nonzero");
  OrbitFrame<Scalar> frame{z, z.norm_squared(), orthonormal_complement(z, seed), {}, {}};
  const ComplexVector<Scalar> zv = z.complex_vector();
  const Eigen::Index n = z.dim();
  frame.phis.reserve(static_cast<std::size_t>(n - 1));
  frame.psis.reserve(static_cast<std::size_t>(n - 1));
  for (Eigen::Index a = 0; a < n - 1; ++a) {
    const ComplexVector<Scalar> ea = frame.complement.col(a);
    frame.phis.push_back(
        HermitianMatrix<Scalar>((ea * zv.adjoint() + zv * ea.adjoint()).eval()));
    frame.psis.push_back(HermitianMatrix<Scalar>(
        (std::complex<Scalar>(0, 1) * (zv * ea.adjoint() - ea * zv.adjoint())).eval()));
  }
  return frame;
}

/// Push-forward tensor values for one-form labels A, B on u*_N:
///   (mu_* G)(A, B) at mu(z)      = f_{AB + BA}(z)
///   (mu_* Lambda)(A, B) at mu(z) = f_{[A,B]*}(z).
template <typename Scalar = double>
struct PushforwardValues {
  Scalar cometric;  // f_{AB+BA}
  Scalar poisson;   // f_{[A,B]*}
};

template <typename Scalar>
PushforwardValues<Scalar> pushforward_tensors(const HilbertPoint<Scalar>& z,
                                              const HermitianMatrix<Scalar>& a,
                                              const HermitianMatrix<Scalar>& b) {
  if (z.is_zero()) throw std::invalid_argument("pushforward_tensors: z must be nonzero");
  const HermitianMatrix<Scalar> anti((a.matrix() * b.matrix() + b.matrix() * a.matrix()).eval());
  return PushforwardValues<Scalar>{hamiltonian_function(anti, z),
                                   hamiltonian_function(u_star_bracket(a, b), z)};
}

/// The inverted structures on the orbit through mu(z), evaluated through the
/// frame: the metric Gram matrix is the identity, the two-form Gram matrix is
/// the canonical antisymmetric block form, and J acts as
///   J(v) = sum_a ( phi_a <psi_a, v> - psi_a <phi_a, v> ),
/// so J(phi_a) = -||z||^2 psi_a and J^2 = -||z||^4 on the tangent space.
template <typename Scalar = double>
class OrbitKaehler {
 public:
  explicit OrbitKaehler(OrbitFrame<Scalar> frame) : frame_(std::move(frame)) {}

  const OrbitFrame<Scalar>& frame() const { return frame_; }

  /// Frame coordinates (a_1..a_m, b_1..b_m) of a tangent label V, where
  /// V = sum a_i phi_i + b_i psi_i on the tangent space.
  RealVector<Scalar> tangent_coordinates(const HermitianMatrix<Scalar>& v) const {
    const Eigen::Index m = frame_.count();
    RealVector<Scalar> coords(2 * m);
    for (Eigen::Index i = 0; i < m; ++i) {
      coords[i] = scalar_product(frame_.phis[static_cast<std::size_t>(i)], v) / frame_.norm_sq;
      coords[m + i] = scalar_product(frame_.psis[static_cast<std::size_t>(i)], v) / frame_.norm_sq;
    }
    return coords;
  }

  HermitianMatrix<Scalar> from_coordinates(const RealVector<Scalar>& coords) const {
    const Eigen::Index m = frame_.count();
    ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(frame_.z.dim(), frame_.z.dim());
    for (Eigen::Index i = 0; i < m; ++i) {
      out += coords[i] * frame_.phis[static_cast<std::size_t>(i)].matrix();
      out += coords[m + i] * frame_.psis[static_cast<std::size_t>(i)].matrix();
    }
    return HermitianMatrix<Scalar>(out);
  }

  HermitianMatrix<Scalar> tangent_project(const HermitianMatrix<Scalar>& v) const {
    return from_coordinates(tangent_coordinates(v));
  }

  Scalar metric(const HermitianMatrix<Scalar>& u, const HermitianMatrix<Scalar>& v) const {
    return tangent_coordinates(u).dot(tangent_coordinates(v));
  }

  Scalar two_form(const HermitianMatrix<Scalar>& u, const HermitianMatrix<Scalar>& v) const {
    const Eigen::Index m = frame_.count();
    const RealVector<Scalar> cu = tangent_coordinates(u);
    const RealVector<Scalar> cv = tangent_coordinates(v);
    // omega(psi_a, phi_b) = delta_ab
    return cu.tail(m).dot(cv.head(m)) - cu.head(m).dot(cv.tail(m));
  }

  HermitianMatrix<Scalar> apply_complex_structure(const HermitianMatrix<Scalar>& v) const {
    const Eigen::Index m = frame_.count();
    ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(frame_.z.dim(), frame_.z.dim());
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto& phi = frame_.phis[static_cast<std::size_t>(i)];
      const auto& psi = frame_.psis[static_cast<std::size_t>(i)];
      out += scalar_product(psi, v) * phi.matrix();
      out -= scalar_product(phi, v) * psi.matrix();
    }
    return HermitianMatrix<Scalar>(out);
  }

  /// Gram matrix of the metric on (phi_1..phi_m, psi_1..psi_m).
  RealMatrix<Scalar> metric_gram() const {
    return gram([this](const HermitianMatrix<Scalar>& u, const HermitianMatrix<Scalar>& v) {
      return metric(u, v);
    });
  }

  RealMatrix<Scalar> two_form_gram() const {
    return gram([this](const HermitianMatrix<Scalar>& u, const HermitianMatrix<Scalar>& v) {
      return two_form(u, v);
    });
  }

 private:
  template <typename F>
  RealMatrix<Scalar> gram(F&& f) const {
    const Eigen::Index m = frame_.count();
    RealMatrix<Scalar> g(2 * m, 2 * m);
    const auto& at = [this](Eigen::Index i) -> const HermitianMatrix<Scalar>& {
      const Eigen::Index m = frame_.count();
      return i < m ? frame_.phis[static_cast<std::size_t>(i)]
                   : frame_.psis[static_cast<std::size_t>(i - m)];
    };
    for (Eigen::Index i = 0; i < 2 * m; ++i)
      for (Eigen::Index j = 0; j < 2 * m; ++j) g(i, j) = f(at(i), at(j));
    return g;
  }

  OrbitFrame<Scalar> frame_;
};

template <typename Scalar>
OrbitKaehler<Scalar> orbit_kaehler(const HilbertPoint<Scalar>& z, std::uint64_t seed = 0) {
  return OrbitKaehler<Scalar>(build_orbit_frame(z, seed));
}

/// Finite-difference exterior derivative of the orbit two-form on an ambient
/// triple of tangent labels at mu(z). The two-form is extended off the orbit
/// by projecting a perturbed point back to the rank-one cone through its
/// dominant eigenpair; coordinate extensions of the labels commute, so
///   (d w)(U,V,W) = D_U[w(V,W)] - D_V[w(U,W)] + D_W[w(U,V)].
template <typename Scalar>
Scalar orbit_exterior_derivative_fd(const HilbertPoint<Scalar>& z,
                                    const HermitianMatrix<Scalar>& u,
                                    const HermitianMatrix<Scalar>& v,
                                    const HermitianMatrix<Scalar>& w,
                                    Scalar step = Scalar(1e-4)) {
  const ComplexMatrix<Scalar> rho0 = momentum_map(z).value.matrix();

  const auto cone_point = [&](const ComplexMatrix<Scalar>& rho) -> HilbertPoint<Scalar> {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> es(rho);
    const Eigen::Index top = rho.rows() - 1;  // eigenvalues ascending
    ComplexVector<Scalar> vec = es.eigenvectors().col(top);
    Eigen::Index pivot = 0;
    vec.cwiseAbs().maxCoeff(&pivot);
    const std::complex<Scalar> piv = vec[pivot];
    vec *= std::conj(piv) / std::abs(piv);  // fix the phase smoothly
    return HilbertPoint<Scalar>::from_complex(
        (std::sqrt(es.eigenvalues()[top]) * vec).eval());
  };

  const auto form_value = [&](const ComplexMatrix<Scalar>& rho, const HermitianMatrix<Scalar>& a,
                              const HermitianMatrix<Scalar>& b) -> Scalar {
    const OrbitKaehler<Scalar> structure(build_orbit_frame(cone_point(rho)));
    return structure.two_form(structure.tangent_project(a), structure.tangent_project(b));
  };

  const auto directional = [&](const HermitianMatrix<Scalar>& dir,
                               const HermitianMatrix<Scalar>& a,
                               const HermitianMatrix<Scalar>& b) -> Scalar {
    const auto central = [&](Scalar h) {
      return (form_value(rho0 + h * dir.matrix(), a, b) -
              form_value(rho0 - h * dir.matrix(), a, b)) /
             (Scalar(2) * h);
    };
    return (Scalar(4) * central(step / Scalar(2)) - central(step)) / Scalar(3);
  };

  return directional(u, v, w) - directional(v, u, w) + directional(w, u, v);
}

// ---------------------------------------------------------------------------
// N = 2 cross-check between the two routes
// ---------------------------------------------------------------------------

/// The explicit N = 2 pair built over e = (z_2 e_1 - z_1 e_2)/||z||, which in
/// Bloch coordinates reads phi = 2(y_1 s_3 - y_3 s_1), psi = 2(y_0 s_2 +
/// y_2 s_0) with y_0 = y_gamma.
template <typename Scalar = double>
struct BlochFramePair {
  HermitianMatrix<Scalar> phi;
  HermitianMatrix<Scalar> psi;
};

template <typename Scalar>
BlochFramePair<Scalar> bloch_frame_pair(const HilbertPoint<Scalar>& z) {
  if (z.dim() != 2) throw std::invalid_argument("bloch_frame_pair: only defined for N = 2");
  if (z.is_zero()) throw std::invalid_argument("bloch_frame_pair: z must be nonzero");
  const ComplexVector<Scalar> zv = z.complex_vector();
  ComplexVector<Scalar> e(2);
  e[0] = zv[1] / z.norm();
  e[1] = -zv[0] / z.norm();
  const ComplexVector<Scalar> zn = (zv / z.norm()).eval();
  return BlochFramePair<Scalar>{
      HermitianMatrix<Scalar>((zn * e.adjoint() + e * zn.adjoint()).eval()),
      HermitianMatrix<Scalar>(
          (std::complex<Scalar>(0, 1) * (zn * e.adjoint() - e * zn.adjoint())).eval())};
}

/// Residuals and values of the N = 2 comparison between the unfolded orbit
/// structures and the upstairs canonical ones at a unit-norm z.
template <typename Scalar = double>
struct N2CrosscheckReport {
  // metric and two-form values on the unfolding fields (expected 1, 1, 0, 1)
  Scalar metric_phi = 0, metric_psi = 0, metric_cross = 0, symplectic_mixed = 0;
  // entrywise residuals
  Scalar momentum_coord_residual = 0;   // mu(z) = y_0 s_0 + y_k s_k
  Scalar frame_formula_residual = 0;    // Bloch pair vs its sigma expansion
  Scalar unfold_phi_residual = 0;       // mu_*(-X_2) = phi
  Scalar unfold_psi_residual = 0;       // mu_*(2(y_2 D - y_3 X_1 + y_1 X_3)) = psi
  Scalar vertical_complex_residual = 0; // J(Gamma) = Delta pointwise
  Scalar complex_pushforward_residual = 0;  // mu_*(J X_2) = psi, i.e. J(W_phi) = -W_psi

  Scalar max_value_error() const {
    using std::abs;
    return std::max(std::max(abs(metric_phi - Scalar(1)), abs(metric_psi - Scalar(1))),
                    std::max(abs(metric_cross), abs(symplectic_mixed - Scalar(1))));
  }
  Scalar max_residual() const {
    Scalar r = momentum_coord_residual;
    r = std::max(r, frame_formula_residual);
    r = std::max(r, unfold_phi_residual);
    r = std::max(r, unfold_psi_residual);
    r = std::max(r, vertical_complex_residual);
    r = std::max(r, complex_pushforward_residual);
    return r;
  }
};

/// Runs the full N = 2 comparison at a unit-norm z. The complex-structure
/// check J(W_phi) = -W_psi is evaluated through the fibration: applying J
/// upstairs to the unfolding field of W_phi and pushing forward must give
/// -(-W_psi), i.e. mu_*(J X_2) = psi.
template <typename Scalar>
N2CrosscheckReport<Scalar> n2_crosscheck(const HilbertPoint<Scalar>& z) {
  if (z.dim() != 2) throw std::invalid_argument("n2_crosscheck: only defined for N = 2");
  if (std::abs(z.norm_squared() - Scalar(1)) > Scalar(1e-9))
    throw std::invalid_argument("n2_crosscheck: z must have unit norm");

  N2CrosscheckReport<Scalar> report;
  const PauliFrame<Scalar> frame;
  const RealVector<Scalar> x = z.coords();
  const RealVector<Scalar> y = frame.y_vector(z);
  const Scalar y0 = frame.y_gamma(z);

  // upstairs fields of the unfolding: -X_2 and 2(y_2 Delta - y_3 X_1 + y_1 X_3)
  const RealVector<Scalar> phi_field = (-frame.field(2).evaluate(x)).eval();
  const RealVector<Scalar> psi_field =
      (Scalar(2) * (y[1] * x - y[2] * frame.field(1).evaluate(x) +
                    y[0] * frame.field(3).evaluate(x)))
          .eval();

  report.metric_phi = phi_field.dot(phi_field);
  report.metric_psi = psi_field.dot(psi_field);
  report.metric_cross = psi_field.dot(phi_field);
  report.symplectic_mixed = psi_field.dot(symplectic_matrix<Scalar>(2) * phi_field);

  // mu(z) against its Bloch expansion
  const auto mu = momentum_map(z);
  ComplexMatrix<Scalar> bloch = y0 * pauli<Scalar>(0).matrix();
  for (int k = 1; k <= 3; ++k) bloch += y[k - 1] * pauli<Scalar>(k).matrix();
  report.momentum_coord_residual = max_abs<Scalar>((mu.value.matrix() - bloch).eval());

  // the explicit pair against its sigma expansion
  const auto pair = bloch_frame_pair(z);
  const ComplexMatrix<Scalar> phi_expected =
      Scalar(2) * (y[0] * pauli<Scalar>(3).matrix() - y[2] * pauli<Scalar>(1).matrix());
  const ComplexMatrix<Scalar> psi_expected =
      Scalar(2) * (y0 * pauli<Scalar>(2).matrix() + y[1] * pauli<Scalar>(0).matrix());
  report.frame_formula_residual =
      std::max(max_abs<Scalar>((pair.phi.matrix() - phi_expected).eval()),
               max_abs<Scalar>((pair.psi.matrix() - psi_expected).eval()));

  // unfolding identities through the exact differential of mu
  report.unfold_phi_residual = max_abs<Scalar>(
      (momentum_differential(z, phi_field).matrix() - pair.phi.matrix()).eval());
  report.unfold_psi_residual = max_abs<Scalar>(
      (momentum_differential(z, psi_field).matrix() - pair.psi.matrix()).eval());

  // J(Gamma) = Delta pointwise at z
  const auto vertical = vertical_fields<Scalar>(2);
  report.vertical_complex_residual =
      (complex_structure_matrix<Scalar>(2) * vertical.gamma.evaluate(x) - x)
          .cwiseAbs()
          .maxCoeff();

  // J(W_phi) = -W_psi through the fibration: mu_*(J X_2) = psi
  const RealVector<Scalar> jx2 =
      complex_structure_matrix<Scalar>(2) * frame.field(2).evaluate(x);
  report.complex_pushforward_residual = max_abs<Scalar>(
      (momentum_differential(z, jx2).matrix() - pair.psi.matrix()).eval());

  return report;
}

/// Unit state with a prescribed Bloch point: project_point of the result
/// returns y again.
template <typename Scalar>
HilbertPoint<Scalar> state_from_bloch(const RealVector<Scalar>& y) {
  if (y.size() != 3) throw std::invalid_argument("state_from_bloch: point must be 3d");
  const RealVector<Scalar> n = (Scalar(2) * y).eval();  // unit Bloch vector
  const Scalar theta = std::acos(std::clamp(n[2], Scalar(-1), Scalar(1)));
  const Scalar phi = std::atan2(n[1], n[0]);
  ComplexVector<Scalar> z(2);
  z[0] = std::complex<Scalar>(std::cos(theta / Scalar(2)), 0);
  z[1] = std::polar(std::sin(theta / Scalar(2)), phi);
  return HilbertPoint<Scalar>::from_complex(z);
}

/// Maximum deviation between the reduction-route metric on S^2 and the
/// unfolding-route orbit metric, over seeded random tangent pairs at the
/// Bloch point of z. Requires ||z|| = 1.
template <typename Scalar>
Scalar fubini_study_compare(const HilbertPoint<Scalar>& z, int pairs = 32,
                            std::uint64_t seed = 7) {
  if (z.dim() != 2) throw std::invalid_argument("fubini_study_compare: only defined for N = 2");
  if (std::abs(z.norm_squared() - Scalar(1)) > Scalar(1e-9))
    throw std::invalid_argument("fubini_study_compare: z must have unit norm");

  const SphereKaehler<Scalar> sphere;
  const OrbitKaehler<Scalar> orbit(build_orbit_frame(z));
  const RealVector<Scalar> y = project_point(z).y;
  const RealMatrix<Scalar> projector = sphere.tangent_projector(y);
  const auto basis = hermitian_basis<Scalar>(2);

  const auto tangent_label = [&](const RealVector<Scalar>& u) {
    ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(2, 2);
    for (int k = 0; k < 3; ++k) m += u[k] * basis[static_cast<std::size_t>(k + 1)].matrix();
    return HermitianMatrix<Scalar>(m);
  };

  Rng<Scalar> rng(seed, /*stream=*/0xf5c0ULL);
  Scalar worst = 0;
  for (int trial = 0; trial < pairs; ++trial) {
    const RealVector<Scalar> u = (projector * rng.gaussian_vector(3)).eval();
    const RealVector<Scalar> v = (projector * rng.gaussian_vector(3)).eval();
    const Scalar reduction_value = sphere.metric(y, u, v);
    const Scalar unfolding_value = orbit.metric(tangent_label(u), tangent_label(v));
    worst = std::max(worst, std::abs(reduction_value - unfolding_value));
  }
  return worst;
}

}  // namespace qgeom
