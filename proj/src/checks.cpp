#include "qgeom/checks.hpp"

#include <algorithm>
#include <cmath>

#include "qgeom/hopf.hpp"
#include "qgeom/kahler.hpp"
#include "qgeom/momentum.hpp"

namespace qgeom::verify {

void ErrorAccumulator::add_pair(double lhs, double rhs) {
  const double abs_err = std::abs(lhs - rhs);
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  max_abs_ = std::max(max_abs_, abs_err);
  max_rel_ = std::max(max_rel_, abs_err / scale);
}

void ErrorAccumulator::add_residual(double abs_err, double scale) {
  max_abs_ = std::max(max_abs_, abs_err);
  max_rel_ = std::max(max_rel_, abs_err / std::max(1.0, scale));
}

namespace {

using Rngd = Rng<double>;
using Point = HilbertPoint<double>;
using Herm = HermitianMatrix<double>;
using Field = LinearVectorField<double>;
using Mat = RealMatrix<double>;
using Vec = RealVector<double>;
using CMat = ComplexMatrix<double>;
using CVec = ComplexVector<double>;

Rngd trial_rng(const RunConfig& cfg, std::uint64_t stream, int trial) {
  return Rngd(cfg.seed, stream, static_cast<std::uint64_t>(trial));
}

/// Gaussian chart point bounded away from the origin.
Point random_point(Rngd& rng, Eigen::Index n) {
  Vec x = rng.gaussian_vector(2 * n);
  while (x.norm() < 0.25) x = rng.gaussian_vector(2 * n);
  return Point(std::move(x));
}

Point haar_unit_point(Rngd& rng, Eigen::Index n) {
  return Point::from_complex(rng.unit_vector(n));
}

double entrywise_error(const Mat& a, const Mat& b) { return max_abs<double>((a - b).eval()); }
double entrywise_error(const CMat& a, const CMat& b) { return max_abs<double>((a - b).eval()); }

Vec sphere_tangent(Rngd& rng, const SphereKaehler<double>& sphere, const Vec& y) {
  return sphere.tangent_projector(y) * rng.gaussian_vector(3);
}

Vec random_bloch_point(Rngd& rng) {
  Vec y = rng.gaussian_vector(3);
  while (y.norm() < 1e-3) y = rng.gaussian_vector(3);
  return (0.5 * y / y.norm()).eval();
}

// ---------------------------------------------------------------------------
// kahler suite
// ---------------------------------------------------------------------------

int check_compatibility(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  const auto canon = canonical_structures<double>(n);
  const Mat& j = canon.complex_structure.matrix();
  const Mat& omega = canon.symplectic.matrix();
  const Mat eye = Mat::Identity(2 * n, 2 * n);
  acc.add_residual(entrywise_error(j.transpose(), omega));           // g(Ju,v) = omega(u,v)
  acc.add_residual(entrywise_error(j.transpose() * j, eye));         // g(Ju,Jv) = g(u,v)
  acc.add_residual(entrywise_error(j.transpose() * omega * j, omega));
  return 1;
}

int check_complex_square(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  const Mat j = complex_structure_matrix<double>(n);
  acc.add_residual(entrywise_error(j * j, (-Mat::Identity(2 * n, 2 * n)).eval()));
  return 1;
}

int check_structure_inverses(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  const auto canon = canonical_structures<double>(n);
  const Mat eye = Mat::Identity(2 * n, 2 * n);
  acc.add_residual(entrywise_error(canon.cometric.matrix() * canon.metric.matrix(), eye));
  // Lambda omega = -I with this sign convention
  acc.add_residual(
      entrywise_error(canon.poisson.matrix() * canon.symplectic.matrix(), (-eye).eval()));
  return 1;
}

int check_hermitian_block(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  const auto canon = canonical_structures<double>(n);
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 10, t);
    const Herm h(rng.gue_matrix(n));
    const Field w = hermitian_field(h);
    const double scale = std::max(1.0, max_abs<double>(w.matrix()));
    acc.add_residual(w.block_structure_residual(), scale);
    acc.add_residual(max_abs<double>(lie_derivative(w, canon.metric).matrix()), scale);
    acc.add_residual(max_abs<double>(lie_derivative(w, canon.symplectic).matrix()), scale);
    acc.add_residual(max_abs<double>(lie_derivative(w, canon.complex_structure).matrix()), scale);
  }
  return cfg.trials;
}

int check_unitary_flags(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 11, t);
    const auto hermitian_flags = check_unitary_conditions(hermitian_field(Herm(rng.gue_matrix(n))));
    acc.add_residual(hermitian_flags.all() ? 0.0 : 1.0);
    const Field generic(rng.gaussian_matrix(2 * n, 2 * n));
    const auto generic_flags = check_unitary_conditions(generic);
    acc.add_residual((generic_flags.complex_and_metric || generic_flags.complex_and_symplectic ||
                      generic_flags.metric_and_symplectic)
                         ? 1.0
                         : 0.0);
  }
  // the dilation generator preserves J but neither g nor omega
  const auto euler_flags =
      check_unitary_conditions(Field(Mat::Identity(2 * n, 2 * n)));
  acc.add_residual((euler_flags.complex_and_metric || euler_flags.complex_and_symplectic ||
                    euler_flags.metric_and_symplectic)
                       ? 1.0
                       : 0.0);
  return cfg.trials;
}

int check_bracket(const RunConfig& cfg, ErrorAccumulator& acc, bool omega_side) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, omega_side ? 12 : 13, t);
    const Herm h1(rng.gue_matrix(n));
    const Herm h2(rng.gue_matrix(n));
    const Point z = random_point(rng, n);
    const auto values = bracket_identities(h1, h2, z);
    if (omega_side)
      acc.add_pair(values.lhs_omega, values.rhs_omega);
    else
      acc.add_pair(values.lhs_metric, values.rhs_metric);
  }
  return cfg.trials;
}

int check_algebra_dimension(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  const auto basis = hermitian_basis<double>(n);
  // H -> W(H) is injective: H reconstructs exactly from the W blocks, so the
  // N^2 basis fields stay independent.
  for (const auto& h : basis) {
    const Mat w = hermitian_field(h).matrix();
    const CMat rebuilt =
        w.topRightCorner(n, n).cast<std::complex<double>>() +
        std::complex<double>(0, 1) * w.topLeftCorner(n, n).cast<std::complex<double>>();
    acc.add_residual(entrywise_error(rebuilt, h.matrix()));
  }
  // brute-force rank confirmation at desk-scale dimensions
  if (n <= 12) {
    Mat stacked(static_cast<Eigen::Index>(basis.size()), 4 * n * n);
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
      const Mat w = hermitian_field(basis[alpha]).matrix();
      stacked.row(static_cast<Eigen::Index>(alpha)) =
          Eigen::Map<const Vec>(w.data(), w.size()).transpose();
    }
    Eigen::ColPivHouseholderQR<Mat> qr(stacked);
    qr.setThreshold(1e-10);
    acc.add_residual(std::abs(static_cast<double>(qr.rank()) - static_cast<double>(n * n)));
  }
  return 1;
}

int check_flow_norm(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  auto rng = trial_rng(cfg, 14, 0);
  const Herm h(rng.gue_matrix(n));
  const Point z0 = random_point(rng, n);
  const double norm0 = z0.norm_squared();
  const int samples = std::max(cfg.trials, 10);
  for (int i = 0; i <= samples; ++i) {
    const double t = 10.0 * i / samples;
    acc.add_residual(std::abs(schrodinger_flow(h, z0, t).norm_squared() - norm0), norm0);
  }
  return samples;
}

int check_flow_compose(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 15, t);
    const Herm h(rng.gue_matrix(n));
    const Point z0 = random_point(rng, n);
    const double t1 = rng.uniform(-3.0, 3.0);
    const double t2 = rng.uniform(-3.0, 3.0);
    const Point direct = schrodinger_flow(h, z0, t1 + t2);
    const Point chained = schrodinger_flow(h, schrodinger_flow(h, z0, t1), t2);
    acc.add_residual((direct.coords() - chained.coords()).cwiseAbs().maxCoeff(), z0.norm());
  }
  return cfg.trials;
}

int check_flow_unitary(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 16, t);
    const auto flags = check_unitary_conditions(hermitian_field(Herm(rng.gue_matrix(n))));
    acc.add_residual(flags.all() ? 0.0 : 1.0);
  }
  return cfg.trials;
}

// ---------------------------------------------------------------------------
// reduction suite (N = 2)
// ---------------------------------------------------------------------------

int check_vertical_pair(const RunConfig& cfg, ErrorAccumulator& acc) {
  const auto vertical = vertical_fields<double>(2);
  acc.add_residual(entrywise_error(vertical.delta.matrix(), Mat::Identity(4, 4)));
  acc.add_residual(
      entrywise_error(vertical.gamma.matrix(), (-complex_structure_matrix<double>(2)).eval()));
  acc.add_residual(max_abs<double>((vertical.delta.matrix() * vertical.gamma.matrix() -
                                    vertical.gamma.matrix() * vertical.delta.matrix())
                                       .eval()));
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 20, t);
    const Point z = random_point(rng, 2);
    acc.add_pair(hamiltonian_function(Herm::identity(2), z), z.norm_squared() / 2.0);
  }
  return cfg.trials;
}

int check_frame_orthogonality(const RunConfig& cfg, ErrorAccumulator& acc) {
  const PauliFrame<double> frame;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 21, t);
    const Point z = random_point(rng, 2);
    const Vec x = z.coords();
    const double two_ygamma = z.norm_squared();
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const double expected = j == k ? two_ygamma : 0.0;
        acc.add_pair(frame.field(j).evaluate(x).dot(frame.field(k).evaluate(x)), expected);
      }
      acc.add_pair(x.dot(frame.field(j).evaluate(x)), 0.0);
    }
    acc.add_pair(x.dot(x), two_ygamma);
  }
  return cfg.trials;
}

int check_sphere_radius(const RunConfig& cfg, ErrorAccumulator& acc) {
  const PauliFrame<double> frame;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 22, t);
    const Point z = random_point(rng, 2);
    const double ygamma = frame.y_gamma(z);
    acc.add_pair(ygamma * ygamma, frame.y_vector(z).squaredNorm());
  }
  return cfg.trials;
}

int check_frame_commutators(const RunConfig&, ErrorAccumulator& acc) {
  const PauliFrame<double> frame;
  const auto vertical = vertical_fields<double>(2);
  for (int j = 1; j <= 3; ++j) {
    const Mat& w = frame.field(j).matrix();
    const Mat& g = vertical.gamma.matrix();
    acc.add_residual(max_abs<double>((w * g - g * w).eval()));
  }
  return 1;
}

int check_projectable_fields(const RunConfig& cfg, ErrorAccumulator& acc) {
  const auto vertical = vertical_fields<double>(2);
  const PauliFrame<double> frame;
  for (int j = 1; j <= 3; ++j)
    acc.add_residual(is_projectable_field(frame.field(j), vertical) ? 0.0 : 1.0);
  acc.add_residual(is_projectable_field(vertical.delta, vertical) ? 0.0 : 1.0);
  acc.add_residual(is_projectable_field(vertical.gamma, vertical) ? 0.0 : 1.0);
  int failures_detected = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 23, t);
    if (!is_projectable_field(Field(rng.gaussian_matrix(4, 4)), vertical)) ++failures_detected;
  }
  // generic fields are almost surely not projectable
  acc.add_residual(failures_detected == cfg.trials ? 0.0 : 1.0);
  return cfg.trials;
}

int check_projectable_dichotomy(const RunConfig&, ErrorAccumulator& acc) {
  const auto vertical = vertical_fields<double>(2);
  const auto canon = canonical_structures<double>(2);
  const RescaledTensors<double> rescaled(2);
  acc.add_residual(is_projectable_tensor(canon.cometric, vertical) ? 1.0 : 0.0);
  acc.add_residual(is_projectable_tensor(canon.poisson, vertical) ? 1.0 : 0.0);
  acc.add_residual(is_projectable_tensor(rescaled.cometric_field(), vertical) ? 0.0 : 1.0);
  acc.add_residual(is_projectable_tensor(rescaled.poisson_field(), vertical) ? 0.0 : 1.0);
  const Tensor2<double> zero(Mat::Zero(4, 4), Variance::contravariant);
  acc.add_residual(is_projectable_tensor(zero, vertical) ? 0.0 : 1.0);
  return 5;
}

int check_split(const RunConfig& cfg, ErrorAccumulator& acc, int which) {
  const PauliFrame<double> frame;
  const RescaledTensors<double> rescaled(2);
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, static_cast<std::uint64_t>(24 + which), t);
    const Point z = random_point(rng, 2);
    const double scale = std::max(1.0, z.norm_squared());
    Mat lhs, rhs;
    switch (which) {
      case 0:
        lhs = rescaled.cometric_at(z).matrix();
        rhs = cometric_frame_decomposition(frame, z);
        break;
      case 1:
        lhs = rescaled.poisson_at(z).matrix();
        rhs = poisson_frame_decomposition(frame, z);
        break;
      default:
        lhs = rescaled.complex_structure_at(z).matrix();
        rhs = complex_structure_frame_decomposition(frame, z);
        break;
    }
    acc.add_residual(entrywise_error(lhs, rhs), scale * scale);
  }
  return cfg.trials;
}

int check_symplectic_duality(const RunConfig& cfg, ErrorAccumulator& acc) {
  const PauliFrame<double> frame;
  const Connection1Form<double> theta{2};
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 27, t);
    const Point z = random_point(rng, 2);
    const Vec x = z.coords();
    acc.add_residual(
        (symplectic_dual<double>(x) - theta.covector_at(x)).cwiseAbs().maxCoeff(), z.norm());
    for (int k = 1; k <= 3; ++k) {
      const Vec dual = symplectic_dual<double>(frame.field(k).evaluate(x).eval());
      const Vec grad = quadratic_form_matrix(frame.sigma(k)) * x;
      acc.add_residual((dual + grad).cwiseAbs().maxCoeff(), z.norm());
    }
    acc.add_pair(theta.pair(x, vertical_fields<double>(2).gamma.evaluate(x)), z.norm_squared());
  }
  return cfg.trials;
}

int check_gauge_invariance(const RunConfig& cfg, ErrorAccumulator& acc) {
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 28, t);
    const Point z = random_point(rng, 2);
    const Vec base = project_point(z).y;
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double stretch = rng.uniform(0.25, 4.0);
    const Point moved = z.complex_scaled(std::polar(stretch, angle));
    acc.add_residual((project_point(moved).y - base).cwiseAbs().maxCoeff());
  }
  return cfg.trials;
}

int check_projection_pushforward(const RunConfig& cfg, ErrorAccumulator& acc) {
  const PauliFrame<double> frame;
  const auto vertical = vertical_fields<double>(2);
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 29, t);
    const Point z = random_point(rng, 2);
    const Vec x = z.coords();
    const Vec y = project_point(z).y;
    for (int j = 1; j <= 3; ++j) {
      const Vec pushed = pushforward_field_value(z, frame.field(j).evaluate(x).eval());
      acc.add_residual((pushed - sphere_rotation_field(j, y)).cwiseAbs().maxCoeff());
    }
    acc.add_residual(
        pushforward_field_value(z, vertical.delta.evaluate(x).eval()).cwiseAbs().maxCoeff());
    acc.add_residual(
        pushforward_field_value(z, vertical.gamma.evaluate(x).eval()).cwiseAbs().maxCoeff());
    Vec weighted = Vec::Zero(3);
    for (int j = 1; j <= 3; ++j) weighted += y[j - 1] * sphere_rotation_field(j, y);
    acc.add_residual(weighted.cwiseAbs().maxCoeff());
  }
  return cfg.trials;
}

int check_sphere_tensors(const RunConfig& cfg, ErrorAccumulator& acc) {
  const SphereKaehler<double> sphere;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 30, t);
    const Vec y = random_bloch_point(rng);
    Mat sum_rr = Mat::Zero(3, 3);
    for (int j = 1; j <= 3; ++j) {
      const Vec r = sphere_rotation_field(j, y);
      sum_rr += r * r.transpose();
    }
    acc.add_residual(entrywise_error(sum_rr, sphere.tangent_projector(y)));
    Mat eps_rr = Mat::Zero(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          if (const int e = levi_civita3(a, b, c); e != 0)
            eps_rr += double(e) * y[a] *
                      (sphere_rotation_field(b + 1, y) * sphere_rotation_field(c + 1, y).transpose());
    acc.add_residual(entrywise_error((2.0 * eps_rr).eval(), sphere.levi_civita_matrix(y)));
  }
  return cfg.trials;
}

int check_sphere_compatibility(const RunConfig& cfg, ErrorAccumulator& acc) {
  const SphereKaehler<double> sphere;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 31, t);
    const Vec y = random_bloch_point(rng);
    const Vec u = sphere_tangent(rng, sphere, y);
    const Vec v = sphere_tangent(rng, sphere, y);
    const Mat j = sphere.complex_structure(y);
    acc.add_pair(sphere.metric(y, (j * u).eval(), v), sphere.two_form(y, u, v));
    acc.add_pair(sphere.metric(y, (j * u).eval(), (j * v).eval()), sphere.metric(y, u, v));
    acc.add_pair(sphere.two_form(y, (j * u).eval(), (j * v).eval()), sphere.two_form(y, u, v));
  }
  return cfg.trials;
}

int check_sphere_complex_square(const RunConfig& cfg, ErrorAccumulator& acc) {
  const SphereKaehler<double> sphere;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 32, t);
    const Vec y = random_bloch_point(rng);
    const Vec u = sphere_tangent(rng, sphere, y);
    const Mat j = sphere.complex_structure(y);
    acc.add_residual(((j * (j * u).eval()).eval() + u).cwiseAbs().maxCoeff(), u.norm());
  }
  return cfg.trials;
}

int check_fubini_study_restriction(const RunConfig& cfg, ErrorAccumulator& acc) {
  const SphereKaehler<double> sphere;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 33, t);
    const Vec y = random_bloch_point(rng);
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const Vec rj = sphere_rotation_field(j, y);
        const Vec rk = sphere_rotation_field(k, y);
        acc.add_pair(sphere.metric(y, rj, rk), rj.dot(rk));
      }
  }
  return cfg.trials;
}

int check_sphere_closed(const RunConfig& cfg, ErrorAccumulator& acc) {
  const SphereKaehler<double> sphere;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 34, t);
    const Vec y = random_bloch_point(rng);
    const Vec u = sphere_tangent(rng, sphere, y);
    const Vec v = sphere_tangent(rng, sphere, y);
    const Vec w = sphere_tangent(rng, sphere, y);
    acc.add_residual(std::abs(sphere.exterior_derivative_fd(y, u, v, w)));
  }
  return cfg.trials;
}

// ---------------------------------------------------------------------------
// unfolding suite
// ---------------------------------------------------------------------------

int check_basis_orthonormal(const RunConfig& cfg, ErrorAccumulator& acc) {
  const auto basis = hermitian_basis<double>(cfg.dim);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      acc.add_pair(scalar_product(basis[a], basis[b]), a == b ? 1.0 : 0.0);
  return 1;
}

int check_pairing_bracket(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 40, t);
    const Herm a(rng.gue_matrix(n));
    const Herm b(rng.gue_matrix(n));
    // A(hat B) is real: the imaginary part of i Tr(A (-iB))/2 vanishes
    const std::complex<double> raw =
        std::complex<double>(0, 1) * (a.matrix() * hat(b).matrix()).trace() / 2.0;
    acc.add_residual(std::abs(raw.imag()), std::abs(raw.real()));
    acc.add_pair(dual_pairing(a, hat(b)), scalar_product(a, b));
    const Herm brak = u_star_bracket(a, b);
    acc.add_residual(max_abs<double>((brak.matrix() - brak.matrix().adjoint()).eval()),
                     max_abs<double>(brak.matrix()));
    acc.add_residual(max_abs<double>(u_star_bracket(a, a).matrix()),
                     max_abs<double>(a.matrix()));
  }
  if (cfg.dim == 2) {
    const Herm brak12 = u_star_bracket(pauli<double>(1), pauli<double>(2));
    acc.add_residual(entrywise_error(brak12.matrix(), (2.0 * pauli<double>(3).matrix()).eval()));
  }
  return cfg.trials;
}

int check_momentum_projector(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 41, t);
    const Point z = random_point(rng, n);
    const CMat mu = momentum_map(z).value.matrix();
    const double n2 = z.norm_squared();
    acc.add_residual(entrywise_error((mu * mu).eval(), (n2 * mu).eval()), n2 * n2);
    acc.add_pair(mu.trace().real(), n2);
  }
  return cfg.trials;
}

int check_momentum_coords(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  const auto basis = hermitian_basis<double>(n);
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 42, t);
    const Point z = random_point(rng, n);
    const auto mu = momentum_map(z);
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha)
      acc.add_pair(mu.coords[static_cast<Eigen::Index>(alpha)],
                   hamiltonian_function(basis[alpha], z));
    acc.add_residual(entrywise_error(mu.reconstruct().matrix(), mu.value.matrix()),
                     z.norm_squared());
  }
  return cfg.trials;
}

int check_equivariance(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 43, t);
    const Point z = random_point(rng, n);
    const CMat u = rng.haar_unitary(n);
    const CMat lhs = momentum_map(Point::from_complex((u * z.complex_vector()).eval())).value.matrix();
    const CMat rhs = u * momentum_map(z).value.matrix() * u.adjoint();
    acc.add_residual(entrywise_error(lhs, rhs), z.norm_squared());
  }
  return cfg.trials;
}

int check_stabilizer(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  if (n < 2) return 0;  // every unitary stabilises a single ray
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 44, t);
    const Point z = haar_unit_point(rng, n);
    const CMat mu = momentum_map(z).value.matrix();
    const CVec zv = z.complex_vector();

    // commuting: distinct phases on the ray and on its complement
    const CMat proj = zv * zv.adjoint();
    const CMat comm_u = std::polar(1.0, rng.uniform(0.0, 6.28)) * proj +
                        std::polar(1.0, rng.uniform(0.0, 6.28)) * (CMat::Identity(n, n) - proj);
    acc.add_residual(max_abs<double>((comm_u * mu - mu * comm_u).eval()));
    const CMat moved = momentum_map(Point::from_complex((comm_u * zv).eval())).value.matrix();
    acc.add_residual(entrywise_error(moved, mu));

    // non-commuting: a Haar unitary almost surely moves the ray
    const CMat hu = rng.haar_unitary(n);
    const bool commutes = max_abs<double>((hu * mu - mu * hu).eval()) <= 1e-8;
    const CMat moved2 = momentum_map(Point::from_complex((hu * zv).eval())).value.matrix();
    const bool fixes = entrywise_error(moved2, mu) <= 1e-8;
    acc.add_residual(commutes == fixes ? 0.0 : 1.0);
  }
  return cfg.trials;
}

int check_frame_rotation(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 45, t);
    const Point z = random_point(rng, n);
    const auto frame = build_orbit_frame(z);
    const CMat mu = momentum_map(z).value.matrix();
    const double n2 = frame.norm_sq;
    for (Eigen::Index a = 0; a < frame.count(); ++a) {
      const auto& phi = frame.phis[static_cast<std::size_t>(a)];
      const auto& psi = frame.psis[static_cast<std::size_t>(a)];
      acc.add_residual(
          entrywise_error(u_star_bracket(phi, Herm(mu)).matrix(), (n2 * psi.matrix()).eval()),
          n2 * n2);
      acc.add_residual(
          entrywise_error(u_star_bracket(psi, Herm(mu)).matrix(), (-n2 * phi.matrix()).eval()),
          n2 * n2);
    }
  }
  return cfg.trials;
}

int check_frame_gram(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 46, t);
    const Point z = random_point(rng, n);
    const auto frame = build_orbit_frame(z);
    const double n2 = frame.norm_sq;
    for (Eigen::Index a = 0; a < frame.count(); ++a)
      for (Eigen::Index b = 0; b < frame.count(); ++b) {
        const double d = a == b ? n2 : 0.0;
        const auto& pa = frame.phis[static_cast<std::size_t>(a)];
        const auto& pb = frame.phis[static_cast<std::size_t>(b)];
        const auto& sa = frame.psis[static_cast<std::size_t>(a)];
        const auto& sb = frame.psis[static_cast<std::size_t>(b)];
        acc.add_residual(std::abs(scalar_product(pa, pb) - d), n2);
        acc.add_residual(std::abs(scalar_product(sa, sb) - d), n2);
        acc.add_residual(std::abs(scalar_product(pa, sb)), n2);
      }
  }
  return cfg.trials;
}

int check_frame_duality(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 47, t);
    const Point z = random_point(rng, n);
    const auto frame = build_orbit_frame(z);
    const Herm mu(momentum_map(z).value.matrix());
    const double n4 = frame.norm_sq * frame.norm_sq;
    for (Eigen::Index a = 0; a < frame.count(); ++a)
      for (Eigen::Index b = 0; b < frame.count(); ++b) {
        const double d = a == b ? 1.0 : 0.0;
        const auto& pa = frame.phis[static_cast<std::size_t>(a)];
        const auto& pb = frame.phis[static_cast<std::size_t>(b)];
        const auto& sa = frame.psis[static_cast<std::size_t>(a)];
        const auto& sb = frame.psis[static_cast<std::size_t>(b)];
        const auto gen_phi = u_star_bracket(pb, mu);
        const auto gen_psi = u_star_bracket(sb, mu);
        // full-trace duality values: the psi-phi block is +2||z||^4, the
        // phi-psi block is -2||z||^4, like-blocks vanish
        acc.add_pair((sa.matrix() * gen_phi.matrix()).trace().real(), 2.0 * n4 * d);
        acc.add_pair((pa.matrix() * gen_psi.matrix()).trace().real(), -2.0 * n4 * d);
        acc.add_residual(std::abs((pa.matrix() * gen_phi.matrix()).trace().real()), n4);
        acc.add_residual(std::abs((sa.matrix() * gen_psi.matrix()).trace().real()), n4);
      }
  }
  return cfg.trials;
}

int check_frame_span(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < std::min(cfg.trials, 20); ++t) {
    auto rng = trial_rng(cfg, 48, t);
    const Point z = random_point(rng, n);
    const auto frame = build_orbit_frame(z);
    const Eigen::Index m = frame.count();
    if (m == 0) continue;
    Mat stacked(2 * m, 2 * n * n);
    const auto flatten = [n](const Herm& h, Mat& rows, Eigen::Index r) {
      Eigen::Index c = 0;
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          rows(r, c++) = h.matrix()(i, j).real();
          rows(r, c++) = h.matrix()(i, j).imag();
        }
    };
    for (Eigen::Index a = 0; a < m; ++a) {
      flatten(frame.phis[static_cast<std::size_t>(a)], stacked, a);
      flatten(frame.psis[static_cast<std::size_t>(a)], stacked, m + a);
    }
    Eigen::ColPivHouseholderQR<Mat> qr(stacked);
    qr.setThreshold(1e-10);
    acc.add_residual(std::abs(static_cast<double>(qr.rank()) - static_cast<double>(2 * m)));
    // orthogonality to mu(z) and to the identity (numerically confirmed: the
    // frame is trace-free and Tr(frame * mu) = 0)
    const Herm mu(momentum_map(z).value.matrix());
    const double scale = frame.norm_sq;
    for (Eigen::Index a = 0; a < m; ++a) {
      const auto& phi = frame.phis[static_cast<std::size_t>(a)];
      const auto& psi = frame.psis[static_cast<std::size_t>(a)];
      acc.add_residual(std::abs(scalar_product(phi, mu)), scale * scale);
      acc.add_residual(std::abs(scalar_product(psi, mu)), scale * scale);
      acc.add_residual(std::abs(phi.trace()), scale);
      acc.add_residual(std::abs(psi.trace()), scale);
    }
  }
  return std::min(cfg.trials, 20);
}

int check_pushforward_blocks(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 49, t);
    const Point z = random_point(rng, n);
    const auto frame = build_orbit_frame(z);
    const double n4 = frame.norm_sq * frame.norm_sq;
    for (Eigen::Index a = 0; a < frame.count(); ++a)
      for (Eigen::Index b = 0; b < frame.count(); ++b) {
        const double d = a == b ? 1.0 : 0.0;
        const auto& pa = frame.phis[static_cast<std::size_t>(a)];
        const auto& pb = frame.phis[static_cast<std::size_t>(b)];
        const auto& sa = frame.psis[static_cast<std::size_t>(a)];
        const auto& sb = frame.psis[static_cast<std::size_t>(b)];
        acc.add_pair(pushforward_tensors(z, pa, pb).cometric, n4 * d);
        acc.add_pair(pushforward_tensors(z, sa, sb).cometric, n4 * d);
        acc.add_residual(std::abs(pushforward_tensors(z, pa, sb).cometric), n4);
        acc.add_pair(pushforward_tensors(z, pa, sb).poisson, -n4 * d);
        acc.add_residual(std::abs(pushforward_tensors(z, pa, pb).poisson), n4);
        acc.add_residual(std::abs(pushforward_tensors(z, sa, sb).poisson), n4);
      }
  }
  return cfg.trials;
}

int check_orbit_metric(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 50, t);
    const Point z = random_point(rng, n);
    const OrbitKaehler<double> orbit(build_orbit_frame(z));
    const Eigen::Index m = orbit.frame().count();
    if (m == 0) continue;
    acc.add_residual(entrywise_error(orbit.metric_gram(), Mat::Identity(2 * m, 2 * m)));
  }
  return cfg.trials;
}

int check_orbit_symplectic(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 51, t);
    const Point z = random_point(rng, n);
    const OrbitKaehler<double> orbit(build_orbit_frame(z));
    const Eigen::Index m = orbit.frame().count();
    if (m == 0) continue;
    Mat expected = Mat::Zero(2 * m, 2 * m);
    expected.topRightCorner(m, m) = -Mat::Identity(m, m);  // omega(phi_a, psi_b) = -delta
    expected.bottomLeftCorner(m, m) = Mat::Identity(m, m);  // omega(psi_a, phi_b) = +delta
    acc.add_residual(entrywise_error(orbit.two_form_gram(), expected));
  }
  return cfg.trials;
}

int check_orbit_complex_square(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 52, t);
    const Point z = random_point(rng, n);
    const OrbitKaehler<double> orbit(build_orbit_frame(z));
    const double n2 = z.norm_squared();
    const double n4 = n2 * n2;
    for (Eigen::Index a = 0; a < orbit.frame().count(); ++a) {
      const auto& phi = orbit.frame().phis[static_cast<std::size_t>(a)];
      const auto& psi = orbit.frame().psis[static_cast<std::size_t>(a)];
      const auto jphi = orbit.apply_complex_structure(phi);
      acc.add_residual(entrywise_error(jphi.matrix(), (-n2 * psi.matrix()).eval()), n4);
      const auto jjphi = orbit.apply_complex_structure(jphi);
      acc.add_residual(entrywise_error(jjphi.matrix(), (-n4 * phi.matrix()).eval()), n4 * n2);
      const auto jjpsi = orbit.apply_complex_structure(orbit.apply_complex_structure(psi));
      acc.add_residual(entrywise_error(jjpsi.matrix(), (-n4 * psi.matrix()).eval()), n4 * n2);
    }
  }
  return cfg.trials;
}

int check_orbit_closed(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  if (n < 2) return 0;
  const int trials = std::min(cfg.trials, 8);
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(cfg, 53, t);
    const Point z = haar_unit_point(rng, n);
    const auto frame = build_orbit_frame(z);
    const Eigen::Index m = frame.count();
    const auto pick = [&](int which) -> const Herm& {
      const Eigen::Index idx = static_cast<Eigen::Index>(rng.next_bits() % static_cast<std::uint64_t>(m));
      return which % 2 == 0 ? frame.phis[static_cast<std::size_t>(idx)]
                            : frame.psis[static_cast<std::size_t>(idx)];
    };
    acc.add_residual(
        std::abs(orbit_exterior_derivative_fd(z, pick(0), pick(1), pick(2))));
  }
  return trials;
}

int check_gauge_independence(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  for (int t = 0; t < std::min(cfg.trials, 20); ++t) {
    auto rng = trial_rng(cfg, 54, t);
    const Point z = random_point(rng, n);
    const OrbitKaehler<double> base(build_orbit_frame(z));
    const OrbitKaehler<double> rotated(build_orbit_frame(z, rng.next_bits() | 1));
    const Eigen::Index m = base.frame().count();
    if (m == 0) continue;
    acc.add_residual(entrywise_error(base.metric_gram(), rotated.metric_gram()));
    acc.add_residual(entrywise_error(base.two_form_gram(), rotated.two_form_gram()));
  }
  return std::min(cfg.trials, 20);
}

int check_tangent_dimension(const RunConfig& cfg, ErrorAccumulator& acc) {
  const Eigen::Index n = cfg.dim;
  auto rng = trial_rng(cfg, 55, 0);
  const Point z = random_point(rng, n);
  const auto frame = build_orbit_frame(z);
  acc.add_residual(std::abs(static_cast<double>(frame.count()) - static_cast<double>(n - 1)) * 2);
  return 1;
}

// ---------------------------------------------------------------------------
// crosscheck suite (N = 2)
// ---------------------------------------------------------------------------

int run_crosscheck_trials(const RunConfig& cfg, ErrorAccumulator& acc, std::uint64_t stream,
                          const std::function<void(const N2CrosscheckReport<double>&,
                                                   ErrorAccumulator&)>& eval) {
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, stream, t);
    const auto report = n2_crosscheck(haar_unit_point(rng, 2));
    eval(report, acc);
  }
  return cfg.trials;
}

int check_fubini_study(const RunConfig& cfg, ErrorAccumulator& acc) {
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg, 66, t);
    const Point z = haar_unit_point(rng, 2);
    acc.add_residual(fubini_study_compare(z, /*pairs=*/4, /*seed=*/rng.next_bits()));
  }
  return cfg.trials;
}

}  // namespace

const std::vector<CheckDefinition>& check_registry() {
  static const std::vector<CheckDefinition> registry = [] {
    std::vector<CheckDefinition> defs;
    const auto add = [&defs](std::string id, std::string identity, Suite suite,
                             ErrorMode mode, double fixed_tol,
                             std::function<int(const RunConfig&, ErrorAccumulator&)> run) {
      defs.push_back(CheckDefinition{std::move(id), std::move(identity), suite, mode, fixed_tol,
                                     std::move(run)});
    };

    // kahler
    add("kahler.compatibility",
        "g(Ju,v) = omega(u,v), g(Ju,Jv) = g(u,v), omega(Ju,Jv) = omega(u,v) as matrix identities",
        Suite::kahler, ErrorMode::absolute, 0, check_compatibility);
    add("kahler.complex_square", "J^2 = -I", Suite::kahler, ErrorMode::absolute, 0,
        check_complex_square);
    add("kahler.structure_inverses",
        "G g = I and Lambda omega = -I (contravariant inverses, fixed sign convention)",
        Suite::kahler, ErrorMode::absolute, 0, check_structure_inverses);
    add("kahler.hermitian_block",
        "fields of Hermitian H have block form [[A,B],[-B,A]] and kill g, omega, J",
        Suite::kahler, ErrorMode::relative, 0, check_hermitian_block);
    add("kahler.unitary_flags",
        "pairwise invariance flags: true for Hermitian fields, false for dilation and generic W",
        Suite::kahler, ErrorMode::absolute, 0, check_unitary_flags);
    add("kahler.bracket_omega", "omega(X_H1, X_H2) = f_{-i[H1,H2]}", Suite::kahler,
        ErrorMode::relative, 0,
        [](const RunConfig& cfg, ErrorAccumulator& acc) { return check_bracket(cfg, acc, true); });
    add("kahler.bracket_metric", "g(X_H1, X_H2) = f_{H1 H2 + H2 H1}", Suite::kahler,
        ErrorMode::relative, 0,
        [](const RunConfig& cfg, ErrorAccumulator& acc) { return check_bracket(cfg, acc, false); });
    add("kahler.algebra_dimension", "the Hermitian block fields span a real space of dimension N^2",
        Suite::kahler, ErrorMode::absolute, 0, check_algebra_dimension);
    add("kahler.flow_norm", "exp(-iHt) preserves ||z||^2 along the flow", Suite::kahler,
        ErrorMode::relative, 0, check_flow_norm);
    add("kahler.flow_compose", "flow(t1 + t2) equals flow(t2) composed with flow(t1)",
        Suite::kahler, ErrorMode::relative, 0, check_flow_compose);
    add("kahler.flow_unitary", "flow generators satisfy all pairwise invariance conditions",
        Suite::kahler, ErrorMode::absolute, 0, check_flow_unitary);

    // reduction
    add("reduction.vertical_pair",
        "Delta = identity field, Gamma = -J(Delta), [Delta, Gamma] = 0, f_I = ||z||^2/2",
        Suite::reduction, ErrorMode::relative, 0, check_vertical_pair);
    add("reduction.frame_orthogonality",
        "g(X_j, X_k) = 2 y_gamma delta_jk, g(Delta, X_j) = 0, g(Delta, Delta) = 2 y_gamma",
        Suite::reduction, ErrorMode::relative, 0, check_frame_orthogonality);
    add("reduction.sphere_radius", "y_gamma^2 = y_1^2 + y_2^2 + y_3^2", Suite::reduction,
        ErrorMode::relative, 0, check_sphere_radius);
    add("reduction.frame_commutators", "[X_j, Delta] = 0 and [X_j, Gamma] = 0", Suite::reduction,
        ErrorMode::absolute, 0, check_frame_commutators);
    add("reduction.projectable_fields",
        "X_j, Delta, Gamma are projectable; generic linear fields are not", Suite::reduction,
        ErrorMode::absolute, 0, check_projectable_fields);
    add("reduction.projectable_dichotomy",
        "G and Lambda fail projectability; ||z||^2 G and ||z||^2 Lambda pass", Suite::reduction,
        ErrorMode::absolute, 0, check_projectable_dichotomy);
    add("reduction.cometric_split", "||z||^2 G = Delta x Delta + X_j x X_j", Suite::reduction,
        ErrorMode::relative, 0,
        [](const RunConfig& cfg, ErrorAccumulator& acc) { return check_split(cfg, acc, 0); });
    add("reduction.poisson_split",
        "y_g ||z||^2 Lambda = eps_abc y_a X_b x X_c + y_g (Gamma x Delta - Delta x Gamma)",
        Suite::reduction, ErrorMode::relative, 0,
        [](const RunConfig& cfg, ErrorAccumulator& acc) { return check_split(cfg, acc, 1); });
    add("reduction.complex_split", "||z||^2 J = Delta x S(Delta) + X_k x S(X_k)", Suite::reduction,
        ErrorMode::relative, 0,
        [](const RunConfig& cfg, ErrorAccumulator& acc) { return check_split(cfg, acc, 2); });
    add("reduction.symplectic_duality",
        "S(Delta) = theta_gamma, S(X_k) = -dy_k, theta_gamma(Gamma) = ||z||^2", Suite::reduction,
        ErrorMode::relative, 0, check_symplectic_duality);
    add("reduction.gauge_invariance", "the Bloch point of u z equals that of z for all u in C_0",
        Suite::reduction, ErrorMode::absolute, 0, check_gauge_invariance);
    add("reduction.projection_pushforward",
        "pi_* X_j = R_j = 2 eps_jab y_a d/dy_b, pi_* Delta = pi_* Gamma = 0, y_j R_j = 0",
        Suite::reduction, ErrorMode::relative, 0, check_projection_pushforward);
    add("reduction.sphere_tensors",
        "sum_a R_a x R_a = I - 4 y y^T and eps_abc y_a R_b ^ R_c = L (oracle-fixed constants)",
        Suite::reduction, ErrorMode::relative, 0, check_sphere_tensors);
    add("reduction.sphere_compatibility",
        "on tangent pairs: g(Jp u, v) = w(u,v), g(Jp u, Jp v) = g(u,v), w(Jp u, Jp v) = w(u,v)",
        Suite::reduction, ErrorMode::relative, 0, check_sphere_compatibility);
    add("reduction.sphere_complex_square", "Jp^2 = -I on the tangent space of S^2",
        Suite::reduction, ErrorMode::relative, 0, check_sphere_complex_square);
    add("reduction.fubini_study_restriction",
        "the sphere metric equals the ambient Euclidean restriction (Fubini-Study form)",
        Suite::reduction, ErrorMode::relative, 0, check_fubini_study_restriction);
    add("reduction.sphere_closed",
        "d omega = 0 on S^2, finite-difference check at tolerance 1e-6", Suite::reduction,
        ErrorMode::absolute, 1e-6, check_sphere_closed);

    // unfolding
    add("unfolding.basis_orthonormal", "Tr(sigma_a sigma_b)/2 = delta_ab for the generated basis",
        Suite::unfolding, ErrorMode::absolute, 0, check_basis_orthonormal);
    add("unfolding.pairing_bracket",
        "A(hat B) = Tr(AB)/2 is real, [A,B]* is Hermitian, [s1,s2]* = 2 s3", Suite::unfolding,
        ErrorMode::relative, 0, check_pairing_bracket);
    add("unfolding.momentum_projector", "mu(z) = |z><z|: mu^2 = ||z||^2 mu and Tr mu = ||z||^2",
        Suite::unfolding, ErrorMode::relative, 0, check_momentum_projector);
    add("unfolding.momentum_coords",
        "y_alpha = Tr(mu sigma_alpha)/2 = f_{sigma_alpha}(z), and mu reconstructs from y",
        Suite::unfolding, ErrorMode::relative, 0, check_momentum_coords);
    add("unfolding.equivariance", "mu(Uz) = U mu(z) U+ for Haar-random U", Suite::unfolding,
        ErrorMode::relative, 0, check_equivariance);
    add("unfolding.stabilizer", "mu(Uz) = mu(z) exactly when [U, mu(z)] = 0 (both directions)",
        Suite::unfolding, ErrorMode::absolute, 0, check_stabilizer);
    add("unfolding.frame_rotation",
        "[phi_a, mu]* = ||z||^2 psi_a and [psi_a, mu]* = -||z||^2 phi_a", Suite::unfolding,
        ErrorMode::relative, 0, check_frame_rotation);
    add("unfolding.frame_gram",
        "<phi_a,phi_b> = <psi_a,psi_b> = ||z||^2 delta_ab and <phi_a,psi_b> = 0", Suite::unfolding,
        ErrorMode::relative, 0, check_frame_gram);
    add("unfolding.frame_duality",
        "Tr(psi_a [phi_b,mu]*) = 2||z||^4 delta_ab, Tr(phi_a [psi_b,mu]*) = -2||z||^4 delta_ab",
        Suite::unfolding, ErrorMode::relative, 0, check_frame_duality);
    add("unfolding.frame_span",
        "the 2(N-1) frame matrices are independent and orthogonal to mu(z) and I",
        Suite::unfolding, ErrorMode::relative, 0, check_frame_span);
    add("unfolding.pushforward_blocks",
        "pushed cometric blocks ||z||^4 delta, pushed Poisson cross block -||z||^4 delta",
        Suite::unfolding, ErrorMode::relative, 0, check_pushforward_blocks);
    add("unfolding.orbit_metric", "inverted metric Gram on the frame equals the identity",
        Suite::unfolding, ErrorMode::relative, 0, check_orbit_metric);
    add("unfolding.orbit_symplectic",
        "inverted two-form: w(psi_a, phi_b) = delta_ab and like blocks vanish", Suite::unfolding,
        ErrorMode::relative, 0, check_orbit_symplectic);
    add("unfolding.orbit_complex_square",
        "J(phi_a) = -||z||^2 psi_a and J^2 = -||z||^4 on the frame span", Suite::unfolding,
        ErrorMode::relative, 0, check_orbit_complex_square);
    add("unfolding.orbit_closed",
        "d omega = 0 on the orbit, finite-difference check at tolerance 1e-6", Suite::unfolding,
        ErrorMode::absolute, 1e-6, check_orbit_closed);
    add("unfolding.gauge_independence",
        "metric and two-form Grams are invariant under unitary rotations of the complement",
        Suite::unfolding, ErrorMode::relative, 0, check_gauge_independence);
    add("unfolding.tangent_dimension", "the orbit tangent space has real dimension 2(N-1)",
        Suite::unfolding, ErrorMode::absolute, 0, check_tangent_dimension);

    // crosscheck
    add("crosscheck.momentum_bloch", "mu(z) = y_0 s_0 + y_k s_k at unit z", Suite::crosscheck,
        ErrorMode::relative, 0, [](const RunConfig& cfg, ErrorAccumulator& acc) {
          return run_crosscheck_trials(cfg, acc, 60,
                                       [](const N2CrosscheckReport<double>& r, ErrorAccumulator& a) {
                                         a.add_residual(r.momentum_coord_residual);
                                       });
        });
    add("crosscheck.frame_bloch", "phi = 2(y_1 s_3 - y_3 s_1) and psi = 2(y_0 s_2 + y_2 s_0)",
        Suite::crosscheck, ErrorMode::relative, 0,
        [](const RunConfig& cfg, ErrorAccumulator& acc) {
          return run_crosscheck_trials(cfg, acc, 61,
                                       [](const N2CrosscheckReport<double>& r, ErrorAccumulator& a) {
                                         a.add_residual(r.frame_formula_residual);
                                       });
        });
    add("crosscheck.unfold_phi", "mu_*(-X_2) = phi", Suite::crosscheck, ErrorMode::relative, 0,
        [](const RunConfig& cfg, ErrorAccumulator& acc) {
          return run_crosscheck_trials(cfg, acc, 62,
                                       [](const N2CrosscheckReport<double>& r, ErrorAccumulator& a) {
                                         a.add_residual(r.unfold_phi_residual);
                                       });
        });
    add("crosscheck.unfold_psi", "mu_*(2(y_2 Delta - y_3 X_1 + y_1 X_3)) = psi", Suite::crosscheck,
        ErrorMode::relative, 0, [](const RunConfig& cfg, ErrorAccumulator& acc) {
          return run_crosscheck_trials(cfg, acc, 63,
                                       [](const N2CrosscheckReport<double>& r, ErrorAccumulator& a) {
                                         a.add_residual(r.unfold_psi_residual);
                                       });
        });
    add("crosscheck.metric_values",
        "g on the unfolding fields gives (1, 1, 0) at every unit z", Suite::crosscheck,
        ErrorMode::relative, 0, [](const RunConfig& cfg, ErrorAccumulator& acc) {
          return run_crosscheck_trials(cfg, acc, 64,
                                       [](const N2CrosscheckReport<double>& r, ErrorAccumulator& a) {
                                         a.add_pair(r.metric_phi, 1.0);
                                         a.add_pair(r.metric_psi, 1.0);
                                         a.add_pair(r.metric_cross, 0.0);
                                       });
        });
    add("crosscheck.symplectic_value", "omega on the unfolding pair gives 1 at every unit z",
        Suite::crosscheck, ErrorMode::relative, 0,
        [](const RunConfig& cfg, ErrorAccumulator& acc) {
          return run_crosscheck_trials(cfg, acc, 65,
                                       [](const N2CrosscheckReport<double>& r, ErrorAccumulator& a) {
                                         a.add_pair(r.symplectic_mixed, 1.0);
                                       });
        });
    add("crosscheck.complex_transport",
        "J(Gamma) = Delta and mu_*(J X_2) = psi, i.e. J(W_phi) = -W_psi through the fibration",
        Suite::crosscheck, ErrorMode::relative, 0,
        [](const RunConfig& cfg, ErrorAccumulator& acc) {
          return run_crosscheck_trials(cfg, acc, 67,
                                       [](const N2CrosscheckReport<double>& r, ErrorAccumulator& a) {
                                         a.add_residual(r.vertical_complex_residual);
                                         a.add_residual(r.complex_pushforward_residual);
                                       });
        });
    add("crosscheck.fubini_study",
        "reduction-route and unfolding-route metrics agree on sphere tangent pairs",
        Suite::crosscheck, ErrorMode::absolute, 1e-8, check_fubini_study);

    return defs;
  }();
  return registry;
}

}  // namespace qgeom::verify
