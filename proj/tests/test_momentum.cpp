#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgeom/momentum.hpp"

using namespace qgeom;

namespace {

using Vec = RealVector<double>;
using Mat = RealMatrix<double>;
using CMat = ComplexMatrix<double>;
using CVec = ComplexVector<double>;
using Point = HilbertPoint<double>;
using Herm = HermitianMatrix<double>;

Point sample_point(Rng<double>& rng, Eigen::Index n) {
  Vec x = rng.gaussian_vector(2 * n);
  while (x.norm() < 0.25) x = rng.gaussian_vector(2 * n);
  return Point(std::move(x));
}

}  // namespace

TEST_CASE("the generated basis is orthonormal and reduces to the Pauli set at N = 2") {
  for (const Eigen::Index n : {2, 3, 5}) {
    const auto basis = hermitian_basis<double>(n);
    REQUIRE(basis.size() == static_cast<std::size_t>(n * n));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        CHECK(scalar_product(basis[a], basis[b]) ==
              doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-13));
  }
  const auto basis2 = hermitian_basis<double>(2);
  for (int k = 0; k < 4; ++k)
    CHECK(max_abs<double>((basis2[static_cast<std::size_t>(k)].matrix() -
                           pauli<double>(k).matrix())
                              .eval()) == 0.0);
}

TEST_CASE("pairing, scalar product and bracket conventions") {
  Rng<double> rng(3);
  const Herm a(rng.gue_matrix(3));
  const Herm b(rng.gue_matrix(3));

  // A(hat B) = <A, B> and is real
  CHECK(dual_pairing(a, hat(b)) == doctest::Approx(scalar_product(a, b)).epsilon(1e-13));

  // [A, B]* is Hermitian; equal arguments annihilate
  const Herm brak = u_star_bracket(a, b);
  CHECK(max_abs<double>((brak.matrix() - brak.matrix().adjoint()).eval()) < 1e-14);
  CHECK(max_abs<double>(u_star_bracket(a, a).matrix()) < 1e-14);

  // Pauli algebra: [s1, s2]* = 2 s3
  CHECK(max_abs<double>((u_star_bracket(pauli<double>(1), pauli<double>(2)).matrix() -
                         2.0 * pauli<double>(3).matrix())
                            .eval()) == 0.0);
}

TEST_CASE("momentum map") {
  Rng<double> rng(5);

  SUBCASE("basis state gives the diagonal projector") {
    CVec e1 = CVec::Zero(3);
    e1[0] = 1.0;
    const auto mu = momentum_map(Point::from_complex(e1));
    CMat expected = CMat::Zero(3, 3);
    expected(0, 0) = 1.0;
    CHECK(max_abs<double>((mu.value.matrix() - expected).eval()) == 0.0);
  }

  SUBCASE("unit states give rank-one projectors") {
    for (const Eigen::Index n : {2, 3, 5}) {
      const Point z = Point::from_complex(rng.unit_vector(n));
      const CMat mu = momentum_map(z).value.matrix();
      CHECK(mu.trace().real() == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(max_abs<double>((mu * mu - mu).eval()) < 1e-12);
    }
  }

  SUBCASE("general normalisation: mu^2 = ||z||^2 mu, Tr mu = ||z||^2") {
    const Point z = sample_point(rng, 4);
    const CMat mu = momentum_map(z).value.matrix();
    const double n2 = z.norm_squared();
    CHECK(max_abs<double>((mu * mu - n2 * mu).eval()) < 1e-12 * n2 * n2);
    CHECK(mu.trace().real() == doctest::Approx(n2).epsilon(1e-13));
  }

  SUBCASE("coordinates are the Hamiltonian functions of the basis") {
    const auto basis = hermitian_basis<double>(3);
    const Point z = sample_point(rng, 3);
    const auto mu = momentum_map(z);
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
      CHECK(mu.coords[static_cast<Eigen::Index>(alpha)] ==
            doctest::Approx(hamiltonian_function(basis[alpha], z)).epsilon(1e-12));
      CHECK(mu.coords[static_cast<Eigen::Index>(alpha)] ==
            doctest::Approx(scalar_product(basis[alpha], mu.value)).epsilon(1e-12));
    }
    CHECK(max_abs<double>((mu.reconstruct().matrix() - mu.value.matrix()).eval()) <
          1e-12 * std::max(1.0, z.norm_squared()));
  }

  SUBCASE("the origin is rejected") {
    CHECK_THROWS_AS(momentum_map(Point(Vec::Zero(4))), std::invalid_argument);
  }

  SUBCASE("the normalised momentum map is the general-N ray projection") {
    // mu(z)/Tr mu(z) is invariant under z -> u z for every u in C_0; this is
    // the arbitrary-dimension counterpart of the N = 2 Bloch projection
    for (const Eigen::Index n : {3, 5}) {
      const Point z = sample_point(rng, n);
      const CMat base = (momentum_map(z).value.matrix() / z.norm_squared()).eval();
      for (int trial = 0; trial < 20; ++trial) {
        const Point moved =
            z.complex_scaled(std::polar(rng.uniform(0.2, 5.0), rng.uniform(0.0, 6.28)));
        const CMat ray = (momentum_map(moved).value.matrix() / moved.norm_squared()).eval();
        CHECK(max_abs<double>((ray - base).eval()) < 1e-12);
      }
    }
  }
}

TEST_CASE("equivariance and the stabilizer biconditional") {
  Rng<double> rng(7);
  for (const Eigen::Index n : {2, 3, 5}) {
    const Point z = sample_point(rng, n);
    const CMat mu = momentum_map(z).value.matrix();

    for (int trial = 0; trial < 25; ++trial) {
      const CMat u = rng.haar_unitary(n);
      const CMat lhs =
          momentum_map(Point::from_complex((u * z.complex_vector()).eval())).value.matrix();
      CHECK(max_abs<double>((lhs - u * mu * u.adjoint()).eval()) < 1e-12 * z.norm_squared());
    }

    // commuting unitary: phases on the ray and its complement
    const CVec zn = (z.complex_vector() / z.norm()).eval();
    const CMat proj = zn * zn.adjoint();
    const CMat commuting =
        std::polar(1.0, 0.9) * proj + std::polar(1.0, -1.7) * (CMat::Identity(n, n) - proj);
    CHECK(max_abs<double>((commuting * mu - mu * commuting).eval()) < 1e-12 * z.norm_squared());
    const CMat fixed =
        momentum_map(Point::from_complex((commuting * z.complex_vector()).eval())).value.matrix();
    CHECK(max_abs<double>((fixed - mu).eval()) < 1e-12 * z.norm_squared());

    // a Haar unitary almost surely neither commutes nor fixes mu
    const CMat moving = rng.haar_unitary(n);
    const double comm_residual = max_abs<double>((moving * mu - mu * moving).eval());
    const CMat moved =
        momentum_map(Point::from_complex((moving * z.complex_vector()).eval())).value.matrix();
    const double move_residual = max_abs<double>((moved - mu).eval());
    CHECK(comm_residual > 1e-3);
    CHECK(move_residual > 1e-3);
  }
}

TEST_CASE("orbit frame invariants") {
  Rng<double> rng(11);
  for (const Eigen::Index n : {2, 3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Point z = sample_point(rng, n);
      const auto frame = build_orbit_frame(z);
      const double n2 = frame.norm_sq;
      const Herm mu(momentum_map(z).value.matrix());
      REQUIRE(frame.count() == n - 1);

      // complement orthonormal and orthogonal to z
      const CVec zv = z.complex_vector();
      for (Eigen::Index a = 0; a < n - 1; ++a) {
        CHECK(std::abs(zv.dot(frame.complement.col(a))) < 1e-13 * z.norm());
        for (Eigen::Index b = 0; b < n - 1; ++b) {
          const double expected = a == b ? 1.0 : 0.0;
          CHECK(std::abs(frame.complement.col(a).dot(frame.complement.col(b)) - expected) <
                1e-13);
        }
      }

      for (Eigen::Index a = 0; a < frame.count(); ++a) {
        const auto& phi = frame.phis[static_cast<std::size_t>(a)];
        const auto& psi = frame.psis[static_cast<std::size_t>(a)];

        // rotation under the bracket with mu
        CHECK(max_abs<double>((u_star_bracket(phi, mu).matrix() - n2 * psi.matrix()).eval()) <
              1e-12 * n2 * n2);
        CHECK(max_abs<double>((u_star_bracket(psi, mu).matrix() + n2 * phi.matrix()).eval()) <
              1e-12 * n2 * n2);

        // Gram structure
        for (Eigen::Index b = 0; b < frame.count(); ++b) {
          const double d = a == b ? n2 : 0.0;
          CHECK(scalar_product(phi, frame.phis[static_cast<std::size_t>(b)]) ==
                doctest::Approx(d).epsilon(1e-11));
          CHECK(scalar_product(psi, frame.psis[static_cast<std::size_t>(b)]) ==
                doctest::Approx(d).epsilon(1e-11));
          CHECK(std::abs(scalar_product(phi, frame.psis[static_cast<std::size_t>(b)])) <
                1e-12 * n2);
        }

        // orthogonal to mu(z) and trace-free (not stated upstream; confirmed here)
        CHECK(std::abs(scalar_product(phi, mu)) < 1e-12 * n2 * n2);
        CHECK(std::abs(scalar_product(psi, mu)) < 1e-12 * n2 * n2);
        CHECK(std::abs(phi.trace()) < 1e-12 * n2);
        CHECK(std::abs(psi.trace()) < 1e-12 * n2);
      }
    }
  }
  CHECK_THROWS_AS(build_orbit_frame(Point(Vec::Zero(4))), std::invalid_argument);
}

TEST_CASE("duality values carry magnitude 2||z||^4 with the symplectic sign pattern") {
  Rng<double> rng(13);
  for (const Eigen::Index n : {2, 3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Point z = sample_point(rng, n);
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
          const double psi_phi = (sa.matrix() * u_star_bracket(pb, mu).matrix()).trace().real();
          const double phi_psi = (pa.matrix() * u_star_bracket(sb, mu).matrix()).trace().real();
          const double phi_phi = (pa.matrix() * u_star_bracket(pb, mu).matrix()).trace().real();
          const double psi_psi = (sa.matrix() * u_star_bracket(sb, mu).matrix()).trace().real();
          CHECK(std::abs(psi_phi - 2.0 * n4 * d) < 1e-10 * std::max(1.0, n4));
          CHECK(std::abs(phi_psi + 2.0 * n4 * d) < 1e-10 * std::max(1.0, n4));
          CHECK(std::abs(phi_phi) < 1e-10 * std::max(1.0, n4));
          CHECK(std::abs(psi_psi) < 1e-10 * std::max(1.0, n4));
        }
    }
  }
}

TEST_CASE("pushforward tensor values on the frame") {
  Rng<double> rng(17);
  const Eigen::Index n = 4;
  const Point z = sample_point(rng, n);
  const auto frame = build_orbit_frame(z);
  const double n4 = frame.norm_sq * frame.norm_sq;
  for (Eigen::Index a = 0; a < frame.count(); ++a)
    for (Eigen::Index b = 0; b < frame.count(); ++b) {
      const double d = a == b ? n4 : 0.0;
      const auto& pa = frame.phis[static_cast<std::size_t>(a)];
      const auto& pb = frame.phis[static_cast<std::size_t>(b)];
      const auto& sb = frame.psis[static_cast<std::size_t>(b)];
      CHECK(pushforward_tensors(z, pa, pb).cometric == doctest::Approx(d).epsilon(1e-11));
      CHECK(pushforward_tensors(z, pa, sb).poisson == doctest::Approx(-d).epsilon(1e-11));
      CHECK(pushforward_tensors(z, pa, sb).cometric == doctest::Approx(0.0).epsilon(1e-11));
    }
  // antisymmetry: equal labels annihilate the Poisson side
  const Herm a(rng.gue_matrix(n));
  CHECK(pushforward_tensors(z, a, a).poisson == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("orbit Kaehler structure") {
  Rng<double> rng(19);
  for (const Eigen::Index n : {2, 3, 5}) {
    const Point z = sample_point(rng, n);
    const OrbitKaehler<double> orbit(build_orbit_frame(z));
    const Eigen::Index m = orbit.frame().count();
    const double n2 = z.norm_squared();

    SUBCASE("metric Gram is the identity") {
      CHECK(max_abs<double>((orbit.metric_gram() - Mat::Identity(2 * m, 2 * m)).eval()) < 1e-11);
    }

    SUBCASE("two-form Gram is the canonical antisymmetric block form") {
      Mat expected = Mat::Zero(2 * m, 2 * m);
      expected.topRightCorner(m, m) = -Mat::Identity(m, m);
      expected.bottomLeftCorner(m, m) = Mat::Identity(m, m);
      CHECK(max_abs<double>((orbit.two_form_gram() - expected).eval()) < 1e-11);
    }

    SUBCASE("J rotates the frame and squares to -||z||^4") {
      for (Eigen::Index a = 0; a < m; ++a) {
        const auto& phi = orbit.frame().phis[static_cast<std::size_t>(a)];
        const auto& psi = orbit.frame().psis[static_cast<std::size_t>(a)];
        const auto jphi = orbit.apply_complex_structure(phi);
        CHECK(max_abs<double>((jphi.matrix() + n2 * psi.matrix()).eval()) < 1e-11 * n2 * n2);
        const auto jjphi = orbit.apply_complex_structure(jphi);
        CHECK(max_abs<double>((jjphi.matrix() + n2 * n2 * phi.matrix()).eval()) <
              1e-10 * n2 * n2 * n2);
      }
    }

    SUBCASE("compatibility at unit norm: g(Ju, v) = w(u, v)") {
      const Point zu = Point::from_complex(rng.unit_vector(n));
      const OrbitKaehler<double> unit_orbit(build_orbit_frame(zu));
      for (int trial = 0; trial < 10; ++trial) {
        // random tangent labels
        const auto random_tangent = [&]() {
          Vec coeff = rng.gaussian_vector(2 * unit_orbit.frame().count());
          return unit_orbit.from_coordinates(coeff);
        };
        const Herm u = random_tangent();
        const Herm v = random_tangent();
        CHECK(unit_orbit.metric(unit_orbit.apply_complex_structure(u), v) ==
              doctest::Approx(unit_orbit.two_form(u, v)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("orbit structures are gauge independent") {
  Rng<double> rng(23);
  const Eigen::Index n = 4;
  const Point z = sample_point(rng, n);
  const OrbitKaehler<double> base(build_orbit_frame(z));
  for (const std::uint64_t seed : {1ULL, 99ULL, 123456789ULL}) {
    const OrbitKaehler<double> rotated(build_orbit_frame(z, seed));
    // different complement...
    CHECK(max_abs<double>((base.frame().complement - rotated.frame().complement).eval()) > 1e-3);
    // ...same Gram matrices
    CHECK(max_abs<double>((base.metric_gram() - rotated.metric_gram()).eval()) < 1e-11);
    CHECK(max_abs<double>((base.two_form_gram() - rotated.two_form_gram()).eval()) < 1e-11);
  }
}

TEST_CASE("the orbit two-form is closed (finite differences)") {
  Rng<double> rng(29);
  for (const Eigen::Index n : {2, 3}) {
    const Point z = Point::from_complex(rng.unit_vector(n));
    const auto frame = build_orbit_frame(z);
    const auto& u = frame.phis[0];
    const auto& v = frame.psis[0];
    const auto& w = frame.phis[static_cast<std::size_t>(frame.count() - 1)];
    CHECK(std::abs(orbit_exterior_derivative_fd(z, u, v, w)) < 1e-6);
  }
}

TEST_CASE("N = 2 cross-check") {
  Rng<double> rng(31);

  SUBCASE("pinned values on Haar-random unit states") {
    for (int trial = 0; trial < 100; ++trial) {
      const Point z = Point::from_complex(rng.unit_vector(2));
      const auto report = n2_crosscheck(z);
      CHECK(report.metric_phi == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(report.metric_psi == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(std::abs(report.metric_cross) < 1e-10);
      CHECK(report.symplectic_mixed == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(report.momentum_coord_residual < 1e-12);
      CHECK(report.frame_formula_residual < 1e-12);
      CHECK(report.unfold_phi_residual < 1e-12);
      CHECK(report.unfold_psi_residual < 1e-12);
      CHECK(report.vertical_complex_residual < 1e-14);
      CHECK(report.complex_pushforward_residual < 1e-12);
    }
  }

  SUBCASE("the orbit tensor reproduces J(W_phi) = -W_psi at real states") {
    // at real z the explicit pair coincides with a proper orthonormal frame,
    // so the orbit complex structure maps W_phi to -W_psi directly
    for (int trial = 0; trial < 20; ++trial) {
      Vec x = rng.gaussian_vector(4);
      x[2] = 0.0;
      x[3] = 0.0;  // real amplitudes
      while (x.norm() < 0.25) {
        x = rng.gaussian_vector(4);
        x[2] = 0.0;
        x[3] = 0.0;
      }
      const Point z(Vec(x / x.norm()));
      const auto pair = bloch_frame_pair(z);
      const OrbitKaehler<double> orbit(build_orbit_frame(z));
      const auto jphi = orbit.apply_complex_structure(pair.phi);
      CHECK(max_abs<double>((jphi.matrix() + pair.psi.matrix()).eval()) < 1e-12);
    }
  }

  SUBCASE("non-unit states are rejected") {
    CHECK_THROWS_AS(n2_crosscheck(Point(Vec::Ones(4))), std::invalid_argument);
  }
}

TEST_CASE("the exact momentum differential agrees with finite differences") {
  // the pushforwards in the crosscheck use the exact bilinear differential;
  // certify it once against central differences of mu itself
  Rng<double> rng(33);
  const Point z = sample_point(rng, 3);
  const Vec v = rng.gaussian_vector(6);
  const auto exact = momentum_differential(z, v).matrix();
  const double h = 1e-6;
  const CMat up = momentum_map(Point((z.coords() + h * v).eval())).value.matrix();
  const CMat down = momentum_map(Point((z.coords() - h * v).eval())).value.matrix();
  CHECK(max_abs<double>((exact - (up - down) / (2 * h)).eval()) < 1e-8);
}

TEST_CASE("state_from_bloch inverts project_point") {
  Rng<double> rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    Vec y = rng.gaussian_vector(3);
    while (y.norm() < 1e-3) y = rng.gaussian_vector(3);
    y *= 0.5 / y.norm();
    const Point z = state_from_bloch(y);
    CHECK(z.norm_squared() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(max_abs<double>(Mat(project_point(z).y - y)) < 1e-13);
  }
}

TEST_CASE("Fubini-Study agreement between the two routes") {
  Rng<double> rng(41);

  SUBCASE("north pole") {
    CVec e1 = CVec::Zero(2);
    e1[0] = 1.0;
    CHECK(fubini_study_compare(Point::from_complex(e1)) < 1e-10);
  }

  SUBCASE("Haar-random unit states") {
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial)
      worst = std::max(worst,
                       fubini_study_compare(Point::from_complex(rng.unit_vector(2)), 4,
                                            rng.next_bits()));
    CHECK(worst < 1e-8);
  }

  SUBCASE("non-unit states are rejected") {
    CHECK_THROWS_AS(fubini_study_compare(Point(Vec::Ones(4))), std::invalid_argument);
  }
}

TEST_CASE("orbit tangent dimension is 2(N-1)") {
  Rng<double> rng(43);
  for (const Eigen::Index n : {2, 3, 5}) {
    const auto frame = build_orbit_frame(sample_point(rng, n));
    CHECK(frame.count() == n - 1);
    // flatten and rank-check
    Mat stacked(2 * frame.count(), 2 * n * n);
    Eigen::Index row = 0;
    for (const auto& list : {frame.phis, frame.psis})
      for (const auto& h : list) {
        Eigen::Index c = 0;
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j) {
            stacked(row, c++) = h.matrix()(i, j).real();
            stacked(row, c++) = h.matrix()(i, j).imag();
          }
        ++row;
      }
    Eigen::ColPivHouseholderQR<Mat> qr(stacked);
    qr.setThreshold(1e-10);
    CHECK(qr.rank() == 2 * (n - 1));
  }
}
