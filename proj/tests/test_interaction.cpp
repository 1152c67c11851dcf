#include <cmath>

#include "doctest.h"
#include "rdf/free_field.hpp"
#include "rdf/interaction.hpp"
#include "rdf/representations.hpp"
#include "test_util.hpp"

using namespace rdf;
using namespace rdf_test;

namespace {

FourPotentialFn constant_potential(const std::array<double, 4>& A) {
  FourPotentialFn f;
  f.value = [A](const FourVector&) { return A; };
  f.grad = [](const FourVector&, int) { return std::array<double, 4>{}; };
  return f;
}

std::array<double, 4> lower(const std::array<double, 4>& u) {
  return {u[0], -u[1], -u[2], -u[3]};
}

}  // namespace

TEST_CASE("matrix potential of zero is zero") {
  CHECK(a_op({0, 0, 0, 0}, -0.3, 1.0).max_abs() == 0.0);
}

TEST_CASE("a pure time component gives eta0") {
  const Mat8r a = a_op({1.0, 0.0, 0.0, 0.0}, 1.0, 1.0);
  CHECK((a - eta(0)).max_abs() == 0.0);
}

TEST_CASE("a squared is the scalar A.A times the identity") {
  const double e = -0.31, K = 1.4;
  for (int trial = 0; trial < 100; ++trial) {
    const auto A = random_potential();
    const Mat8r a = a_op(A, e, K);
    const double s = a_squared_scalar(A, e, K);
    CHECK((a * a - s * Mat8r::identity()).max_abs() < 1e-15);
    double aa = 0.0;
    const auto Al = lower(A);
    for (int b = 0; b < 4; ++b) aa += A[static_cast<std::size_t>(b)] * Al[static_cast<std::size_t>(b)];
    CHECK(s == doctest::Approx((e / K) * (e / K) * aa).epsilon(1e-14));
  }
}

TEST_CASE("interaction factors reduce to the identity at zero potential") {
  const auto [f1, f2] = f1_f2({0, 0, 0, 0}, -0.3, 1.0);
  CHECK((f1 - Mat8r::identity()).max_abs() == 0.0);
  CHECK((f2 - Mat8r::identity()).max_abs() == 0.0);
}

TEST_CASE("interaction factor identities over random potentials") {
  const double e = -0.3025, K = 0.9;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto A = random_potential();
    const auto [f1, f2] = f1_f2(A, e, K);
    const Mat8r a = a_op(A, e, K);
    const Mat8r id = Mat8r::identity();
    CHECK((f1 * (id + a) - id).max_abs() < 1e-12);
    CHECK((f2 - invert(f1)).max_abs() < 1e-12);
    CHECK((0.5 * (f2 + invert(f1)) - (id + a)).max_abs() < 1e-12);
  }
}

TEST_CASE("singular potential shell is rejected") {
  // (e/K)^2 A.A = 1
  CHECK_THROWS_AS(f1_f2({1.0, 0.0, 0.0, 0.0}, 1.0, 1.0),
                  singular_potential_error);
  try {
    f1_f2({1.0, 0.0, 0.0, 0.0}, 1.0, 1.0);
  } catch (const singular_potential_error& err) {
    CHECK(err.a_squared == doctest::Approx(1.0));
  }
}

TEST_CASE("interacting Lagrangian reduces to the free one at A = 0") {
  PlaneWaveParams p;
  p.kappa = 1.1;
  p.k = 0.8;
  const FieldSampler phi = plane_wave_phi(p);
  CouplingParams cp;
  cp.e = -0.30;
  cp.K = p.kappa;
  cp.kappa = p.kappa;
  const FourPotentialFn A0 = constant_potential({0, 0, 0, 0});
  for (int trial = 0; trial < 10; ++trial) {
    const FourVector x = random_point(2.0);
    CHECK(lagrangian_density_int(phi, A0, cp, x, 0.0) ==
          doctest::Approx(lagrangian_density(phi, cp.kappa, cp.K, x, 0.0))
              .epsilon(1e-12));
  }
}

TEST_CASE("interacting Lagrangian of the zero field vanishes") {
  CouplingParams cp;
  const FourPotentialFn A = constant_potential({0.2, 0.1, 0.0, -0.1});
  CHECK(lagrangian_density_int(constant_field(RealField8{}), A, cp,
                               random_point(), 1e-3) == 0.0);
}

TEST_CASE("linearized Lagrangian matches to second order in A") {
  PlaneWaveParams p;
  p.kappa = 1.0;
  p.k = 1.3;
  const FieldSampler phi = plane_wave_phi(p);
  CouplingParams cp;
  cp.e = -std::sqrt(1.0 / 137.035999);
  cp.K = p.kappa;
  cp.kappa = p.kappa;

  const std::array<double, 4> A_base = {0.37, -0.21, 0.11, 0.44};
  const FourVector x = random_point(2.0);
  const double L_free = lagrangian_density(phi, cp.kappa, cp.K, x, 0.0);
  const ComplexField8 pv = phi.value(x);
  const ComplexField8 sv = dirac_op(phi, x, 0.0);
  const auto j = linearized_current(pv, sv, cp);

  auto remainder = [&](double lam) {
    std::array<double, 4> A{};
    for (int b = 0; b < 4; ++b) A[static_cast<std::size_t>(b)] = lam * A_base[static_cast<std::size_t>(b)];
    const double L_int =
        lagrangian_density_int(phi, constant_potential(A), cp, x, 0.0);
    const auto Al = lower(A);
    double aj = 0.0;
    for (int b = 0; b < 4; ++b) aj += Al[static_cast<std::size_t>(b)] * j[static_cast<std::size_t>(b)];
    return L_int - (L_free - aj);
  };

  // Richardson: remainder should shrink by ~4x when lambda halves.
  const double r1 = remainder(0.02);
  const double r2 = remainder(0.01);
  const double order = std::log2(std::abs(r1) / std::abs(r2));
  CHECK(order > 1.9);
  CHECK(order < 2.5);
}

TEST_CASE("interacting residual reduces to the free case at A = 0") {
  PlaneWaveParams p;
  p.kappa = 1.0;
  p.k = 1.0;
  const FieldSampler phi = plane_wave_phi(p);
  CouplingParams cp;
  cp.e = -0.1;
  cp.K = 1.0;
  cp.kappa = p.kappa;
  const FourPotentialFn A0 = constant_potential({0, 0, 0, 0});
  for (int trial = 0; trial < 20; ++trial) {
    const InteractingResidual r =
        interacting_residual(phi, A0, cp, random_point(3.0), 0.0);
    CHECK(r.max_abs() < 1e-10);
  }
}

TEST_CASE("a random non-solution field is flagged by the residual") {
  FieldSampler f;
  f.value = [](const FourVector& x) {
    ComplexField8 v;
    for (int i = 0; i < 8; ++i)
      v[i] = std::sin((1.0 + 0.3 * i) * x[0] + 0.7 * i * x[3] + 0.2 * i * i);
    return v;
  };
  CouplingParams cp;
  const FourPotentialFn A0 = constant_potential({0.1, 0.0, 0.0, 0.0});
  FourVector x;
  x[0] = 0.4;
  x[3] = 1.1;
  const InteractingResidual r = interacting_residual(f, A0, cp, x, 1e-3);
  CHECK(r.max_abs() > 0.1);
  // The three forms flag the failure together, within a factor of ten.
  const double mx = r.max_abs();
  CHECK(r.real_form.max_abs() > 0.1 * mx);
  CHECK(r.psi1_form.max_abs() > 0.1 * mx);
  CHECK(r.spinor_form.max_abs() > 0.1 * mx);
}

TEST_CASE("the three residual forms vanish together on a solution") {
  PlaneWaveParams p;
  p.kappa = 1.0;
  p.k = 0.7;
  const FieldSampler phi = plane_wave_phi(p);
  CouplingParams cp;
  cp.kappa = p.kappa;
  const FourPotentialFn A0 = constant_potential({0, 0, 0, 0});
  const InteractingResidual r =
      interacting_residual(phi, A0, cp, random_point(2.0), 0.0);
  CHECK(r.real_form.max_abs() < 1e-11);
  CHECK(r.psi1_form.max_abs() < 1e-11);
  CHECK(r.spinor_form.max_abs() < 1e-11);
}

TEST_CASE("electromagnetic source vanishes for the zero field") {
  CouplingParams cp;
  const auto rhs = em_source(ComplexField8{}, ComplexField8{},
                             {0.3, 0.1, 0.0, 0.0}, cp);
  for (double v : rhs) CHECK(v == 0.0);
}

TEST_CASE("source reduces to the family form for family partners") {
  CouplingParams cp;
  cp.e = -0.31;
  cp.K = 1.2;
  cp.kappa = 0.9;
  for (int trial = 0; trial < 200; ++trial) {
    const auto A = random_potential();
    const ComplexField8 phi = to_complex(random_real8());
    const ComplexField8 psi = interacting_family_psi(phi, A, cp);
    const auto full = em_source(phi, psi, A, cp);
    const auto fam = em_source_family(phi, cp);
    for (int b = 0; b < 4; ++b)
      CHECK(full[static_cast<std::size_t>(b)] ==
            doctest::Approx(fam[static_cast<std::size_t>(b)]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("plane-wave time component of the linearized current is uniform") {
  PlaneWaveParams p;
  p.kappa = 1.4;
  p.k = 0.9;
  const FieldSampler phi = plane_wave_phi(p);
  CouplingParams cp;
  cp.e = -0.2;
  cp.kappa = p.kappa;
  cp.K = p.kappa;
  for (int trial = 0; trial < 20; ++trial) {
    const FourVector x = random_point(3.0);
    const ComplexField8 pv = phi.value(x);
    const ComplexField8 sv = dirac_op(phi, x, 0.0);
    const auto j = linearized_current(pv, sv, cp);
    // Psi+Psi = kappa^2 Phi+Phi = 2 kappa^2, so j0 = 4 e kappa^2.
    CHECK(j[0] == doctest::Approx(4.0 * cp.e * p.kappa * p.kappa).epsilon(1e-12));
  }
}

TEST_CASE("interacting canonical equations reduce to the free case at A = 0") {
  PlaneWaveParams p;
  p.kappa = 1.2;
  p.k = 0.5;
  const FieldSampler phi = plane_wave_phi(p);
  CouplingParams cp;
  cp.kappa = p.kappa;
  cp.K = p.kappa;
  const FourPotentialFn A0 = constant_potential({0, 0, 0, 0});
  const FourVector x = random_point(2.0);
  const InteractingCanonicalReport rep =
      canonical_check_int(phi, A0, cp, x, 1e-3);
  CHECK(rep.max_residual() < 1e-9);
  // c Pi_{Phi+} = K Psi / K = Psi at a = 0.
  const ComplexField8 psi = dirac_op(phi, x, 0.0);
  CHECK((rep.momentum_phi_dag - psi).max_abs() < 1e-10);
}
