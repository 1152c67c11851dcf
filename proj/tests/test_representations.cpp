#include <cmath>

#include "doctest.h"
#include "rdf/free_field.hpp"
#include "rdf/representations.hpp"
#include "test_util.hpp"

using namespace rdf;
using namespace rdf_test;

TEST_CASE("compose gives conjugate pair on real inputs") {
  for (int trial = 0; trial < 50; ++trial) {
    const RealField8 phi = random_real8();
    const RealField8 psi = random_real8();
    const auto [p1, p2] = compose_psi12(phi, psi, 1.7);
    for (int i = 0; i < 8; ++i)
      CHECK(std::abs(p2[i] - std::conj(p1[i])) == 0.0);
  }
}

TEST_CASE("compose of a pure psi unit vector") {
  RealField8 phi{}, psi{};
  psi[0] = 1.0;
  const auto [p1, p2] = compose_psi12(phi, psi, 2.0);
  CHECK(std::abs(p1[0] - cplx(0.0, 1.0)) == 0.0);
  CHECK(std::abs(p2[0] - cplx(0.0, -1.0)) == 0.0);
  for (int i = 1; i < 8; ++i) {
    CHECK(std::abs(p1[i]) == 0.0);
    CHECK(std::abs(p2[i]) == 0.0);
  }
}

TEST_CASE("compose and decompose are mutually inverse") {
  for (double kappa : {0.5, 1.0, 3.25}) {
    for (int trial = 0; trial < 50; ++trial) {
      const RealField8 phi = random_real8();
      const RealField8 psi = random_real8();
      const auto [p1, p2] = compose_psi12(phi, psi, kappa);
      const auto [phi2, psi2] = decompose_psi12(p1, p2, kappa);
      CHECK((phi2 - phi).max_abs() < 1e-14);
      CHECK((psi2 - psi).max_abs() < 1e-14);
    }
  }
}

TEST_CASE("decompose of equal inputs kappa e3") {
  const double kappa = 1.3;
  ComplexField8 p1;
  p1[2] = kappa;
  const auto [phi, psi] = decompose_psi12(p1, p1, kappa);
  RealField8 e3;
  e3[2] = 1.0;
  CHECK((phi - e3).max_abs() < 1e-15);
  CHECK(psi.max_abs() == 0.0);
}

TEST_CASE("decompose rejects a non-conjugate pair") {
  ComplexField8 p1, p2;
  p1[0] = cplx(1.0, 0.5);
  p2[0] = std::conj(p1[0]) + cplx(0.0, 1e-6);
  CHECK_THROWS_AS(decompose_psi12(p1, p2, 1.0), reality_error);
  try {
    decompose_psi12(p1, p2, 1.0);
  } catch (const reality_error& e) {
    CHECK(e.max_imag == doctest::Approx(1e-6).epsilon(1e-6));
  }
}

TEST_CASE("to_dirac of zero is zero") {
  const DiracPair d = to_dirac(RealField8{});
  CHECK(d.phi_a.max_abs() == 0.0);
  CHECK(d.phi_b.max_abs() == 0.0);
}

TEST_CASE("to_dirac satisfies phi_b = N_b conj(phi_a) for random real fields") {
  for (int trial = 0; trial < 1000; ++trial) {
    const DiracPair d = to_dirac(random_real8(2.0));
    const Vec4c expect = n_b() * conj(d.phi_a);
    CHECK((d.phi_b - expect).max_abs() < 1e-14);
  }
}

TEST_CASE("plane-wave field transforms onto the reference spinor") {
  PlaneWaveParams p;
  p.kappa = 1.3;
  p.k = 0.7;
  const double k0 = p.k0();
  const FieldSampler phi = plane_wave_phi(p);

  for (const double t : {0.0, 0.37}) {
    for (const double z : {0.0, -1.1}) {
      FourVector x;
      x[0] = t;
      x[3] = z;
      RealField8 pr;
      const ComplexField8 pv = phi.value(x);
      for (int i = 0; i < 8; ++i) pr[i] = pv[i].real();
      const DiracPair d = to_dirac(pr);

      const double lam = p.k / (k0 + p.kappa);
      const cplx ph = std::exp(cplx(0.0, -(k0 * t - p.k * z)));
      Vec4c ref;
      ref[0] = std::sqrt((k0 + p.kappa) / (2.0 * k0)) * ph;
      ref[2] = std::sqrt((k0 + p.kappa) / (2.0 * k0)) * lam * ph;
      CHECK((d.phi_a - ref).max_abs() < 1e-14);
    }
  }
}

TEST_CASE("from_dirac reproduces the component table") {
  Vec4c ea;
  ea[0] = 1.0;
  RealField8 expect;
  expect[0] = -std::sqrt(2.0);
  CHECK((from_dirac(ea) - expect).max_abs() < 1e-15);

  Vec4c eb;
  eb[0] = cplx(0.0, 1.0);
  RealField8 expect2;
  expect2[1] = std::sqrt(2.0);
  CHECK((from_dirac(eb) - expect2).max_abs() < 1e-15);
}

TEST_CASE("from_dirac matches the full sign/Re/Im component table") {
  const double s2 = std::sqrt(2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec4c a = random_vec4c();
    RealField8 expect;
    expect[0] = -s2 * a[0].real();
    expect[1] = s2 * a[0].imag();
    expect[2] = s2 * a[1].real();
    expect[3] = -s2 * a[1].imag();
    expect[4] = -s2 * a[2].imag();
    expect[5] = -s2 * a[2].real();
    expect[6] = s2 * a[3].imag();
    expect[7] = -s2 * a[3].real();
    CHECK((from_dirac(a) - expect).max_abs() < 1e-14);
  }
}

TEST_CASE("second spinor block of the plane wave has the conjugate phase") {
  // Reconstructed by transforming the real solution: the lower pair is
  // (0, 1, 0, -k/(k0+kappa)) times e^{+i(k0 x0 - k z)}.
  PlaneWaveParams p;
  p.kappa = 1.3;
  p.k = 0.7;
  const double k0 = p.k0();
  const FieldSampler phi = plane_wave_phi(p);
  for (int trial = 0; trial < 10; ++trial) {
    const FourVector x = random_point(3.0);
    RealField8 pr;
    const ComplexField8 pv = phi.value(x);
    for (int i = 0; i < 8; ++i) pr[i] = pv[i].real();
    const DiracPair d = to_dirac(pr);
    const cplx ph = std::exp(cplx(0.0, k0 * x[0] - p.k * x[3]));
    Vec4c expect;
    expect[1] = std::sqrt((k0 + p.kappa) / (2.0 * k0)) * ph;
    expect[3] = -std::sqrt((k0 + p.kappa) / (2.0 * k0)) * p.k / (k0 + p.kappa) * ph;
    CHECK((d.phi_b - expect).max_abs() < 1e-14);
  }
}

TEST_CASE("to_dirac and from_dirac invert each other") {
  for (int trial = 0; trial < 200; ++trial) {
    const Vec4c pa = random_vec4c(1.5);
    const DiracPair d = to_dirac(from_dirac(pa));
    CHECK((d.phi_a - pa).max_abs() < 1e-14);

    const RealField8 phi = random_real8(1.5);
    const RealField8 back = from_dirac(to_dirac(phi).phi_a);
    CHECK((back - phi).max_abs() < 1e-14);
  }
}

TEST_CASE("S transform preserves the norm") {
  for (int trial = 0; trial < 200; ++trial) {
    const RealField8 phi = random_real8(2.0);
    const DiracPair d = to_dirac(phi);
    CHECK(d.phi_a.norm2() + d.phi_b.norm2() ==
          doctest::Approx(phi.norm2()).epsilon(1e-13));
  }
}

TEST_CASE("family partner basics") {
  const double kappa = 1.9;
  Vec8r e1;
  e1[0] = 1.0;
  Vec8r e2;
  e2[1] = 1.0;
  CHECK((family_psi(e1, kappa) - kappa * e2).max_abs() == 0.0);

  for (int trial = 0; trial < 100; ++trial) {
    const RealField8 phi = random_real8();
    const RealField8 psi = family_psi(phi, kappa);
    CHECK(psi.norm2() == doctest::Approx(kappa * kappa * phi.norm2()).epsilon(1e-13));
    const RealField8 twice = family_psi(psi, kappa);
    CHECK((twice + kappa * kappa * phi).max_abs() < 1e-13);
  }
}

TEST_CASE("family partner turns the combination into kappa(1+iN)phi") {
  const double kappa = 1.35;
  const cplx I(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const RealField8 phi = random_real8();
    const auto [p1, p2] = compose_psi12(phi, family_psi(phi, kappa), kappa);
    const Vec8c nphi = to_complex(n_matrix() * phi);
    for (int i = 0; i < 8; ++i) {
      CHECK(std::abs(p1[i] - kappa * (phi[i] + I * nphi[i])) < 1e-14);
      CHECK(std::abs(p2[i] - kappa * (phi[i] - I * nphi[i])) < 1e-14);
    }
  }
}

TEST_CASE("real pairs have a symmetric cross product") {
  // Phi^+ Psi - Psi^+ Phi vanishes for real columns, which is what makes the
  // two charge-density expressions agree pointwise.
  for (int trial = 0; trial < 100; ++trial) {
    const RealField8 phi = random_real8();
    const RealField8 psi = random_real8();
    CHECK(dot(phi, psi) - dot(psi, phi) == 0.0);
  }
}
