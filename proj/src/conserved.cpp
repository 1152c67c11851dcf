#include "rdf/conserved.hpp"

#include <cmath>

#include "rdf/algebra.hpp"

namespace rdf {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

}  // namespace

void BoxVolume::validate() const {
  if (!(length > 0.0) || n_points < 16)
    throw std::invalid_argument("box volume: need length > 0 and >= 16 points");
  if (check_k) {
    const double modes = *check_k * length / kTwoPi;
    if (std::abs(modes - std::round(modes)) > 1e-9)
      throw std::invalid_argument(
          "box volume: wavenumber does not fit the periodic box (k L / 2pi = " +
          std::to_string(modes) + ")");
    // at least 16 grid points per wavelength
    if (std::abs(modes) > n_points / 16.0)
      throw std::invalid_argument("box volume: wave under-resolved (aliasing)");
  }
}

NormalizationLedger select_normalization(double kappa, double box_L, double c,
                                         double hbar) {
  if (!(kappa > 0.0) || !(box_L > 0.0))
    throw std::invalid_argument("select_normalization: kappa, box_L must be > 0");
  NormalizationLedger led;
  const double vol4 = 4.0 * kappa * kappa * box_L * box_L * box_L;
  led.const_Q = 1.0 / vol4;
  led.const_P = 1.0 / (vol4 * c);
  led.const_M = 1.0 / (vol4 * c);
  led.K = hbar * c * kappa;
  led.kappa = kappa;
  led.box_L = box_L;
  return led;
}

NormalizationLedger select_normalization_bound(double kappa,
                                               double norm_integral, double c,
                                               double hbar) {
  if (!(kappa > 0.0) || !(norm_integral > 0.0))
    throw std::invalid_argument(
        "select_normalization_bound: kappa, norm_integral must be > 0");
  NormalizationLedger led;
  const double pi = 3.14159265358979323846;
  led.const_Q = pi / (kappa * kappa * norm_integral);
  led.const_P = pi / (kappa * kappa * norm_integral * c);
  led.const_M = pi / (kappa * kappa * norm_integral * c);
  led.K = hbar * c * kappa;
  led.kappa = kappa;
  led.box_L = 0.0;
  return led;
}

double integrate_box(const std::function<double(const FourVector&)>& f,
                     const BoxVolume& vol, double t) {
  vol.validate();
  const double dz = vol.dz();
  double sum = 0.0;
  for (int j = 0; j < vol.n_points; ++j) {
    FourVector x;
    x[0] = t;
    x[3] = (j + 0.5) * dz;
    sum += f(x);
  }
  return sum * dz * vol.length * vol.length;
}

double continuity_residual(const FieldSampler& psi1, const FourVector& x,
                           double h) {
  // d_alpha j^alpha with j^alpha = Psi^+ eta0 eta^alpha Psi. The currents are
  // quadratic in the field, so differentiate the composite directly.
  double res = 0.0;
  for (int al = 0; al < 4; ++al) {
    const Mat8r m = al == 0 ? Mat8r::identity() : eta(0) * eta(al);
    auto cur = [&](const FourVector& p) {
      const ComplexField8 v = psi1.value(p);
      return dot(v, m * v).real();
    };
    if (psi1.has_d1()) {
      // product rule with exact derivatives
      const ComplexField8 v = psi1.value(x);
      const ComplexField8 dv = psi1.d1(x, al);
      res += 2.0 * dot(dv, m * v).real();
    } else {
      const double d =
          (8.0 * (cur(x.shifted(al, h)) - cur(x.shifted(al, -h))) -
           (cur(x.shifted(al, 2.0 * h)) - cur(x.shifted(al, -2.0 * h)))) /
          (12.0 * h);
      res += d;
    }
  }
  return res;
}

double charge_Q(const FieldSampler& phi, const FieldSampler& psi, double kappa,
                const NormalizationLedger& led, const BoxVolume& vol,
                double t) {
  auto dens = [&](const FourVector& x) {
    const ComplexField8 p = phi.value(x);
    const ComplexField8 ps = psi.value(x);
    return kappa * kappa * p.norm2() + ps.norm2();
  };
  return led.const_Q * integrate_box(dens, vol, t);
}

double charge_Q_family(const FieldSampler& phi, double kappa,
                       const NormalizationLedger& led, const BoxVolume& vol,
                       double t) {
  auto dens = [&](const FourVector& x) {
    return 2.0 * kappa * kappa * phi.value(x).norm2();
  };
  return led.const_Q * integrate_box(dens, vol, t);
}

std::array<double, 4> momentum_P(const FieldSampler& phi,
                                 const FieldSampler& psi, double kappa,
                                 const NormalizationLedger& led,
                                 const BoxVolume& vol, double t, double h) {
  (void)kappa;
  std::array<double, 4> P{};
  for (int al = 0; al < 4; ++al) {
    auto dens = [&](const FourVector& x) {
      const ComplexField8 p = phi.value(x);
      const ComplexField8 ps = psi.value(x);
      const ComplexField8 dp = raise_sign(al) * sample_d1(phi, x, al, h);
      const ComplexField8 dps = raise_sign(al) * sample_d1(psi, x, al, h);
      return (dot(ps, dp) - dot(p, dps)).real();
    };
    P[static_cast<std::size_t>(al)] =
        led.const_P * led.K * integrate_box(dens, vol, t);
  }
  return P;
}

std::array<double, 4> momentum_P_family(const FieldSampler& phi, double kappa,
                                        const NormalizationLedger& led,
                                        const BoxVolume& vol, double t,
                                        double h) {
  std::array<double, 4> P{};
  for (int al = 0; al < 4; ++al) {
    auto dens = [&](const FourVector& x) {
      const ComplexField8 p = phi.value(x);
      const ComplexField8 dp = raise_sign(al) * sample_d1(phi, x, al, h);
      return dot(p, n_matrix() * dp).real();
    };
    P[static_cast<std::size_t>(al)] =
        led.const_P * (-2.0 * kappa * led.K) * integrate_box(dens, vol, t);
  }
  return P;
}

double spin_S3(const FieldSampler& phi, const FieldSampler& psi, double kappa,
               const NormalizationLedger& led, const BoxVolume& vol,
               double t) {
  (void)kappa;
  const Mat8r e12 = eta(1) * eta(2);
  const Mat8r e12_adj = eta(1).transpose() * eta(2).transpose();
  auto dens = [&](const FourVector& x) {
    const ComplexField8 p = phi.value(x);
    const ComplexField8 ps = psi.value(x);
    return (dot(ps, e12 * p) - dot(p, e12_adj * ps)).real();
  };
  return led.const_M * 0.5 * led.K * integrate_box(dens, vol, t);
}

double spin_S3_family(const FieldSampler& phi, double kappa,
                      const NormalizationLedger& led, const BoxVolume& vol,
                      double t) {
  const Mat8r m = eta(1) * eta(2) * n_matrix();
  auto dens = [&](const FourVector& x) {
    const ComplexField8 p = phi.value(x);
    return dot(p, m * p).real();
  };
  return led.const_M * (-kappa * led.K) * integrate_box(dens, vol, t);
}

double spin_S3_family_without_n(const FieldSampler& phi, double kappa,
                                const NormalizationLedger& led,
                                const BoxVolume& vol, double t) {
  const Mat8r m = eta(1) * eta(2);
  auto dens = [&](const FourVector& x) {
    const ComplexField8 p = phi.value(x);
    return dot(p, m * p).real();
  };
  return led.const_M * (kappa * led.K) * integrate_box(dens, vol, t);
}

ConservedSet evaluate_conserved(const FieldSampler& phi,
                                const FieldSampler& psi, double kappa,
                                const NormalizationLedger& led,
                                const BoxVolume& vol, double t) {
  ConservedSet set;
  set.Q = charge_Q(phi, psi, kappa, led, vol, t);
  set.P = momentum_P(phi, psi, kappa, led, vol, t);
  set.S3 = spin_S3(phi, psi, kappa, led, vol, t);
  return set;
}

}  // namespace rdf
