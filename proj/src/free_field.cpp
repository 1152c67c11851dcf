#include "rdf/free_field.hpp"

#include <cmath>

namespace rdf {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

// Levi-Civita symbol with eps(0,1,2,3) = +1.
int levi(int a, int b, int c, int d) {
  const int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

}  // namespace

double PlaneWaveParams::k0() const { return std::sqrt(kappa * kappa + k * k); }

double PlaneWaveParams::box_modes() const { return k * box_L / kTwoPi; }

bool PlaneWaveParams::commensurate(double tol) const {
  const double m = box_modes();
  return std::abs(m - std::round(m)) <= tol;
}

void PlaneWaveParams::validate() const {
  if (!(k0() > 0.0))
    throw std::invalid_argument("plane wave: k0 = sqrt(kappa^2 + k^2) must be > 0");
  if (!(box_L > 0.0)) throw std::invalid_argument("plane wave: box_L must be > 0");
}

ComplexField8 dirac_op(const FieldSampler& f, const FourVector& x, double h) {
  ComplexField8 r;
  for (int mu = 0; mu < 4; ++mu) {
    const ComplexField8 d = sample_d1(f, x, mu, h);
    r = r + eta(mu) * d;
  }
  return r;
}

FieldSampler plane_wave_phi(const PlaneWaveParams& p) {
  p.validate();
  const double k0 = p.k0();
  const double kap = p.kappa;
  const double k = p.k;
  const double lam = k / (k0 + kap);
  const double amp = std::sqrt((k0 + kap) / k0);

  auto base = [=](double th) {
    RealField8 v;
    v[0] = -amp * std::cos(th);
    v[1] = -amp * std::sin(th);
    v[4] = amp * lam * std::sin(th);
    v[5] = -amp * lam * std::cos(th);
    return v;
  };
  auto dbase = [=](double th) {
    RealField8 v;
    v[0] = amp * std::sin(th);
    v[1] = -amp * std::cos(th);
    v[4] = amp * lam * std::cos(th);
    v[5] = amp * lam * std::sin(th);
    return v;
  };
  auto theta = [=](const FourVector& x) { return k0 * x[0] - k * x[3]; };
  auto dtheta = [=](int mu) {
    return mu == 0 ? k0 : (mu == 3 ? -k : 0.0);
  };

  FieldSampler s;
  s.value = [=](const FourVector& x) { return to_complex(base(theta(x))); };
  s.d1 = [=](const FourVector& x, int mu) {
    return to_complex(dtheta(mu) * dbase(theta(x)));
  };
  s.d2 = [=](const FourVector& x, int mu, int nu) {
    return to_complex((-dtheta(mu) * dtheta(nu)) * base(theta(x)));
  };
  return s;
}

SpinorSampler plane_wave_dirac(const PlaneWaveParams& p) {
  p.validate();
  const double k0 = p.k0();
  const double kap = p.kappa;
  const double k = p.k;
  const double amp = std::sqrt((k0 + kap) / (2.0 * k0));
  Vec4c u;
  u[0] = amp;
  u[2] = amp * k / (k0 + kap);

  auto phase = [=](const FourVector& x) {
    return std::exp(cplx(0.0, -(k0 * x[0] - k * x[3])));
  };
  auto dtheta = [=](int mu) { return mu == 0 ? k0 : (mu == 3 ? -k : 0.0); };

  SpinorSampler s;
  s.value = [=](const FourVector& x) { return phase(x) * u; };
  s.d1 = [=](const FourVector& x, int mu) {
    return (cplx(0.0, -dtheta(mu)) * phase(x)) * u;
  };
  return s;
}

Vec4c dirac_spinor_residual(const SpinorSampler& f, const FourVector& x,
                            double kappa, double h) {
  const cplx I(0.0, 1.0);
  Vec4c r = (-kappa) * f.value(x);
  for (int mu = 0; mu < 4; ++mu) {
    const Vec4c d = f.has_d1() ? f.d1(x, mu) : central_diff4(f.value, x, mu, h);
    r = r + I * (gamma(mu) * d);
  }
  return r;
}

std::array<double, 4> FourPotentialFn::d(const FourVector& x, int mu,
                                         double h) const {
  if (has_grad()) return grad(x, mu);
  const auto fp1 = value(x.shifted(mu, h));
  const auto fm1 = value(x.shifted(mu, -h));
  const auto fp2 = value(x.shifted(mu, 2.0 * h));
  const auto fm2 = value(x.shifted(mu, -2.0 * h));
  std::array<double, 4> r{};
  for (int a = 0; a < 4; ++a)
    r[static_cast<std::size_t>(a)] =
        (8.0 * (fp1[static_cast<std::size_t>(a)] - fm1[static_cast<std::size_t>(a)]) -
         (fp2[static_cast<std::size_t>(a)] - fm2[static_cast<std::size_t>(a)])) /
        (12.0 * h);
  return r;
}

EMPotentials EMPotentials::zero() {
  FourPotentialFn z;
  z.value = [](const FourVector&) { return std::array<double, 4>{}; };
  z.grad = [](const FourVector&, int) { return std::array<double, 4>{}; };
  return EMPotentials{z, z};
}

FieldSampler em_phi_column(const EMPotentials& em) {
  auto pack = [](const std::array<double, 4>& A,
                 const std::array<double, 4>& C) {
    RealField8 phi;
    phi[0] = -A[1];
    phi[1] = -A[2];
    phi[2] = -A[3];
    phi[3] = C[0];
    phi[4] = C[1];
    phi[5] = C[2];
    phi[6] = C[3];
    phi[7] = -A[0];
    return phi;
  };
  FieldSampler s;
  s.value = [=](const FourVector& x) {
    return to_complex(pack(em.A.value(x), em.C.value(x)));
  };
  if (em.A.has_grad() && em.C.has_grad()) {
    s.d1 = [=](const FourVector& x, int mu) {
      return to_complex(pack(em.A.grad(x, mu), em.C.grad(x, mu)));
    };
  }
  return s;
}

MaxwellFields maxwell_fields(const EMPotentials& em, const FourVector& x,
                             double h) {
  // dA[mu][a] = d_mu A^a, likewise for C.
  double dA[4][4], dC[4][4];
  for (int mu = 0; mu < 4; ++mu) {
    const auto ga = em.A.d(x, mu, h);
    const auto gc = em.C.d(x, mu, h);
    for (int a = 0; a < 4; ++a) {
      dA[mu][a] = ga[static_cast<std::size_t>(a)];
      dC[mu][a] = gc[static_cast<std::size_t>(a)];
    }
  }
  // W[xi][zeta] = d_xi X_zeta - d_zeta X_xi (all indices down).
  double WA[4][4], WC[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      WA[i][j] = kMetricDiag[static_cast<std::size_t>(j)] * dA[i][j] -
                 kMetricDiag[static_cast<std::size_t>(i)] * dA[j][i];
      WC[i][j] = kMetricDiag[static_cast<std::size_t>(j)] * dC[i][j] -
                 kMetricDiag[static_cast<std::size_t>(i)] * dC[j][i];
    }

  MaxwellFields out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double f = raise_sign(a) * dA[a][b] - raise_sign(b) * dA[b][a];
      double fd = raise_sign(a) * dC[a][b] - raise_sign(b) * dC[b][a];
      for (int xi = 0; xi < 4; ++xi)
        for (int ze = 0; ze < 4; ++ze) {
          const int lv = levi(a, b, xi, ze);
          if (lv == 0) continue;
          f -= 0.5 * lv * WC[xi][ze];
          fd += 0.5 * lv * WA[xi][ze];
        }
      out.F(a, b) = f;
      out.F_dual(a, b) = fd;
    }
  for (int a = 0; a < 4; ++a) {
    out.F_scalar += dC[a][a];
    out.G_scalar += dA[a][a];
  }
  return out;
}

RealField8 maxwell_assemble(const EMPotentials& em, const FourVector& x,
                            double h) {
  const MaxwellFields mf = maxwell_fields(em, x, h);
  RealField8 psi;
  for (int i = 0; i < 3; ++i) {
    psi[i] = mf.F(i + 1, 0);       // E_i = F^{i0}
    psi[i + 4] = mf.F_dual(i + 1, 0);  // B_i from the dual tensor
  }
  psi[3] = mf.F_scalar;
  psi[7] = mf.G_scalar;
  return psi;
}

double MaxwellResidual::max_abs() const {
  double m = 0.0;
  for (int b = 0; b < 4; ++b) {
    m = std::max(m, std::abs(field_eq[static_cast<std::size_t>(b)]));
    m = std::max(m, std::abs(dual_eq[static_cast<std::size_t>(b)]));
  }
  return m;
}

MaxwellResidual maxwell_residual(const EMPotentials& em, const FourVector& x,
                                 double h) {
  // d_alpha of the two tensors via central differences of maxwell_fields.
  MaxwellResidual r;
  for (int al = 0; al < 4; ++al) {
    auto tensors = [&](const FourVector& p) { return maxwell_fields(em, p, h); };
    const MaxwellFields tp1 = tensors(x.shifted(al, h));
    const MaxwellFields tm1 = tensors(x.shifted(al, -h));
    const MaxwellFields tp2 = tensors(x.shifted(al, 2.0 * h));
    const MaxwellFields tm2 = tensors(x.shifted(al, -2.0 * h));
    for (int be = 0; be < 4; ++be) {
      const double g = metric(al, be);
      const double t1p1 = tp1.F(al, be) + g * tp1.G_scalar;
      const double t1m1 = tm1.F(al, be) + g * tm1.G_scalar;
      const double t1p2 = tp2.F(al, be) + g * tp2.G_scalar;
      const double t1m2 = tm2.F(al, be) + g * tm2.G_scalar;
      r.field_eq[static_cast<std::size_t>(be)] +=
          (8.0 * (t1p1 - t1m1) - (t1p2 - t1m2)) / (12.0 * h);
      const double t2p1 = tp1.F_dual(al, be) + g * tp1.F_scalar;
      const double t2m1 = tm1.F_dual(al, be) + g * tm1.F_scalar;
      const double t2p2 = tp2.F_dual(al, be) + g * tp2.F_scalar;
      const double t2m2 = tm2.F_dual(al, be) + g * tm2.F_scalar;
      r.dual_eq[static_cast<std::size_t>(be)] +=
          (8.0 * (t2p1 - t2m1) - (t2p2 - t2m2)) / (12.0 * h);
    }
  }
  return r;
}

cplx bar_product(const ComplexField8& x, const ComplexField8& y) {
  return dot(x, eta(0) * y);
}

double lagrangian_density(const FieldSampler& phi, double kappa, double K,
                          const FourVector& x, double h) {
  const ComplexField8 p = phi.value(x);
  const ComplexField8 psi = dirac_op(phi, x, h);
  return K * (bar_product(psi, psi) - kappa * kappa * bar_product(p, p)).real();
}

FieldSampler derived_psi_sampler(const FieldSampler& phi, double h) {
  FieldSampler psi;
  psi.value = [phi, h](const FourVector& x) { return dirac_op(phi, x, h); };
  if (phi.has_d2()) {
    psi.d1 = [phi](const FourVector& x, int mu) {
      ComplexField8 r;
      for (int al = 0; al < 4; ++al) r = r + eta(al) * phi.d2(x, al, mu);
      return r;
    };
  }
  return psi;
}

ComplexField8 klein_gordon_residual(const FieldSampler& phi, double kappa,
                                    const FourVector& x, double h) {
  ComplexField8 r = (kappa * kappa) * phi.value(x);
  for (int mu = 0; mu < 4; ++mu)
    r = r + raise_sign(mu) * sample_d2(phi, x, mu, mu, h);
  return r;
}

double CanonicalReport::max_residual() const {
  double m = std::max(evolution_residual, evolution_residual_adj);
  m = std::max(m, field_eq_residual);
  m = std::max(m, field_eq_residual_adj);
  return std::max(m, klein_gordon_residual);
}

CanonicalReport canonical_check(const FieldSampler& phi, double kappa,
                                double K, const FourVector& x, double h) {
  CanonicalReport rep;
  const FieldSampler psi = derived_psi_sampler(phi, h);
  const ComplexField8 p = phi.value(x);
  const ComplexField8 ps = psi.value(x);

  rep.momentum_phi = K * conj(ps);
  rep.momentum_phi_dag = K * ps;

  // d0 Phi - eta0 Psi + eta0 eta^j d_j Phi and its adjoint-row counterpart.
  {
    ComplexField8 res = sample_d1(phi, x, 0, h) - eta(0) * ps;
    ComplexField8 res_adj = conj(sample_d1(phi, x, 0, h));
    {
      const ComplexField8 t = eta(0) * conj(ps);
      res_adj = res_adj - t;
    }
    for (int j = 1; j < 4; ++j) {
      const ComplexField8 dj = sample_d1(phi, x, j, h);
      res = res + eta(0) * (eta(j) * dj);
      // row form: + d_j Phi^+ eta0 eta^j, transposed back to a column.
      const Mat8r m = (eta(0) * eta(j)).transpose();
      res_adj = res_adj + m * conj(dj);
    }
    rep.evolution_residual = res.max_abs();
    rep.evolution_residual_adj = res_adj.max_abs();
  }

  // D Psi + kappa^2 Phi and its barred form.
  {
    const ComplexField8 res = dirac_op(psi, x, h) + (kappa * kappa) * p;
    rep.field_eq_residual = res.max_abs();
    const ComplexField8 barred = eta(0) * conj(res);
    rep.field_eq_residual_adj = barred.max_abs();
  }

  rep.klein_gordon_residual = klein_gordon_residual(phi, kappa, x, h).max_abs();
  return rep;
}

}  // namespace rdf
