#include "rdf/interaction.hpp"

#include <cmath>
#include <string>

#include "rdf/algebra.hpp"
#include "rdf/representations.hpp"

namespace rdf {

namespace {

constexpr double kSingularTol = 1e-12;
constexpr double kFourPi = 4.0 * 3.14159265358979323846;

std::array<double, 4> lower_index(const std::array<double, 4>& upper) {
  return {upper[0], -upper[1], -upper[2], -upper[3]};
}

void require_regular(double s) {
  if (std::abs(1.0 - s) <= kSingularTol) throw singular_potential_error(s);
}

}  // namespace

singular_potential_error::singular_potential_error(double s)
    : std::runtime_error("singular interaction factor: (e/K)^2 A_b A^b = " +
                         std::to_string(s) + " is too close to 1"),
      a_squared(s) {}

Mat8r a_op(const std::array<double, 4>& A_upper, double e, double K) {
  const auto Al = lower_index(A_upper);
  Mat8r a;
  for (int b = 0; b < 4; ++b)
    a = a + (e / K * Al[static_cast<std::size_t>(b)]) * eta(b);
  return a;
}

double a_squared_scalar(const std::array<double, 4>& A_upper, double e,
                        double K) {
  const auto Al = lower_index(A_upper);
  double s = 0.0;
  for (int b = 0; b < 4; ++b)
    s += A_upper[static_cast<std::size_t>(b)] * Al[static_cast<std::size_t>(b)];
  return (e / K) * (e / K) * s;
}

std::pair<Mat8r, Mat8r> f1_f2(const std::array<double, 4>& A_upper, double e,
                              double K) {
  const double s = a_squared_scalar(A_upper, e, K);
  require_regular(s);
  const Mat8r a = a_op(A_upper, e, K);
  const Mat8r id = Mat8r::identity();
  const Mat8r f2 = id + a;
  const Mat8r f1 = (1.0 / (1.0 - s)) * (id - a);
  return {f1, f2};
}

double lagrangian_density_int(const FieldSampler& phi, const FourPotentialFn& A,
                              const CouplingParams& cp, const FourVector& x,
                              double h) {
  const auto Av = A.value(x);
  const double s = a_squared_scalar(Av, cp.e, cp.K);
  require_regular(s);
  const Mat8r a = a_op(Av, cp.e, cp.K);
  const Mat8r id = Mat8r::identity();

  const ComplexField8 p = phi.value(x);
  const ComplexField8 ps = dirac_op(phi, x, h);
  const cplx term1 = bar_product(ps, (id - a) * ps) / (1.0 - s);
  const cplx term2 = bar_product(p, (id + a) * p);
  return cp.K * (term1 - cp.kappa * cp.kappa * term2).real();
}

std::array<double, 4> linearized_current(const ComplexField8& phi,
                                         const ComplexField8& psi,
                                         const CouplingParams& cp) {
  std::array<double, 4> j{};
  for (int al = 0; al < 4; ++al) {
    const cplx v = bar_product(psi, eta(al) * psi) +
                   cp.kappa * cp.kappa * bar_product(phi, eta(al) * phi);
    j[static_cast<std::size_t>(al)] = cp.e * v.real();
  }
  return j;
}

ComplexField8 interacting_family_psi(const ComplexField8& phi,
                                     const std::array<double, 4>& A_upper,
                                     const CouplingParams& cp) {
  const Mat8r a = a_op(A_upper, cp.e, cp.K);
  const ComplexField8 nphi = n_matrix() * phi;
  return cp.kappa * (nphi + a * nphi);
}

double InteractingResidual::max_abs() const {
  return std::max({real_form.max_abs(), psi1_form.max_abs(),
                   spinor_form.max_abs()});
}

InteractingResidual interacting_residual(const FieldSampler& phi,
                                         const FourPotentialFn& A,
                                         const CouplingParams& cp,
                                         const FourVector& x, double h) {
  const auto Av = A.value(x);
  const double s = a_squared_scalar(Av, cp.e, cp.K);
  require_regular(s);
  const Mat8r a = a_op(Av, cp.e, cp.K);
  const double kap = cp.kappa;
  const cplx I(0.0, 1.0);

  InteractingResidual out;
  const ComplexField8 p = phi.value(x);
  const ComplexField8 dphi = dirac_op(phi, x, h);

  // [D - kappa (1+a) N] Phi
  {
    const ComplexField8 nphi = n_matrix() * p;
    out.real_form = dphi - kap * (nphi + a * nphi);
  }

  // [iD - kappa (1+a)] Psi_I with Psi_I = kappa (1 + iN) Phi. Since N and D
  // commute, D Psi_I = kappa (1 + iN) D Phi.
  {
    const ComplexField8 dpsi1 = kap * (dphi + I * (n_matrix() * dphi));
    const ComplexField8 psi1 = kap * (p + I * (n_matrix() * p));
    out.psi1_form = I * dpsi1 - kap * (psi1 + a * psi1);
  }

  // [i gamma^al d_al - kappa (1 + atilde)] phi_a with
  // atilde = (e/K) A_beta gamma^beta.
  {
    const auto Al = lower_index(Av);
    Mat4c atil;
    for (int b = 0; b < 4; ++b)
      atil = atil + cplx(cp.e / cp.K * Al[static_cast<std::size_t>(b)]) * gamma(b);

    const Vec4c pa = to_dirac(p).phi_a;
    Vec4c r = (-kap) * (pa + atil * pa);
    for (int mu = 0; mu < 4; ++mu) {
      ComplexField8 d =
          phi.has_d1() ? phi.d1(x, mu) : central_diff4(phi.value, x, mu, h);
      const Vec4c da = to_dirac(d).phi_a;
      r = r + I * (gamma(mu) * da);
    }
    out.spinor_form = r;
  }
  return out;
}

std::array<double, 4> em_source(const ComplexField8& phi,
                                const ComplexField8& psi,
                                const std::array<double, 4>& A_upper,
                                const CouplingParams& cp) {
  const double s = a_squared_scalar(A_upper, cp.e, cp.K);
  require_regular(s);
  const Mat8r a = a_op(A_upper, cp.e, cp.K);
  const Mat8r id = Mat8r::identity();
  const double eK = cp.e / cp.K;

  std::array<double, 4> rhs{};
  const double barPsi_1ma_Psi = bar_product(psi, (id - a) * psi).real();
  for (int al = 0; al < 4; ++al) {
    const double t1 =
        cp.kappa * cp.kappa * bar_product(phi, eta(al) * phi).real();
    const double t2 = bar_product(psi, eta(al) * psi).real() / (1.0 - s);
    const double t3 = -2.0 * eK * A_upper[static_cast<std::size_t>(al)] *
                      barPsi_1ma_Psi / ((1.0 - s) * (1.0 - s));
    rhs[static_cast<std::size_t>(al)] = kFourPi * cp.e * (t1 + t2 + t3);
  }
  return rhs;
}

std::array<double, 4> em_source_family(const ComplexField8& phi,
                                       const CouplingParams& cp) {
  std::array<double, 4> rhs{};
  for (int al = 0; al < 4; ++al)
    rhs[static_cast<std::size_t>(al)] =
        kFourPi * cp.e * 2.0 * cp.kappa * cp.kappa *
        bar_product(phi, eta(al) * phi).real();
  return rhs;
}

double InteractingCanonicalReport::max_residual() const {
  return std::max({momentum_identity, momentum_identity_adj, field_eq_residual,
                   field_eq_residual_adj});
}

InteractingCanonicalReport canonical_check_int(const FieldSampler& phi,
                                               const FourPotentialFn& A,
                                               const CouplingParams& cp,
                                               const FourVector& x, double h) {
  InteractingCanonicalReport rep;
  const double kap = cp.kappa;

  // c/K Pi_{Phi+} = F1 Psi = (1-a) D Phi / (1-s), as a field of x.
  auto pi_dag = [&](const FourVector& p) {
    const auto Av = A.value(p);
    const double s = a_squared_scalar(Av, cp.e, cp.K);
    require_regular(s);
    const Mat8r a = a_op(Av, cp.e, cp.K);
    const ComplexField8 dphi = dirac_op(phi, p, h);
    return (1.0 / (1.0 - s)) * (dphi - a * dphi);
  };

  const auto Av = A.value(x);
  const double s = a_squared_scalar(Av, cp.e, cp.K);
  require_regular(s);
  const Mat8r a = a_op(Av, cp.e, cp.K);
  const ComplexField8 p = phi.value(x);
  const ComplexField8 dphi = dirac_op(phi, x, h);
  const ComplexField8 piv = pi_dag(x);
  rep.momentum_phi_dag = piv;

  // D Phi - (1+a) (c/K) Pi_{Phi+} and the barred counterpart.
  {
    const ComplexField8 res = dphi - (piv + a * piv);
    rep.momentum_identity = res.max_abs();
    rep.momentum_identity_adj = (eta(0) * conj(res)).max_abs();
  }

  // D (c/K Pi_{Phi+}) + kappa^2 (1+a) Phi; the composite is differentiated
  // with central differences (the product also carries the x-dependence of A).
  {
    ComplexField8 dpi;
    for (int mu = 0; mu < 4; ++mu)
      dpi = dpi + eta(mu) * central_diff4(pi_dag, x, mu, h);
    const ComplexField8 res = dpi + (kap * kap) * (p + a * p);
    rep.field_eq_residual = res.max_abs();
    rep.field_eq_residual_adj = (eta(0) * conj(res)).max_abs();
  }
  return rep;
}

}  // namespace rdf
