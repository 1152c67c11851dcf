#include "rdf/representations.hpp"

#include <string>

namespace rdf {

reality_error::reality_error(double imag)
    : std::runtime_error("reality violated: max imaginary residue " +
                         std::to_string(imag)),
      max_imag(imag) {}

std::pair<ComplexField8, ComplexField8> compose_psi12(const RealField8& phi,
                                                      const RealField8& psi,
                                                      double kappa) {
  const cplx I(0.0, 1.0);
  ComplexField8 p1, p2;
  for (int i = 0; i < 8; ++i) {
    p1[i] = kappa * phi[i] + I * psi[i];
    p2[i] = kappa * phi[i] - I * psi[i];
  }
  return {p1, p2};
}

std::pair<RealField8, RealField8> decompose_psi12(const ComplexField8& psi1,
                                                  const ComplexField8& psi2,
                                                  double kappa) {
  if (kappa == 0.0) throw std::invalid_argument("decompose_psi12: kappa = 0");
  double viol = 0.0;
  for (int i = 0; i < 8; ++i)
    viol = std::max(viol, std::abs(psi2[i] - std::conj(psi1[i])));
  if (viol > kRealityTol) throw reality_error(viol);

  const cplx I(0.0, 1.0);
  RealField8 phi, psi;
  for (int i = 0; i < 8; ++i) {
    phi[i] = ((psi1[i] + psi2[i]) / (2.0 * kappa)).real();
    psi[i] = ((psi1[i] - psi2[i]) / (2.0 * I)).real();
  }
  return {phi, psi};
}

DiracPair to_dirac(const ComplexField8& phi) {
  const Vec8c p = s_matrix() * phi;
  DiracPair d;
  for (int i = 0; i < 4; ++i) {
    d.phi_a[i] = p[i];
    d.phi_b[i] = p[i + 4];
  }
  return d;
}

DiracPair to_dirac(const RealField8& phi) { return to_dirac(to_complex(phi)); }

RealField8 from_dirac(const Vec4c& phi_a) {
  const Vec4c b = n_b() * conj(phi_a);
  Vec8c full;
  for (int i = 0; i < 4; ++i) {
    full[i] = phi_a[i];
    full[i + 4] = b[i];
  }
  const Vec8c phi = adjoint(s_matrix()) * full;
  RealField8 r;
  for (int i = 0; i < 8; ++i) r[i] = phi[i].real();
  return r;
}

RealField8 family_psi(const RealField8& phi, double kappa) {
  return kappa * (n_matrix() * phi);
}

}  // namespace rdf
