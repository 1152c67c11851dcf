#pragma once

#include <optional>
#include <string>

#include "rdf/fields.hpp"

// The charge Q, energy-momentum P^alpha and spin projection S^3 functionals,
// their family-solution shortcuts, the continuity residual, and the
// normalization selection that makes the plane-wave state carry
// (Q, P^alpha, S^3) = (1, hbar k^alpha, hbar/2).

namespace rdf {

// Integration volume: periodic box of side L sampled along z with n_points
// midpoint nodes; the transverse directions contribute the exact factor L^2
// for fields uniform in x, y. If check_k is set, the wavenumber must fit the
// box with an integer number of wavelengths.
struct BoxVolume {
  double length = 2.0 * 3.14159265358979323846;
  int n_points = 256;
  std::optional<double> check_k;

  double dz() const { return length / n_points; }
  void validate() const;  // throws std::invalid_argument on aliasing
};

struct NormalizationLedger {
  double const_Q = 1.0;
  double const_P = 1.0;
  double const_M = 1.0;
  double K = 1.0;
  double kappa = 1.0;
  double box_L = 1.0;
  // The selection fixes only const_* ; closing the bookkeeping to
  // P^alpha = hbar k^alpha and S^3 = hbar/2 additionally requires
  // K = hbar c kappa. That choice is recorded here, not hidden.
  std::string k_note = "K = hbar*c*kappa (inferred; the normalization selection leaves K free)";
};

// const_Q = 1/(4 kappa^2 L^3), const_P = const_M = 1/(4 kappa^2 L^3 c),
// K = hbar c kappa.
NormalizationLedger select_normalization(double kappa, double box_L,
                                         double c = 1.0, double hbar = 1.0);

// Bound-state variant: const_Q kappa^2/pi * norm_integral = 1 with
// norm_integral = integral (g^2 + f^2) d3x.
NormalizationLedger select_normalization_bound(double kappa,
                                               double norm_integral,
                                               double c = 1.0,
                                               double hbar = 1.0);

// d_alpha (Psi_I^+ eta^0 eta^alpha Psi_I) at x; vanishes on solutions.
double continuity_residual(const FieldSampler& psi1, const FourVector& x,
                           double h);

// Q = const_Q integral (kappa^2 Phi^+ Phi + Psi^+ Psi) d3x.
double charge_Q(const FieldSampler& phi, const FieldSampler& psi, double kappa,
                const NormalizationLedger& led, const BoxVolume& vol,
                double t = 0.0);

// Family shortcut: const_Q integral 2 kappa^2 Phi^+ Phi d3x.
double charge_Q_family(const FieldSampler& phi, double kappa,
                       const NormalizationLedger& led, const BoxVolume& vol,
                       double t = 0.0);

// P^alpha = const_P K integral (Psi^+ d^alpha Phi - Phi^+ d^alpha Psi) d3x.
std::array<double, 4> momentum_P(const FieldSampler& phi,
                                 const FieldSampler& psi, double kappa,
                                 const NormalizationLedger& led,
                                 const BoxVolume& vol, double t = 0.0,
                                 double h = 1e-3);

// Family shortcut: const_P (-2 kappa K) integral Phi^+ d^alpha N Phi d3x.
std::array<double, 4> momentum_P_family(const FieldSampler& phi, double kappa,
                                        const NormalizationLedger& led,
                                        const BoxVolume& vol, double t = 0.0,
                                        double h = 1e-3);

// S^3 = const_M K/2 integral (Psi^+ eta1 eta2 Phi - Phi^+ eta1^+ eta2^+ Psi).
double spin_S3(const FieldSampler& phi, const FieldSampler& psi, double kappa,
               const NormalizationLedger& led, const BoxVolume& vol,
               double t = 0.0);

// Family shortcut const_M (-kappa K) integral Phi^+ eta1 eta2 N Phi d3x;
// the sign is the one that agrees with the general bilinear form above.
double spin_S3_family(const FieldSampler& phi, double kappa,
                      const NormalizationLedger& led, const BoxVolume& vol,
                      double t = 0.0);

// Variant without the N factor, kept for comparison: the two disagree for
// generic states and the suite reports both rather than picking one.
double spin_S3_family_without_n(const FieldSampler& phi, double kappa,
                                const NormalizationLedger& led,
                                const BoxVolume& vol, double t = 0.0);

// Midpoint-rule line integral along z times the transverse area L^2.
double integrate_box(const std::function<double(const FourVector&)>& f,
                     const BoxVolume& vol, double t = 0.0);

// Bundle of the three functionals. For the normalized plane wave this is
// (1, k^alpha, 1/2) in units of hbar.
struct ConservedSet {
  double Q = 0.0;
  std::array<double, 4> P{};
  double S3 = 0.0;
};

ConservedSet evaluate_conserved(const FieldSampler& phi,
                                const FieldSampler& psi, double kappa,
                                const NormalizationLedger& led,
                                const BoxVolume& vol, double t = 0.0);

}  // namespace rdf
