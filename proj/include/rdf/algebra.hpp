#pragma once

#include <string>
#include <vector>

#include "rdf/matrix.hpp"

// The concrete matrices of the real-domain Dirac formalism: the real 8x8
// eta^alpha satisfying eta^a eta^b + eta^b eta^a = 2 g^{ab}, the real
// antisymmetric N with N^2 = -1 commuting with every eta^alpha, the unitary
// block-diagonalizing transform S, and the standard 4x4 Dirac matrices
// (Dirac-Pauli representation) that S conjugation produces.

namespace rdf {

// Metric signature (+,-,-,-), fixed.
inline constexpr std::array<double, 4> kMetricDiag = {1.0, -1.0, -1.0, -1.0};

inline double metric(int alpha, int beta) {
  return alpha == beta ? kMetricDiag[static_cast<std::size_t>(alpha)] : 0.0;
}

// eta^alpha, alpha in 0..3. Throws std::out_of_range otherwise.
const Mat8r& eta(int alpha);

// Dirac-Pauli gamma^alpha: gamma^0 = diag(1,1,-1,-1),
// gamma^i = offdiag(sigma^i, -sigma^i).
const Mat4c& gamma(int alpha);

// N = diag(N_a, N_b): real, antisymmetric, N^2 = -1, commutes with eta^alpha.
const Mat8r& n_matrix();
const Mat4c& n_a();
const Mat4c& n_b();

// The unitary S with S eta^alpha S^+ = diag(gamma^alpha, gamma^alpha) and
// S N S^+ = diag(-i, +i).
const Mat8c& s_matrix();

struct IdentityCheck {
  std::string name;
  double max_abs_deviation = 0.0;
  bool pass = false;
};

struct AlgebraReport {
  std::vector<IdentityCheck> checks;
  bool all_pass = true;
  double worst_deviation = 0.0;
};

// Matrices under test; defaults to the canonical set. Tests substitute
// tampered copies as a negative control.
struct AlgebraSet {
  std::array<Mat8r, 4> eta;
  Mat8r n;
  Mat8c s;
  std::array<Mat4c, 4> gamma;
  Mat4c nb;

  static AlgebraSet canonical();
};

// Runs the full identity sweep:
//   - Clifford relation for all 16 (alpha, beta) pairs
//   - N antihermiticity, N^2 = -1, [N, eta^alpha] = 0
//   - S unitarity
//   - N_b (anti)commutation with each gamma^beta
//   - S eta^alpha S^+ block-diagonal gamma, S N S^+ = diag(-i, +i)
// Integer-valued identities must come out exactly zero; tol applies to the
// S-related ones where 1/sqrt(2) forces floating point.
AlgebraReport verify_algebra(const AlgebraSet& set = AlgebraSet::canonical(),
                             double tol = 1e-15);

}  // namespace rdf
