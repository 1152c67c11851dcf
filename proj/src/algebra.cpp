#include "rdf/algebra.hpp"

#include <cmath>

namespace rdf {

namespace {

Mat<double, 4> make_a(int i) {
  // The three real orthogonal 4x4 blocks entering eta^i.
  static const int tbl[3][4][4] = {
      {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}},
      {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}},
      {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
  Mat<double, 4> m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = tbl[i - 1][r][c];
  return m;
}

Mat8r make_eta(int alpha) {
  Mat8r m;
  if (alpha == 0) {
    for (int i = 0; i < 4; ++i) {
      m(i, i) = 1.0;
      m(i + 4, i + 4) = -1.0;
    }
    return m;
  }
  const Mat<double, 4> a = make_a(alpha);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      m(r, c + 4) = a(r, c);        // upper-right block: a^i
      m(r + 4, c) = -a(c, r);       // lower-left block: -a^{i T}
    }
  return m;
}

Mat4c make_gamma(int alpha) {
  const cplx I(0.0, 1.0);
  Mat4c g;
  if (alpha == 0) {
    g(0, 0) = 1.0;
    g(1, 1) = 1.0;
    g(2, 2) = -1.0;
    g(3, 3) = -1.0;
    return g;
  }
  cplx s[2][2];
  switch (alpha) {
    case 1:
      s[0][0] = 0;
      s[0][1] = 1;
      s[1][0] = 1;
      s[1][1] = 0;
      break;
    case 2:
      s[0][0] = 0;
      s[0][1] = -I;
      s[1][0] = I;
      s[1][1] = 0;
      break;
    default:
      s[0][0] = 1;
      s[0][1] = 0;
      s[1][0] = 0;
      s[1][1] = -1;
      break;
  }
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      g(r, c + 2) = s[r][c];
      g(r + 2, c) = -s[r][c];
    }
  return g;
}

Mat<double, 4> make_n_block(double lower_sign) {
  // diag(J, lower_sign * J) with J the 2x2 symplectic unit.
  Mat<double, 4> m;
  m(0, 1) = -1.0;
  m(1, 0) = 1.0;
  m(2, 3) = -lower_sign;
  m(3, 2) = lower_sign;
  return m;
}

Mat8r make_n() {
  const Mat<double, 4> na = make_n_block(+1.0);
  const Mat<double, 4> nb = make_n_block(-1.0);
  Mat8r m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      m(r, c) = na(r, c);
      m(r + 4, c + 4) = nb(r, c);
    }
  return m;
}

Mat8c make_s() {
  const cplx I(0.0, 1.0);
  const double w = 1.0 / std::sqrt(2.0);
  const cplx tbl[8][8] = {
      {-1, I, 0, 0, 0, 0, 0, 0},  {0, 0, 1, -I, 0, 0, 0, 0},
      {0, 0, 0, 0, -I, -1, 0, 0}, {0, 0, 0, 0, 0, 0, I, -1},
      {0, 0, -1, -I, 0, 0, 0, 0}, {-1, -I, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, -I, -1}, {0, 0, 0, 0, -I, 1, 0, 0}};
  Mat8c m;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) m(r, c) = w * tbl[r][c];
  return m;
}

Mat4c complex_block(const Mat<double, 4>& m) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = m(i, j);
  return r;
}

void check_range(int alpha) {
  if (alpha < 0 || alpha > 3)
    throw std::out_of_range("spacetime index must be in 0..3");
}

}  // namespace

const Mat8r& eta(int alpha) {
  check_range(alpha);
  static const std::array<Mat8r, 4> tbl = {make_eta(0), make_eta(1),
                                           make_eta(2), make_eta(3)};
  return tbl[static_cast<std::size_t>(alpha)];
}

const Mat4c& gamma(int alpha) {
  check_range(alpha);
  static const std::array<Mat4c, 4> tbl = {make_gamma(0), make_gamma(1),
                                           make_gamma(2), make_gamma(3)};
  return tbl[static_cast<std::size_t>(alpha)];
}

const Mat8r& n_matrix() {
  static const Mat8r n = make_n();
  return n;
}

const Mat4c& n_a() {
  static const Mat4c m = complex_block(make_n_block(+1.0));
  return m;
}

const Mat4c& n_b() {
  static const Mat4c m = complex_block(make_n_block(-1.0));
  return m;
}

const Mat8c& s_matrix() {
  static const Mat8c s = make_s();
  return s;
}

AlgebraSet AlgebraSet::canonical() {
  AlgebraSet set;
  for (int a = 0; a < 4; ++a) {
    set.eta[static_cast<std::size_t>(a)] = rdf::eta(a);
    set.gamma[static_cast<std::size_t>(a)] = rdf::gamma(a);
  }
  set.n = n_matrix();
  set.s = s_matrix();
  set.nb = n_b();
  return set;
}

namespace {

void add_check(AlgebraReport& rep, const std::string& name, double dev,
               double tol) {
  IdentityCheck c;
  c.name = name;
  c.max_abs_deviation = dev;
  c.pass = dev <= tol;
  rep.worst_deviation = std::max(rep.worst_deviation, dev);
  rep.all_pass = rep.all_pass && c.pass;
  rep.checks.push_back(std::move(c));
}

}  // namespace

AlgebraReport verify_algebra(const AlgebraSet& set, double tol) {
  AlgebraReport rep;
  const auto& E = set.eta;
  const Mat8r id8 = Mat8r::identity();

  // Clifford relation, all 16 pairs. Integer arithmetic: demand exact zero.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto& ea = E[static_cast<std::size_t>(a)];
      const auto& eb = E[static_cast<std::size_t>(b)];
      const Mat8r lhs = ea * eb + eb * ea - 2.0 * metric(a, b) * id8;
      add_check(rep,
                "clifford_eta(" + std::to_string(a) + "," + std::to_string(b) +
                    ")",
                lhs.max_abs(), 0.0);
    }

  // N identities.
  add_check(rep, "n_antihermitian", (adjoint(set.n) + set.n).max_abs(), 0.0);
  add_check(rep, "n_squared_is_minus_identity",
            (set.n * set.n + id8).max_abs(), 0.0);
  {
    double dev = 0.0;
    for (const auto& ea : E)
      dev = std::max(dev, (set.n * ea - ea * set.n).max_abs());
    add_check(rep, "n_commutes_with_eta", dev, 0.0);
  }

  // S unitarity.
  add_check(rep, "s_unitary",
            (set.s * adjoint(set.s) - Mat8c::identity()).max_abs(), tol);

  // N_b against the gammas: commutes except with gamma^2, anticommutes there.
  for (int b = 0; b < 4; ++b) {
    const auto& g = set.gamma[static_cast<std::size_t>(b)];
    const Mat4c lhs =
        b == 2 ? set.nb * g + g * set.nb : set.nb * g - g * set.nb;
    const std::string rel = b == 2 ? "anticommutes" : "commutes";
    add_check(rep, "nb_" + rel + "_gamma" + std::to_string(b), lhs.max_abs(),
              0.0);
  }

  // S-conjugation of eta must give the gamma block pair, for every alpha.
  {
    double dev = 0.0;
    const Mat8c sdag = adjoint(set.s);
    for (int a = 0; a < 4; ++a) {
      const Mat8c conj8 = set.s * to_complex(E[static_cast<std::size_t>(a)]) * sdag;
      Mat8c expect;
      const auto& g = set.gamma[static_cast<std::size_t>(a)];
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          expect(r, c) = g(r, c);
          expect(r + 4, c + 4) = g(r, c);
        }
      dev = std::max(dev, (conj8 - expect).max_abs());
    }
    add_check(rep, "s_eta_sdag_gamma_blocks", dev, tol);
  }

  // S-conjugation of N: diag(-i, +i).
  {
    const cplx I(0.0, 1.0);
    Mat8c expect;
    for (int i = 0; i < 4; ++i) {
      expect(i, i) = -I;
      expect(i + 4, i + 4) = I;
    }
    const Mat8c conj8 = set.s * to_complex(set.n) * adjoint(set.s);
    add_check(rep, "s_n_sdag_imaginary_split", (conj8 - expect).max_abs(),
              tol);
  }

  return rep;
}

}  // namespace rdf
