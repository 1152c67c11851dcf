#include "rdf/lattice.hpp"

#include <cmath>
#include <complex>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "rdf/algebra.hpp"

namespace rdf {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

using Field = std::vector<RealField8>;

// 4th-order central periodic difference along z.
RealField8 dz4(const Field& phi, int j, int n, double dz) {
  const auto& p1 = phi[static_cast<std::size_t>((j + 1) % n)];
  const auto& m1 = phi[static_cast<std::size_t>((j - 1 + n) % n)];
  const auto& p2 = phi[static_cast<std::size_t>((j + 2) % n)];
  const auto& m2 = phi[static_cast<std::size_t>((j - 2 + n) % n)];
  return (1.0 / (12.0 * dz)) * (8.0 * (p1 - m1) - (p2 - m2));
}

// d0 Phi = kappa M_j Phi_j - eta0 eta3 d3 Phi, M_j = eta0 (1+a_j) N.
Field rhs(const Field& phi, const Grid1D& g, const std::vector<Mat8r>& mass,
          const Mat8r& adv) {
  const int n = g.n_z;
  Field out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const std::size_t k = static_cast<std::size_t>(j);
    const RealField8 d3 = dz4(phi, j, n, g.dz);
    const Mat8r& m = mass.size() == 1 ? mass[0] : mass[k];
    out[k] = m * phi[k] - adv * d3;
  }
  return out;
}

std::vector<Mat8r> build_mass_matrices(
    double kappa, const Grid1D& g,
    const std::optional<LatticePotential>& pot) {
  const Mat8r e0n = eta(0) * n_matrix();
  if (!pot) return {kappa * e0n};
  if (static_cast<int>(pot->A.size()) != g.n_z)
    throw std::invalid_argument("lattice potential size does not match grid");
  std::vector<Mat8r> mats(static_cast<std::size_t>(g.n_z));
  for (int j = 0; j < g.n_z; ++j) {
    const std::size_t k = static_cast<std::size_t>(j);
    const double s = a_squared_scalar(pot->A[k], pot->params.e, pot->params.K);
    if (std::abs(1.0 - s) <= 1e-12) throw singular_potential_error(s);
    const Mat8r a = a_op(pot->A[k], pot->params.e, pot->params.K);
    mats[k] = kappa * (eta(0) * ((Mat8r::identity() + a) * n_matrix()));
  }
  return mats;
}

void axpy(Field& y, double a, const Field& x) {
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = y[j] + a * x[j];
}

bool finite(const Field& phi) {
  for (const auto& v : phi)
    for (int i = 0; i < 8; ++i)
      if (!std::isfinite(v[i])) return false;
  return true;
}

}  // namespace

void Grid1D::validate() const {
  if (n_z < 16 || !(dz > 0.0))
    throw std::invalid_argument("grid: need n_z >= 16 and dz > 0");
}

void EvolveConfig::validate(const Grid1D& g) const {
  g.validate();
  if (!(dt > 0.0) || n_steps < 0 || sample_every < 1)
    throw std::invalid_argument("evolve config: bad dt / n_steps / sample_every");
  if (dt / g.dz > cfl_limit)
    throw std::invalid_argument("evolve config: CFL violated, dt/dz = " +
                                std::to_string(dt / g.dz) + " > " +
                                std::to_string(cfl_limit) +
                                "; refusing to start");
}

LatticeState LatticeState::zero(const Grid1D& g) {
  g.validate();
  LatticeState s;
  s.grid = g;
  s.phi.assign(static_cast<std::size_t>(g.n_z), RealField8{});
  return s;
}

LatticeState LatticeState::sample(const Grid1D& g, const FieldSampler& f,
                                  double t) {
  LatticeState s = zero(g);
  s.t = t;
  for (int j = 0; j < g.n_z; ++j) {
    FourVector x;
    x[0] = t;
    x[3] = j * g.dz;
    const ComplexField8 v = f.value(x);
    for (int i = 0; i < 8; ++i) s.phi[static_cast<std::size_t>(j)][i] = v[i].real();
  }
  return s;
}

std::vector<RealField8> time_derivative(
    const LatticeState& s, double kappa,
    const std::optional<LatticePotential>& pot) {
  s.grid.validate();
  const auto mass = build_mass_matrices(kappa, s.grid, pot);
  return rhs(s.phi, s.grid, mass, eta(0) * eta(3));
}

double lattice_charge(const LatticeState& s, double kappa,
                      const NormalizationLedger& led) {
  double sum = 0.0;
  for (const auto& v : s.phi) sum += v.norm2();
  const double L = s.grid.box_L();
  return led.const_Q * 2.0 * kappa * kappa * sum * s.grid.dz * L * L;
}

double lattice_momentum3(const LatticeState& s, double kappa,
                         const NormalizationLedger& led) {
  const int n = s.grid.n_z;
  const Mat8r& N = n_matrix();
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    // d^3 = -d_z
    const RealField8 d3 = -1.0 * dz4(s.phi, j, n, s.grid.dz);
    sum += dot(s.phi[static_cast<std::size_t>(j)], N * d3);
  }
  const double L = s.grid.box_L();
  return led.const_P * (-2.0 * kappa * led.K) * sum * s.grid.dz * L * L;
}

double lattice_spin3(const LatticeState& s, double kappa,
                     const NormalizationLedger& led) {
  const Mat8r m = eta(1) * eta(2) * n_matrix();
  double sum = 0.0;
  for (const auto& v : s.phi) sum += dot(v, m * v);
  const double L = s.grid.box_L();
  return led.const_M * (-kappa * led.K) * sum * s.grid.dz * L * L;
}

namespace {

MonitorSample make_monitor(const LatticeState& s, double kappa,
                           const NormalizationLedger& led,
                           const std::optional<PlaneWaveParams>& wave,
                           const std::optional<FieldSampler>& exact) {
  MonitorSample m;
  m.t = s.t;
  m.Q = lattice_charge(s, kappa, led);
  m.P3 = lattice_momentum3(s, kappa, led);
  m.S3 = lattice_spin3(s, kappa, led);
  m.max_imag = 0.0;  // real storage: no imaginary channel exists
  if (wave && exact) {
    const int n = s.grid.n_z;
    std::complex<double> c_num = 0.0, c_exact = 0.0;
    double err = 0.0;
    for (int j = 0; j < n; ++j) {
      FourVector x;
      x[0] = s.t;
      x[3] = j * s.grid.dz;
      const ComplexField8 ve = exact->value(x);
      const auto& vn = s.phi[static_cast<std::size_t>(j)];
      for (int i = 0; i < 8; ++i)
        err = std::max(err, std::abs(vn[i] - ve[i].real()));
      const std::complex<double> mode =
          std::exp(std::complex<double>(0.0, wave->k * x[3]));
      c_num += std::complex<double>(vn[0], vn[1]) * mode;
      c_exact += std::complex<double>(ve[0].real(), ve[1].real()) * mode;
    }
    m.max_err = err;
    if (std::abs(c_exact) > 1e-12 && std::abs(c_num) > 1e-12)
      m.phase_err = std::arg(c_num * std::conj(c_exact));
  }
  return m;
}

}  // namespace

EvolveResult evolve(const LatticeState& initial, const EvolveConfig& cfg,
                    double kappa, const NormalizationLedger& led,
                    const std::optional<PlaneWaveParams>& wave,
                    const std::optional<LatticePotential>& pot) {
  cfg.validate(initial.grid);
  const auto mass = build_mass_matrices(kappa, initial.grid, pot);
  const Mat8r adv = eta(0) * eta(3);
  const Grid1D& g = initial.grid;

  std::optional<FieldSampler> exact;
  if (wave) exact = plane_wave_phi(*wave);

  EvolveResult out;
  out.final_state = initial;
  Field& phi = out.final_state.phi;
  out.monitors.push_back(
      make_monitor(out.final_state, kappa, led, wave, exact));

  for (int step = 0; step < cfg.n_steps; ++step) {
    const double dt = cfg.dt;
    const Field k1 = rhs(phi, g, mass, adv);
    Field tmp = phi;
    axpy(tmp, 0.5 * dt, k1);
    const Field k2 = rhs(tmp, g, mass, adv);
    tmp = phi;
    axpy(tmp, 0.5 * dt, k2);
    const Field k3 = rhs(tmp, g, mass, adv);
    tmp = phi;
    axpy(tmp, dt, k3);
    const Field k4 = rhs(tmp, g, mass, adv);

    axpy(phi, dt / 6.0, k1);
    axpy(phi, dt / 3.0, k2);
    axpy(phi, dt / 3.0, k3);
    axpy(phi, dt / 6.0, k4);
    out.final_state.t = initial.t + (step + 1) * dt;

    if ((step + 1) % cfg.sample_every == 0 || step + 1 == cfg.n_steps) {
      if (!finite(phi))
        throw std::runtime_error("evolve: non-finite field at step " +
                                 std::to_string(step + 1));
      out.monitors.push_back(
          make_monitor(out.final_state, kappa, led, wave, exact));
    }
  }
  return out;
}

MassRotationReport mass_rotation_check(double kappa, double dt, int n_steps) {
  Grid1D g;
  g.n_z = 16;
  g.dz = std::max(1.0, 2.0 * dt / 0.5);  // uniform field: dz only gates CFL
  LatticeState s = LatticeState::zero(g);
  RealField8 phi0;
  for (int i = 0; i < 8; ++i) phi0[i] = 1.0 - 0.2 * i;
  for (auto& v : s.phi) v = phi0;

  const Mat8r e0n = eta(0) * n_matrix();
  auto exact_at = [&](double t) {
    // exp(t kappa eta0 N) = cos(kappa t) + sin(kappa t) eta0 N
    return std::cos(kappa * t) * phi0 + std::sin(kappa * t) * (e0n * phi0);
  };

  EvolveConfig cfg;
  cfg.dt = dt;
  cfg.n_steps = n_steps;
  cfg.sample_every = std::max(1, n_steps / 64);

  MassRotationReport rep;
  const double T = kappa != 0.0 ? kTwoPi / kappa : 0.0;
  LatticeState cur = s;
  double t = 0.0;
  int half_step = -1, full_step = -1;
  if (kappa != 0.0) {
    half_step = static_cast<int>(std::lround(0.5 * T / dt));
    full_step = static_cast<int>(std::lround(T / dt));
  }
  for (int step = 0; step < n_steps; ++step) {
    EvolveConfig one;
    one.dt = dt;
    one.n_steps = 1;
    one.sample_every = 1;
    NormalizationLedger led;
    cur = evolve(cur, one, kappa, led).final_state;
    t = (step + 1) * dt;
    const RealField8 ex = exact_at(t);
    double err = 0.0;
    for (const auto& v : cur.phi) err = std::max(err, (v - ex).max_abs());
    rep.max_err_vs_exact = std::max(rep.max_err_vs_exact, err);
    if (step + 1 == half_step) {
      for (const auto& v : cur.phi)
        rep.err_half_period = std::max(rep.err_half_period, (v + phi0).max_abs());
    }
    if (step + 1 == full_step) {
      for (const auto& v : cur.phi)
        rep.err_full_period = std::max(rep.err_full_period, (v - phi0).max_abs());
    }
  }
  if (kappa == 0.0) {
    for (const auto& v : cur.phi)
      rep.err_full_period = std::max(rep.err_full_period, (v - phi0).max_abs());
  }
  return rep;
}

void write_snapshot(std::ostream& os, const LatticeState& s) {
  const char magic[4] = {'R', 'D', 'F', '1'};
  os.write(magic, 4);
  const std::uint32_t n = static_cast<std::uint32_t>(s.grid.n_z);
  os.write(reinterpret_cast<const char*>(&n), 4);
  const char zeros[8] = {};
  os.write(zeros, 8);
  for (const auto& v : s.phi)
    os.write(reinterpret_cast<const char*>(v.c.data()), 8 * sizeof(double));
}

LatticeState read_snapshot(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "RDF1", 4) != 0)
    throw std::runtime_error("snapshot: bad magic");
  std::uint32_t n = 0;
  is.read(reinterpret_cast<char*>(&n), 4);
  char reserved[8];
  is.read(reserved, 8);
  LatticeState s;
  s.grid.n_z = static_cast<int>(n);
  s.grid.dz = 0.0;  // not stored in the format; caller supplies the grid step
  s.phi.assign(n, RealField8{});
  for (auto& v : s.phi)
    is.read(reinterpret_cast<char*>(v.c.data()), 8 * sizeof(double));
  if (!is) throw std::runtime_error("snapshot: truncated payload");
  return s;
}

}  // namespace rdf
