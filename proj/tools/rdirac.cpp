// rdirac: command-line front end for the real-domain Dirac field library.
// Subcommands expose the verification suites, exact solutions, conserved
// functionals, the hydrogen solver, and lattice evolution with
// machine-readable JSON/CSV output.
//
// Exit codes: 0 = all checks within tolerance, 1 = a verification failed,
// 2 = usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdf/algebra.hpp"
#include "rdf/conserved.hpp"
#include "rdf/free_field.hpp"
#include "rdf/hydrogen.hpp"
#include "rdf/interaction.hpp"
#include "rdf/lattice.hpp"
#include "rdf/representations.hpp"

using json = nlohmann::json;
using namespace rdf;

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr double kAlphaFS = 1.0 / 137.035999;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output path " + out_path);
  f << text;
}

json ledger_json(const NormalizationLedger& led) {
  return json{{"const_q", led.const_Q}, {"const_p", led.const_P},
              {"const_m", led.const_M}, {"k_constant", led.K},
              {"kappa", led.kappa},     {"box_l", led.box_L},
              {"k_note", led.k_note}};
}

// Plane wave with an adjustable frequency factor; detune != 1 breaks the
// dispersion relation on purpose (negative control).
FieldSampler detuned_wave(const PlaneWaveParams& p, double detune) {
  const double k0 = detune * p.k0();
  const double kap = p.kappa;
  const double k = p.k;
  const double lam = k / (k0 + kap);
  const double amp = std::sqrt((k0 + kap) / k0);
  auto base = [=](double th, bool deriv) {
    RealField8 v;
    const double c = std::cos(th), s = std::sin(th);
    if (!deriv) {
      v[0] = -amp * c;
      v[1] = -amp * s;
      v[4] = amp * lam * s;
      v[5] = -amp * lam * c;
    } else {
      v[0] = amp * s;
      v[1] = -amp * c;
      v[4] = amp * lam * c;
      v[5] = amp * lam * s;
    }
    return v;
  };
  auto theta = [=](const FourVector& x) { return k0 * x[0] - k * x[3]; };
  auto dtheta = [=](int mu) { return mu == 0 ? k0 : (mu == 3 ? -k : 0.0); };
  FieldSampler s;
  s.value = [=](const FourVector& x) { return to_complex(base(theta(x), false)); };
  s.d1 = [=](const FourVector& x, int mu) {
    return to_complex(dtheta(mu) * base(theta(x), true));
  };
  s.d2 = [=](const FourVector& x, int mu, int nu) {
    return to_complex((-dtheta(mu) * dtheta(nu)) * base(theta(x), false));
  };
  return s;
}

// ---------------------------------------------------------------- verify
int run_verify_algebra(bool tamper, const std::string& out) {
  AlgebraSet set = AlgebraSet::canonical();
  if (tamper) set.eta[1](0, 0) += 1e-3;
  const AlgebraReport rep = verify_algebra(set);

  json jid = json::array();
  for (const auto& c : rep.checks)
    jid.push_back(json{{"identity_name", c.name},
                       {"max_abs_deviation", c.max_abs_deviation},
                       {"pass", c.pass}});
  const json j{{"all_pass", rep.all_pass},
               {"worst_deviation", rep.worst_deviation},
               {"identity_count", rep.checks.size()},
               {"tampered", tamper},
               {"identities", jid}};
  emit(j.dump(2) + "\n", out);
  return rep.all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- planewave
int run_planewave(double kappa, double k, double L, int nz, int nt, double t0,
                  double t1, double tol, double detune,
                  const std::string& out) {
  PlaneWaveParams p;
  p.kappa = kappa;
  p.k = k;
  p.box_L = L;
  p.validate();
  const FieldSampler f =
      detune == 1.0 ? plane_wave_phi(p) : detuned_wave(p, detune);

  std::ostringstream csv;
  csv << "x0,z,phi1,phi2,phi3,phi4,phi5,phi6,phi7,phi8,residual_max,norm2\n";
  bool ok = true;
  for (int it = 0; it < nt; ++it) {
    const double t = nt == 1 ? t0 : t0 + (t1 - t0) * it / (nt - 1);
    for (int jz = 0; jz < nz; ++jz) {
      FourVector x;
      x[0] = t;
      x[3] = L * jz / nz;
      const ComplexField8 v = f.value(x);
      const ComplexField8 res = dirac_op(f, x, 0.0) - kappa * (n_matrix() * v);
      const double rmax = res.max_abs();
      const double norm2 = v.norm2();
      ok = ok && rmax <= tol && std::abs(norm2 - 2.0) <= tol;
      csv << fmt17(t) << ',' << fmt17(x[3]);
      for (int i = 0; i < 8; ++i) csv << ',' << fmt17(v[i].real());
      csv << ',' << fmt17(rmax) << ',' << fmt17(norm2) << '\n';
    }
  }
  emit(csv.str(), out);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- conserved
int run_conserved(double kappa, double k, double L, int nz, double k_factor,
                  double t, double tol, const std::string& out) {
  PlaneWaveParams p;
  p.kappa = kappa;
  p.k = k;
  p.box_L = L;
  p.validate();
  BoxVolume vol;
  vol.length = L;
  vol.n_points = nz;
  vol.check_k = k;
  vol.validate();
  NormalizationLedger led = select_normalization(kappa, L);
  led.K *= k_factor;

  const FieldSampler phi = plane_wave_phi(p);
  const FieldSampler psi = derived_psi_sampler(phi, 0.0);

  const ConservedSet cons = evaluate_conserved(phi, psi, kappa, led, vol, t);
  const double Q = cons.Q;
  const auto& P = cons.P;
  const double S = cons.S3;
  const double Qf = charge_Q_family(phi, kappa, led, vol, t);
  const auto Pf = momentum_P_family(phi, kappa, led, vol, t);
  const double Sf = spin_S3_family(phi, kappa, led, vol, t);
  const double S_non = spin_S3_family_without_n(phi, kappa, led, vol, t);

  double family_dev = std::abs(Q - Qf);
  for (int a = 0; a < 4; ++a)
    family_dev = std::max(family_dev,
                          std::abs(P[static_cast<std::size_t>(a)] -
                                   Pf[static_cast<std::size_t>(a)]));
  family_dev = std::max(family_dev, std::abs(S - Sf));

  const double t2 = t + 0.37;
  double constancy = std::abs(charge_Q(phi, psi, kappa, led, vol, t2) - Q);
  constancy = std::max(
      constancy, std::abs(momentum_P(phi, psi, kappa, led, vol, t2)[0] - P[0]));
  constancy =
      std::max(constancy, std::abs(spin_S3(phi, psi, kappa, led, vol, t2) - S));

  const bool pass = family_dev <= tol && constancy <= tol;
  const json j{
      {"kappa", kappa},
      {"k", k},
      {"k0", p.k0()},
      {"box_l", L},
      {"n_points", nz},
      {"ledger", ledger_json(led)},
      {"q", Q},
      {"p", {P[0], P[1], P[2], P[3]}},
      {"s3", S},
      {"family_q", Qf},
      {"family_p", {Pf[0], Pf[1], Pf[2], Pf[3]}},
      {"family_s3", Sf},
      {"spin_family_without_n", S_non},
      {"checks",
       {{"family_agreement_dev", family_dev},
        {"time_constancy_dev", constancy},
        {"pass", pass}}},
      {"quantum_numbers",
       {{"q_minus_1", Q - 1.0},
        {"p0_minus_k0", P[0] - p.k0()},
        {"p3_minus_k", P[3] - k},
        {"s3_minus_half", S - 0.5}}}};
  emit(j.dump(2) + "\n", out);
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- maxwell
int run_maxwell_check(int n_points, double tol, const std::string& out) {
  std::mt19937 gen(777u);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  auto rnd_point = [&]() {
    FourVector x;
    for (int mu = 0; mu < 4; ++mu) x[mu] = dist(gen);
    return x;
  };

  // Vacuum wave A^alpha = eps^alpha sin(k.x), k null, k.eps = 0, C = 0.
  EMPotentials wave = EMPotentials::zero();
  auto phase = [](const FourVector& x) { return x[0] - x[3]; };
  wave.A.value = [phase](const FourVector& x) {
    return std::array<double, 4>{0.0, std::sin(phase(x)), 0.0, 0.0};
  };
  wave.A.grad = [phase](const FourVector& x, int mu) {
    std::array<double, 4> d{};
    const double sgn = mu == 0 ? 1.0 : (mu == 3 ? -1.0 : 0.0);
    d[1] = sgn * std::cos(phase(x));
    return d;
  };

  double wave_residual = 0.0;
  for (int i = 0; i < n_points; ++i)
    wave_residual = std::max(wave_residual,
                             maxwell_residual(wave, rnd_point(), default_step(1.0)).max_abs());

  // Generic smooth potentials: slot assembly must equal D of the column.
  EMPotentials em = EMPotentials::zero();
  em.A.value = [](const FourVector& x) {
    return std::array<double, 4>{std::sin(x[1] + 0.3 * x[0]),
                                 std::cos(0.7 * x[2]), 0.4 * std::sin(x[3]),
                                 std::cos(x[0] - x[1])};
  };
  em.A.grad = [](const FourVector& x, int mu) {
    std::array<double, 4> d{};
    d[0] = std::cos(x[1] + 0.3 * x[0]) * (mu == 1 ? 1.0 : (mu == 0 ? 0.3 : 0.0));
    d[1] = -std::sin(0.7 * x[2]) * (mu == 2 ? 0.7 : 0.0);
    d[2] = 0.4 * std::cos(x[3]) * (mu == 3 ? 1.0 : 0.0);
    d[3] = -std::sin(x[0] - x[1]) * (mu == 0 ? 1.0 : (mu == 1 ? -1.0 : 0.0));
    return d;
  };
  em.C.value = [](const FourVector& x) {
    return std::array<double, 4>{0.2 * std::cos(x[3]), std::sin(x[0] + x[2]),
                                 0.0, 0.5 * std::cos(x[1])};
  };
  em.C.grad = [](const FourVector& x, int mu) {
    std::array<double, 4> d{};
    d[0] = -0.2 * std::sin(x[3]) * (mu == 3 ? 1.0 : 0.0);
    d[1] = std::cos(x[0] + x[2]) * ((mu == 0 || mu == 2) ? 1.0 : 0.0);
    d[3] = -0.5 * std::sin(x[1]) * (mu == 1 ? 1.0 : 0.0);
    return d;
  };

  const FieldSampler col = em_phi_column(em);
  double assembly_dev = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const FourVector x = rnd_point();
    const RealField8 psi = maxwell_assemble(em, x, default_step(1.0));
    assembly_dev = std::max(
        assembly_dev, (to_complex(psi) - dirac_op(col, x, default_step(1.0))).max_abs());
  }

  const bool pass = wave_residual <= tol && assembly_dev <= tol;
  const json j{{"n_points", n_points},
               {"vacuum_wave_residual_max", wave_residual},
               {"slot_assembly_max_dev", assembly_dev},
               {"tolerance", tol},
               {"pass", pass}};
  emit(j.dump(2) + "\n", out);
  return pass ? 0 : 1;
}

// ------------------------------------------------------------- interaction
int run_interaction_check(int samples, unsigned seed, const std::string& field,
                          double tol_identity, double tol_residual,
                          const std::string& out) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-0.4, 0.4);
  auto rnd_pot = [&]() {
    std::array<double, 4> a{};
    for (auto& v : a) v = dist(gen);
    return a;
  };

  CouplingParams cp;
  cp.e = -std::sqrt(kAlphaFS);
  cp.K = 1.0;
  cp.kappa = 1.0;

  double f1_dev = 0.0, f2inv_dev = 0.0, half_dev = 0.0, asq_dev = 0.0,
         source_dev = 0.0;
  std::uniform_real_distribution<double> fdist(-1.0, 1.0);
  for (int i = 0; i < samples; ++i) {
    const auto A = rnd_pot();
    const auto [f1, f2] = f1_f2(A, cp.e, cp.K);
    const Mat8r a = a_op(A, cp.e, cp.K);
    const Mat8r id = Mat8r::identity();
    f1_dev = std::max(f1_dev, (f1 * (id + a) - id).max_abs());
    f2inv_dev = std::max(f2inv_dev, (f2 - invert(f1)).max_abs());
    half_dev =
        std::max(half_dev, (0.5 * (f2 + invert(f1)) - (id + a)).max_abs());
    asq_dev = std::max(
        asq_dev, (a * a - a_squared_scalar(A, cp.e, cp.K) * id).max_abs());

    RealField8 phi;
    for (int c = 0; c < 8; ++c) phi[c] = fdist(gen);
    const ComplexField8 phic = to_complex(phi);
    const ComplexField8 psic = interacting_family_psi(phic, A, cp);
    const auto full = em_source(phic, psic, A, cp);
    const auto fam = em_source_family(phic, cp);
    for (int b = 0; b < 4; ++b)
      source_dev = std::max(source_dev,
                            std::abs(full[static_cast<std::size_t>(b)] -
                                     fam[static_cast<std::size_t>(b)]));
  }

  // Linearization order via Richardson on a fixed configuration.
  PlaneWaveParams pw;
  pw.kappa = cp.kappa;
  pw.k = 1.3;
  const FieldSampler phi_s = plane_wave_phi(pw);
  FourVector x0;
  x0[0] = 0.4;
  x0[3] = 1.2;
  const double L_free = lagrangian_density(phi_s, cp.kappa, cp.K, x0, 0.0);
  const auto jcur =
      linearized_current(phi_s.value(x0), dirac_op(phi_s, x0, 0.0), cp);
  const std::array<double, 4> A_base = {0.37, -0.21, 0.11, 0.44};
  auto remainder = [&](double lam) {
    std::array<double, 4> A{};
    for (int b = 0; b < 4; ++b)
      A[static_cast<std::size_t>(b)] = lam * A_base[static_cast<std::size_t>(b)];
    FourPotentialFn fn;
    fn.value = [A](const FourVector&) { return A; };
    fn.grad = [](const FourVector&, int) { return std::array<double, 4>{}; };
    const double L_int = lagrangian_density_int(phi_s, fn, cp, x0, 0.0);
    double aj = A[0] * jcur[0];
    for (int b = 1; b < 4; ++b)
      aj -= A[static_cast<std::size_t>(b)] * jcur[static_cast<std::size_t>(b)];
    return L_int - (L_free - aj);
  };
  const double order =
      std::log2(std::abs(remainder(0.02)) / std::abs(remainder(0.01)));

  // Residual of the chosen field configuration at the zero potential.
  FieldSampler probe;
  if (field == "random") {
    probe.value = [](const FourVector& x) {
      ComplexField8 v;
      for (int i = 0; i < 8; ++i)
        v[i] = std::sin((1.0 + 0.3 * i) * x[0] + 0.7 * i * x[3] + 0.2 * i * i);
      return v;
    };
  } else {
    probe = phi_s;
  }
  FourPotentialFn zero_pot;
  zero_pot.value = [](const FourVector&) { return std::array<double, 4>{}; };
  zero_pot.grad = [](const FourVector&, int) { return std::array<double, 4>{}; };
  double residual_max = 0.0;
  std::uniform_real_distribution<double> pdist(-2.0, 2.0);
  for (int i = 0; i < 16; ++i) {
    FourVector x;
    x[0] = pdist(gen);
    x[3] = pdist(gen);
    residual_max =
        std::max(residual_max,
                 interacting_residual(probe, zero_pot, cp, x, default_step(cp.kappa)).max_abs());
  }

  const bool identities_ok = f1_dev <= tol_identity &&
                             f2inv_dev <= tol_identity &&
                             half_dev <= tol_identity && order >= 1.9 &&
                             source_dev <= 1e-9;
  const bool field_ok = residual_max <= tol_residual;
  const bool pass = identities_ok && field_ok;
  const json j{{"samples", samples},
               {"seed", seed},
               {"f1_identity_max_dev", f1_dev},
               {"f2_vs_f1_inverse_max_dev", f2inv_dev},
               {"half_sum_max_dev", half_dev},
               {"a_squared_scalar_max_dev", asq_dev},
               {"linearization_order", order},
               {"em_source_family_max_dev", source_dev},
               {"field", field},
               {"field_residual_max", residual_max},
               {"pass", pass}};
  emit(j.dump(2) + "\n", out);
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- hydrogen
int run_hydrogen(double Z, double alpha, double kappa, int grid_points,
                 double tol, const std::string& csv_path,
                 const std::string& out) {
  const RadialGroundState st = hydrogen_ground_state(Z, alpha, kappa);
  ShootingOptions opt;
  opt.n_points = grid_points;
  const ShootingSolution sol = hydrogen_shoot(Z, alpha, kappa, opt);

  const double a = st.bohr_radius();
  double gmax = 0.0, fmax = 0.0, gdev = 0.0, fdev = 0.0;
  for (std::size_t i = 0; i < sol.r.size(); ++i) {
    gmax = std::max(gmax, std::abs(st.g(sol.r[i])));
    fmax = std::max(fmax, std::abs(st.f(sol.r[i])));
  }
  for (std::size_t i = 0; i < sol.r.size(); ++i) {
    const double r = sol.r[i];
    if (r < 0.01 * a || r > 20.0 * a) continue;
    gdev = std::max(gdev, std::abs(sol.g[i] - st.g(r)) / gmax);
    fdev = std::max(fdev, std::abs(sol.f[i] - st.f(r)) / fmax);
  }

  CouplingParams cp;
  cp.e = -std::sqrt(alpha);
  cp.K = kappa;
  cp.kappa = kappa;
  const HydrogenObservables obs = hydrogen_observables(st, cp);

  const FieldSampler phi = hydrogen_phi(st);
  const FourPotentialFn A = coulomb_potential(Z, std::abs(cp.e));
  double spinor_residual = 0.0;
  std::mt19937 gen(4242u);
  std::uniform_real_distribution<double> rdist(0.05, 20.0);
  std::uniform_real_distribution<double> tdist(0.0, 2.0);
  for (int i = 0; i < 40; ++i) {
    const double r = rdist(gen) * a;
    FourVector x;
    x[0] = tdist(gen);
    x[1] = 0.48 * r;
    x[2] = 0.6 * r;
    x[3] = 0.64 * r;
    spinor_residual = std::max(
        spinor_residual,
        interacting_residual(phi, A, cp, x, 0.0).spinor_form.max_abs());
  }

  const double k0_dev = std::abs(sol.k0 / kappa - st.k0 / kappa);
  const bool pass = k0_dev <= tol && gdev <= tol && fdev <= tol &&
                    std::abs(obs.Q - 1.0) <= tol &&
                    std::abs(obs.P0 - st.k0) <= tol && spinor_residual <= tol;

  const json j{{"z", Z},
               {"alpha", alpha},
               {"kappa", kappa},
               {"gamma", st.gamma_exp},
               {"k0_over_kappa", st.k0 / kappa},
               {"k0_over_kappa_shooting", sol.k0 / kappa},
               {"k0_shooting_abs_dev", k0_dev},
               {"profile_rel_dev_g", gdev},
               {"profile_rel_dev_f", fdev},
               {"q", obs.Q},
               {"p0", obs.P0},
               {"norm_integral", obs.norm_integral},
               {"singular_radius", obs.singular_radius},
               {"q_below_singular_shell", obs.q_below_singular_shell},
               {"spinor_residual_max", spinor_residual},
               {"bisection_steps", sol.bisection_steps},
               {"pass", pass}};
  emit(j.dump(2) + "\n", out);

  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "r,g,f\n";
    for (std::size_t i = 0; i < sol.r.size(); ++i)
      csv << fmt17(sol.r[i]) << ',' << fmt17(sol.g[i]) << ',' << fmt17(sol.f[i])
          << '\n';
    emit(csv.str(), csv_path);
  }
  return pass ? 0 : 1;
}

// ------------------------------------------------------------------ evolve
int run_evolve(double kappa, int k_mode, double L, int nz, double dt,
               int steps, int sample_every, const std::string& snapshot_prefix,
               int snapshot_every, const std::string& out) {
  PlaneWaveParams p;
  p.kappa = kappa;
  p.k = kTwoPi * k_mode / L;
  p.box_L = L;
  p.validate();

  Grid1D g;
  g.n_z = nz;
  g.dz = L / nz;
  LatticeState state = LatticeState::sample(g, plane_wave_phi(p), 0.0);
  const NormalizationLedger led = select_normalization(kappa, L);

  EvolveConfig cfg;
  cfg.dt = dt > 0.0 ? dt : g.dz / 4.0;
  cfg.n_steps = steps;
  cfg.sample_every = sample_every;

  std::vector<MonitorSample> monitors;
  auto write_snap = [&](const LatticeState& s, int step) {
    if (snapshot_prefix.empty()) return;
    char name[64];
    std::snprintf(name, sizeof(name), "_%06d.rdf", step);
    std::ofstream f(snapshot_prefix + name, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write snapshot file");
    write_snapshot(f, s);
  };

  write_snap(state, 0);
  if (snapshot_prefix.empty() || snapshot_every <= 0) {
    const EvolveResult r = evolve(state, cfg, kappa, led, p);
    monitors = r.monitors;
  } else {
    int done = 0;
    bool first = true;
    while (done < steps || first) {
      EvolveConfig chunk = cfg;
      chunk.n_steps = std::min(snapshot_every, steps - done);
      const EvolveResult r = evolve(state, chunk, kappa, led, p);
      state = r.final_state;
      done += chunk.n_steps;
      for (std::size_t i = first ? 0 : 1; i < r.monitors.size(); ++i)
        monitors.push_back(r.monitors[i]);
      first = false;
      write_snap(state, done);
      if (chunk.n_steps == 0) break;
    }
  }

  std::ostringstream csv;
  csv << "t,Q,P3,S3,phase_err\n";
  for (const auto& m : monitors)
    csv << fmt17(m.t) << ',' << fmt17(m.Q) << ',' << fmt17(m.P3) << ','
        << fmt17(m.S3) << ',' << fmt17(m.phase_err) << '\n';
  emit(csv.str(), out);
  return 0;
}

// --------------------------------------------------------------- transform
int run_transform(const std::vector<double>& phi_in,
                  const std::vector<double>& psi_in, double kappa,
                  const std::string& out) {
  if (kappa == 0.0)
    throw std::invalid_argument("transform: kappa must be nonzero");
  RealField8 phi;
  for (int i = 0; i < 8; ++i) phi[i] = phi_in[static_cast<std::size_t>(i)];
  RealField8 psi;
  if (!psi_in.empty())
    for (int i = 0; i < 8; ++i) psi[i] = psi_in[static_cast<std::size_t>(i)];
  else
    psi = family_psi(phi, kappa);

  const auto [p1, p2] = compose_psi12(phi, psi, kappa);
  const auto [phi_back, psi_back] = decompose_psi12(p1, p2, kappa);
  const double roundtrip =
      std::max((phi_back - phi).max_abs(), (psi_back - psi).max_abs());

  const DiracPair d = to_dirac(phi);
  const double constraint = (d.phi_b - n_b() * conj(d.phi_a)).max_abs();
  const double dirac_roundtrip = (from_dirac(d.phi_a) - phi).max_abs();

  auto real_arr = [](const RealField8& v) {
    json a = json::array();
    for (int i = 0; i < 8; ++i) a.push_back(v[i]);
    return a;
  };
  auto re_arr = [](const auto& v, int n) {
    json a = json::array();
    for (int i = 0; i < n; ++i) a.push_back(v[i].real());
    return a;
  };
  auto im_arr = [](const auto& v, int n) {
    json a = json::array();
    for (int i = 0; i < n; ++i) a.push_back(v[i].imag());
    return a;
  };

  const json j{{"kappa", kappa},
               {"phi", real_arr(phi)},
               {"psi", real_arr(psi)},
               {"psi_i", {{"re", re_arr(p1, 8)}, {"im", im_arr(p1, 8)}}},
               {"psi_ii", {{"re", re_arr(p2, 8)}, {"im", im_arr(p2, 8)}}},
               {"dirac",
                {{"phi_a_re", re_arr(d.phi_a, 4)},
                 {"phi_a_im", im_arr(d.phi_a, 4)},
                 {"phi_b_re", re_arr(d.phi_b, 4)},
                 {"phi_b_im", im_arr(d.phi_b, 4)}}},
               {"roundtrip_max_err", roundtrip},
               {"dirac_constraint_dev", constraint},
               {"dirac_roundtrip_max_err", dirac_roundtrip}};
  emit(j.dump(2) + "\n", out);
  return (roundtrip < 1e-12 && constraint < 1e-12 && dirac_roundtrip < 1e-12)
             ? 0
             : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"real-domain Dirac field toolkit"};
  app.require_subcommand(1);

  auto* sc_verify =
      app.add_subcommand("verify-algebra", "run the full matrix-identity suite");
  bool tamper = false;
  std::string verify_out;
  sc_verify->add_flag("--tamper-eta", tamper,
                      "perturb one entry of eta1 (negative control)");
  sc_verify->add_option("--out", verify_out, "output path (default stdout)");

  auto* sc_pw =
      app.add_subcommand("planewave", "sample the exact plane-wave solution");
  double pw_kappa = 1.0, pw_k = 1.0, pw_L = kTwoPi, pw_t0 = 0.0, pw_t1 = 0.0;
  double pw_tol = 1e-10, pw_detune = 1.0;
  int pw_nz = 32, pw_nt = 1;
  std::string pw_out;
  sc_pw->add_option("--kappa", pw_kappa, "mass parameter")
      ->check(CLI::PositiveNumber);
  sc_pw->add_option("--k", pw_k, "z wavenumber");
  sc_pw->add_option("--L", pw_L, "sampling length")->check(CLI::PositiveNumber);
  sc_pw->add_option("--nz", pw_nz, "z samples")->check(CLI::Range(1, 1 << 20));
  sc_pw->add_option("--nt", pw_nt, "time samples")->check(CLI::Range(1, 1 << 20));
  sc_pw->add_option("--t0", pw_t0, "first time");
  sc_pw->add_option("--t1", pw_t1, "last time");
  sc_pw->add_option("--tol", pw_tol, "residual tolerance");
  sc_pw->add_option("--detune", pw_detune,
                    "frequency factor; != 1 violates the dispersion relation");
  sc_pw->add_option("--out", pw_out, "output path (default stdout)");

  auto* sc_cons = app.add_subcommand(
      "conserved", "conserved functionals of the plane-wave state");
  double cons_kappa = 1.0, cons_k = 1.0, cons_L = kTwoPi, cons_kf = 1.0,
         cons_t = 0.0, cons_tol = 1e-10;
  int cons_nz = 512;
  std::string cons_out;
  sc_cons->add_option("--kappa", cons_kappa)->check(CLI::PositiveNumber);
  sc_cons->add_option("--k", cons_k, "z wavenumber (must fit the box)");
  sc_cons->add_option("--L", cons_L, "box side")->check(CLI::PositiveNumber);
  sc_cons->add_option("--nz", cons_nz, "grid points")
      ->check(CLI::Range(16, 1 << 20));
  sc_cons->add_option(
      "--k-factor", cons_kf,
      "multiply the inferred K = hbar c kappa (negative control)");
  sc_cons->add_option("--t", cons_t, "evaluation time");
  sc_cons->add_option("--tol", cons_tol, "check tolerance");
  sc_cons->add_option("--out", cons_out, "output path (default stdout)");

  auto* sc_mx = app.add_subcommand(
      "maxwell-check", "generalized Maxwell equations and slot assembly");
  int mx_n = 30;
  double mx_tol = 1e-10;
  std::string mx_out;
  sc_mx->add_option("--n-points", mx_n)->check(CLI::Range(1, 10000));
  sc_mx->add_option("--tol", mx_tol);
  sc_mx->add_option("--out", mx_out, "output path (default stdout)");

  auto* sc_int = app.add_subcommand(
      "interaction-check", "interaction factor identities and residuals");
  int int_samples = 1000;
  unsigned int_seed = 20240911u;
  std::string int_field = "planewave", int_out;
  double int_tol_id = 1e-12, int_tol_res = 1e-8;
  sc_int->add_option("--samples", int_samples)->check(CLI::Range(1, 1000000));
  sc_int->add_option("--seed", int_seed);
  sc_int->add_option("--field", int_field, "planewave or random (non-solution)")
      ->check(CLI::IsMember({"planewave", "random"}));
  sc_int->add_option("--tol-identity", int_tol_id);
  sc_int->add_option("--tol-residual", int_tol_res);
  sc_int->add_option("--out", int_out, "output path (default stdout)");

  auto* sc_h = app.add_subcommand(
      "hydrogen", "Dirac-Coulomb ground state and observables");
  double h_Z = 1.0, h_alpha = kAlphaFS, h_kappa = 1.0, h_tol = 1e-8;
  int h_grid = 6000;
  std::string h_csv, h_out;
  sc_h->add_option("--Z", h_Z, "nuclear charge")->check(CLI::PositiveNumber);
  sc_h->add_option("--alpha", h_alpha, "fine-structure constant")
      ->check(CLI::PositiveNumber);
  sc_h->add_option("--kappa", h_kappa)->check(CLI::PositiveNumber);
  sc_h->add_option("--grid-points", h_grid, "radial grid size (>= 4000)")
      ->check(CLI::Range(4000, 1000000));
  sc_h->add_option("--tol", h_tol, "check tolerance");
  sc_h->add_option("--csv", h_csv, "write (r, g, f) table to this path");
  sc_h->add_option("--out", h_out, "output path (default stdout)");

  auto* sc_ev = app.add_subcommand("evolve", "lattice time evolution");
  double ev_kappa = 1.0, ev_L = kTwoPi, ev_dt = 0.0;
  int ev_mode = 1, ev_nz = 128, ev_steps = 1000, ev_sample = 16,
      ev_snap_every = 0;
  std::string ev_snap, ev_out;
  sc_ev->add_option("--kappa", ev_kappa)->check(CLI::PositiveNumber);
  sc_ev->add_option("--k-mode", ev_mode, "integer box mode")
      ->check(CLI::Range(0, 1 << 16));
  sc_ev->add_option("--L", ev_L, "box side")->check(CLI::PositiveNumber);
  sc_ev->add_option("--nz", ev_nz, "grid points")->check(CLI::Range(16, 1 << 20));
  sc_ev->add_option("--dt", ev_dt, "time step (default dz/4)");
  sc_ev->add_option("--steps", ev_steps, "number of steps")
      ->check(CLI::Range(0, 100000000));
  sc_ev->add_option("--sample-every", ev_sample, "monitor stride")
      ->check(CLI::Range(1, 1 << 24));
  sc_ev->add_option("--snapshot", ev_snap, "binary snapshot path prefix");
  sc_ev->add_option("--snapshot-every", ev_snap_every,
                    "steps between snapshots");
  sc_ev->add_option("--out", ev_out, "output path (default stdout)");

  auto* sc_tr = app.add_subcommand(
      "transform", "representation transforms of one field value");
  std::vector<double> tr_phi, tr_psi;
  double tr_kappa = 1.0;
  std::string tr_out;
  sc_tr->add_option("--phi", tr_phi, "8 real components")
      ->required()
      ->expected(8)
      ->delimiter(',');
  sc_tr->add_option("--psi", tr_psi, "8 real components (default kappa N phi)")
      ->expected(8)
      ->delimiter(',');
  sc_tr->add_option("--kappa", tr_kappa);
  sc_tr->add_option("--out", tr_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sc_verify) return run_verify_algebra(tamper, verify_out);
    if (*sc_pw)
      return run_planewave(pw_kappa, pw_k, pw_L, pw_nz, pw_nt, pw_t0, pw_t1,
                           pw_tol, pw_detune, pw_out);
    if (*sc_cons)
      return run_conserved(cons_kappa, cons_k, cons_L, cons_nz, cons_kf,
                           cons_t, cons_tol, cons_out);
    if (*sc_mx) return run_maxwell_check(mx_n, mx_tol, mx_out);
    if (*sc_int)
      return run_interaction_check(int_samples, int_seed, int_field,
                                   int_tol_id, int_tol_res, int_out);
    if (*sc_h)
      return run_hydrogen(h_Z, h_alpha, h_kappa, h_grid, h_tol, h_csv, h_out);
    if (*sc_ev)
      return run_evolve(ev_kappa, ev_mode, ev_L, ev_nz, ev_dt, ev_steps,
                        ev_sample, ev_snap, ev_snap_every, ev_out);
    if (*sc_tr) return run_transform(tr_phi, tr_psi, tr_kappa, tr_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
