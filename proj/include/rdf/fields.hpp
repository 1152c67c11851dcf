#pragma once

#include <functional>
#include <stdexcept>

#include "rdf/matrix.hpp"

namespace rdf {

// Spacetime point (x^0, x, y, z) in natural units (hbar = c = 1).
struct FourVector {
  std::array<double, 4> x{};

  double& operator[](int mu) { return x[static_cast<std::size_t>(mu)]; }
  const double& operator[](int mu) const {
    return x[static_cast<std::size_t>(mu)];
  }

  FourVector shifted(int mu, double d) const {
    FourVector p = *this;
    p[mu] += d;
    return p;
  }
};

using RealField8 = Vec8r;
using ComplexField8 = Vec8c;

// Two 4-component spinors produced by the S transform of a real field:
// for real inputs phi_b = N_b * conj(phi_a).
struct DiracPair {
  Vec4c phi_a;
  Vec4c phi_b;
};

// A field as a function of the spacetime point, optionally with exact first
// and second derivatives. When a derivative callable is absent, consumers
// fall back to 4th-order central differences with their own step h.
struct FieldSampler {
  std::function<ComplexField8(const FourVector&)> value;
  std::function<ComplexField8(const FourVector&, int)> d1;       // d_mu
  std::function<ComplexField8(const FourVector&, int, int)> d2;  // d_mu d_nu

  bool has_d1() const { return static_cast<bool>(d1); }
  bool has_d2() const { return static_cast<bool>(d2); }
};

// Spinor-valued analogue used for the four-component plane wave.
struct SpinorSampler {
  std::function<Vec4c(const FourVector&)> value;
  std::function<Vec4c(const FourVector&, int)> d1;

  bool has_d1() const { return static_cast<bool>(d1); }
};

// 4th-order central difference of an arbitrary vector-valued callable.
template <typename F>
auto central_diff4(const F& f, const FourVector& x, int mu, double h)
    -> decltype(f(x)) {
  const auto fp1 = f(x.shifted(mu, h));
  const auto fm1 = f(x.shifted(mu, -h));
  const auto fp2 = f(x.shifted(mu, 2.0 * h));
  const auto fm2 = f(x.shifted(mu, -2.0 * h));
  return (1.0 / (12.0 * h)) * (8.0 * (fp1 - fm1) - (fp2 - fm2));
}

// d_mu of a sampler: exact when available, else finite differences.
inline ComplexField8 sample_d1(const FieldSampler& f, const FourVector& x,
                               int mu, double h) {
  if (f.has_d1()) return f.d1(x, mu);
  if (h <= 0.0) throw std::invalid_argument("finite-difference step h must be > 0");
  return central_diff4(f.value, x, mu, h);
}

// d_mu d_nu of a sampler; exact d2 if present, else differentiate d1.
inline ComplexField8 sample_d2(const FieldSampler& f, const FourVector& x,
                               int mu, int nu, double h) {
  if (f.has_d2()) return f.d2(x, mu, nu);
  if (h <= 0.0) throw std::invalid_argument("finite-difference step h must be > 0");
  auto g = [&](const FourVector& p) { return sample_d1(f, p, mu, h); };
  return central_diff4(g, x, nu, h);
}

inline FieldSampler make_real_sampler(
    std::function<RealField8(const FourVector&)> fn) {
  FieldSampler s;
  s.value = [fn = std::move(fn)](const FourVector& x) {
    return to_complex(fn(x));
  };
  return s;
}

inline FieldSampler constant_field(const RealField8& v) {
  FieldSampler s;
  const ComplexField8 cv = to_complex(v);
  s.value = [cv](const FourVector&) { return cv; };
  s.d1 = [](const FourVector&, int) { return ComplexField8{}; };
  s.d2 = [](const FourVector&, int, int) { return ComplexField8{}; };
  return s;
}

// Raised-index derivative sign: d^mu = g^{mu mu} d_mu (diagonal metric).
inline double raise_sign(int mu) { return mu == 0 ? 1.0 : -1.0; }

}  // namespace rdf
