#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>

// Small fixed-size dense matrices and vectors. Everything in this project is
// 4x4 or 8x8, so plain std::array storage with unrolled loops is all we need.

namespace rdf {

using cplx = std::complex<double>;

template <typename S>
concept ScalarLike = std::is_arithmetic_v<S> || std::is_same_v<S, cplx>;

inline double abs_val(double x) { return std::abs(x); }
inline double abs_val(const cplx& x) { return std::abs(x); }

template <typename T, int N>
struct Vec {
  std::array<T, N> c{};

  T& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const T& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec operator+(const Vec& o) const {
    Vec r;
    for (int i = 0; i < N; ++i) r[i] = (*this)[i] + o[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r;
    for (int i = 0; i < N; ++i) r[i] = (*this)[i] - o[i];
    return r;
  }
  Vec operator-() const {
    Vec r;
    for (int i = 0; i < N; ++i) r[i] = -(*this)[i];
    return r;
  }
  template <ScalarLike S>
  friend auto operator*(const S& s, const Vec& v) {
    Vec<std::common_type_t<S, T>, N> r;
    for (int i = 0; i < N; ++i) r[i] = s * v[i];
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < N; ++i) m = std::max(m, abs_val((*this)[i]));
    return m;
  }
  double norm2() const {  // sum of |c_i|^2
    double s = 0.0;
    for (int i = 0; i < N; ++i) {
      const double a = abs_val((*this)[i]);
      s += a * a;
    }
    return s;
  }
};

template <typename T, int N>
struct Mat {
  std::array<T, static_cast<std::size_t>(N) * N> e{};

  T& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * N + j]; }
  const T& operator()(int i, int j) const {
    return e[static_cast<std::size_t>(i) * N + j];
  }

  static Mat zero() { return Mat{}; }
  static Mat identity() {
    Mat m;
    for (int i = 0; i < N; ++i) m(i, i) = T(1);
    return m;
  }

  Mat operator+(const Mat& o) const {
    Mat r;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  Mat operator-() const {
    Mat r;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
    return r;
  }

  Mat operator*(const Mat& o) const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        const T a = (*this)(i, k);
        for (int j = 0; j < N; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  template <ScalarLike S>
  friend auto operator*(const S& s, const Mat& m) {
    Mat<std::common_type_t<S, T>, N> r;
    for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = s * m.e[i];
    return r;
  }

  template <typename U>
  auto operator*(const Vec<U, N>& v) const {
    Vec<std::common_type_t<T, U>, N> r;
    for (int i = 0; i < N; ++i) {
      std::common_type_t<T, U> s{};
      for (int j = 0; j < N; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  Mat transpose() const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const T& x : e) m = std::max(m, abs_val(x));
    return m;
  }
};

using Mat4c = Mat<cplx, 4>;
using Mat8r = Mat<double, 8>;
using Mat8c = Mat<cplx, 8>;
using Vec4c = Vec<cplx, 4>;
using Vec8r = Vec<double, 8>;
using Vec8c = Vec<cplx, 8>;

template <int N>
Mat<cplx, N> to_complex(const Mat<double, N>& m) {
  Mat<cplx, N> r;
  for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = m.e[i];
  return r;
}

template <int N>
Vec<cplx, N> to_complex(const Vec<double, N>& v) {
  Vec<cplx, N> r;
  for (int i = 0; i < N; ++i) r[i] = v[i];
  return r;
}

template <int N>
Mat<cplx, N> adjoint(const Mat<cplx, N>& m) {
  Mat<cplx, N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

template <int N>
Mat<double, N> adjoint(const Mat<double, N>& m) {
  return m.transpose();
}

template <typename T, int N>
Vec<T, N> conj(const Vec<T, N>& v) {
  Vec<T, N> r;
  for (int i = 0; i < N; ++i) {
    if constexpr (std::is_same_v<T, cplx>)
      r[i] = std::conj(v[i]);
    else
      r[i] = v[i];
  }
  return r;
}

// Hermitian inner product <u, v> = sum conj(u_i) v_i.
template <typename T, typename U, int N>
auto dot(const Vec<T, N>& u, const Vec<U, N>& v) {
  std::common_type_t<T, U> s{};
  for (int i = 0; i < N; ++i) {
    if constexpr (std::is_same_v<T, cplx>)
      s += std::conj(u[i]) * v[i];
    else
      s += u[i] * v[i];
  }
  return s;
}

template <typename T, int N>
double max_abs_diff(const Mat<T, N>& a, const Mat<T, N>& b) {
  return (a - b).max_abs();
}

template <typename T, int N>
double max_abs_diff(const Vec<T, N>& a, const Vec<T, N>& b) {
  return (a - b).max_abs();
}

// Gauss-Jordan inverse with partial pivoting.
template <typename T, int N>
Mat<T, N> invert(const Mat<T, N>& m) {
  Mat<T, N> a = m;
  Mat<T, N> inv = Mat<T, N>::identity();
  for (int col = 0; col < N; ++col) {
    int piv = col;
    double best = abs_val(a(col, col));
    for (int r = col + 1; r < N; ++r)
      if (abs_val(a(r, col)) > best) {
        best = abs_val(a(r, col));
        piv = r;
      }
    if (best == 0.0) throw std::runtime_error("invert: singular matrix");
    if (piv != col)
      for (int j = 0; j < N; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const T d = a(col, col);
    for (int j = 0; j < N; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < N; ++r) {
      if (r == col) continue;
      const T f = a(r, col);
      if (f == T(0)) continue;
      for (int j = 0; j < N; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace rdf
