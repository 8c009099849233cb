#pragma once

#include <array>
#include <string>
#include <vector>

#include "ein3/forms.hpp"

namespace ein {

template <class T, std::size_t N>
struct MatN {
  std::array<std::array<T, N>, N> a{};

  static MatN identity() {
    MatN m;
    for (std::size_t i = 0; i < N; ++i) m.a[i][i] = T(1);
    return m;
  }
  T& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

  friend MatN operator*(const MatN& x, const MatN& y) {
    MatN r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        if (x.a[i][k] == 0) continue;
        for (std::size_t j = 0; j < N; ++j) r.a[i][j] += x.a[i][k] * y.a[k][j];
      }
    return r;
  }
  friend VecN<T, N> operator*(const MatN& x, const VecN<T, N>& v) {
    VecN<T, N> r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += x.a[i][j] * v[j];
    return r;
  }
  MatN transpose() const {
    MatN r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r.a[i][j] = a[j][i];
    return r;
  }
  friend bool operator==(const MatN& x, const MatN& y) { return x.a == y.a; }

  template <class U>
  MatN<U, N> cast() const {
    MatN<U, N> r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        if constexpr (std::is_same_v<U, double>)
          r.a[i][j] = to_double(a[i][j]);
        else
          r.a[i][j] = U(a[i][j]);
      }
    return r;
  }
};

using Mat3 = MatN<double, 3>;
using Mat5 = MatN<double, 5>;
using Mat5Q = MatN<Rational, 5>;

template <class T>
MatN<T, 5> j32_matrix() {
  MatN<T, 5> j = MatN<T, 5>::identity();
  j.a[3][3] = T(-1);
  j.a[4][4] = T(-1);
  return j;
}

// Form-preserving 5x5 matrix.
template <class T>
struct Iso32T {
  MatN<T, 5> m = MatN<T, 5>::identity();

  static Iso32T identity() { return {}; }
  friend Iso32T operator*(const Iso32T& x, const Iso32T& y) { return {x.m * y.m}; }
  friend Vec5T<T> operator*(const Iso32T& x, const Vec5T<T>& v) { return x.m * v; }
  // J m^T J
  Iso32T inverse() const {
    MatN<T, 5> r = m.transpose();
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if ((i >= 3) != (j >= 3)) r.a[i][j] = -r.a[i][j];
    return {r};
  }
  // m^T J m - J, maximum absolute entry (double)
  double residual() const {
    MatN<T, 5> r = m.transpose() * j32_matrix<T>() * m;
    MatN<T, 5> j = j32_matrix<T>();
    double worst = 0;
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k) worst = std::max(worst, std::fabs(to_double(T(r.a[i][k] - j.a[i][k]))));
    return worst;
  }
  bool preserves_form_exactly() const {
    return m.transpose() * j32_matrix<T>() * m == j32_matrix<T>();
  }
  template <class U>
  Iso32T<U> cast() const {
    return {m.template cast<U>()};
  }
};

using Iso32 = Iso32T<double>;
using Iso32Q = Iso32T<Rational>;

// Checked constructor: throws NotInGroup when the residual exceeds eps.
Iso32 make_iso32(const Mat5& m, double eps = default_tol().group);

template <class T>
Iso32T<T> lift_linear_unchecked(const MatN<T, 3>& g) {
  Iso32T<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m.a[i + 1][j + 1] = g.a[i][j];
  return r;
}

Iso32 lift_linear(const Mat3& g, double eps = default_tol().group);
Iso32Q lift_linear(const MatN<Rational, 3>& g);

// Translation lift: fixes p_inf and conjugates to w -> w + v under embed.
template <class T>
Iso32T<T> lift_translation(const Vec3T<T>& v) {
  T q = form21(v, v) / 2;
  Vec3T<T> jv = j21(v);  // v.w = dot(jv, w)
  Iso32T<T> r;
  auto& m = r.m.a;
  // rep1' = rep1 - v.w - q s ; rep5' = rep5 + v.w + q s ; w' = w + v s
  m[0][0] = 1 - q;
  m[0][4] = -q;
  m[4][0] = q;
  m[4][4] = 1 + q;
  for (int k = 0; k < 3; ++k) {
    m[0][k + 1] = -jv[k];
    m[4][k + 1] = jv[k];
    m[k + 1][0] = v[k];
    m[k + 1][4] = v[k];
  }
  return r;
}

template <class T>
Iso32T<T> rho() {
  Iso32T<T> r;
  r.m.a[0][0] = T(-1);
  return r;
}

Iso32Q mu_example();

// Lorentz boost in the (v1, v3) plane.
Mat3 boost13(double ell);
// Rotation in the (v1, v2) plane.
Mat3 rotation12(double theta);
// Null-frame transport: Lorentz map sending e1's frame to the frame of u
// (columns u/|u|, k (x- - x+)/2, k (x- + x+)/2).
Mat3 director_frame(const Vec3& u);

struct CartanPair {
  double lambda = 0;
  double mu = 0;
  double delta() const { return lambda - mu; }
};

CartanPair cartan_projection(const Iso32& g, double eps = default_tol().group);
// cartan_projection(g^k) for k = 1..n without forming g^k in floating point
std::vector<CartanPair> cartan_power_sequence(const Iso32& g, int n, double eps = default_tol().group);
std::array<double, 5> singular_values(const Mat5& m);

enum class DistortionClass { Bounded, Balanced, Mixed, Undetermined };
std::string to_string(DistortionClass d);

struct DistortionThresholds {
  double t_div = 10;
  double t_bound = 1;
  double tail_fraction = 0.25;
};

DistortionClass classify_distortion(const std::vector<CartanPair>& seq,
                                    const DistortionThresholds& th = {});

}  // namespace ein
