#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

#include "ein3/scalar.hpp"

namespace ein {

template <class T, std::size_t N>
struct VecN {
  std::array<T, N> c{};

  VecN() = default;
  template <class... A>
    requires(sizeof...(A) == N)
  VecN(A... a) : c{T(a)...} {}

  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }
  static constexpr std::size_t size() { return N; }

  VecN& operator+=(const VecN& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
  }
  VecN& operator-=(const VecN& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i];
    return *this;
  }
  VecN& operator*=(const T& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  VecN& operator/=(const T& s) {
    for (auto& x : c) x /= s;
    return *this;
  }
  friend VecN operator+(VecN a, const VecN& b) { return a += b; }
  friend VecN operator-(VecN a, const VecN& b) { return a -= b; }
  friend VecN operator*(VecN a, const T& s) { return a *= s; }
  friend VecN operator*(const T& s, VecN a) { return a *= s; }
  friend VecN operator/(VecN a, const T& s) { return a /= s; }
  friend VecN operator-(VecN a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend bool operator==(const VecN& a, const VecN& b) { return a.c == b.c; }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }

  template <class U>
  VecN<U, N> cast() const {
    VecN<U, N> r;
    for (std::size_t i = 0; i < N; ++i) {
      if constexpr (std::is_same_v<U, double>)
        r.c[i] = to_double(c[i]);
      else
        r.c[i] = U(c[i]);
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const VecN& v) {
    os << '(';
    for (std::size_t i = 0; i < N; ++i) os << (i ? "," : "") << v.c[i];
    return os << ')';
  }
};

template <class T>
using Vec3T = VecN<T, 3>;
template <class T>
using Vec5T = VecN<T, 5>;

using Vec3 = Vec3T<double>;
using Vec5 = Vec5T<double>;
using Vec3Q = Vec3T<Rational>;
using Vec5Q = Vec5T<Rational>;
using Point3 = Vec3;

template <class T, std::size_t N>
T dot(const VecN<T, N>& a, const VecN<T, N>& b) {
  T s = 0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
double norm(const VecN<double, N>& a) {
  return std::sqrt(dot(a, a));
}

template <std::size_t N>
VecN<double, N> normalized(const VecN<double, N>& a) {
  return a / norm(a);
}

template <class T>
Vec3T<T> cross(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace ein
