#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "ein3/errors.hpp"
#include "ein3/tolerance.hpp"
#include "ein3/vec.hpp"

namespace ein {

// x1y1 + x2y2 + x3y3 - x4y4 - x5y5
template <class T>
T form32(const Vec5T<T>& x, const Vec5T<T>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] - x[3] * y[3] - x[4] * y[4];
}

// v1w1 + v2w2 - v3w3, third coordinate is time
template <class T>
T form21(const Vec3T<T>& v, const Vec3T<T>& w) {
  return v[0] * w[0] + v[1] * w[1] - v[2] * w[2];
}

// J21 v, so that form21(v, w) == dot(j21(v), w)
template <class T>
Vec3T<T> j21(const Vec3T<T>& v) {
  return {v[0], v[1], -v[2]};
}
template <class T>
Vec5T<T> j32(const Vec5T<T>& v) {
  return {v[0], v[1], v[2], -v[3], -v[4]};
}

enum class CausalClass { Spacelike, Timelike, Lightlike, Zero };
std::string to_string(CausalClass c);

// Floating mode compares the self form against eps * |v|^2 (Euclidean),
// so the answer does not depend on the scale of v.
template <class T, std::size_t N>
CausalClass causal_class(const VecN<T, N>& v, double eps = default_tol().causal) {
  if (v.is_zero()) return CausalClass::Zero;
  T q;
  if constexpr (N == 3)
    q = form21(v, v);
  else
    q = form32(v, v);
  double band = 0;
  if constexpr (!is_exact_v<T>) band = eps * to_double(dot(v, v));
  int s = sign_of(q, band);
  return s > 0 ? CausalClass::Spacelike : (s < 0 ? CausalClass::Timelike : CausalClass::Lightlike);
}

template <class T>
T orientation_det(const Vec3T<T>& a, const Vec3T<T>& b, const Vec3T<T>& c) {
  return dot(a, cross(b, c));
}

template <class T>
struct NullFrameT {
  Vec3T<T> u, x_minus, x_plus;
};
using NullFrame = NullFrameT<double>;
using NullFrameQ = NullFrameT<Rational>;

namespace detail {
inline double root_of(double d) { return std::sqrt(d); }
inline Rational root_of(const Rational& d) {
  auto r = exact_sqrt(d);
  if (!r) throw GeometryError(Err::IrrationalFrame, "u.u is not a rational square");
  return *r;
}
}  // namespace detail

// Both null vectors are normalized to time coordinate 1.
template <class T>
NullFrameT<T> null_frame(const Vec3T<T>& u, double eps = default_tol().causal) {
  if (causal_class(u, eps) != CausalClass::Spacelike)
    throw GeometryError(Err::NotSpacelike, "null_frame needs a spacelike director");
  T r2 = u[0] * u[0] + u[1] * u[1];
  T d = detail::root_of(form21(u, u));
  NullFrameT<T> f;
  f.u = u;
  f.x_minus = {(u[0] * u[2] - u[1] * d) / r2, (u[1] * u[2] + u[0] * d) / r2, T(1)};
  f.x_plus = {(u[0] * u[2] + u[1] * d) / r2, (u[1] * u[2] - u[0] * d) / r2, T(1)};
  return f;
}

}  // namespace ein
