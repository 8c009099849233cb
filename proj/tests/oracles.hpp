#pragma once

// Test-side oracles, written without calling the library routines they check.

#include <array>
#include <cmath>
#include <deque>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ein3/crooked.hpp"
#include "ein3/group.hpp"

namespace oracle {

using ein::Vec3;
using ein::Vec5;

inline double f21(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] - a[2] * b[2]; }
inline double f32(const Vec5& a, const Vec5& b) {
  static constexpr double sig[5] = {1, 1, 1, -1, -1};
  double s = 0;
  for (int i = 0; i < 5; ++i) s += sig[i] * a[i] * b[i];
  return s;
}
inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Null vectors (a, b, 1) orthogonal to u: the line a u1 + b u2 = u3 meets the
// unit circle in two points; the ordering makes det[u, x-, x+] positive.
struct Frame {
  Vec3 xm, xp;
};
inline Frame null_frame(const Vec3& u) {
  double r2 = u[0] * u[0] + u[1] * u[1];
  double r = std::sqrt(r2);
  double cx = u[2] * u[0] / r2, cy = u[2] * u[1] / r2;
  double half = std::sqrt(std::max(0.0, 1 - u[2] * u[2] / r2));
  Vec3 a{cx - half * u[1] / r, cy + half * u[0] / r, 1};
  Vec3 b{cx + half * u[1] / r, cy - half * u[0] / r, 1};
  if (det3(u, a, b) > 0) return {a, b};
  return {b, a};
}

// Region growing in a cube around the vertex. Grid edges crossing any of the
// three flat pieces are cut; the component of a node deep in the stem
// quadrant of u is +1, that of -u is -1.
class HalfspaceGrid {
 public:
  HalfspaceGrid(const Vec3& p, const Vec3& u, ein::Extension ext, double half_width, int nodes)
      : p_(p), u_(u), m_(nodes), h_(2 * half_width / (nodes - 1)), lo_(half_width) {
    Frame f = null_frame(u);
    xm_ = f.xm;
    xp_ = f.xp;
    double s = ext == ein::Extension::Positive ? 1.0 : -1.0;
    wing_p_seed_ = u * s;
    wing_m_seed_ = u * (-s);
    label_.assign(static_cast<std::size_t>(m_) * m_ * m_, 0);
    Vec3 d = xm_ - xp_;
    d = d / std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    grow(nearest(p_ + d * (half_width / 2)), +1);
    grow(nearest(p_ - d * (half_width / 2)), -1);
  }

  // +1, -1, or 0 when no uncut segment reaches a labelled node nearby.
  int classify(const Vec3& q) const {
    std::array<int, 3> c = cell(q);
    for (int r = 0; r <= 1; ++r)
      for (int di = -r; di <= r; ++di)
        for (int dj = -r; dj <= r; ++dj)
          for (int dk = -r; dk <= r; ++dk) {
            int i = c[0] + di, j = c[1] + dj, k = c[2] + dk;
            if (!inside(i, j, k)) continue;
            int l = label_[index(i, j, k)];
            if (l != 0 && !cut(q, node(i, j, k))) return l;
          }
    return 0;
  }

  // Segment a-b meets the stem or a wing (closed pieces, conservative).
  bool cut(const Vec3& a, const Vec3& b) const {
    return crosses(a, b, u_, [&](const Vec3& w) { return f21(w, w) <= 1e-12 * dot(w); }) ||
           crosses(a, b, xp_, [&](const Vec3& w) { return f21(w, wing_p_seed_) >= -1e-12 * std::sqrt(dot(w)); }) ||
           crosses(a, b, xm_, [&](const Vec3& w) { return f21(w, wing_m_seed_) >= -1e-12 * std::sqrt(dot(w)); });
  }

  std::size_t labelled(int l) const {
    std::size_t n = 0;
    for (int v : label_) n += v == l;
    return n;
  }

 private:
  static double dot(const Vec3& w) { return w[0] * w[0] + w[1] * w[1] + w[2] * w[2]; }

  template <class Pred>
  bool crosses(const Vec3& a, const Vec3& b, const Vec3& normal, Pred on_piece) const {
    Vec3 wa = a - p_, wb = b - p_;
    double fa = f21(wa, normal), fb = f21(wb, normal);
    if (fa > 0 && fb > 0) return false;
    if (fa < 0 && fb < 0) return false;
    if (fa == fb) return on_piece(wa) || on_piece(wb);
    double t = fa / (fa - fb);
    return on_piece(wa + (wb - wa) * t);
  }

  std::size_t index(int i, int j, int k) const { return (static_cast<std::size_t>(k) * m_ + j) * m_ + i; }
  bool inside(int i, int j, int k) const { return i >= 0 && j >= 0 && k >= 0 && i < m_ && j < m_ && k < m_; }
  Vec3 node(int i, int j, int k) const { return p_ + Vec3{i * h_ - lo_, j * h_ - lo_, k * h_ - lo_}; }
  std::array<int, 3> cell(const Vec3& q) const {
    std::array<int, 3> c;
    for (int a = 0; a < 3; ++a) c[a] = static_cast<int>(std::lround((q[a] - p_[a] + lo_) / h_));
    return c;
  }
  std::array<int, 3> nearest(const Vec3& q) const { return cell(q); }

  void grow(std::array<int, 3> seed, int l) {
    std::deque<std::array<int, 3>> queue{seed};
    label_[index(seed[0], seed[1], seed[2])] = l;
    static constexpr int off[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    while (!queue.empty()) {
      auto c = queue.front();
      queue.pop_front();
      Vec3 a = node(c[0], c[1], c[2]);
      for (const auto& o : off) {
        int i = c[0] + o[0], j = c[1] + o[1], k = c[2] + o[2];
        if (!inside(i, j, k) || label_[index(i, j, k)] != 0) continue;
        if (cut(a, node(i, j, k))) continue;
        label_[index(i, j, k)] = l;
        queue.push_back({i, j, k});
      }
    }
  }

  Vec3 p_, u_, xm_, xp_, wing_p_seed_, wing_m_seed_;
  int m_;
  double h_, lo_;
  std::vector<int> label_;
};

inline Vec3 random_vec3(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(rng), d(rng), d(rng)};
}

// Spacelike with f21(u,u) > margin |u|^2.
inline Vec3 random_spacelike(std::mt19937_64& rng, double margin = 0.05) {
  for (;;) {
    Vec3 u = random_vec3(rng);
    double e = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    if (e > 1e-3 && f21(u, u) > margin * e) return u;
  }
}

// Point on the unit-ball-like box, in the ball of radius r.
inline Vec3 random_in_ball(std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> d(-r, r);
  for (;;) {
    Vec3 v{d(rng), d(rng), d(rng)};
    if (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] <= r * r) return v;
  }
}

// Angle between the lines of a and b, from the chord of the unit
// representatives on the same side.
inline double line_angle(const Vec5& a, const Vec5& b) {
  double na = 0, nb = 0, ab = 0;
  for (int i = 0; i < 5; ++i) {
    na += a[i] * a[i];
    nb += b[i] * b[i];
    ab += a[i] * b[i];
  }
  double s = ab < 0 ? -1.0 : 1.0, chord = 0;
  for (int i = 0; i < 5; ++i) {
    double d = a[i] / std::sqrt(na) - s * b[i] / std::sqrt(nb);
    chord += d * d;
  }
  return 2 * std::asin(std::min(1.0, std::sqrt(chord) / 2));
}

inline Eigen::Matrix<double, 5, 5> to_eigen(const ein::Mat5& m) {
  Eigen::Matrix<double, 5, 5> e;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) e(i, j) = m.a[i][j];
  return e;
}

// (lambda, mu) from the eigenvalues of m^T m.
inline std::pair<double, double> cartan_eig(const ein::Mat5& m) {
  Eigen::Matrix<double, 5, 5> e = to_eigen(m);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 5, 5>> es(e.transpose() * e);
  auto v = es.eigenvalues();  // ascending
  return {0.5 * std::log(v[4]), 0.5 * std::log(v[3])};
}

// Random element of S(O(3) x O(2)) as a block matrix.
inline ein::Mat5 random_compact(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Matrix3d a;
  Eigen::Matrix2d b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = n(rng);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b(i, j) = n(rng);
  Eigen::Matrix3d qa = Eigen::HouseholderQR<Eigen::Matrix3d>(a).householderQ();
  Eigen::Matrix2d qb = Eigen::HouseholderQR<Eigen::Matrix2d>(b).householderQ();
  if (qa.determinant() * qb.determinant() < 0) qb.col(0) *= -1;
  ein::Mat5 k;
  for (int i = 0; i < 5; ++i) k.a[i][i] = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k.a[i][j] = qa(i, j);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.a[3 + i][3 + j] = qb(i, j);
  return k;
}

// Hyperbolic rotation by t in the (i, j) plane, i spacelike and j timelike.
inline ein::Mat5 hyperbolic_rotation(int i, int j, double t) {
  ein::Mat5 m = ein::Mat5::identity();
  m.a[i][i] = m.a[j][j] = std::cosh(t);
  m.a[i][j] = m.a[j][i] = std::sinh(t);
  return m;
}

}  // namespace oracle
