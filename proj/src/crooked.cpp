#include "ein3/crooked.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace ein {

std::string to_string(Extension e) { return e == Extension::Positive ? "positive" : "negative"; }

namespace {

Vec3 canonical(const Vec3& u) {
  for (int i = 0; i < 3; ++i) {
    if (u[i] > 0) return u;
    if (u[i] < 0) return -u;
  }
  return u;
}

void require_spacelike(const Vec3& u) {
  if (causal_class(u) != CausalClass::Spacelike)
    throw GeometryError(Err::NotSpacelike, "director must be spacelike");
}

// zero band for a bilinear value between w and v
double band(double eps, const Vec3& w, const Vec3& v) { return eps * (1.0 + norm(w)) * norm(v); }

double dist_to_line(const Vec3& w, const Vec3& dir) {
  Vec3 d = normalized(dir);
  return norm(w - d * dot(w, d));
}

}  // namespace

Vec3 CrookedPlane::canonical_director() const { return canonical(director); }

bool operator==(const CrookedPlane& a, const CrookedPlane& b) {
  if (!(a.vertex == b.vertex) || a.extension != b.extension) return false;
  Vec3 da = normalized(a.canonical_director()), db = normalized(b.canonical_director());
  return norm(da - db) <= 1e-14;
}

std::array<Wing, 2> wings_of(const Vec3& u, Extension ext) {
  NullFrame f = null_frame(u);
  double s = ext == Extension::Positive ? 1.0 : -1.0;
  return {Wing{f.x_plus, u * s}, Wing{f.x_minus, u * -s}};
}

bool in_stem(const Point3& q, const Point3& p, const Vec3& u, double eps) {
  require_spacelike(u);
  Vec3 w = q - p;
  if (std::fabs(form21(w, u)) > band(eps, w, u)) return false;
  return form21(w, w) <= eps * (1.0 + dot(w, w));
}

bool in_wing(const Point3& q, const Point3& p, const Vec3& x, const Vec3& seed, double eps) {
  if (causal_class(x) != CausalClass::Lightlike || x[2] <= 0 ||
      causal_class(seed) != CausalClass::Spacelike ||
      std::fabs(form21(seed, x)) > eps * norm(seed) * norm(x))
    throw GeometryError(Err::BadWingData, "wing needs future null x and spacelike seed in x-perp");
  Vec3 w = q - p;
  if (std::fabs(form21(w, x)) > band(eps, w, x)) return false;
  return form21(w, seed) >= -band(eps, w, seed);
}

bool in_crooked_plane(const Point3& q, const CrookedPlane& cp, double eps) {
  if (in_stem(q, cp.vertex, cp.director, eps)) return true;
  for (const Wing& w : wings_of(cp.director, cp.extension))
    if (in_wing(q, cp.vertex, w.x, w.seed, eps)) return true;
  return false;
}

bool halfspace_signs(int su, int sp, int sm, Extension ext) {
  if (su == 0) return sp < 0 && sm > 0;
  if (ext == Extension::Positive) return su > 0 ? sp < 0 : sm > 0;
  return su > 0 ? sm > 0 : sp < 0;
}

bool in_halfspace(const Point3& q, const CrookedHalfspace& hs, double eps) {
  require_spacelike(hs.director);
  NullFrame f = null_frame(hs.director);
  Vec3 w = q - hs.vertex;
  int su = sign_of(form21(w, f.u), band(eps, w, f.u));
  int sp = sign_of(form21(w, f.x_plus), band(eps, w, f.x_plus));
  int sm = sign_of(form21(w, f.x_minus), band(eps, w, f.x_minus));
  return halfspace_signs(su, sp, sm, hs.extension);
}

bool in_stem_quadrant(const Point3& q, const StemQuadrant& sq, double eps) {
  require_spacelike(sq.director);
  NullFrame f = null_frame(sq.director);
  Vec3 w = q - sq.vertex;
  double uu = form21(f.u, f.u);
  double c = form21(w, f.u) / uu;
  if (std::fabs(c) * norm(f.u) > eps * (1.0 + norm(w))) return false;
  double mp = form21(f.x_minus, f.x_plus);
  double a = form21(w, f.x_plus) / mp;
  double b = -form21(w, f.x_minus) / mp;
  double tol = eps * (1.0 + norm(w));
  return a >= -tol && b >= -tol;
}

bool consistently_oriented(const Vec3& u1, const Vec3& u2, double eps) {
  require_spacelike(u1);
  require_spacelike(u2);
  Vec3 a = normalized(u1), b = normalized(u2);
  Vec3 n = cross(j21(a), j21(b));
  if (norm(n) <= eps) return false;
  n = normalized(n);
  if (form21(n, n) <= eps) return false;  // ultraparallel
  if (form21(a, b) >= -eps) return false;
  NullFrame f1 = null_frame(a), f2 = null_frame(b);
  for (const Vec3* x : {&f2.x_minus, &f2.x_plus})
    if (form21(a, *x) > eps * norm(*x)) return false;
  for (const Vec3* x : {&f1.x_minus, &f1.x_plus})
    if (form21(b, *x) > eps * norm(*x)) return false;
  return true;
}

namespace {

int rank3(const std::vector<Vec3>& gens) {
  Eigen::MatrixXd m(3, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int i = 0; i < 3; ++i) m(i, j) = gens[j][i];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

}  // namespace

bool cone_interior_facets(const std::vector<Vec3>& gens, const Vec3& v, double eps) {
  if (gens.empty() || rank3(gens) < 3) return false;
  Vec3 sum{0, 0, 0};
  for (const auto& g : gens) sum += normalized(g);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Vec3 n = cross(normalized(gens[i]), normalized(gens[j]));
      if (norm(n) <= 1e-12) continue;
      n = normalized(n);
      if (dot(n, sum) < 0) n = -n;
      bool facet = true;
      for (const auto& g : gens)
        if (dot(n, normalized(g)) < -1e-12) facet = false;
      if (!facet) continue;
      if (dot(n, v) <= eps * norm(v)) return false;
    }
  }
  // without a supporting plane the generators fill space
  return true;
}

bool cone_interior_lp(const std::vector<Vec3>& gens, const Vec3& v, double eps) {
  const int m = static_cast<int>(gens.size());
  if (m == 0 || rank3(gens) < 3) return false;
  Eigen::MatrixXd g(3, m);
  for (int j = 0; j < m; ++j) {
    Vec3 gn = normalized(gens[j]);
    for (int i = 0; i < 3; ++i) g(i, j) = gn[i];
  }
  Eigen::Vector3d rhs(v[0], v[1], v[2]);
  Eigen::VectorXd l0 = g.completeOrthogonalDecomposition().solve(rhs);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
  lu.setThreshold(1e-10);
  Eigen::MatrixXd ker = lu.kernel();
  double scale = eps * (1.0 + norm(v));
  if (m == 3 || ker.cols() == 0 || ker.norm() == 0) return l0.minCoeff() > scale;
  // max over s of min_i (l0_i + s k_i); optimum sits at a breakpoint
  Eigen::VectorXd k = ker.col(0);
  if (ker.cols() > 1) return true;  // at least two free directions, m >= 5
  bool all_pos = (k.array() > 1e-14).all(), all_neg = (k.array() < -1e-14).all();
  if (all_pos || all_neg) return true;
  double best = -std::numeric_limits<double>::infinity();
  auto eval = [&](double s) { return (l0 + s * k).minCoeff(); };
  best = eval(0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double dk = k(i) - k(j);
      if (std::fabs(dk) < 1e-15) continue;
      best = std::max(best, eval((l0(j) - l0(i)) / dk));
    }
  return best > scale;
}

bool allowable_pair(const Vec3& z1, const Vec3& z2, const Vec3& u1, const Vec3& u2, double eps) {
  if (!consistently_oriented(u1, u2, eps))
    throw GeometryError(Err::NotConsistentlyOriented, "allowable_pair needs consistently oriented directors");
  if (!in_stem_quadrant(z1, StemQuadrant{{0, 0, 0}, u1}, eps)) return false;
  if (!in_stem_quadrant(z2, StemQuadrant{{0, 0, 0}, u2}, eps)) return false;
  NullFrame f1 = null_frame(u1), f2 = null_frame(u2);
  std::vector<Vec3> gens{f1.x_minus, -f1.x_plus, -f2.x_minus, f2.x_plus};
  return cone_interior_facets(gens, z1 - z2, eps);
}

double distance_to_stem(const Point3& q, const Point3& p, const Vec3& u) {
  NullFrame f = null_frame(u);
  Vec3 w = q - p;
  Vec3 n = normalized(j21(u));
  double perp = dot(w, n);
  Vec3 wp = w - n * perp;
  // wp = a x- + b x+ in the plane
  double g11 = dot(f.x_minus, f.x_minus), g12 = dot(f.x_minus, f.x_plus), g22 = dot(f.x_plus, f.x_plus);
  double r1 = dot(wp, f.x_minus), r2 = dot(wp, f.x_plus);
  double det = g11 * g22 - g12 * g12;
  double a = (r1 * g22 - r2 * g12) / det;
  double b = (g11 * r2 - g12 * r1) / det;
  double din = 0;
  if (a * b < 0) din = std::min(dist_to_line(wp, f.x_minus), dist_to_line(wp, f.x_plus));
  return std::hypot(perp, din);
}

double distance_to_wing(const Point3& q, const Point3& p, const Wing& wg) {
  Vec3 w = q - p;
  Vec3 n = normalized(j21(wg.x));
  double perp = dot(w, n);
  Vec3 wp = w - n * perp;
  Vec3 xh = normalized(wg.x);
  Vec3 e = wg.seed - xh * dot(wg.seed, xh);
  double din = dot(wp, e) >= 0 ? 0.0 : dist_to_line(wp, wg.x);
  return std::hypot(perp, din);
}

double distance_to_crooked_plane(const Point3& q, const CrookedPlane& cp) {
  double d = distance_to_stem(q, cp.vertex, cp.director);
  for (const Wing& w : wings_of(cp.director, cp.extension))
    d = std::min(d, distance_to_wing(q, cp.vertex, w));
  return d;
}

std::vector<std::vector<Point3>> sample_crooked_plane(const CrookedPlane& cp, int budget) {
  const int n = std::max(budget, 4);
  NullFrame f = null_frame(cp.director);
  std::vector<std::vector<Point3>> rows;
  // radial parameter compactified: r = tan(pi/2 * k/n), k < n
  std::vector<double> radii;
  for (int k = 0; k < n; ++k) radii.push_back(std::tan(M_PI / 2 * k / n));
  std::vector<double> signed_radii;
  for (int k = n - 1; k > 0; --k) signed_radii.push_back(-radii[k]);
  for (double r : radii) signed_radii.push_back(r);

  // stem: a x- + b x+ with ab >= 0, polar angle in the two closed sectors
  for (int sector = 0; sector < 2; ++sector) {
    for (int j = 0; j <= n; ++j) {
      double al = M_PI / 2 * j / n + sector * M_PI;
      std::vector<Point3> row;
      for (double r : radii)
        row.push_back(cp.vertex + f.x_minus * (r * std::cos(al)) + f.x_plus * (r * std::sin(al)));
      rows.push_back(std::move(row));
    }
    for (double r : radii) {
      std::vector<Point3> row;
      for (int j = 0; j <= n; ++j) {
        double al = M_PI / 2 * j / n + sector * M_PI;
        row.push_back(cp.vertex + f.x_minus * (r * std::cos(al)) + f.x_plus * (r * std::sin(al)));
      }
      rows.push_back(std::move(row));
    }
  }
  // wings: c seed + d x, c >= 0
  for (const Wing& w : wings_of(cp.director, cp.extension)) {
    Vec3 s = w.seed / std::sqrt(form21(w.seed, w.seed));
    for (double c : radii) {
      std::vector<Point3> row;
      for (double d : signed_radii) row.push_back(cp.vertex + s * c + w.x * d);
      rows.push_back(std::move(row));
    }
    for (double d : signed_radii) {
      std::vector<Point3> row;
      for (double c : radii) row.push_back(cp.vertex + s * c + w.x * d);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

AffineCertificate affine_disjointness_certificate(const CrookedPlane& cp1, const CrookedPlane& cp2,
                                                  int budget, const Point3& base) {
  AffineCertificate rep;
  rep.contained_in_halfspace = true;
  double best = std::numeric_limits<double>::infinity();

  auto sweep = [&](const CrookedPlane& a, const CrookedPlane& b) {
    CrookedHalfspace hb_pos{b.vertex, b.director, b.extension};
    CrookedHalfspace hb_neg{b.vertex, -b.director, b.extension};
    CrookedHalfspace opposite{base, -a.director, a.extension};
    for (const auto& row : sample_crooked_plane(a, budget)) {
      int prev = 0;
      for (const Point3& q : row) {
        ++rep.samples;
        best = std::min(best, distance_to_crooked_plane(q, b));
        if (in_halfspace(q, opposite)) rep.contained_in_halfspace = false;
        int side = in_halfspace(q, hb_pos) ? 1 : (in_halfspace(q, hb_neg) ? -1 : 0);
        if (side != 0 && prev != 0 && side != prev) rep.crossing_found = true;
        if (side != 0) prev = side;
        if (side == 0) {
          prev = 0;
          if (in_crooked_plane(q, b)) best = 0;
        }
      }
    }
  };
  sweep(cp1, cp2);
  sweep(cp2, cp1);
  rep.min_separation = rep.crossing_found ? 0.0 : best;
  return rep;
}

}  // namespace ein
