#include "ein3/ein.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace ein {

namespace {

constexpr double kLeadZero = 1e-12;

Vec5 euclid_unit(const Vec5& v) { return v / norm(v); }

// Orthogonal projection (Euclidean) of v off span(a, b).
Vec5 reject(const Vec5& v, const Vec5& a, const Vec5& b) {
  Vec5 ea = euclid_unit(a);
  Vec5 bb = b - ea * dot(b, ea);
  Vec5 eb = euclid_unit(bb);
  return v - ea * dot(v, ea) - eb * dot(v, eb);
}

}  // namespace

Vec5 canonical_rep(const Vec5& v) {
  Vec5 u = euclid_unit(v);
  for (int i = 0; i < 5; ++i) {
    if (u[i] < -kLeadZero) {
      u = -u;
      break;
    }
    if (u[i] > kLeadZero) break;
  }
  for (int i = 0; i < 5; ++i) u[i] += 0.0;  // no negative zeros
  return u;
}

EinPoint EinPoint::from(const Vec5& v, double eps) {
  if (v.is_zero() || !std::isfinite(norm(v)))
    throw GeometryError(Err::BadInput, "zero or non-finite representative");
  if (causal_class(v, eps) != CausalClass::Lightlike)
    throw GeometryError(Err::BadInput, "representative is not null");
  return {canonical_rep(v)};
}

EinPoint EinPoint::from_unchecked(const Vec5& v) { return {canonical_rep(v)}; }

bool operator==(const EinPoint& a, const EinPoint& b) {
  double d = std::fabs(dot(a.rep, b.rep));
  return d >= 1.0 - 1e-14;
}

Vec5Q normalize_leading(const Vec5Q& v) {
  for (int i = 0; i < 5; ++i)
    if (v[i] != 0) return v / Rational(v[i]);
  throw GeometryError(Err::BadInput, "zero representative");
}

EinPoint p_zero() { return EinPoint::from_unchecked({1, 0, 0, 0, 1}); }
EinPoint p_infinity() { return EinPoint::from_unchecked({-1, 0, 0, 0, 1}); }

Photon Photon::through(const EinPoint& a, const EinPoint& b, double eps) {
  if (a == b) throw GeometryError(Err::SamePoint, "a photon needs two distinct points");
  if (std::fabs(form32(a.rep, b.rep)) > eps)
    throw GeometryError(Err::DegenerateData, "points are not incident");
  return {a, b};
}

bool Photon::contains(const EinPoint& q, double eps) const {
  if (std::fabs(form32(q.rep, a.rep)) > eps || std::fabs(form32(q.rep, b.rep)) > eps) return false;
  return norm(reject(q.rep, a.rep, b.rep)) <= eps;
}

EinPoint Photon::at(double s) const {
  Vec5 bb = b.rep - a.rep * dot(b.rep, a.rep);
  bb = euclid_unit(bb);
  return EinPoint::from_unchecked(a.rep * std::cos(s) + bb * std::sin(s));
}

EinPoint embed(const Vec3& v) { return EinPoint::from_unchecked(embed_rep(v)); }

Vec3 unembed(const EinPoint& q, double eps) { return unembed_rep(q.rep, eps); }

EinPoint apply(const Iso32& g, const EinPoint& q) { return EinPoint::from_unchecked(g * q.rep); }

bool incident(const EinPoint& p, const EinPoint& q, double eps) {
  if (p == q) throw GeometryError(Err::SamePoint, "incident needs distinct points");
  return std::fabs(form32(p.rep, q.rep)) <= eps;
}

bool lightcone_contains(const EinPoint& q, const EinPoint& p, double eps) {
  if (q == p) return true;
  return std::fabs(form32(p.rep, q.rep)) <= eps;
}

Vec5 SpacelikeCircle::lift(double t) const { return e1 * std::cos(t) + e2 * std::sin(t) + e3; }

SpacelikeCircle lightcone_intersection(const EinPoint& p, const EinPoint& q, double eps) {
  if (p == q || std::fabs(form32(p.rep, q.rep)) <= eps)
    throw GeometryError(Err::IncidentPoints, "lightcone_intersection needs non-incident points");
  // form-orthogonal projection onto span(p, q)-perp
  double pq = form32(p.rep, q.rep);
  auto project = [&](const Vec5& v) {
    // v - alpha p - beta q with form(v', p) = form(v', q) = 0
    double alpha = form32(v, q.rep) / pq;
    double beta = form32(v, p.rep) / pq;
    return v - p.rep * alpha - q.rep * beta;
  };
  std::vector<Vec5> basis;
  std::vector<double> signs;
  for (int k = 0; k < 5 && basis.size() < 3; ++k) {
    Vec5 e{};
    e[k] = 1;
    Vec5 v = project(e);
    for (std::size_t i = 0; i < basis.size(); ++i) v -= basis[i] * (form32(v, basis[i]) * signs[i]);
    double n2 = form32(v, v);
    if (std::fabs(n2) < 1e-10) continue;
    basis.push_back(v / std::sqrt(std::fabs(n2)));
    signs.push_back(n2 > 0 ? 1.0 : -1.0);
  }
  if (basis.size() < 3) throw GeometryError(Err::DegenerateData, "could not build an adapted basis");
  SpacelikeCircle c;
  std::vector<Vec5> space, time;
  for (std::size_t i = 0; i < 3; ++i) (signs[i] > 0 ? space : time).push_back(basis[i]);
  if (space.size() != 2 || time.size() != 1)
    throw GeometryError(Err::DegenerateData, "span(p,q)-perp does not have signature (2,1)");
  c.e1 = space[0];
  c.e2 = space[1];
  c.e3 = time[0];
  return c;
}

EinPoint LightconeChart::at(double beta, double alpha) const {
  return EinPoint::from_unchecked(p * std::cos(beta) + circle.lift(alpha) * std::sin(beta));
}

LightconeChart lightcone_chart(const EinPoint& p) {
  const Vec5 partners[6] = {{-1, 0, 0, 0, 1}, {1, 0, 0, 0, 1}, {0, 1, 0, 0, 1},
                            {0, 0, 1, 1, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}};
  EinPoint best = EinPoint::from_unchecked(partners[0]);
  for (const Vec5& v : partners) {
    EinPoint q = EinPoint::from_unchecked(v);
    if (std::fabs(form32(p.rep, q.rep)) > std::fabs(form32(p.rep, best.rep))) best = q;
  }
  return {p.rep, lightcone_intersection(p, best)};
}

bool TorusData::valid(double eps) const {
  if (p1 == p2 || f1 == f2) return false;
  if (std::fabs(form32(p1.rep, p2.rep)) <= eps) return false;
  for (const EinPoint* f : {&f1, &f2})
    for (const EinPoint* p : {&p1, &p2})
      if (std::fabs(form32(f->rep, p->rep)) > eps) return false;
  return true;
}

EinTorus torus_from_data(const TorusData& d, double eps) {
  Eigen::Matrix<double, 4, 5> a;
  const EinPoint* pts[4] = {&d.p1, &d.p2, &d.f1, &d.f2};
  for (int i = 0; i < 4; ++i) {
    Vec5 jr = j32(pts[i]->rep);
    for (int k = 0; k < 5; ++k) a(i, k) = jr[k];
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 5>> svd(a, Eigen::ComputeFullV);
  auto s = svd.singularValues();
  if (s(3) < eps * std::max(1.0, s(0)))
    throw GeometryError(Err::DegenerateData, "torus data lifts do not span a 4-space");
  Vec5 n;
  for (int k = 0; k < 5; ++k) n[k] = svd.matrixV()(k, 4);
  if (form32(n, n) <= 0) throw GeometryError(Err::DegenerateData, "normal is not spacelike");
  return {canonical_rep(n)};
}

CrookedSurface::CrookedSurface(const Iso32& motion, const Point3& vertex, const Vec3& director, Extension ext)
    : motion_(motion), vertex_(vertex), director_(director), ext_(ext) {
  frame_ = motion_ * lift_translation(vertex_) * lift_linear_unchecked(director_frame(director_));
  frame_inv_ = frame_.inverse();
  const Vec5 p0{1, 0, 0, 0, 1}, pinf{-1, 0, 0, 0, 1};
  const Vec5 fp{0, 0, -1, 1, 0}, fm{0, 0, 1, 1, 0};  // (0:x+:0), (0:x-:0) for e1
  auto pt = [&](const Vec5& v) { return EinPoint::from_unchecked(frame_ * v); };
  scaffold_ = {Photon{pt(pinf), pt(fp)}, Photon{pt(pinf), pt(fm)}, Photon{pt(p0), pt(fp)},
               Photon{pt(p0), pt(fm)}};
}

CrookedSurface CrookedSurface::moved(const Iso32& g) const {
  return CrookedSurface(g * motion_, vertex_, director_, ext_);
}

CrookedSurface compactify(const CrookedPlane& cp) {
  return CrookedSurface(Iso32::identity(), cp.vertex, cp.director, cp.extension);
}

namespace {

struct StdForms {
  double s, lu, lp, lm, q;  // X1+X5, Y.e1, Y.x+, Y.x-, X1^2 - X5^2
};

StdForms std_forms(const Vec5& x) {
  const double r2 = std::sqrt(0.5);
  return {x[0] + x[4], x[1], (-x[2] - x[3]) * r2, (x[2] - x[3]) * r2, x[0] * x[0] - x[4] * x[4]};
}

}  // namespace

bool standard_on_surface(const Vec5& xin, Extension ext, double eps) {
  Vec5 x = euclid_unit(xin);
  StdForms f = std_forms(x);
  if (std::fabs(f.lu) <= eps && f.q >= -eps) return true;
  double sgn = ext == Extension::Positive ? 1.0 : -1.0;
  if (std::fabs(f.lp) <= eps && sgn * f.s * f.lu >= -eps) return true;
  if (std::fabs(f.lm) <= eps && -sgn * f.s * f.lu >= -eps) return true;
  return false;
}

int standard_side(const Vec5& xin, Extension ext, double eps) {
  Vec5 x = euclid_unit(xin);
  if (standard_on_surface(x, ext, eps)) return 0;
  StdForms f = std_forms(x);
  if (f.s == 0.0) {
    double prod = f.lu * f.lp;
    if (prod == 0.0) return 0;
    bool in_pos = ext == Extension::Positive ? prod < 0 : prod > 0;
    return in_pos ? 1 : -1;
  }
  auto sg = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  int su = sg(f.s * f.lu), sp = sg(f.s * f.lp), sm = sg(f.s * f.lm);
  if (halfspace_signs(su, sp, sm, ext)) return 1;
  if (halfspace_signs(-su, sm, sp, ext)) return -1;
  return 0;
}

bool in_crooked_surface(const EinPoint& q, const CrookedSurface& s, double eps) {
  return standard_on_surface(s.frame_inverse() * q.rep, s.extension(), eps);
}

int surface_side(const EinPoint& q, const CrookedSurface& s, double eps) {
  return standard_side(s.frame_inverse() * q.rep, s.extension(), eps);
}

TorusData surface_torus_data(const CrookedSurface& s) {
  auto pt = [&](const Vec5& v) { return EinPoint::from_unchecked(s.frame() * v); };
  return {pt({1, 0, 0, 0, 1}), pt({-1, 0, 0, 0, 1}), pt({0, 0, 1, 1, 0}), pt({0, 0, -1, 1, 0})};
}

Iso32 frame_from_torus_data(const TorusData& d, double eps) {
  if (!d.valid(eps)) throw GeometryError(Err::DegenerateData, "not torus data");
  double pp = form32(d.p1.rep, d.p2.rep), ff = form32(d.f1.rep, d.f2.rep);
  if (std::fabs(ff) <= eps) throw GeometryError(Err::DegenerateData, "f1 and f2 are incident");
  EinTorus tor = torus_from_data(d, eps);
  Vec5 n = tor.normal / std::sqrt(form32(tor.normal, tor.normal));
  const Vec5 src[5] = {{1, 0, 0, 0, 1}, {-1, 0, 0, 0, 1}, {0, 0, 1, 1, 0}, {0, 0, -1, 1, 0}, {0, 1, 0, 0, 0}};
  Eigen::Matrix<double, 5, 5> s;
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 5; ++i) s(i, j) = src[j][i];
  Eigen::Matrix<double, 5, 5> sinv = s.inverse();
  for (int mask = 0; mask < 8; ++mask) {
    double a = (mask & 1) ? -1.0 : 1.0, b = (mask & 2) ? -1.0 : 1.0, c = (mask & 4) ? -1.0 : 1.0;
    Vec5 cols[5] = {d.p1.rep * a, d.p2.rep * (-2.0 / (a * pp)), d.f1.rep * b,
                    d.f2.rep * (-2.0 / (b * ff)), n * c};
    Eigen::Matrix<double, 5, 5> t;
    for (int j = 0; j < 5; ++j)
      for (int i = 0; i < 5; ++i) t(i, j) = cols[j][i];
    Eigen::Matrix<double, 5, 5> m = t * sinv;
    if (m.topLeftCorner<3, 3>().determinant() <= 0 || m.bottomRightCorner<2, 2>().determinant() <= 0) continue;
    Iso32 g;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) g.m.a[i][j] = m(i, j);
    return g;
  }
  throw GeometryError(Err::DegenerateData, "no identity-component frame for the data");
}

CrookedSurface surface_from_torus_data(const TorusData& d, Extension ext) {
  return CrookedSurface(frame_from_torus_data(d), {0, 0, 0}, {1, 0, 0}, ext);
}

Vec5 param_chart_rep(double phi, double theta, double t) {
  return {std::cos(phi), std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta), std::sin(t),
          std::cos(t)};
}

EinPoint param_chart(double phi, double theta, double t) {
  return EinPoint::from_unchecked(param_chart_rep(phi, theta, t));
}

CoverPoint cover_lift(const EinPoint& q) {
  const Vec5& r = q.rep;
  double na = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  double nb = std::sqrt(r[3] * r[3] + r[4] * r[4]);
  return {{r[0] / na, r[1] / na, r[2] / na}, {r[3] / nb, r[4] / nb}};
}

double cover_distance(const EinPoint& p, const EinPoint& q) {
  CoverPoint a = cover_lift(p), b = cover_lift(q);
  // atan2 keeps full precision for nearby points; the antipodal lift turns
  // both angles into their supplements
  Vec3 x{a.a[0], a.a[1], a.a[2]}, y{b.a[0], b.a[1], b.a[2]};
  double da = std::atan2(norm(cross(x, y)), dot(x, y));
  double db = std::atan2(std::fabs(a.b[0] * b.b[1] - a.b[1] * b.b[0]), a.b[0] * b.b[0] + a.b[1] * b.b[1]);
  return std::min(std::hypot(da, db), std::hypot(M_PI - da, M_PI - db));
}

CylinderCoords cylinder_coords(const EinPoint& q, double eps) {
  CoverPoint c = cover_lift(q);
  double t = std::atan2(c.b[0], c.b[1]);
  if (t < 0 || t > M_PI - eps) {
    for (double& x : c.a) x = -x;
    c.b = {-c.b[0], -c.b[1]};
    t = std::atan2(c.b[0], c.b[1]);
    if (t > M_PI - eps || t < 0) t = 0;
  }
  CylinderCoords out;
  double phi = std::acos(std::clamp(c.a[0], -1.0, 1.0));
  out.h = t;
  if (phi >= M_PI - eps) {
    out.removed = true;
    return out;
  }
  double theta = std::atan2(c.a[2], c.a[1]);
  double rho = phi / M_PI;
  out.x = rho * std::cos(theta);
  out.y = rho * std::sin(theta);
  return out;
}

}  // namespace ein
