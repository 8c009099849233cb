#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ein3/crooked.hpp"
#include "ein3/group.hpp"

namespace ein {

// Projective class of a null vector: unit Euclidean representative whose
// first coordinate above 1e-12 in magnitude is positive.
struct EinPoint {
  Vec5 rep;

  // Throws BadInput for zero or non-null vectors.
  static EinPoint from(const Vec5& v, double eps = default_tol().causal);
  static EinPoint from_unchecked(const Vec5& v);
  friend bool operator==(const EinPoint& a, const EinPoint& b);
};

Vec5 canonical_rep(const Vec5& v);

// Exact counterpart: scale so the first nonzero coordinate is 1.
Vec5Q normalize_leading(const Vec5Q& v);

EinPoint p_zero();
EinPoint p_infinity();

struct Photon {
  EinPoint a, b;
  static Photon through(const EinPoint& a, const EinPoint& b, double eps = default_tol().pred);
  bool contains(const EinPoint& q, double eps = default_tol().pred) const;
  EinPoint at(double s) const;  // cos s a + sin s b after orthonormalizing
};

template <class T>
Vec5T<T> embed_rep(const Vec3T<T>& v) {
  T q = form21(v, v);
  return {(1 - q) / 2, v[0], v[1], v[2], (1 + q) / 2};
}

template <class T>
Vec3T<T> unembed_rep(const Vec5T<T>& r, double eps = 0) {
  T s = r[0] + r[4];
  double scale = 0;
  if constexpr (!is_exact_v<T>) scale = eps * std::sqrt(to_double(dot(r, r)));
  if (sign_of(s, scale) == 0) throw GeometryError(Err::AtInfinity, "point lies on the lightcone of p_inf");
  return {r[1] / s, r[2] / s, r[3] / s};
}

EinPoint embed(const Vec3& v);
Vec3 unembed(const EinPoint& q, double eps = default_tol().causal);

EinPoint apply(const Iso32& g, const EinPoint& q);

bool incident(const EinPoint& p, const EinPoint& q, double eps = default_tol().pred);
bool lightcone_contains(const EinPoint& q, const EinPoint& p, double eps = default_tol().pred);

// t -> cos t e1 + sin t e2 + e3 where (e1, e2, e3) is an adapted orthonormal
// basis of span(p, q)-perp obtained by projecting the standard basis in order.
struct SpacelikeCircle {
  Vec5 e1, e2, e3;
  Vec5 lift(double t) const;
  EinPoint at(double t) const { return EinPoint::from_unchecked(lift(t)); }
};

SpacelikeCircle lightcone_intersection(const EinPoint& p, const EinPoint& q,
                                       double eps = default_tol().pred);

// Lightcone of p as a two-parameter family c p + r (cos a e1 + sin a e2 + e3).
struct LightconeChart {
  Vec5 p;
  SpacelikeCircle circle;
  EinPoint at(double beta, double alpha) const;
};
LightconeChart lightcone_chart(const EinPoint& p);

struct TorusData {
  EinPoint p1, p2, f1, f2;
  bool valid(double eps = default_tol().pred) const;
};

struct EinTorus {
  Vec5 normal;
};

EinTorus torus_from_data(const TorusData& d, double eps = default_tol().pred);

class CrookedSurface {
 public:
  CrookedSurface() : CrookedSurface(Iso32::identity(), {0, 0, 0}, {1, 0, 0}, Extension::Positive) {}
  CrookedSurface(const Iso32& motion, const Point3& vertex, const Vec3& director, Extension ext);

  const Iso32& motion() const { return motion_; }
  const Point3& vertex() const { return vertex_; }
  const Vec3& director() const { return director_; }
  Extension extension() const { return ext_; }

  // motion * tau(vertex) * lift(director frame): carries the standard surface
  // (vertex o, director e1) onto this one.
  const Iso32& frame() const { return frame_; }
  const Iso32& frame_inverse() const { return frame_inv_; }

  // phi_inf, psi_inf, phi_p, psi_p
  const std::array<Photon, 4>& scaffold() const { return scaffold_; }

  CrookedSurface moved(const Iso32& g) const;

 private:
  Iso32 motion_;
  Point3 vertex_;
  Vec3 director_;
  Extension ext_;
  Iso32 frame_, frame_inv_;
  std::array<Photon, 4> scaffold_;
};

CrookedSurface compactify(const CrookedPlane& cp);

// Standard-position predicates on a (not necessarily normalized) vector X
// in the frame of the e1 surface.
bool standard_on_surface(const Vec5& x, Extension ext, double eps);
// +1 inside conf H(o,e1), -1 inside conf H(o,-e1), 0 on the surface.
int standard_side(const Vec5& x, Extension ext, double eps);

bool in_crooked_surface(const EinPoint& q, const CrookedSurface& s, double eps = default_tol().mesh);
// Which side of the surface q lies on: +1 for motion conf H(vertex, director),
// -1 for the opposite halfspace, 0 on the surface (within eps).
int surface_side(const EinPoint& q, const CrookedSurface& s, double eps = default_tol().mesh);

TorusData surface_torus_data(const CrookedSurface& s);

// Iso32 in the identity component carrying the basic data {p0, p_inf, f1, f2}
// onto d, then the crooked surface spanned by d.
Iso32 frame_from_torus_data(const TorusData& d, double eps = default_tol().pred);
CrookedSurface surface_from_torus_data(const TorusData& d, Extension ext = Extension::Positive);

EinPoint param_chart(double phi, double theta, double t);
Vec5 param_chart_rep(double phi, double theta, double t);

struct CylinderCoords {
  bool removed = false;
  double x = 0, y = 0, h = 0;
};
CylinderCoords cylinder_coords(const EinPoint& q, double eps = 1e-9);

// Lift to the double cover S^2 x S^1: (a, b) with |a| = |b| = 1, b = (x4, x5).
struct CoverPoint {
  std::array<double, 3> a;
  std::array<double, 2> b;
};
CoverPoint cover_lift(const EinPoint& q);
// Product metric on S^2 x S^1 pushed down to the antipodal quotient.
double cover_distance(const EinPoint& p, const EinPoint& q);

}  // namespace ein
