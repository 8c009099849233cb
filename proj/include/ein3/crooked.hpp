#pragma once

#include <vector>

#include "ein3/forms.hpp"

namespace ein {

enum class Extension { Positive, Negative };
std::string to_string(Extension e);

// Director is kept with its sign; equality compares the canonical form
// (leading nonzero coordinate positive, time-free normalization).
struct CrookedPlane {
  Point3 vertex;
  Vec3 director;
  Extension extension = Extension::Positive;

  Vec3 canonical_director() const;
  friend bool operator==(const CrookedPlane& a, const CrookedPlane& b);
};

struct CrookedHalfspace {
  Point3 vertex;
  Vec3 director;
  Extension extension = Extension::Positive;
};

struct StemQuadrant {
  Point3 vertex;
  Vec3 director;
};

struct AllowablePair {
  Vec3 z1, z2;
};

struct Wing {
  Vec3 x;     // null direction
  Vec3 seed;  // spacelike, orthogonal to x
};

// Wings of CP(p,u) as (x, seed) pairs; [0] belongs to x_plus, [1] to x_minus.
std::array<Wing, 2> wings_of(const Vec3& u, Extension ext);

bool in_stem(const Point3& q, const Point3& p, const Vec3& u, double eps = default_tol().pred);
bool in_wing(const Point3& q, const Point3& p, const Vec3& x, const Vec3& seed,
             double eps = default_tol().pred);
bool in_crooked_plane(const Point3& q, const CrookedPlane& cp, double eps = default_tol().pred);
bool in_halfspace(const Point3& q, const CrookedHalfspace& hs, double eps = default_tol().pred);
bool in_stem_quadrant(const Point3& q, const StemQuadrant& sq, double eps = default_tol().pred);

// Sign classification of w = q - p against the halfspace H(p,u) for either
// extension. The three signs are sign(w.u), sign(w.x+), sign(w.x-).
bool halfspace_signs(int su, int sp, int sm, Extension ext);

bool consistently_oriented(const Vec3& u1, const Vec3& u2, double eps = default_tol().pred);

// Interior of the cone spanned by the generators (at most four, in R^3).
bool cone_interior_facets(const std::vector<Vec3>& gens, const Vec3& v, double eps);
bool cone_interior_lp(const std::vector<Vec3>& gens, const Vec3& v, double eps);

bool allowable_pair(const Vec3& z1, const Vec3& z2, const Vec3& u1, const Vec3& u2,
                    double eps = default_tol().pred);

// Euclidean distance from q to the crooked plane, piece by piece.
double distance_to_stem(const Point3& q, const Point3& p, const Vec3& u);
double distance_to_wing(const Point3& q, const Point3& p, const Wing& w);
double distance_to_crooked_plane(const Point3& q, const CrookedPlane& cp);

struct AffineCertificate {
  bool contained_in_halfspace = false;
  double min_separation = 0;
  bool crossing_found = false;
  std::size_t samples = 0;
};

// Containment is checked against cl H(base, director of cp_i) for both planes;
// base defaults to the origin as in the displacement setting.
AffineCertificate affine_disjointness_certificate(const CrookedPlane& cp1, const CrookedPlane& cp2,
                                                  int budget = 48, const Point3& base = {0, 0, 0});

// Sample points of a crooked plane (stem polar grid, wing grids, far field
// through tan compactification). Rows are grid lines, used for crossing tests.
std::vector<std::vector<Point3>> sample_crooked_plane(const CrookedPlane& cp, int budget);

}  // namespace ein
