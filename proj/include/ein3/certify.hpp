#pragma once

#include <vector>

#include "ein3/exact_surface.hpp"
#include "ein3/mesh.hpp"

namespace ein {

// Angle between the lines of p and q, in [0, pi/2].
double round_distance(const EinPoint& p, const EinPoint& q);

struct SeparationReport {
  double margin = 0;
  int resolution = 0;
  double refinement_ratio = 0;
  bool certified_disjoint = false;
  double grid_diameter = 0;  // largest cover cell diameter, target pi / resolution
  double margin_fine = 0;      // margin at twice the resolution
};

SeparationReport separation_margin(const CrookedSurface& s1, const CrookedSurface& s2, int resolution);

// Margin after discarding mesh vertices within `radius` of any of `excluded`.
double separation_margin_excluding(const CrookedSurface& s1, const CrookedSurface& s2, int resolution,
                                   const std::vector<EinPoint>& excluded, double radius);

// Points of s1's mesh that lie on s2 (vertex within eps of the surface).
std::vector<EinPoint> mesh_points_on(const CrookedSurface& s1, const CrookedSurface& s2, int resolution,
                                     double eps);

struct ComponentGrid {
  int n = 32;          // phi and t steps; theta uses 2n
  double band = -1;    // node removal band, negative means the cover cell diameter
  double cover_diameter = -1;  // surface cover cell size, negative means a quarter grid step
};

struct ComponentReport {
  int components = 0;
  std::vector<int> sizes;  // node counts, descending
  double band = 0;
  int removed = 0;
  int crumbs = 0;  // components with no node beyond band + grid step
};

// Region growing on the (phi, theta, t) grid. Nodes on a surface are removed
// and grid edges that may cross a surface are cut.
ComponentReport component_report(const std::vector<CrookedSurface>& surfaces, const ComponentGrid& grid = {});
int component_count(const std::vector<CrookedSurface>& surfaces, const ComponentGrid& grid = {});
int component_count(const CrookedSurface& s, const ComponentGrid& grid = {});

// Labels every node of the grid: component id, -1 for removed nodes, -2 for crumbs.
struct LabeledGrid {
  int n_phi = 0, n_theta = 0, n_t = 0;
  std::vector<int> label;
  int index(int i, int j, int k) const { return (k * n_phi + i) * n_theta + j; }
  int locate(const EinPoint& q) const;  // nearest node
};
LabeledGrid label_components(const std::vector<CrookedSurface>& surfaces, const ComponentGrid& grid,
                             ComponentReport* rep = nullptr);

bool spacelike_circle_check(const EinPoint& p, const EinPoint& q, int samples = 256);

}  // namespace ein
