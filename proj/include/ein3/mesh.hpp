#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "ein3/ein.hpp"

namespace ein {

enum class Part { Stem, WingPlus, WingMinus, Scaffold, Other };
std::string to_string(Part p);

struct SurfaceMesh {
  std::vector<EinPoint> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<Part> labels;  // one per face

  // Longest edge, in the projective round metric.
  double max_edge() const;
};

// Welds vertices that agree projectively (either sign) within tol.
class MeshBuilder {
 public:
  explicit MeshBuilder(double tol = 1e-9);
  ~MeshBuilder();
  int add_vertex(const Vec5& v);
  // Splits the quad a-b-c-d into two triangles, dropping degenerate ones.
  void add_quad(int a, int b, int c, int d, Part part);
  void add_triangle(int a, int b, int c, Part part);
  // Grid of rows x cols vertices, quads between neighbours.
  void add_grid(const std::vector<std::vector<Vec5>>& grid, Part part);
  SurfaceMesh take();

 private:
  struct Index;
  std::unique_ptr<Index> index_;
  SurfaceMesh mesh_;
  double tol_;
};

SurfaceMesh sample_surface(const CrookedSurface& s, int n);

// Point cover of a surface: quadtree cells of the parameter charts are split
// until the image of each cell has round diameter at most max_diameter.
struct SurfaceCover {
  std::vector<EinPoint> points;  // one centre sample per leaf cell
  double cell_diameter = 0;      // largest leaf diameter reached
  std::size_t cells = 0;
};
SurfaceCover surface_cover(const CrookedSurface& s, double max_diameter, int max_depth = 40);
// Lightcone of p on an (n x 2n) grid of the chart c p + r(cos a e1 + sin a e2 + e3).
SurfaceMesh sample_lightcone(const EinPoint& p, int n);

struct TopologyReport {
  int vertices = 0, edges = 0, faces = 0;
  int euler = 0;
  bool orientable = false;
  int nonmanifold_edges = 0;
};

// Throws UngluedMesh if boundary edges remain.
TopologyReport mesh_topology_check(const SurfaceMesh& mesh);

// Control meshes.
SurfaceMesh torus_mesh(int n);
SurfaceMesh sphere_mesh();
SurfaceMesh klein_bottle_mesh(int n);

// OBJ in cylinder coordinates, one group per part label; faces touching the
// removed circle or straddling the top/bottom gluing are skipped.
void write_obj(std::ostream& os, const SurfaceMesh& mesh);
// JSON with raw homogeneous coordinates.
void write_mesh_json(std::ostream& os, const SurfaceMesh& mesh);

}  // namespace ein
