#include "ein3/mesh.hpp"

#include "ein3/kernels.hpp"

#include <array>
#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <queue>

namespace ein {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

std::string to_string(Part p) {
  switch (p) {
    case Part::Stem: return "stem";
    case Part::WingPlus: return "wing_plus";
    case Part::WingMinus: return "wing_minus";
    case Part::Scaffold: return "scaffold";
    default: return "other";
  }
}

namespace {

using P5 = bg::model::point<double, 5, bg::cs::cartesian>;

P5 to_p5(const Vec5& v) {
  P5 p;
  bg::set<0>(p, v[0]);
  bg::set<1>(p, v[1]);
  bg::set<2>(p, v[2]);
  bg::set<3>(p, v[3]);
  bg::set<4>(p, v[4]);
  return p;
}

}  // namespace

double SurfaceMesh::max_edge() const {
  double m = 0;
  for (const auto& f : faces)
    for (int k = 0; k < 3; ++k) m = std::max(m, round_angle(vertices[f[k]].rep, vertices[f[(k + 1) % 3]].rep));
  return m;
}

struct MeshBuilder::Index {
  bgi::rtree<std::pair<P5, int>, bgi::quadratic<16>> tree;
};

MeshBuilder::MeshBuilder(double tol) : index_(std::make_unique<Index>()), tol_(tol) {}
MeshBuilder::~MeshBuilder() = default;

int MeshBuilder::add_vertex(const Vec5& v) {
  Vec5 c = canonical_rep(v);
  for (const Vec5& probe : {c, Vec5(-c)}) {
    std::vector<std::pair<P5, int>> hit;
    index_->tree.query(bgi::nearest(to_p5(probe), 1), std::back_inserter(hit));
    if (!hit.empty() && bg::distance(hit[0].first, to_p5(probe)) <= tol_) return hit[0].second;
  }
  int id = static_cast<int>(mesh_.vertices.size());
  mesh_.vertices.push_back(EinPoint{c});
  index_->tree.insert({to_p5(c), id});
  return id;
}

void MeshBuilder::add_triangle(int a, int b, int c, Part part) {
  if (a == b || b == c || a == c) return;
  mesh_.faces.push_back({a, b, c});
  mesh_.labels.push_back(part);
}

void MeshBuilder::add_quad(int a, int b, int c, int d, Part part) {
  add_triangle(a, b, c, part);
  add_triangle(a, c, d, part);
}

void MeshBuilder::add_grid(const std::vector<std::vector<Vec5>>& grid, Part part) {
  std::vector<std::vector<int>> ids(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (const Vec5& v : grid[i]) ids[i].push_back(add_vertex(v));
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    for (std::size_t j = 0; j + 1 < grid[i].size(); ++j)
      add_quad(ids[i][j], ids[i + 1][j], ids[i + 1][j + 1], ids[i][j + 1], part);
}

SurfaceMesh MeshBuilder::take() { return std::move(mesh_); }

namespace {

// t-like breakpoints are shared by the stem axes and the wing photons so the
// charts weld; both arrays stay symmetric under reflection.
struct SurfaceGrid {
  std::vector<double> t;  // on [0, pi]
  std::vector<double> s;  // on [-pi/2, pi/2]
};

Vec5 stem_point(double a, double b) {
  return Vec5{std::cos((a + b) / 2), 0.0, std::sin((a + b) / 2), std::sin((a - b) / 2), std::cos((a - b) / 2)};
}

struct WingChart {
  Vec5 f;
  double seed;
  Part part;
};

std::array<WingChart, 2> wing_charts(const CrookedSurface& s) {
  const double sg = s.extension() == Extension::Positive ? 1.0 : -1.0;
  return {{{{0, 0, -1, 1, 0}, sg, Part::WingPlus}, {{0, 0, 1, 1, 0}, -sg, Part::WingMinus}}};
}

Vec5 wing_point(const WingChart& w, double sv, double t) {
  const Vec5 p0{1, 0, 0, 0, 1}, pinf{1, 0, 0, 0, -1};
  Vec5 gt = p0 * ((std::cos(t) - 1) / 2) + pinf * ((std::cos(t) + 1) / 2);
  gt[1] -= std::sin(t) * w.seed;
  return gt * std::sin(sv) + w.f * std::cos(sv);
}

using Chart = std::vector<std::vector<Vec5>>;

// Stem squares a in [a0, a0 + pi], b in [b0, b0 + pi] where sin a sin b <= 0,
// then the two wings.
std::vector<Chart> surface_charts(const CrookedSurface& s, const SurfaceGrid& g) {
  const Iso32& fr = s.frame();
  std::vector<Chart> out;
  for (int sq = 0; sq < 2; ++sq) {
    double a0 = sq == 0 ? M_PI : 0.0, b0 = sq == 0 ? 0.0 : M_PI;
    Chart c(g.t.size());
    for (std::size_t i = 0; i < g.t.size(); ++i)
      for (double tb : g.t) c[i].push_back(fr * stem_point(a0 + g.t[i], b0 + tb));
    out.push_back(std::move(c));
  }
  for (const WingChart& w : wing_charts(s)) {
    Chart c(g.s.size());
    for (std::size_t i = 0; i < g.s.size(); ++i)
      for (double t : g.t) c[i].push_back(fr * wing_point(w, g.s[i], t));
    out.push_back(std::move(c));
  }
  return out;
}

SurfaceMesh mesh_from_charts(const std::vector<Chart>& charts) {
  MeshBuilder mb;
  const Part parts[4] = {Part::Stem, Part::Stem, Part::WingPlus, Part::WingMinus};
  for (std::size_t k = 0; k < charts.size(); ++k) mb.add_grid(charts[k], parts[k]);
  return mb.take();
}

std::vector<double> uniform(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i <= n; ++i) v.push_back(lo + (hi - lo) * i / n);
  return v;
}

}  // namespace

SurfaceMesh sample_surface(const CrookedSurface& s, int n) {
  if (n < 4) throw GeometryError(Err::ResolutionTooSmall, "sample_surface needs n >= 4");
  SurfaceGrid g{uniform(0, M_PI, n), uniform(-M_PI / 2, M_PI / 2, 2 * n)};
  return mesh_from_charts(surface_charts(s, g));
}

SurfaceCover surface_cover(const CrookedSurface& s, double max_diameter, int max_depth) {
  const Iso32& fr = s.frame();
  const auto wings = wing_charts(s);
  // chart k: 0, 1 stem squares, 2, 3 wings
  auto eval = [&](int k, double x, double y) {
    if (k < 2) return fr * stem_point((k == 0 ? M_PI : 0.0) + x, (k == 0 ? 0.0 : M_PI) + y);
    return fr * wing_point(wings[k - 2], x, y);
  };
  struct Cell {
    int k;
    double x0, x1, y0, y1;
    int depth;
  };
  std::vector<Cell> todo;
  const int seed = 8;
  for (int k = 0; k < 4; ++k) {
    double xl = k < 2 ? 0.0 : -M_PI / 2;
    for (int i = 0; i < seed; ++i)
      for (int j = 0; j < seed; ++j)
        todo.push_back({k, xl + M_PI * i / seed, xl + M_PI * (i + 1) / seed, M_PI * j / seed, M_PI * (j + 1) / seed, 0});
  }
  SurfaceCover cover;
  while (!todo.empty()) {
    Cell c = todo.back();
    todo.pop_back();
    const double xm = (c.x0 + c.x1) / 2, ym = (c.y0 + c.y1) / 2;
    const Vec5 pts[9] = {eval(c.k, c.x0, c.y0), eval(c.k, c.x1, c.y0), eval(c.k, c.x1, c.y1),
                         eval(c.k, c.x0, c.y1), eval(c.k, xm, c.y0), eval(c.k, c.x1, ym),
                         eval(c.k, xm, c.y1),   eval(c.k, c.x0, ym), eval(c.k, xm, ym)};
    double diam = 0;
    for (int i = 0; i < 9; ++i)
      for (int j = i + 1; j < 9; ++j) diam = std::max(diam, round_angle(pts[i], pts[j]));
    if (diam > max_diameter && c.depth < max_depth) {
      // split across the long direction only when the cell is stretched
      double dx = std::max(round_angle(pts[0], pts[1]), round_angle(pts[3], pts[2]));
      double dy = std::max(round_angle(pts[0], pts[3]), round_angle(pts[1], pts[2]));
      bool sx = dx * 2 > dy, sy = dy * 2 > dx;
      const int d = c.depth + 1;
      if (sx && sy) {
        todo.push_back({c.k, c.x0, xm, c.y0, ym, d});
        todo.push_back({c.k, xm, c.x1, c.y0, ym, d});
        todo.push_back({c.k, c.x0, xm, ym, c.y1, d});
        todo.push_back({c.k, xm, c.x1, ym, c.y1, d});
      } else if (sx) {
        todo.push_back({c.k, c.x0, xm, c.y0, c.y1, d});
        todo.push_back({c.k, xm, c.x1, c.y0, c.y1, d});
      } else {
        todo.push_back({c.k, c.x0, c.x1, c.y0, ym, d});
        todo.push_back({c.k, c.x0, c.x1, ym, c.y1, d});
      }
      continue;
    }
    cover.cell_diameter = std::max(cover.cell_diameter, diam);
    ++cover.cells;
    cover.points.push_back(EinPoint{canonical_rep(pts[8])});
  }
  return cover;
}

SurfaceMesh sample_lightcone(const EinPoint& p, int n) {
  if (n < 4) throw GeometryError(Err::ResolutionTooSmall, "sample_lightcone needs n >= 4");
  LightconeChart ch = lightcone_chart(p);
  MeshBuilder mb;
  std::vector<std::vector<Vec5>> g(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= 2 * n; ++j) {
      double beta = M_PI * i / n, alpha = M_PI * j / n;
      g[i].push_back(ch.p * std::cos(beta) + ch.circle.lift(alpha) * std::sin(beta));
    }
  mb.add_grid(g, Part::Other);
  return mb.take();
}

TopologyReport mesh_topology_check(const SurfaceMesh& mesh) {
  std::map<std::pair<int, int>, std::vector<int>> edges;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f)
    for (int k = 0; k < 3; ++k) {
      int a = mesh.faces[f][k], b = mesh.faces[f][(k + 1) % 3];
      edges[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
    }
  TopologyReport r;
  int boundary = 0;
  for (const auto& [e, fs] : edges) {
    if (fs.size() == 1) ++boundary;
    if (fs.size() > 2) ++r.nonmanifold_edges;
  }
  if (boundary > 0)
    throw GeometryError(Err::UngluedMesh, std::to_string(boundary) + " boundary edges after gluing");
  std::vector<char> used(mesh.vertices.size(), 0);
  for (const auto& f : mesh.faces)
    for (int v : f) used[v] = 1;
  for (char u : used) r.vertices += u;
  r.edges = static_cast<int>(edges.size());
  r.faces = static_cast<int>(mesh.faces.size());
  r.euler = r.vertices - r.edges + r.faces;

  // orientation propagation: flip[f] says whether face f is reversed
  auto dir = [&](int f, int a, int b) {
    const auto& t = mesh.faces[f];
    for (int k = 0; k < 3; ++k)
      if (t[k] == a && t[(k + 1) % 3] == b) return 1;
    return -1;
  };
  std::vector<int> flip(mesh.faces.size(), 0);  // 0 unvisited, +1 / -1
  bool ok = r.nonmanifold_edges == 0;
  for (std::size_t start = 0; start < mesh.faces.size() && ok; ++start) {
    if (flip[start]) continue;
    flip[start] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(start));
    while (!q.empty() && ok) {
      int f = q.front();
      q.pop();
      for (int k = 0; k < 3; ++k) {
        int a = mesh.faces[f][k], b = mesh.faces[f][(k + 1) % 3];
        for (int g : edges[{std::min(a, b), std::max(a, b)}]) {
          if (g == f) continue;
          // neighbour must run the shared edge the other way
          int want = -flip[f] * dir(f, a, b) * dir(g, a, b);
          if (!flip[g]) {
            flip[g] = want;
            q.push(g);
          } else if (flip[g] != want) {
            ok = false;
          }
        }
      }
    }
  }
  r.orientable = ok;
  return r;
}

namespace {

SurfaceMesh index_mesh(int nv, const std::vector<std::array<int, 3>>& faces) {
  SurfaceMesh m;
  m.vertices.assign(nv, EinPoint{Vec5{1, 0, 0, 0, 1}});
  m.faces = faces;
  m.labels.assign(faces.size(), Part::Other);
  return m;
}

}  // namespace

SurfaceMesh torus_mesh(int n) {
  std::vector<std::array<int, 3>> f;
  auto id = [n](int i, int j) { return ((i + n) % n) * n + (j + n) % n; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      f.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      f.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return index_mesh(n * n, f);
}

SurfaceMesh klein_bottle_mesh(int n) {
  std::vector<std::array<int, 3>> f;
  auto id = [n](int i, int j) {
    i = (i % n + n) % n;
    if (j >= n) i = (n - i) % n, j -= n;
    return i * n + j;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      f.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      f.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return index_mesh(n * n, f);
}

SurfaceMesh sphere_mesh() {
  // octahedron
  return index_mesh(6, {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}});
}

namespace {

void put(std::ostream& os, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  os << buf;
}

}  // namespace

void write_obj(std::ostream& os, const SurfaceMesh& mesh) {
  std::vector<CylinderCoords> cc;
  cc.reserve(mesh.vertices.size());
  os << "# cylinder model: x, y in the unit disk, z = t in [0, pi]\n";
  for (const EinPoint& v : mesh.vertices) {
    CylinderCoords c = cylinder_coords(v);
    if (c.removed) c.x = 1.0;
    cc.push_back(c);
    os << "v ";
    put(os, c.x);
    os << ' ';
    put(os, c.y);
    os << ' ';
    put(os, c.h);
    os << '\n';
  }
  for (Part part : {Part::Stem, Part::WingPlus, Part::WingMinus, Part::Scaffold, Part::Other}) {
    bool header = false;
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
      if (mesh.labels[f] != part) continue;
      const auto& t = mesh.faces[f];
      bool skip = false;
      double hmin = 1e9, hmax = -1e9;
      for (int k = 0; k < 3; ++k) {
        const CylinderCoords& c = cc[t[k]];
        skip = skip || c.removed;
        hmin = std::min(hmin, c.h);
        hmax = std::max(hmax, c.h);
        const CylinderCoords& d = cc[t[(k + 1) % 3]];
        skip = skip || std::hypot(c.x - d.x, c.y - d.y) > 0.5;
      }
      if (skip || hmax - hmin > M_PI / 2) continue;
      if (!header) {
        os << "g " << to_string(part) << '\n';
        header = true;
      }
      os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
  }
}

void write_mesh_json(std::ostream& os, const SurfaceMesh& mesh) {
  os << "{\"vertices\":[";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    os << (i ? "," : "") << '[';
    for (int k = 0; k < 5; ++k) {
      if (k) os << ',';
      put(os, mesh.vertices[i].rep[k]);
    }
    os << ']';
  }
  os << "],\"faces\":[";
  for (std::size_t i = 0; i < mesh.faces.size(); ++i)
    os << (i ? "," : "") << '[' << mesh.faces[i][0] << ',' << mesh.faces[i][1] << ',' << mesh.faces[i][2] << ']';
  os << "],\"labels\":[";
  for (std::size_t i = 0; i < mesh.labels.size(); ++i) os << (i ? "," : "") << '"' << to_string(mesh.labels[i]) << '"';
  os << "]}\n";
}

}  // namespace ein
