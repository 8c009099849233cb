#include "ein3/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "ein3/kernels.hpp"

namespace ein {

double round_distance(const EinPoint& p, const EinPoint& q) { return round_angle(p.rep, q.rep); }

SeparationReport separation_margin(const CrookedSurface& s1, const CrookedSurface& s2, int resolution) {
  if (resolution < 8) throw GeometryError(Err::ResolutionTooSmall, "separation_margin needs resolution >= 8");
  SeparationReport r;
  r.resolution = resolution;
  // the motions distort the round metric, so the surfaces are covered by
  // quadtree cells of bounded image diameter instead of a uniform grid
  const double h = M_PI / resolution;
  SurfaceCover c1 = surface_cover(s1, h), c2 = surface_cover(s2, h);
  r.margin = parallel::cloud_min_distance(c1.points, c2.points);
  r.grid_diameter = std::max(c1.cell_diameter, c2.cell_diameter);
  SurfaceCover f1 = surface_cover(s1, h / 2), f2 = surface_cover(s2, h / 2);
  r.margin_fine = parallel::cloud_min_distance(f1.points, f2.points);
  r.refinement_ratio = r.margin > 0 ? r.margin_fine / r.margin : 0.0;
  r.certified_disjoint = r.margin > 3.0 * r.grid_diameter;
  return r;
}

double separation_margin_excluding(const CrookedSurface& s1, const CrookedSurface& s2, int resolution,
                                   const std::vector<EinPoint>& excluded, double radius) {
  auto keep = [&](const std::vector<EinPoint>& pts) {
    std::vector<EinPoint> out;
    for (const EinPoint& v : pts) {
      bool near = false;
      for (const EinPoint& e : excluded) near = near || round_distance(v, e) < radius;
      if (!near) out.push_back(v);
    }
    return out;
  };
  const double h = M_PI / resolution;
  SurfaceCover c1 = surface_cover(s1, h), c2 = surface_cover(s2, h);
  std::vector<EinPoint> a = keep(c1.points), b = keep(c2.points);
  // distances are taken against the full other cover, so contact hidden in
  // the excluded balls on one side still shows up from the other side
  return std::min(parallel::cloud_min_distance(a, c2.points), parallel::cloud_min_distance(b, c1.points));
}

std::vector<EinPoint> mesh_points_on(const CrookedSurface& s1, const CrookedSurface& s2, int resolution,
                                     double eps) {
  std::vector<EinPoint> out;
  for (const EinPoint& v : sample_surface(s1, resolution).vertices)
    if (in_crooked_surface(v, s2, eps)) out.push_back(v);
  return out;
}

int LabeledGrid::locate(const EinPoint& q) const {
  CoverPoint c = cover_lift(q);
  double t = std::atan2(c.b[0], c.b[1]);
  if (t < 0) {
    t += M_PI;
    for (double& x : c.a) x = -x;
  }
  double phi = std::acos(std::clamp(c.a[0], -1.0, 1.0));
  double th = std::atan2(c.a[2], c.a[1]);
  if (th < 0) th += 2 * M_PI;
  int i = std::clamp(static_cast<int>(phi / M_PI * n_phi), 0, n_phi - 1);
  int j = static_cast<int>(std::lround(th / (2 * M_PI) * n_theta)) % n_theta;
  int k = static_cast<int>(std::lround(t / M_PI * n_t));
  if (k >= n_t) {
    k = 0;
    i = n_phi - 1 - i;
    j = (j + n_theta / 2) % n_theta;
  }
  return index(i, j, k);
}

LabeledGrid label_components(const std::vector<CrookedSurface>& surfaces, const ComponentGrid& grid,
                             ComponentReport* rep) {
  LabeledGrid g;
  g.n_phi = grid.n;
  g.n_theta = 2 * grid.n;
  g.n_t = grid.n;
  const int total = g.n_phi * g.n_theta * g.n_t;
  std::vector<EinPoint> nodes(total);
  for (int k = 0; k < g.n_t; ++k)
    for (int i = 0; i < g.n_phi; ++i)
      for (int j = 0; j < g.n_theta; ++j)
        nodes[g.index(i, j, k)] =
            param_chart((i + 0.5) * M_PI / g.n_phi, j * 2 * M_PI / g.n_theta, k * M_PI / g.n_t);

  auto neighbours = [&](int i, int j, int k, std::vector<int>& out) {
    out.clear();
    out.push_back(g.index(i, (j + 1) % g.n_theta, k));
    out.push_back(g.index(i, (j + g.n_theta - 1) % g.n_theta, k));
    for (int di : {-1, 1}) {
      int ii = i + di;
      if (ii >= 0 && ii < g.n_phi)
        out.push_back(g.index(ii, j, k));
      else  // across a pole
        out.push_back(g.index(i, (j + g.n_theta / 2) % g.n_theta, k));
    }
    for (int dk : {-1, 1}) {
      int kk = k + dk;
      if (kk >= 0 && kk < g.n_t) {
        out.push_back(g.index(i, j, kk));
      } else {
        // t = pi is glued to t = 0 through the antipodal map
        out.push_back(g.index(g.n_phi - 1 - i, (j + g.n_theta / 2) % g.n_theta, kk < 0 ? g.n_t - 1 : 0));
      }
    }
  };

  double h_grid = 0;
  {
    std::vector<int> nb;
    for (int k = 0; k < g.n_t; ++k)
      for (int i = 0; i < g.n_phi; ++i)
        for (int j = 0; j < g.n_theta; ++j) {
          neighbours(i, j, k, nb);
          for (int b : nb) h_grid = std::max(h_grid, round_distance(nodes[g.index(i, j, k)], nodes[b]));
        }
  }
  // A grid edge crossing a surface has an end within h_grid / 2 of it, so
  // removing that band leaves no crossing edge.
  std::vector<double> dist(total, std::numeric_limits<double>::infinity());
  const double cell = grid.cover_diameter > 0 ? grid.cover_diameter : 0.25 * h_grid;
  double band = 0;
  for (const CrookedSurface& s : surfaces) {
    SurfaceCover c = surface_cover(s, cell);
    band = std::max(band, grid.band >= 0 ? grid.band : 0.6 * h_grid + c.cell_diameter);
    std::vector<double> d = parallel::distances_to_cloud(nodes, c.points);
    for (int q = 0; q < total; ++q) dist[q] = std::min(dist[q], d[q]);
  }
  std::vector<char> removed(total, 0);
  for (int q = 0; q < total; ++q) removed[q] = dist[q] < band;
  // components made only of nodes hugging the band are discretization crumbs
  const double core = band + h_grid;

  g.label.assign(total, -1);
  std::vector<int> sizes, nb;
  std::vector<char> is_deep;
  for (int start = 0; start < total; ++start) {
    if (removed[start] || g.label[start] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    int count = 0;
    bool deep = false;
    std::queue<int> q;
    q.push(start);
    g.label[start] = id;
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      ++count;
      deep = deep || dist[cur] >= core;
      int j = cur % g.n_theta, i = (cur / g.n_theta) % g.n_phi, k = cur / (g.n_theta * g.n_phi);
      neighbours(i, j, k, nb);
      for (int b : nb)
        if (!removed[b] && g.label[b] < 0) {
          g.label[b] = id;
          q.push(b);
        }
    }
    sizes.push_back(count);
    is_deep.push_back(deep);
  }
  std::vector<int> remap(sizes.size(), -2), kept;
  int crumbs = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (is_deep[c]) {
      remap[c] = static_cast<int>(kept.size());
      kept.push_back(sizes[c]);
    } else {
      ++crumbs;
    }
  }
  for (int& l : g.label)
    if (l >= 0) l = remap[l];
  if (rep) {
    rep->components = static_cast<int>(kept.size());
    rep->sizes = kept;
    rep->crumbs = crumbs;
    std::sort(rep->sizes.rbegin(), rep->sizes.rend());
    rep->band = std::max(band, 0.0);
    rep->removed = static_cast<int>(std::count(removed.begin(), removed.end(), 1));
  }
  return g;
}

ComponentReport component_report(const std::vector<CrookedSurface>& surfaces, const ComponentGrid& grid) {
  if (grid.n < 16) throw GeometryError(Err::ResolutionTooSmall, "component grid needs n >= 16");
  ComponentReport r;
  label_components(surfaces, grid, &r);
  return r;
}

int component_count(const std::vector<CrookedSurface>& surfaces, const ComponentGrid& grid) {
  return component_report(surfaces, grid).components;
}

int component_count(const CrookedSurface& s, const ComponentGrid& grid) {
  return component_count(std::vector<CrookedSurface>{s}, grid);
}

bool spacelike_circle_check(const EinPoint& p, const EinPoint& q, int samples) {
  SpacelikeCircle c = lightcone_intersection(p, q);
  for (int k = 0; k < samples; ++k) {
    double t0 = 2 * M_PI * k / samples, t1 = 2 * M_PI * (k + 1) / samples;
    Vec5 a = c.lift(t0), b = c.lift(t1);
    // consistent lifts: same scale in the e3 direction, difference is the chord
    Vec5 d = b - a;
    if (causal_class(d) != CausalClass::Spacelike) return false;
    if (form32(a, b) >= 0) return false;
  }
  return true;
}

}  // namespace ein
