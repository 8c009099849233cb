#include "ein3/constructions.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ein3/kernels.hpp"

namespace ein {

bool pair_admissible(const AllowablePair& p, const Vec3& u1, const Vec3& u2) {
  if (p.z1.is_zero() && p.z2.is_zero()) return true;
  return allowable_pair(p.z1, p.z2, u1, u2);
}

Iso32 rho_conjugate_translation(const Vec3& v) { return rho<double>() * lift_translation(v) * rho<double>(); }

std::pair<CrookedSurface, CrookedSurface> pull_apart(const DisjointPairSpec& spec) {
  if (!pair_admissible(spec.inner, spec.u1, spec.u2) || !pair_admissible(spec.outer, spec.u1, spec.u2))
    throw GeometryError(Err::NotAllowable, "inner or outer pair is not allowable");
  CrookedSurface s1(rho_conjugate_translation(spec.outer.z1), spec.inner.z1, spec.u1, Extension::Positive);
  CrookedSurface s2(rho_conjugate_translation(spec.outer.z2), spec.inner.z2, spec.u2, Extension::Positive);
  return {s1, s2};
}

CrookedSurface RegionHandle::boundary() const {
  return CrookedSurface(motion, halfspace.vertex, halfspace.director, halfspace.extension);
}

bool RegionHandle::contains(const EinPoint& q, double eps) const { return surface_side(q, boundary(), eps) > 0; }

bool RegionHandle::closure_contains(const EinPoint& q, double eps) const {
  return surface_side(q, boundary(), eps) >= 0;
}

SchottkySystem cyclic_schottky(const Mat3& g, const DisjointPairSpec& spec) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = g.a[i][j];
  Eigen::EigenSolver<Eigen::Matrix3d> es(m);
  auto ev = es.eigenvalues();
  std::vector<double> re;
  for (int i = 0; i < 3; ++i) {
    if (std::fabs(ev(i).imag()) > 1e-9) throw GeometryError(Err::NotHyperbolic, "complex eigenvalues");
    re.push_back(ev(i).real());
  }
  std::sort(re.begin(), re.end());
  if (re[1] - re[0] < 1e-9 || re[2] - re[1] < 1e-9)
    throw GeometryError(Err::NotHyperbolic, "eigenvalues are not distinct");
  Iso32 lg = lift_linear(g);

  Vec3 gu1 = g * spec.u1;
  Vec3 c = cross(gu1, spec.u2);
  if (norm(c) > 1e-9 * norm(gu1) * norm(spec.u2) || dot(gu1, spec.u2) >= 0)
    throw GeometryError(Err::NotPaired, "g must carry u1 to a positive multiple of -u2");
  if (!pair_admissible(spec.inner, spec.u1, spec.u2) || !pair_admissible(spec.outer, spec.u1, spec.u2))
    throw GeometryError(Err::NotAllowable, "inner or outer pair is not allowable");

  Iso32 t1 = rho_conjugate_translation(spec.outer.z1) * lift_translation(spec.inner.z1);
  Iso32 t2 = rho_conjugate_translation(spec.outer.z2) * lift_translation(spec.inner.z2);
  SchottkySystem sys;
  sys.generators.push_back(t2 * lg * t1.inverse());
  sys.minus.push_back({rho_conjugate_translation(spec.outer.z1), {spec.inner.z1, spec.u1, Extension::Positive}});
  sys.plus.push_back({rho_conjugate_translation(spec.outer.z2), {spec.inner.z2, spec.u2, Extension::Positive}});
  sys.specs.push_back(spec);
  return sys;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Equivalence: return "equivalence";
    case ViolationKind::Overlap: return "overlap";
    default: return "contact";
  }
}

std::vector<EinPoint> chart_probes(std::size_t probes) {
  std::vector<EinPoint> out;
  if (probes == 0) return out;
  int k = 1;
  while (static_cast<std::size_t>(2 * k * k * k) < probes) ++k;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < 2 * k; ++b)
      for (int c = 0; c < k; ++c)
        out.push_back(param_chart((a + 0.5) * M_PI / k, (b + 0.5) * M_PI / k, (c + 0.5) * M_PI / k));
  return out;
}

PingPongReport pingpong_check(const SchottkySystem& sys, std::size_t probes, double contact_band) {
  PingPongReport rep;
  std::vector<EinPoint> qs = chart_probes(probes);
  std::vector<RegionHandle> regions;
  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    regions.push_back(sys.minus[i]);
    regions.push_back(sys.plus[i]);
  }
  const double eps = default_tol().mesh;
  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    CrookedSurface bm = sys.minus[i].boundary(), bp = sys.plus[i].boundary();
    std::vector<EinPoint> images(qs.size());
    for (std::size_t k = 0; k < qs.size(); ++k) images[k] = apply(sys.generators[i], qs[k]);
    std::vector<int> side_q = parallel::side_labels(qs, bm, eps);
    std::vector<int> side_img = parallel::side_labels(images, bp, eps);
    for (std::size_t k = 0; k < qs.size(); ++k) {
      ++rep.probes;
      // q on the boundary of U- maps to the boundary of U+; both sides agree
      bool ok = (side_q[k] == 0) == (side_img[k] == 0) && (side_q[k] > 0) == (side_img[k] < 0);
      if (ok)
        ++rep.consistent;
      else
        rep.violations.push_back({ViolationKind::Equivalence, static_cast<int>(i), qs[k]});
    }
  }
  // pairwise disjointness of the open regions, and contact of the boundaries
  std::vector<CrookedSurface> bounds;
  for (const auto& r : regions) bounds.push_back(r.boundary());
  for (const EinPoint& q : qs) {
    int inside = 0, near = 0;
    for (const auto& b : bounds) {
      if (surface_side(q, b, eps) > 0) ++inside;
      if (contact_band > 0 && surface_side(q, b, contact_band) == 0) ++near;
    }
    if (inside > 1) rep.violations.push_back({ViolationKind::Overlap, -1, q});
    if (near > 1) rep.violations.push_back({ViolationKind::Contact, -1, q});
  }
  rep.consistent_fraction = rep.probes ? static_cast<double>(rep.consistent) / rep.probes : 1.0;
  return rep;
}

std::string word_string(const ReducedWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    char c = static_cast<char>('a' + w[i].gen);
    s += w[i].exp > 0 ? c : static_cast<char>(c - 'a' + 'A');
  }
  return s;
}

std::vector<ReducedWord> reduced_words(int generators, int max_length) {
  std::vector<ReducedWord> out, frontier{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<ReducedWord> next;
    for (const auto& w : frontier)
      for (int g = 0; g < generators; ++g)
        for (int e : {1, -1}) {
          if (!w.empty() && w.back().gen == g && w.back().exp == -e) continue;
          ReducedWord x = w;
          x.push_back({g, e});
          next.push_back(x);
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

Iso32 word_matrix(const SchottkySystem& sys, const ReducedWord& w) {
  Iso32 m = Iso32::identity();
  for (const Letter& l : w) m = m * (l.exp > 0 ? sys.generators[l.gen] : sys.generators[l.gen].inverse());
  return m;
}

WordImageReport word_images(const SchottkySystem& sys, int depth, int samples_per_axis) {
  if (depth < 1) throw GeometryError(Err::BadInput, "depth must be at least 1");
  // closed-region samples for every U_i^{+-}: chart probes inside plus boundary vertices
  std::vector<EinPoint> grid = chart_probes(static_cast<std::size_t>(2) * samples_per_axis * samples_per_axis *
                                            samples_per_axis);
  auto region_samples = [&](const RegionHandle& r) {
    std::vector<EinPoint> pts;
    for (const EinPoint& q : grid)
      if (r.closure_contains(q)) pts.push_back(q);
    for (const EinPoint& v : sample_surface(r.boundary(), samples_per_axis).vertices) pts.push_back(v);
    return pts;
  };
  std::vector<std::vector<EinPoint>> base_plus, base_minus;
  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    base_plus.push_back(region_samples(sys.plus[i]));
    base_minus.push_back(region_samples(sys.minus[i]));
  }
  std::vector<Iso32> inverses;
  for (const Iso32& g : sys.generators) inverses.push_back(g.inverse());
  WordImageReport rep;
  rep.max_leaf_diameter.assign(depth, 0.0);
  std::vector<std::pair<std::string, double>> diam_of;
  auto lookup = [&](const std::string& s) {
    for (const auto& [k, v] : diam_of)
      if (k == s) return v;
    return 0.0;
  };
  for (const ReducedWord& w : reduced_words(static_cast<int>(sys.generators.size()), depth)) {
    ReducedWord prefix(w.begin(), w.end() - 1);
    const Letter& last = w.back();
    const auto& base = last.exp > 0 ? base_plus[last.gen] : base_minus[last.gen];
    // letter by letter, renormalizing each time, so long words keep precision
    std::vector<EinPoint> img = base;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
      const Iso32& g = it->exp > 0 ? sys.generators[it->gen] : inverses[it->gen];
      for (EinPoint& q : img) q = apply(g, q);
    }
    WordImage wi;
    wi.word = w;
    wi.samples = img.size();
    wi.diameter = parallel::max_pairwise_distance(img);
    wi.parent_diameter = prefix.empty() ? 0.0 : lookup(word_string(prefix));
    diam_of.emplace_back(word_string(w), wi.diameter);
    auto& slot = rep.max_leaf_diameter[w.size() - 1];
    slot = std::max(slot, wi.diameter);
    rep.images.push_back(std::move(wi));
  }
  return rep;
}

FundamentalDomainReport fundamental_domain_report(const SchottkySystem& sys, std::size_t probes, int depth) {
  FundamentalDomainReport rep;
  rep.depth = depth;
  std::vector<EinPoint> qs = chart_probes(probes);
  rep.probes = qs.size();
  auto in_f = [&](const EinPoint& q) {
    for (std::size_t i = 0; i < sys.generators.size(); ++i)
      if (sys.minus[i].contains(q) || sys.plus[i].contains(q)) return false;
    return true;
  };
  std::vector<Iso32> inverses{Iso32::identity()};
  for (const ReducedWord& w : reduced_words(static_cast<int>(sys.generators.size()), depth))
    inverses.push_back(word_matrix(sys, w).inverse());
  std::size_t in_domain = 0, covered = 0;
#pragma omp parallel for reduction(+ : in_domain, covered) schedule(dynamic, 64)
  for (long k = 0; k < static_cast<long>(qs.size()); ++k) {
    if (in_f(qs[k])) ++in_domain;
    for (const Iso32& wi : inverses)
      if (in_f(apply(wi, qs[k]))) {
        ++covered;
        break;
      }
  }
  rep.f_volume_fraction = qs.empty() ? 0.0 : static_cast<double>(in_domain) / qs.size();
  rep.translate_cover_fraction = qs.empty() ? 0.0 : static_cast<double>(covered) / qs.size();
  return rep;
}

DisjointPairSpec reference_pair_spec() {
  DisjointPairSpec s;
  s.u1 = {1, 0, 0};
  s.u2 = {-2, 0, 1};
  NullFrame f1 = null_frame(s.u1), f2 = null_frame(s.u2);
  s.inner = {f1.x_minus - f1.x_plus, f2.x_minus - f2.x_plus};
  s.outer = s.inner;
  return s;
}

DisjointPairSpec cyclic_pair_spec(double ell, double scale) {
  DisjointPairSpec s;
  s.u1 = {-1, 0, 0};
  s.u2 = -(boost13(ell) * s.u1);
  NullFrame f1 = null_frame(s.u1), f2 = null_frame(s.u2);
  s.inner = {(f1.x_minus - f1.x_plus) * scale, (f2.x_minus - f2.x_plus) * scale};
  s.outer = s.inner;
  return s;
}

}  // namespace ein
