#include "ein3/kernels.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>
#include <cmath>
#include <limits>

namespace ein {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

namespace {

using P5 = bg::model::point<double, 5, bg::cs::cartesian>;
using Entry = std::pair<P5, int>;

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

double round_angle(const Vec5& a, const Vec5& b) {
  Vec5 x = normalized(a), y = normalized(b);
  double chord = std::min(norm(x - y), norm(x + y));
  return 2.0 * std::asin(std::min(1.0, chord / 2.0));
}

struct CloudIndex::Impl {
  bgi::rtree<Entry, bgi::rstar<16>> tree;
};

CloudIndex::CloudIndex(const std::vector<EinPoint>& pts) : impl_(std::make_unique<Impl>()) {
  std::vector<Entry> e;
  e.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) e.emplace_back(to_p5(pts[i].rep), static_cast<int>(i));
  impl_->tree = bgi::rtree<Entry, bgi::rstar<16>>(e.begin(), e.end());
}
CloudIndex::~CloudIndex() = default;
CloudIndex::CloudIndex(CloudIndex&&) noexcept = default;

std::size_t CloudIndex::size() const { return impl_->tree.size(); }

double CloudIndex::distance(const EinPoint& q) const {
  if (impl_->tree.empty()) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (double s : {1.0, -1.0}) {
    Vec5 v = q.rep * s;
    std::vector<Entry> hit;
    impl_->tree.query(bgi::nearest(to_p5(v), 1), std::back_inserter(hit));
    double chord = bg::distance(hit[0].first, to_p5(v));
    best = std::min(best, 2.0 * std::asin(std::min(1.0, chord / 2.0)));
  }
  return best;
}

double CloudIndex::distance_below(const EinPoint& q, double bound) const {
  if (impl_->tree.empty() || !(bound < M_PI)) return std::min(bound, distance(q));
  const double r = 2.0 * std::sin(bound / 2.0);
  double best = bound;
  std::vector<Entry> hit;
  for (double s : {1.0, -1.0}) {
    Vec5 v = q.rep * s;
    P5 lo, hi;
    bg::set<0>(lo, v[0] - r), bg::set<1>(lo, v[1] - r), bg::set<2>(lo, v[2] - r), bg::set<3>(lo, v[3] - r),
        bg::set<4>(lo, v[4] - r);
    bg::set<0>(hi, v[0] + r), bg::set<1>(hi, v[1] + r), bg::set<2>(hi, v[2] + r), bg::set<3>(hi, v[3] + r),
        bg::set<4>(hi, v[4] + r);
    hit.clear();
    impl_->tree.query(bgi::intersects(bg::model::box<P5>(lo, hi)), std::back_inserter(hit));
    for (const Entry& e : hit) {
      double chord = bg::distance(e.first, to_p5(v));
      best = std::min(best, 2.0 * std::asin(std::min(1.0, chord / 2.0)));
    }
  }
  return best;
}

namespace serial {

double cloud_min_distance(const std::vector<EinPoint>& a, const std::vector<EinPoint>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a)
    for (const auto& q : b) best = std::min(best, round_angle(p.rep, q.rep));
  return best;
}

std::vector<double> distances_to_cloud(const std::vector<EinPoint>& q, const std::vector<EinPoint>& cloud) {
  std::vector<double> out(q.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (const auto& c : cloud) out[i] = std::min(out[i], round_angle(q[i].rep, c.rep));
  return out;
}

std::vector<int> side_labels(const std::vector<EinPoint>& q, const CrookedSurface& s, double eps) {
  std::vector<int> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = surface_side(q[i], s, eps);
  return out;
}

double max_pairwise_distance(const std::vector<EinPoint>& pts) {
  double best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, cover_distance(pts[i], pts[j]));
  return best;
}

}  // namespace serial

namespace parallel {

double cloud_min_distance(const std::vector<EinPoint>& a, const std::vector<EinPoint>& b) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  CloudIndex idx(b);
  const long n = static_cast<long>(a.size());
  // a nearest-point pass over a subsample gives the bound for box queries
  const long stride = std::max(1L, n / 256);
  double bound = std::numeric_limits<double>::infinity();
  for (long i = 0; i < n; i += stride) bound = std::min(bound, idx.distance(a[i]));
  double best = bound;
#pragma omp parallel for reduction(min : best) schedule(dynamic, 256)
  for (long i = 0; i < n; ++i) best = std::min(best, idx.distance_below(a[i], bound));
  return best;
}

std::vector<double> distances_to_cloud(const std::vector<EinPoint>& q, const std::vector<EinPoint>& cloud) {
  std::vector<double> out(q.size(), std::numeric_limits<double>::infinity());
  if (cloud.empty()) return out;
  CloudIndex idx(cloud);
  const long n = static_cast<long>(q.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = idx.distance(q[i]);
  return out;
}

std::vector<int> side_labels(const std::vector<EinPoint>& q, const CrookedSurface& s, double eps) {
  std::vector<int> out(q.size());
  const long n = static_cast<long>(q.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = surface_side(q[i], s, eps);
  return out;
}

double max_pairwise_distance(const std::vector<EinPoint>& pts) {
  const long n = static_cast<long>(pts.size());
  double best = 0;
#pragma omp parallel for reduction(max : best) schedule(dynamic, 16)
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) best = std::max(best, cover_distance(pts[i], pts[j]));
  return best;
}

}  // namespace parallel

}  // namespace ein
