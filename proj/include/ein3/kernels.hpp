#pragma once

#include <memory>
#include <vector>

#include "ein3/ein.hpp"

namespace ein {

// Nearest-point queries against a fixed set of EinPoints in the projective
// round metric (both lifts are tried).
class CloudIndex {
 public:
  explicit CloudIndex(const std::vector<EinPoint>& pts);
  ~CloudIndex();
  CloudIndex(CloudIndex&&) noexcept;
  double distance(const EinPoint& q) const;
  // min(bound, distance(q)) using a box query of radius bound
  double distance_below(const EinPoint& q, double bound) const;
  std::size_t size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// angle between the lines of a and b
double round_angle(const Vec5& a, const Vec5& b);

namespace serial {
double cloud_min_distance(const std::vector<EinPoint>& a, const std::vector<EinPoint>& b);
std::vector<double> distances_to_cloud(const std::vector<EinPoint>& q, const std::vector<EinPoint>& cloud);
std::vector<int> side_labels(const std::vector<EinPoint>& q, const CrookedSurface& s, double eps);
double max_pairwise_distance(const std::vector<EinPoint>& pts);
}  // namespace serial

namespace parallel {
double cloud_min_distance(const std::vector<EinPoint>& a, const std::vector<EinPoint>& b);
std::vector<double> distances_to_cloud(const std::vector<EinPoint>& q, const std::vector<EinPoint>& cloud);
std::vector<int> side_labels(const std::vector<EinPoint>& q, const CrookedSurface& s, double eps);
double max_pairwise_distance(const std::vector<EinPoint>& pts);
}  // namespace parallel

}  // namespace ein
