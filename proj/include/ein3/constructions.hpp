#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ein3/certify.hpp"

namespace ein {

struct DisjointPairSpec {
  Vec3 u1, u2;
  AllowablePair inner;  // translations applied in E
  AllowablePair outer;  // translations conjugated by rho
};

// A pair passes if it is allowable or identically zero (the unmoved step).
bool pair_admissible(const AllowablePair& p, const Vec3& u1, const Vec3& u2);

// (rho tau_{z_i'} rho) conf CP(o + z_i, u_i), i = 1, 2
std::pair<CrookedSurface, CrookedSurface> pull_apart(const DisjointPairSpec& spec);

// rho tau_v rho
Iso32 rho_conjugate_translation(const Vec3& v);

// motion . conf H(vertex, director)
struct RegionHandle {
  Iso32 motion;
  CrookedHalfspace halfspace;

  CrookedSurface boundary() const;
  bool contains(const EinPoint& q, double eps = default_tol().mesh) const;          // open region
  bool closure_contains(const EinPoint& q, double eps = default_tol().mesh) const;  // closed region
  RegionHandle moved(const Iso32& g) const { return {g * motion, halfspace}; }
};

struct SchottkySystem {
  std::vector<Iso32> generators;
  std::vector<RegionHandle> minus, plus;  // U_i^-, U_i^+
  std::vector<DisjointPairSpec> specs;
};

// Generator eta = tau2 lift(g) tau1^-1 with tau_i = rho tau_{z_i'} rho tau_{z_i}.
// Requires g u1 to be a positive multiple of -u2 (NotPaired otherwise).
SchottkySystem cyclic_schottky(const Mat3& g, const DisjointPairSpec& spec);

enum class ViolationKind { Equivalence, Overlap, Contact };
std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  int generator;
  EinPoint point;
};

struct PingPongReport {
  std::size_t probes = 0;
  std::size_t consistent = 0;
  double consistent_fraction = 1.0;
  std::vector<Violation> violations;
};

// Probe grid of the (phi, theta, t) chart with at least `probes` nodes.
std::vector<EinPoint> chart_probes(std::size_t probes);

// contact_band > 0 also flags probes within that band of two different
// boundary surfaces.
PingPongReport pingpong_check(const SchottkySystem& sys, std::size_t probes, double contact_band = 0.0);

struct Letter {
  int gen;
  int exp;  // +1 or -1
};
using ReducedWord = std::vector<Letter>;
std::string word_string(const ReducedWord& w);
std::vector<ReducedWord> reduced_words(int generators, int max_length);
Iso32 word_matrix(const SchottkySystem& sys, const ReducedWord& w);

struct WordImage {
  ReducedWord word;
  double diameter = 0;         // product metric on the double cover
  double parent_diameter = 0;  // diameter of the region one level up (0 at depth 1)
  std::size_t samples = 0;
};

struct WordImageReport {
  std::vector<WordImage> images;
  std::vector<double> max_leaf_diameter;  // indexed by depth - 1
};

// Region of word l1..lk is l1..l_{k-1} applied to the region of lk.
WordImageReport word_images(const SchottkySystem& sys, int depth, int samples_per_axis = 14);

struct FundamentalDomainReport {
  double f_volume_fraction = 0;
  double translate_cover_fraction = 0;
  int depth = 0;
  std::size_t probes = 0;
};

FundamentalDomainReport fundamental_domain_report(const SchottkySystem& sys, std::size_t probes, int depth);

// Spec used throughout: u1 = (1,0,0), u2 = (-2,0,1), inner and outer pairs
// z_i = x-(u_i) - x+(u_i).
DisjointPairSpec reference_pair_spec();
// Cyclic example: u1 = (-1,0,0), g = boost13(ell), u2 = -g u1.
DisjointPairSpec cyclic_pair_spec(double ell, double scale = 1.0);

}  // namespace ein
