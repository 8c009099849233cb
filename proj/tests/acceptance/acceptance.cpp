// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ein3/certify.hpp"
#include "ein3/constructions.hpp"
#include "ein3/exact_surface.hpp"
#include "ein3/kernels.hpp"
#include "oracles.hpp"

using namespace ein;

namespace {

constexpr double kPointTol = 1e-12;      // projective agreement of named points
constexpr double kCartanTol = 1e-10;     // Cartan projection agreement
constexpr double kNamedTol = 1e-9;       // probes at shared points
constexpr double kExcludeRadius = 0.6;   // ball around shared points, radians
constexpr int kEmbedSamples = 100000;
constexpr double kEmbedSeconds = 10;
constexpr double kCertifySeconds = 60;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_line(const Vec5& a, const Vec5& b, double tol) { return oracle::line_angle(a, b) < tol; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

Outcome embedding_exactness() {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  auto q = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  for (int k = 0; k < kEmbedSamples; ++k) {
    Vec3Q v{q(), q(), q()};
    Vec5Q r = embed_rep(v);
    if (form32(r, r) != 0 || unembed_rep(r) != v) ++bad;
  }
  double dt = seconds_since(t0);
  return {bad == 0 && dt < kEmbedSeconds,
          std::to_string(kEmbedSamples) + " rationals, " + std::to_string(bad) + " failures, " + fmt(dt) + " s"};
}

Outcome anchored_constants() {
  bool ok = true;
  std::string bad;
  auto need = [&](bool c, const char* what) {
    if (!c) {
      ok = false;
      bad += std::string(" ") + what;
    }
  };
  need(normalize_leading(embed_rep(Vec3Q{0, 0, 0})) == Vec5Q{1, 0, 0, 0, 1}, "embed(o)");
  need(normalize_leading(embed_rep(Vec3Q{1, 0, 0})) == Vec5Q{0, 1, 0, 0, 1}, "embed(e1)");
  need(same_line(embed({0, 0, 0}).rep, {1, 0, 0, 0, 1}, kPointTol), "embed(o) float");
  NullFrameQ f = null_frame(Vec3Q{1, 0, 0});
  need(f.x_minus == Vec3Q{0, 1, 1} && f.x_plus == Vec3Q{0, -1, 1}, "null_frame(e1)");
  TorusData d{p_zero(), p_infinity(), EinPoint::from({0, 0, 1, 1, 0}), EinPoint::from({0, 0, -1, 1, 0})};
  need(same_line(torus_from_data(d).normal, {0, 1, 0, 0, 0}, kPointTol), "torus normal");
  SpacelikeCircle c = lightcone_intersection(p_infinity(), p_zero());
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    double t = 2 * M_PI * k / 100;
    worst = std::max(worst, oracle::line_angle(c.at(t).rep, {0, std::cos(t), std::sin(t), 1, 0}));
  }
  need(worst < kPointTol, "circle");
  return {ok, ok ? "five constants, circle max deviation " + fmt(worst) : "mismatch:" + bad};
}

Outcome mu_exact() {
  Iso32Q mu = mu_example();
  Mat5Q r = mu.m.transpose() * j32_matrix<Rational>() * mu.m;
  int nonzero = 0;
  Mat5Q j = j32_matrix<Rational>();
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) nonzero += r.a[a][b] != j.a[a][b];
  return {nonzero == 0, std::to_string(nonzero) + " nonzero residual entries over the rationals"};
}

Outcome halfspace_oracle() {
  std::mt19937_64 rng(1004);
  const int directors = 20, points = 1000;
  int resolved = 0, unresolved = 0, disagree = 0, on_plane = 0;
  for (int k = 0; k < directors; ++k) {
    Point3 p = oracle::random_vec3(rng);
    Vec3 u = oracle::random_spacelike(rng);
    Extension ext = k % 2 ? Extension::Negative : Extension::Positive;
    oracle::HalfspaceGrid grid(p, u, ext, 2.0, 81);
    CrookedHalfspace h{p, u, ext};
    CrookedPlane cp{p, u, ext};
    for (int j = 0; j < points; ++j) {
      Point3 q = p + oracle::random_in_ball(rng, 1.0);
      if (in_crooked_plane(q, cp)) {
        ++on_plane;
        continue;
      }
      int l = grid.classify(q);
      if (l == 0) {
        ++unresolved;
        continue;
      }
      ++resolved;
      disagree += (l > 0) != in_halfspace(q, h);
    }
  }
  return {disagree == 0 && resolved >= 10000,
          std::to_string(directors) + " directors, " + std::to_string(resolved) + " classified, " +
              std::to_string(disagree) + " disagreements, " + std::to_string(unresolved) +
              " within the oracle grid band, " + std::to_string(on_plane) + " on the plane"};
}

Outcome affine_strong() {
  std::mt19937_64 rng(1005);
  std::uniform_real_distribution<double> w(0.1, 2.0);
  int pairs = 0, good = 0, zero_ok = 0, draws = 0;
  double smallest = 1e9;
  while (pairs < 50 && draws < 100000) {
    ++draws;
    Vec3 u1 = oracle::random_spacelike(rng), u2 = oracle::random_spacelike(rng);
    if (!consistently_oriented(u1, u2)) continue;
    NullFrame f1 = null_frame(u1), f2 = null_frame(u2);
    Vec3 z1 = f1.x_minus * w(rng) - f1.x_plus * w(rng), z2 = f2.x_minus * w(rng) - f2.x_plus * w(rng);
    if (!allowable_pair(z1, z2, u1, u2)) continue;
    ++pairs;
    AffineCertificate c = affine_disjointness_certificate({z1, u1}, {z2, u2});
    if (c.contained_in_halfspace && c.min_separation > 0) ++good;
    smallest = std::min(smallest, c.min_separation);
    AffineCertificate z = affine_disjointness_certificate({{0, 0, 0}, u1}, {{0, 0, 0}, u2});
    if (z.min_separation == 0 && z.contained_in_halfspace) ++zero_ok;
  }
  return {pairs == 50 && good == 50 && zero_ok == 50,
          std::to_string(good) + "/" + std::to_string(pairs) + " allowable pairs separated (min " + fmt(smallest) +
              "), " + std::to_string(zero_ok) + "/" + std::to_string(pairs) + " zero pairs at 0"};
}

Outcome bookkeeping() {
  const AllowablePair zero{{0, 0, 0}, {0, 0, 0}};
  const int res = 128;
  bool ok = true;
  std::string detail;
  for (int st = 0; st < 4; ++st) {
    bool inner = st == 1 || st == 3, outer = st == 2 || st == 3;
    DisjointPairSpec spec = reference_pair_spec();
    if (!inner) spec.inner = zero;
    if (!outer) spec.outer = zero;
    auto [s1, s2] = pull_apart(spec);
    // p_0 is shared until the inner pair moves it, p_inf until the outer pair does
    bool expect_zero = !inner, expect_inf = !outer;
    std::vector<EinPoint> shared;
    bool stage_ok = true;
    for (auto [pt, expect] : {std::pair{p_infinity(), expect_inf}, std::pair{p_zero(), expect_zero}}) {
      bool on = in_crooked_surface(pt, s1, kNamedTol) && in_crooked_surface(pt, s2, kNamedTol);
      if (on != expect) stage_ok = false;
      if (expect) {
        shared.push_back(pt);
      } else {
        // the released point must sit off the other surface by a certified margin
        CrookedSurface other = in_crooked_surface(pt, s1, kNamedTol) ? s2 : s1;
        double d = CloudIndex(surface_cover(other, M_PI / (2 * res)).points).distance(pt);
        if (!(d > 3 * M_PI / (2 * res))) stage_ok = false;
      }
    }
    double margin, fine, cell = M_PI / (2 * res);
    if (shared.empty()) {
      SeparationReport r = separation_margin(s1, s2, res);
      margin = r.margin;
      fine = r.margin_fine;
    } else {
      margin = separation_margin_excluding(s1, s2, res, shared, kExcludeRadius);
      fine = separation_margin_excluding(s1, s2, 2 * res, shared, kExcludeRadius);
    }
    double ratio = fine / margin;
    if (!(fine > 3 * cell) || ratio < 0.5 || ratio > 1.5) stage_ok = false;
    static const char* names[4] = {"zero/zero", "inner", "outer", "both"};
    detail += std::string(st ? "; " : "") + names[st] + " shared " + std::to_string(shared.size()) + " margin " +
              fmt(fine) + (stage_ok ? "" : " (bad)");
    ok = ok && stage_ok;
  }
  return {ok, detail};
}

Outcome reference_certified() {
  auto t0 = std::chrono::steady_clock::now();
  auto [s1, s2] = pull_apart(reference_pair_spec());
  SeparationReport r = separation_margin(s1, s2, 64);
  double dt = seconds_since(t0);
  bool ok = r.certified_disjoint && r.refinement_ratio >= 0.5 && r.refinement_ratio <= 1.5 && dt < kCertifySeconds;
  return {ok, "margin " + fmt(r.margin) + " grid " + fmt(r.grid_diameter) + " ratio " + fmt(r.refinement_ratio) +
                  ", " + fmt(dt) + " s"};
}

Outcome negative_example_exact() {
  ExactSurfaceSpec s1;
  ExactSurfaceSpec s2{mu_example(), {0, 0, 0}, {1, 0, 0}, Extension::Negative};
  ExactDisjointReport r = exact_disjoint(s1, s2);
  int empty = 0;
  for (const auto& e : r.pairs) empty += e.result.verdict == PairVerdict::Empty;
  return {r.disjoint && r.undecided == 0,
          std::to_string(empty) + "/" + std::to_string(r.pairs.size()) + " piece pairs empty, " +
              std::to_string(r.undecided) + " undecided"};
}

Outcome topology() {
  CrookedSurface basic = compactify({{0, 0, 0}, {1, 0, 0}, Extension::Positive});
  TopologyReport t = mesh_topology_check(sample_surface(basic, 32));
  std::mt19937_64 rng(1009);
  std::uniform_real_distribution<double> a(-1, 1);
  std::vector<int> counts{component_count(basic)};
  for (int k = 0; k < 3; ++k) {
    Iso32 g = lift_linear(boost13(a(rng)) * rotation12(3 * a(rng))) * rho<double>() *
              lift_translation(oracle::random_vec3(rng)) * rho<double>();
    counts.push_back(component_count(
        CrookedSurface(g, oracle::random_vec3(rng), oracle::random_spacelike(rng), Extension::Positive)));
  }
  bool ok = t.euler == 0 && !t.orientable && t.nonmanifold_edges == 0;
  std::string cs;
  for (int c : counts) {
    ok = ok && c == 2;
    cs += (cs.empty() ? "" : ",") + std::to_string(c);
  }
  return {ok, "euler " + std::to_string(t.euler) + (t.orientable ? " orientable" : " non-orientable") +
                  ", components " + cs};
}

Outcome pingpong() {
  SchottkySystem sys = cyclic_schottky(boost13(1.0), cyclic_pair_spec(1.0));
  PingPongReport p = pingpong_check(sys, 10000);
  WordImageReport w = word_images(sys, 8, 10);
  bool decreasing = w.max_leaf_diameter.size() == 8;
  std::string ds;
  for (std::size_t k = 0; k < w.max_leaf_diameter.size(); ++k) {
    if (k > 0) decreasing = decreasing && w.max_leaf_diameter[k] < w.max_leaf_diameter[k - 1];
    ds += (k ? " " : "") + fmt(w.max_leaf_diameter[k]);
  }
  return {p.probes >= 10000 && p.consistent_fraction == 1.0 && decreasing,
          "fraction " + fmt(p.consistent_fraction) + " on " + std::to_string(p.probes) + " probes; leaf diameters " +
              ds};
}

Outcome no_bounded_distortion() {
  SchottkySystem sys = cyclic_schottky(boost13(1.0), cyclic_pair_spec(1.0));
  auto seq = cartan_power_sequence(sys.generators[0], 20);
  // smallest n0 with mu_n > 1 for every n >= n0
  int n0 = 21;
  for (int n = 20; n >= 1 && seq[n - 1].mu > 1.0; --n) n0 = n;
  bool monotone = true;
  for (int n = std::max(n0, 2); n <= 20; ++n) monotone = monotone && seq[n - 1].mu >= seq[n - 2].mu;
  DistortionClass c = classify_distortion(seq);
  return {n0 <= 10 && monotone && c != DistortionClass::Bounded,
          "n0 " + std::to_string(n0) + ", mu_20 " + fmt(seq[19].mu) + ", lambda_20 " + fmt(seq[19].lambda) +
              ", class " + to_string(c)};
}

Outcome cartan_correctness() {
  Iso32 h = make_iso32(oracle::hyperbolic_rotation(0, 4, 2.0)) * make_iso32(oracle::hyperbolic_rotation(1, 3, 1.0));
  CartanPair c = cartan_projection(h);
  double worst = std::max(std::fabs(c.lambda - 2), std::fabs(c.mu - 1));
  for (double ell : {0.25, 1.0, 2.5, 6.0}) {
    CartanPair b = cartan_projection(lift_linear(boost13(ell)));
    worst = std::max({worst, std::fabs(b.lambda - ell), std::fabs(b.mu)});
  }
  std::mt19937_64 rng(1012);
  double kworst = 0;
  for (int k = 0; k < 100; ++k) {
    Iso32 a{oracle::random_compact(rng)}, b{oracle::random_compact(rng)};
    CartanPair d = cartan_projection(a * h * b);
    kworst = std::max({kworst, std::fabs(d.lambda - c.lambda), std::fabs(d.mu - c.mu)});
  }
  return {worst <= kCartanTol && kworst <= kCartanTol,
          "max error " + fmt(worst) + ", bi-K deviation " + fmt(kworst) + " over 100 factor pairs"};
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"embedding exactness", embedding_exactness},
      {"anchored constants", anchored_constants},
      {"mu preserves the form exactly", mu_exact},
      {"halfspace oracle equivalence", halfspace_oracle},
      {"affine disjointness of allowable pairs", affine_strong},
      {"pull-apart bookkeeping", bookkeeping},
      {"reference pair certification", reference_certified},
      {"negative-extension example, exact", negative_example_exact},
      {"surface topology and separation", topology},
      {"ping-pong and nested images", pingpong},
      {"no bounded distortion", no_bounded_distortion},
      {"Cartan projection correctness", cartan_correctness},
  };
  int failed = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", k - failed, k);
  return failed == 0 ? 0 : 1;
}
