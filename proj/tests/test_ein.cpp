#include <cmath>
#include <random>

#include <doctest.h>

#include "ein3/ein.hpp"
#include "oracles.hpp"

using namespace ein;

namespace {

bool same_point(const EinPoint& a, const Vec5& v, double tol = 1e-12) {
  return oracle::line_angle(a.rep, v) < tol;
}

EinPoint random_point(std::mt19937_64& rng) { return embed(oracle::random_vec3(rng, 2)); }

Iso32 random_iso(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(-1.5, 1.5);
  Iso32 r = rho<double>();
  return lift_translation(oracle::random_vec3(rng)) * lift_linear(boost13(a(rng)) * rotation12(a(rng))) * r *
         lift_translation(oracle::random_vec3(rng)) * r * make_iso32(oracle::hyperbolic_rotation(0, 4, a(rng)));
}

const CrookedSurface kBasic = compactify({{0, 0, 0}, {1, 0, 0}, Extension::Positive});

}  // namespace

TEST_CASE("embed examples") {
  CHECK(same_point(embed({0, 0, 0}), {1, 0, 0, 0, 1}));
  CHECK(same_point(embed({1, 0, 0}), {0, 1, 0, 0, 1}));
  CHECK(embed({0, 0, 0}) == p_zero());
  std::mt19937_64 rng(31);
  for (int k = 0; k < 1000; ++k) {
    Vec5 r = embed_rep(oracle::random_vec3(rng, 3));
    CHECK(std::fabs(oracle::f32(r, r)) < 1e-12 * (1 + oracle::f32(r, r) + r[0] * r[0] + r[4] * r[4]));
  }
}

TEST_CASE("unembed examples") {
  Vec3 o = unembed(EinPoint::from({1, 0, 0, 0, 1}));
  CHECK(o == Vec3{0, 0, 0});
  Vec3 e = unembed(EinPoint::from({0, 1, 0, 0, 1}));
  CHECK(e[0] == doctest::Approx(1));
  CHECK(e[1] == doctest::Approx(0));
  CHECK_THROWS_AS(unembed(p_infinity()), GeometryError);
  CHECK_THROWS_AS(EinPoint::from({1, 0, 0, 0, 0}), GeometryError);
}

TEST_CASE("embed and unembed are inverse") {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 10000; ++k) {
    Vec3 v = oracle::random_vec3(rng, 5);
    Vec3 w = unembed(embed(v));
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(w[i] - v[i]) <= 1e-12 * (1 + dot(v, v)));
  }
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int k = 0; k < 1000; ++k) {
    Vec3Q v{Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 7), Rational(d(rng), 1 + std::abs(d(rng)))};
    for (auto& c : v.c) c.canonicalize();
    Vec5Q r = embed_rep(v);
    CHECK(form32(r, r) == 0);
    CHECK(unembed_rep(r) == v);
  }
}

TEST_CASE("incidence examples and symmetry") {
  EinPoint f1 = EinPoint::from({0, 0, 1, 1, 0});
  CHECK(incident(p_zero(), f1));
  CHECK_FALSE(incident(p_zero(), p_infinity()));
  CHECK(same_point(p_infinity(), {-1, 0, 0, 0, 1}));
  CHECK(oracle::f32({1, 0, 0, 0, 1}, {-1, 0, 0, 0, 1}) == -2);
  CHECK_THROWS_AS(incident(p_zero(), p_zero()), GeometryError);
  Photon ph = Photon::through(p_zero(), f1);
  for (double s : {0.3, 1.1, 2.7}) CHECK(incident(p_zero(), ph.at(s)) == (std::fabs(std::sin(s)) > 1e-9));
  std::mt19937_64 rng(33);
  for (int k = 0; k < 500; ++k) {
    EinPoint p = random_point(rng), q = random_point(rng);
    Iso32 g = random_iso(rng);
    CHECK(incident(p, q) == incident(q, p));
    CHECK(incident(p, q) == incident(apply(g, p), apply(g, q)));
    // embedded points are incident iff their difference is null
    Vec3 d = unembed(p) - unembed(q);
    CHECK(incident(p, q) == (std::fabs(form21(d, d)) < 1e-9));
  }
}

TEST_CASE("lightcone_contains examples") {
  CHECK(lightcone_contains(p_zero(), p_zero()));
  for (int k = 0; k < 16; ++k) {
    double t = 0.4 * k;
    CHECK(lightcone_contains(EinPoint::from({0, std::cos(t), std::sin(t), 1, 0}), p_infinity()));
  }
  std::mt19937_64 rng(34);
  for (int k = 0; k < 100; ++k) CHECK_FALSE(lightcone_contains(random_point(rng), p_infinity()));
}

TEST_CASE("lightcone_intersection of p_inf and p_0") {
  SpacelikeCircle c = lightcone_intersection(p_infinity(), p_zero());
  for (int k = 0; k < 100; ++k) {
    double t = 2 * M_PI * k / 100;
    Vec5 expect{0, std::cos(t), std::sin(t), 1, 0};
    CHECK(same_point(c.at(t), expect, 1e-12));
  }
  CHECK_THROWS_AS(lightcone_intersection(p_zero(), EinPoint::from({0, 0, 1, 1, 0})), GeometryError);
}

TEST_CASE("lightcone_intersection properties") {
  std::mt19937_64 rng(35);
  for (int k = 0; k < 50; ++k) {
    EinPoint p = random_point(rng), q = random_point(rng);
    if (incident(p, q)) continue;
    SpacelikeCircle c = lightcone_intersection(p, q);
    const int n = 200;
    for (int j = 0; j < n; ++j) {
      double t = 2 * M_PI * j / n, h = 1e-5;
      Vec5 x = c.lift(t);
      CHECK(std::fabs(oracle::f32(x, p.rep)) < 1e-9);
      CHECK(std::fabs(oracle::f32(x, q.rep)) < 1e-9);
      Vec5 tangent = (c.lift(t + h) - c.lift(t - h)) / (2 * h);
      CHECK(oracle::f32(tangent, tangent) > 0);
    }
    CHECK(oracle::line_angle(c.lift(0), c.lift(2 * M_PI)) < 1e-12);
    Iso32 g = random_iso(rng);
    SpacelikeCircle cg = lightcone_intersection(apply(g, p), apply(g, q));
    for (int j = 0; j < 10; ++j) {
      EinPoint y = apply(g, c.at(0.6 * j));
      CHECK(std::fabs(oracle::f32(y.rep, apply(g, p).rep)) < 1e-9);
      CHECK(std::fabs(oracle::f32(y.rep, apply(g, q).rep)) < 1e-9);
    }
    (void)cg;
  }
}

TEST_CASE("torus_from_data") {
  TorusData d = surface_torus_data(kBasic);
  EinTorus t = torus_from_data(d);
  CHECK(oracle::line_angle(t.normal, {0, 1, 0, 0, 0}) < 1e-12);
  std::mt19937_64 rng(36);
  for (int k = 0; k < 50; ++k) {
    Iso32 g = random_iso(rng);
    TorusData dg{apply(g, d.p1), apply(g, d.p2), apply(g, d.f1), apply(g, d.f2)};
    EinTorus tg = torus_from_data(dg);
    for (const auto& x : {dg.p1, dg.p2, dg.f1, dg.f2}) CHECK(std::fabs(oracle::f32(tg.normal, x.rep)) < 1e-9);
    // the form-preserving action carries the normal as a vector
    CHECK(oracle::line_angle(tg.normal, g * t.normal) < 1e-9);
  }
  TorusData bad{p_zero(), p_zero(), d.f1, d.f2};
  CHECK_THROWS_AS(torus_from_data(bad), GeometryError);
}

TEST_CASE("scaffold photons") {
  const auto& sc = kBasic.scaffold();
  EinPoint corner = EinPoint::from({0, 0, -1, 1, 0});
  CHECK(sc[0].contains(corner));
  CHECK(sc[2].contains(corner));
  std::mt19937_64 rng(37);
  for (int k = 0; k < 20; ++k) {
    Point3 p = oracle::random_vec3(rng);
    Vec3 u = oracle::random_spacelike(rng);
    CrookedSurface s = compactify({p, u, Extension::Positive});
    NullFrame f = null_frame(u);
    double px = form21(p, f.x_plus);
    EinPoint meet = EinPoint::from({-px, f.x_plus[0], f.x_plus[1], f.x_plus[2], px});
    CHECK(s.scaffold()[0].contains(meet));
    CHECK(s.scaffold()[2].contains(meet));
    if (k == 0) {
      // vertex at o: phi_p lies in the lightcone of (0 : x+ : 0)
      CrookedSurface so = compactify({{0, 0, 0}, u, Extension::Positive});
      EinPoint tip = EinPoint::from({0, f.x_plus[0], f.x_plus[1], f.x_plus[2], 0});
      for (double s2 : {0.2, 1.0, 2.5}) CHECK(lightcone_contains(so.scaffold()[2].at(s2), tip));
    }
  }
}

TEST_CASE("in_crooked_surface examples") {
  CHECK(in_crooked_surface(p_zero(), kBasic));
  CHECK(in_crooked_surface(p_infinity(), kBasic));
  CHECK_FALSE(in_crooked_surface(embed({0, 3, 1}), kBasic));
  CHECK(in_crooked_surface(embed({5, -2, 2}), kBasic));
}

TEST_CASE("in_crooked_surface is invariant under equivalent descriptions") {
  std::mt19937_64 rng(38);
  for (int k = 0; k < 20; ++k) {
    Iso32 g = random_iso(rng);
    Vec3 v = oracle::random_vec3(rng), p = oracle::random_vec3(rng);
    Vec3 u = oracle::random_spacelike(rng);
    CrookedSurface a(g * lift_translation(v), p, u, Extension::Positive);
    CrookedSurface b(g, p + v, u, Extension::Positive);
    CrookedSurface c(g, p + v, u * 3.0, Extension::Positive);
    for (int j = 0; j < 50; ++j) {
      EinPoint q = apply(g, random_point(rng));
      CHECK(in_crooked_surface(q, a) == in_crooked_surface(q, b));
      CHECK(surface_side(q, a) == surface_side(q, c));
    }
  }
}

TEST_CASE("surface_torus_data") {
  TorusData d = surface_torus_data(kBasic);
  CHECK(d.p1 == p_zero());
  CHECK(d.p2 == p_infinity());
  CHECK(same_point(d.f1, {0, 0, 1, 1, 0}));
  CHECK(same_point(d.f2, {0, 0, -1, 1, 0}));
  CHECK(d.valid());
  TorusData r = surface_torus_data(kBasic.moved(rho<double>()));
  CHECK(r.p1 == p_infinity());
  CHECK(r.p2 == p_zero());
  CHECK(same_point(r.f1, {0, 0, 1, 1, 0}));
  CHECK(same_point(r.f2, {0, 0, -1, 1, 0}));
  std::mt19937_64 rng(39);
  for (int k = 0; k < 20; ++k) CHECK(surface_torus_data(kBasic.moved(random_iso(rng))).valid());
}

TEST_CASE("surfaces spanned by torus data") {
  std::mt19937_64 rng(40);
  for (int k = 0; k < 20; ++k) {
    CrookedSurface s(random_iso(rng), oracle::random_vec3(rng), oracle::random_spacelike(rng), Extension::Positive);
    CrookedSurface t = surface_from_torus_data(surface_torus_data(s));
    for (int j = 0; j < 50; ++j) {
      EinPoint q = random_point(rng);
      CHECK(in_crooked_surface(q, s) == in_crooked_surface(q, t));
    }
    // every surface point of s lies on t
    for (double a : {0.3, 1.2, 2.0})
      for (double b : {0.1, 0.9}) {
        EinPoint q = apply(s.frame(), param_chart(a, M_PI, b));
        CHECK(in_crooked_surface(q, t, 1e-7) == in_crooked_surface(q, s, 1e-7));
      }
  }
}

TEST_CASE("param_chart examples") {
  CHECK(param_chart(0, 0, 0) == p_zero());
  CHECK(same_point(param_chart(M_PI / 2, M_PI / 2, M_PI / 2), {0, 0, 1, 1, 0}));
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> a(0, M_PI);
  for (int k = 0; k < 1000; ++k) {
    Vec5 x = param_chart_rep(a(rng), 2 * a(rng), a(rng));
    CHECK(std::fabs(oracle::f32(x, x)) < 1e-14);
  }
}

TEST_CASE("cylinder_coords") {
  CylinderCoords c0 = cylinder_coords(p_zero());
  CHECK_FALSE(c0.removed);
  CHECK(c0.h == doctest::Approx(0));
  CHECK(std::hypot(c0.x, c0.y) < 1e-12);
  CHECK(cylinder_coords(param_chart(M_PI, 0, 0.7)).removed);
  for (double phi : {0.3, 1.0, 2.0}) {
    CylinderCoords c = cylinder_coords(param_chart(phi, 1.0, 0));
    CHECK(c.h == doctest::Approx(0));
  }
  CylinderCoords mid = cylinder_coords(param_chart(1.0, 0.5, 1.3));
  CHECK(mid.h == doctest::Approx(1.3));
  CHECK(std::hypot(mid.x, mid.y) < 1);
}

TEST_CASE("lightcones meet both sides of a crooked surface") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 30; ++k) {
    EinPoint q = random_point(rng);
    LightconeChart ch = lightcone_chart(q);
    bool pos = false, neg = false;
    for (int i = 1; i < 40; ++i)
      for (int j = 0; j < 40; ++j) {
        int s = surface_side(ch.at(M_PI * i / 40, 2 * M_PI * j / 40), kBasic);
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
    CHECK(pos);
    CHECK(neg);
  }
}

TEST_CASE("cover_distance is a metric on samples") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 300; ++k) {
    EinPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
    CHECK(cover_distance(a, a) < 1e-7);
    CHECK(cover_distance(a, b) == doctest::Approx(cover_distance(b, a)));
    CHECK(cover_distance(a, c) <= cover_distance(a, b) + cover_distance(b, c) + 1e-12);
  }
}
