#include "ein3/exact_surface.hpp"

#include "ein3/exact/conic.hpp"
#include "ein3/exact/poly.hpp"

namespace ein {

using exact::Poly;

std::string to_string(PairVerdict v) {
  switch (v) {
    case PairVerdict::Empty: return "empty";
    case PairVerdict::Intersects: return "intersects";
    default: return "undecided";
  }
}

namespace {

Mat5Q zero5() { return Mat5Q{}; }

// symmetric matrix of the product of the linear forms a.X and b.X
Mat5Q sym_product(const Vec5Q& a, const Vec5Q& b) {
  Mat5Q m;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m.a[i][j] = (a[i] * b[j] + a[j] * b[i]) / 2;
  return m;
}

Vec5Q lin_of(const Vec3Q& v) {
  // X -> form21((X2, X3, X4), v)
  return {0, v[0], v[1], -v[2], 0};
}

}  // namespace

std::array<ExactPiece, 3> exact_pieces(const ExactSurfaceSpec& s) {
  NullFrameQ f = null_frame(s.director);
  Rational sg = s.extension == Extension::Positive ? 1 : -1;
  Vec5Q sum{1, 0, 0, 0, 1};
  Mat5Q stem_q = zero5();
  stem_q.a[0][0] = 1;
  stem_q.a[4][4] = -1;
  std::array<ExactPiece, 3> local = {
      ExactPiece{"stem", lin_of(f.u), stem_q},
      ExactPiece{"wing_plus", lin_of(f.x_plus), sym_product(sum, lin_of(Vec3Q(f.u * sg)))},
      ExactPiece{"wing_minus", lin_of(f.x_minus), sym_product(sum, lin_of(Vec3Q(f.u * Rational(-sg))))},
  };
  // world X = T Z, Z = T^-1 X: lin' = T^-T lin, quad' = T^-T quad T^-1
  Iso32Q t = s.motion * lift_translation(s.vertex);
  Mat5Q ti = t.inverse().m;
  Mat5Q tit = ti.transpose();
  for (auto& p : local) {
    p.lin = tit * p.lin;
    p.quad = tit * p.quad * ti;
  }
  return local;
}

namespace {

// Rational basis of {X : a.X = 0, b.X = 0}.
std::vector<Vec5Q> null_space(const Vec5Q& a, const Vec5Q& b) {
  std::array<Vec5Q, 2> rows{a, b};
  int piv[2] = {-1, -1};
  int r = 0;
  for (int col = 0; col < 5 && r < 2; ++col) {
    int sel = -1;
    for (int i = r; i < 2; ++i)
      if (rows[i][col] != 0) sel = i;
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    Rational p = rows[r][col];
    rows[r] = rows[r] / p;
    for (int i = 0; i < 2; ++i)
      if (i != r && rows[i][col] != 0) rows[i] = rows[i] - rows[r] * Rational(rows[i][col]);
    piv[r++] = col;
  }
  std::vector<Vec5Q> basis;
  for (int col = 0; col < 5; ++col) {
    if (col == piv[0] || col == piv[1]) continue;
    Vec5Q v;
    v[col] = 1;
    for (int i = 0; i < r; ++i) v[piv[i]] = -rows[i][col];
    basis.push_back(v);
  }
  return basis;
}

exact::Sym3 restrict(const Mat5Q& q, const std::vector<Vec5Q>& v) {
  exact::Sym3 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = dot(v[i], q * v[j]);
  return g;
}

// exists t in R u {inf} with F(t) >= 0 and H(t) >= 0; finf, hinf are the
// values of the homogenized quartics at infinity
bool common_nonnegative(Poly f, Poly h, const Rational& finf, const Rational& hinf) {
  if (finf >= 0 && hinf >= 0) return true;
  if (f.is_zero()) f = Poly::constant(1);
  if (h.is_zero()) h = Poly::constant(1);
  Poly g = exact::gcd(f, h);
  if (g.degree() > 0 && exact::SturmChain(exact::squarefree(g)).count_real() > 0) return true;

  Poly fs = exact::squarefree(f), hs = exact::squarefree(h);
  auto roots = exact::isolate_real_roots(f * h);
  Poly ps = exact::squarefree(f * h);
  exact::SturmChain cf(fs.degree() > 0 ? fs : Poly::constant(1));
  exact::SturmChain ch(hs.degree() > 0 ? hs : Poly::constant(1));

  auto both_ok = [&](const Rational& t) { return f.eval(t) >= 0 && h.eval(t) >= 0; };

  // make the isolating intervals pairwise separated
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
      if (roots[i].hi >= roots[i + 1].lo && !(roots[i].lo == roots[i].hi && roots[i + 1].lo == roots[i + 1].hi)) {
        exact::refine(ps, roots[i]);
        exact::refine(ps, roots[i + 1]);
        again = true;
      }
  }

  for (auto& r : roots) {
    if (r.lo == r.hi) {
      if (both_ok(r.lo)) return true;
      continue;
    }
    // root of exactly one of f, h; the other keeps a constant sign once the
    // interval holds none of its roots
    bool of_f = fs.degree() > 0 && cf.count(r.lo, r.hi) == 1;
    const Poly& other = of_f ? h : f;
    const exact::SturmChain& oc = of_f ? ch : cf;
    const Poly& os = of_f ? hs : fs;
    while (r.lo != r.hi && os.degree() > 0 && (oc.count(r.lo, r.hi) > 0 || other.eval(r.lo) == 0))
      exact::refine(ps, r);
    if (r.lo == r.hi) {
      if (both_ok(r.lo)) return true;
      continue;
    }
    if (other.eval(r.lo) > 0) return true;
  }

  std::vector<Rational> probes;
  if (roots.empty()) {
    probes.push_back(0);
  } else {
    probes.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) probes.push_back((roots[i].hi + roots[i + 1].lo) / 2);
    probes.push_back(roots.back().hi + 1);
  }
  for (const Rational& t : probes)
    if (f.eval(t) > 0 && h.eval(t) > 0) return true;
  return false;
}

}  // namespace

PairResult exact_piece_pair(const ExactPiece& a, const ExactPiece& b) {
  std::vector<Vec5Q> v = null_space(a.lin, b.lin);
  if (v.size() != 3) return {PairVerdict::Undecided, "linear forms are dependent"};
  exact::Sym3 g = restrict(j32_matrix<Rational>(), v);
  exact::ConicPoint cp = exact::rational_null_vector(g);
  switch (cp.kind) {
    case exact::ConicKind::Empty: return {PairVerdict::Empty, "no real null vectors on the common plane"};
    case exact::ConicKind::Degenerate: return {PairVerdict::Undecided, "degenerate conic"};
    case exact::ConicKind::NoRationalPoint: return {PairVerdict::Undecided, "conic without rational point"};
    default: break;
  }
  exact::Vec3R y0 = cp.point;
  // complete y0 to a basis with two unit vectors
  std::vector<exact::Vec3R> extra;
  for (int k = 0; k < 3 && extra.size() < 2; ++k) {
    exact::Vec3R e{0, 0, 0};
    e[k] = 1;
    // independence test against y0 and the vectors already chosen
    exact::Vec3R c1 = extra.empty() ? exact::Vec3R{0, 0, 0} : extra[0];
    if (extra.empty()) {
      Rational cx = y0[1] * e[2] - y0[2] * e[1], cy = y0[2] * e[0] - y0[0] * e[2], cz = y0[0] * e[1] - y0[1] * e[0];
      if (cx != 0 || cy != 0 || cz != 0) extra.push_back(e);
    } else {
      Rational det = y0[0] * (c1[1] * e[2] - c1[2] * e[1]) - y0[1] * (c1[0] * e[2] - c1[2] * e[0]) +
                     y0[2] * (c1[0] * e[1] - c1[1] * e[0]);
      if (det != 0) extra.push_back(e);
    }
  }
  const exact::Vec3R& w1 = extra[0];
  const exact::Vec3R& w2 = extra[1];
  Rational g11 = exact::quad(g, w1, w1), g12 = exact::quad(g, w1, w2), g22 = exact::quad(g, w2, w2);
  Rational a0 = exact::quad(g, y0, w1), b0 = exact::quad(g, y0, w2);
  // y(t) = c0 + c1 t + c2 t^2
  std::array<exact::Vec3R, 3> c;
  for (int k = 0; k < 3; ++k) {
    c[0][k] = -g11 * y0[k] + 2 * a0 * w1[k];
    c[1][k] = -2 * g12 * y0[k] + 2 * b0 * w1[k] + 2 * a0 * w2[k];
    c[2][k] = -g22 * y0[k] + 2 * b0 * w2[k];
  }
  auto quartic = [&](const Mat5Q& q) {
    exact::Sym3 qv = restrict(q, v);
    std::vector<Rational> co(5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) co[i + j] += exact::quad(qv, c[i], c[j]);
    return std::pair<Poly, Rational>{Poly(co), co[4]};
  };
  auto [f, finf] = quartic(a.quad);
  auto [h, hinf] = quartic(b.quad);
  if (common_nonnegative(f, h, finf, hinf)) return {PairVerdict::Intersects, "common point on the conic"};
  return {PairVerdict::Empty, "inequalities never hold together on the conic"};
}

ExactDisjointReport exact_disjoint(const ExactSurfaceSpec& s1, const ExactSurfaceSpec& s2) {
  ExactDisjointReport rep;
  auto p1 = exact_pieces(s1), p2 = exact_pieces(s2);
  bool any_hit = false;
  for (const auto& a : p1)
    for (const auto& b : p2) {
      PairResult r = exact_piece_pair(a, b);
      if (r.verdict == PairVerdict::Undecided) ++rep.undecided;
      if (r.verdict == PairVerdict::Intersects) any_hit = true;
      rep.pairs.push_back({a.name, b.name, r});
    }
  rep.disjoint = !any_hit && rep.undecided == 0;
  return rep;
}

}  // namespace ein
