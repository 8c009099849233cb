#include "ein3/group.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace ein {

Iso32 make_iso32(const Mat5& m, double eps) {
  Iso32 g{m};
  if (g.residual() > eps) throw GeometryError(Err::NotInGroup, "matrix does not preserve the (3,2) form");
  return g;
}

namespace {

template <class T>
bool is_lorentz(const MatN<T, 3>& g, double eps) {
  MatN<T, 3> j = MatN<T, 3>::identity();
  j.a[2][2] = T(-1);
  MatN<T, 3> r = g.transpose() * j * g;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      T d = r.a[i][k] - j.a[i][k];
      if constexpr (is_exact_v<T>) {
        if (d != 0) return false;
      } else if (std::fabs(d) > eps) {
        return false;
      }
    }
  return true;
}

}  // namespace

Iso32 lift_linear(const Mat3& g, double eps) {
  if (!is_lorentz(g, eps)) throw GeometryError(Err::NotLorentz, "g does not preserve the (2,1) form");
  return lift_linear_unchecked(g);
}

Iso32Q lift_linear(const MatN<Rational, 3>& g) {
  if (!is_lorentz(g, 0)) throw GeometryError(Err::NotLorentz, "g does not preserve the (2,1) form");
  return lift_linear_unchecked(g);
}

Iso32Q mu_example() {
  static const char* rows[5][5] = {
      {"-5/6", "1", "-12", "12", "5/6"},
      {"0", "-2", "107/12", "-109/12", "0"},
      {"5/9", "5/3", "-20", "20", "13/9"},
      {"0", "-2", "179/12", "-181/12", "0"},
      {"1/18", "5/3", "-20", "20", "35/18"},
  };
  Iso32Q g;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) g.m.a[i][j] = parse_rational(rows[i][j]);
  return g;
}

Mat3 boost13(double ell) {
  Mat3 b = Mat3::identity();
  b.a[0][0] = b.a[2][2] = std::cosh(ell);
  b.a[0][2] = b.a[2][0] = std::sinh(ell);
  return b;
}

Mat3 rotation12(double theta) {
  Mat3 r = Mat3::identity();
  r.a[0][0] = r.a[1][1] = std::cos(theta);
  r.a[0][1] = -std::sin(theta);
  r.a[1][0] = std::sin(theta);
  return r;
}

Mat3 director_frame(const Vec3& u) {
  NullFrame f = null_frame(u);
  Vec3 t = (f.x_minus + f.x_plus) / 2.0;
  Vec3 v = (f.x_minus - f.x_plus) / 2.0;
  double k = 1.0 / std::sqrt(-form21(f.x_minus, f.x_plus) / 2.0);
  Vec3 uh = u / std::sqrt(form21(u, u));
  Mat3 b;
  for (int i = 0; i < 3; ++i) {
    b.a[i][0] = uh[i];
    b.a[i][1] = k * v[i];
    b.a[i][2] = k * t[i];
  }
  return b;
}

std::array<double, 5> singular_values(const Mat5& m) {
  Eigen::Matrix<double, 5, 5> e;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) e(i, j) = m.a[i][j];
  Eigen::JacobiSVD<Eigen::Matrix<double, 5, 5>> svd(e);
  std::array<double, 5> s;
  for (int i = 0; i < 5; ++i) s[i] = svd.singularValues()(i);
  return s;
}

namespace {

using Mat10 = Eigen::Matrix<double, 10, 10>;
using Mat5e = Eigen::Matrix<double, 5, 5>;

Mat5e to_eigen(const Mat5& m) {
  Mat5e e;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) e(i, j) = m.a[i][j];
  return e;
}

// exterior square on the basis e_i ^ e_j, i < j
Mat10 compound2(const Mat5e& g) {
  int pr[10][2], n = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pr[n][0] = i, pr[n][1] = j, ++n;
  Mat10 c;
  for (int r = 0; r < 10; ++r)
    for (int q = 0; q < 10; ++q) {
      int i = pr[r][0], j = pr[r][1], k = pr[q][0], l = pr[q][1];
      c(r, q) = g(i, k) * g(j, l) - g(i, l) * g(j, k);
    }
  return c;
}

CartanPair from_logs(double log_s1, double log_s12) {
  CartanPair p{std::max(log_s1, 0.0), std::max(log_s12 - log_s1, 0.0)};
  if (p.mu > p.lambda) std::swap(p.lambda, p.mu);
  return p;
}

void check_in_group(const Iso32& g, double eps) {
  // scale the tolerance with the entries: products of long words are large
  double big = 0;
  for (const auto& row : g.m.a)
    for (double x : row) big = std::max(big, std::fabs(x));
  if (g.residual() > eps * std::max(1.0, big * big))
    throw GeometryError(Err::NotInGroup, "cartan_projection needs a form-preserving matrix");
}

}  // namespace

CartanPair cartan_projection(const Iso32& g, double eps) {
  check_in_group(g, eps);
  Mat5e e = to_eigen(g.m);
  Eigen::JacobiSVD<Mat5e> s(e);
  Eigen::JacobiSVD<Mat10> c(compound2(e));
  return from_logs(std::log(s.singularValues()(0)), std::log(c.singularValues()(0)));
}

std::vector<CartanPair> cartan_power_sequence(const Iso32& g, int n, double eps) {
  check_in_group(g, eps);
  // powers of g and of its exterior square are carried separately, each with
  // a running log scale, so s1 s2 stays accurate once s2 / s1 underflows
  Mat5e e = to_eigen(g.m), p = Mat5e::Identity();
  Mat10 c = compound2(e), pc = Mat10::Identity();
  double lp = 0, lc = 0;
  std::vector<CartanPair> out;
  for (int k = 1; k <= n; ++k) {
    p = p * e;
    pc = pc * c;
    double sp = p.cwiseAbs().maxCoeff(), sc = pc.cwiseAbs().maxCoeff();
    p /= sp, pc /= sc;
    lp += std::log(sp), lc += std::log(sc);
    Eigen::JacobiSVD<Mat5e> s(p);
    Eigen::JacobiSVD<Mat10> t(pc);
    out.push_back(from_logs(lp + std::log(s.singularValues()(0)), lc + std::log(t.singularValues()(0))));
  }
  return out;
}

std::string to_string(DistortionClass d) {
  switch (d) {
    case DistortionClass::Bounded: return "bounded";
    case DistortionClass::Balanced: return "balanced";
    case DistortionClass::Mixed: return "mixed";
    default: return "undetermined";
  }
}

DistortionClass classify_distortion(const std::vector<CartanPair>& seq, const DistortionThresholds& th) {
  if (seq.empty()) throw GeometryError(Err::EmptySequence, "classify_distortion needs at least one pair");
  std::size_t n = seq.size();
  std::size_t tail = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(th.tail_fraction * n)));
  tail = std::min(tail, n);
  std::size_t start = n - tail;
  const CartanPair& last = seq.back();

  bool mu_small = true, monotone = true;
  double dmin = last.delta(), dmax = last.delta();
  for (std::size_t i = start; i < n; ++i) {
    mu_small = mu_small && seq[i].mu < th.t_bound;
    dmin = std::min(dmin, seq[i].delta());
    dmax = std::max(dmax, seq[i].delta());
    if (i > start) {
      const CartanPair& a = seq[i - 1];
      const CartanPair& b = seq[i];
      monotone = monotone && b.lambda >= a.lambda && b.mu >= a.mu && b.delta() >= a.delta();
    }
  }
  if (mu_small && last.lambda > th.t_div) return DistortionClass::Bounded;
  if (last.lambda > th.t_div && last.mu > th.t_div && dmax - dmin <= th.t_bound)
    return DistortionClass::Balanced;
  const CartanPair& first = seq[start];
  if (last.lambda > th.t_div && last.mu > th.t_div && last.delta() > th.t_div && monotone &&
      last.delta() > first.delta())
    return DistortionClass::Mixed;
  return DistortionClass::Undetermined;
}

}  // namespace ein
