#include "ein3/exact/conic.hpp"

#include <vector>

namespace ein::exact {

namespace {

std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> ps;
  if (n < 0) n = -n;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
    if (p > 10000000) break;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

mpz_class mod(const mpz_class& a, const mpz_class& n) {
  mpz_class r = a % n;
  if (r < 0) r += n;
  return r;
}

mpz_class powm(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a0, const mpz_class& p) {
  mpz_class a = mod(a0, p);
  if (a == 0 || p == 2) return a;
  if (powm(a, (p - 1) / 2, p) != 1) return std::nullopt;
  // Tonelli-Shanks
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (q % 2 == 0) q /= 2, ++s;
  mpz_class z = 2;
  while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
  mpz_class c = powm(z, q, p), x = powm(a, (q + 1) / 2, p), t = powm(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class tt = t;
    while (tt != 1) tt = tt * tt % p, ++i;
    mpz_class b = c;
    for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

}  // namespace

std::pair<mpz_class, mpz_class> squarefree_part(const mpz_class& v) {
  mpz_class s = v < 0 ? mpz_class(-1) : mpz_class(1), m = 1, n = abs(v);
  for (mpz_class p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) n /= p * p, m *= p;
    if (n % p == 0) n /= p, s *= p;
    if (p > 10000000) break;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    m *= r;
  } else {
    s *= n;
  }
  return {s, m};
}

std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& n) {
  if (n == 1) return mpz_class(0);
  mpz_class x = 0, mdl = 1;
  for (const mpz_class& p : prime_factors(n)) {
    auto r = sqrt_mod_prime(a, p);
    if (!r) return std::nullopt;
    // CRT: x = x mod mdl, x = r mod p
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mdl.get_mpz_t(), p.get_mpz_t());
    mpz_class k = mod((*r - x) * inv, p);
    x += k * mdl;
    mdl *= p;
  }
  return mod(x, mdl);
}

std::optional<Vec3Z> legendre_solve(const mpz_class& a, const mpz_class& b) {
  if (a == 1) return Vec3Z{1, 0, 1};
  if (b == 1) return Vec3Z{0, 1, 1};
  if (a < 0 && b < 0) return std::nullopt;
  if (abs(a) > abs(b)) {
    auto r = legendre_solve(b, a);
    if (!r) return std::nullopt;
    return Vec3Z{(*r)[1], (*r)[0], (*r)[2]};
  }
  mpz_class n = abs(b);
  auto t0 = sqrt_mod(a, n);
  if (!t0) return std::nullopt;
  mpz_class t = *t0;
  if (2 * t > n) t -= n;
  mpz_class k = (t * t - a) / b;
  if (k == 0) return std::nullopt;
  auto [kp, m] = squarefree_part(k);
  auto r = legendre_solve(a, kp);
  if (!r) return std::nullopt;
  const mpz_class &x1 = (*r)[0], &y1 = (*r)[1], &z1 = (*r)[2];
  Vec3Z out{t * x1 + z1, kp * m * y1, t * z1 + a * x1};
  if (out[0] == 0 && out[1] == 0 && out[2] == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), out[0].get_mpz_t(), out[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[2].get_mpz_t());
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

Rational quad(const Sym3& g, const Vec3R& x, const Vec3R& y) {
  Rational s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += x[i] * g[i][j] * y[j];
  return s;
}

ConicPoint rational_null_vector(const Sym3& g) {
  std::array<Vec3R, 3> v;
  for (int i = 0; i < 3; ++i) {
    v[i] = {0, 0, 0};
    v[i][i] = 1;
  }
  Rational d[3];
  int rank = 0;
  for (int i = 0; i < 3; ++i) {
    d[i] = quad(g, v[i], v[i]);
    if (d[i] == 0) {
      // an isotropic basis vector: either a rational point or a radical direction
      bool radical = true;
      for (int j = 0; j < 3; ++j)
        if (quad(g, v[i], v[j]) != 0) radical = false;
      if (!radical) return {ConicKind::Rational, v[i]};
      continue;
    }
    ++rank;
    for (int j = i + 1; j < 3; ++j) {
      Rational c = quad(g, v[j], v[i]) / d[i];
      for (int k = 0; k < 3; ++k) v[j][k] -= c * v[i][k];
    }
  }
  if (rank < 3) return {ConicKind::Degenerate, {}};
  int pos = (d[0] > 0) + (d[1] > 0) + (d[2] > 0);
  if (pos == 0 || pos == 3) return {ConicKind::Empty, {}};
  // d0 x^2 + d1 y^2 + d2 z^2 = 0  <=>  z^2 = A x^2 + B y^2
  Rational A = -d[0] / d[2], B = -d[1] / d[2];
  auto integral = [](const Rational& q) {
    // q = num/den = (num*den)/den^2 = s m^2 / den^2
    auto [s, m] = squarefree_part(q.get_num() * q.get_den());
    return std::tuple<mpz_class, mpz_class, mpz_class>{s, m, q.get_den()};
  };
  auto [sa, ma, da] = integral(A);
  auto [sb, mb, db] = integral(B);
  auto sol = legendre_solve(sa, sb);
  if (!sol) return {ConicKind::NoRationalPoint, {}};
  // A x^2 = sa (ma x / da)^2, so x = X da / ma
  Rational x = Rational((*sol)[0]) * Rational(da) / Rational(ma);
  Rational y = Rational((*sol)[1]) * Rational(db) / Rational(mb);
  Rational z = Rational((*sol)[2]);
  Vec3R p;
  for (int k = 0; k < 3; ++k) p[k] = x * v[0][k] + y * v[1][k] + z * v[2][k];
  if (quad(g, p, p) != 0) return {ConicKind::NoRationalPoint, {}};
  return {ConicKind::Rational, p};
}

}  // namespace ein::exact
