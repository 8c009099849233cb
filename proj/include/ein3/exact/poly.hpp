#pragma once

#include <vector>

#include "ein3/scalar.hpp"

namespace ein::exact {

// Dense univariate polynomial over Q, c[i] is the coefficient of t^i.
struct Poly {
  std::vector<Rational> c;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& a) { return Poly({a}); }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rational& lead() const { return c.back(); }
  Rational eval(const Rational& t) const;
  void trim();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, const Poly& a);
Poly derivative(const Poly& p);
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly monic(const Poly& p);
Poly gcd(const Poly& a, const Poly& b);
Poly squarefree(const Poly& p);

class SturmChain {
 public:
  explicit SturmChain(const Poly& p);
  int variations(const Rational& x) const;
  int variations_neg_inf() const;
  int variations_pos_inf() const;
  // distinct real roots in (a, b]
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
  int count_real() const { return variations_neg_inf() - variations_pos_inf(); }

 private:
  std::vector<Poly> seq_;
};

// Root in (lo, hi], or exactly lo when lo == hi.
struct RootInterval {
  Rational lo, hi;
};

Rational root_bound(const Poly& p);
std::vector<RootInterval> isolate_real_roots(const Poly& p);
// Halves the interval while keeping the root inside.
void refine(const Poly& p, RootInterval& r);

}  // namespace ein::exact
