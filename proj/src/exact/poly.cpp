#include "ein3/exact/poly.hpp"

#include <algorithm>

namespace ein::exact {

Poly::Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational Poly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& a) {
  std::vector<Rational> r = a.c;
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

Poly derivative(const Poly& p) {
  if (p.c.size() <= 1) return {};
  std::vector<Rational> r(p.c.size() - 1);
  for (std::size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * Rational(static_cast<long>(i));
  return Poly(std::move(r));
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  std::vector<Rational> qc(std::max(0, a.degree() - b.degree() + 1));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational f = r.lead() / b.lead();
    qc[k] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= f * b.c[i];
    r.trim();
  }
  q = Poly(std::move(qc));
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return Rational(1 / p.lead()) * p;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = y;
    y = monic(r);
  }
  return monic(x);
}

Poly squarefree(const Poly& p) {
  if (p.degree() <= 0) return p;
  Poly g = gcd(p, derivative(p));
  Poly q, r;
  divmod(p, g, q, r);
  return monic(q);
}

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) return;
  seq_.push_back(p);
  seq_.push_back(derivative(p));
  while (!seq_.back().is_zero()) {
    Poly q, r;
    divmod(seq_[seq_.size() - 2], seq_.back(), q, r);
    // scale by a positive constant only, keeps the signs of -rem
    if (!r.is_zero()) r = Rational(-1 / abs(r.lead())) * r;
    seq_.push_back(r);
  }
  seq_.pop_back();
}

namespace {

int count_changes(const std::vector<int>& s) {
  int v = 0, prev = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (prev != 0 && x != prev) ++v;
    prev = x;
  }
  return v;
}

}  // namespace

int SturmChain::variations(const Rational& x) const {
  std::vector<int> s;
  for (const Poly& p : seq_) s.push_back(sgn(p.eval(x)));
  return count_changes(s);
}

int SturmChain::variations_pos_inf() const {
  std::vector<int> s;
  for (const Poly& p : seq_) s.push_back(p.is_zero() ? 0 : sgn(p.lead()));
  return count_changes(s);
}

int SturmChain::variations_neg_inf() const {
  std::vector<int> s;
  for (const Poly& p : seq_) s.push_back(p.is_zero() ? 0 : sgn(p.lead()) * ((p.degree() % 2) ? -1 : 1));
  return count_changes(s);
}

Rational root_bound(const Poly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.c[i] / p.lead())));
  return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const Poly& p0) {
  std::vector<RootInterval> out;
  if (p0.degree() <= 0) return out;
  Poly p = squarefree(p0);
  SturmChain ch(p);
  Rational b = root_bound(p);
  struct Job {
    Rational lo, hi;
  };
  std::vector<Job> jobs{{-b, b}};
  while (!jobs.empty()) {
    Job j = jobs.back();
    jobs.pop_back();
    int n = ch.count(j.lo, j.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(p.eval(j.hi) == 0 ? RootInterval{j.hi, j.hi} : RootInterval{j.lo, j.hi});
      continue;
    }
    Rational mid = (j.lo + j.hi) / 2;
    // keep split points off the roots so every lower end is a non-root
    for (int k = 3; p.eval(mid) == 0; ++k) mid = j.lo + (j.hi - j.lo) / k;
    jobs.push_back({mid, j.hi});
    jobs.push_back({j.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  return out;
}

void refine(const Poly& p, RootInterval& r) {
  if (r.lo == r.hi) return;
  if (p.eval(r.hi) == 0) {
    r.lo = r.hi;
    return;
  }
  Rational mid = (r.lo + r.hi) / 2;
  Rational fm = p.eval(mid);
  if (fm == 0) {
    r.lo = r.hi = mid;
  } else if (sgn(fm) != sgn(p.eval(r.lo))) {
    r.hi = mid;
  } else {
    r.lo = mid;
  }
}

}  // namespace ein::exact
