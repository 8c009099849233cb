#pragma once

#include <array>
#include <optional>

#include "ein3/scalar.hpp"

namespace ein::exact {

using Vec3Z = std::array<mpz_class, 3>;
using Vec3R = std::array<Rational, 3>;
using Sym3 = std::array<std::array<Rational, 3>, 3>;

// Nontrivial integer solution of z^2 = a x^2 + b y^2 for squarefree nonzero a, b.
std::optional<Vec3Z> legendre_solve(const mpz_class& a, const mpz_class& b);

// x with x^2 = a mod n, n > 0 squarefree.
std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& n);

// Squarefree part: v = s * m^2 with s squarefree; returns (s, m).
std::pair<mpz_class, mpz_class> squarefree_part(const mpz_class& v);

Rational quad(const Sym3& g, const Vec3R& x, const Vec3R& y);

enum class ConicKind { Empty, Rational, NoRationalPoint, Degenerate };

struct ConicPoint {
  ConicKind kind;
  Vec3R point{};  // valid when kind == Rational
};

// Rational null vector of the ternary form g, if any.
ConicPoint rational_null_vector(const Sym3& g);

}  // namespace ein::exact
