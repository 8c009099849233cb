#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ein {

using Rational = mpq_class;

// Parses "p/q", "p" or a plain decimal such as "-1.25" exactly.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

std::optional<Rational> exact_sqrt(const Rational& q);

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

template <class T>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

// Sign with a zero band; the band is ignored for rationals.
inline int sign_of(double v, double band) { return v > band ? 1 : (v < -band ? -1 : 0); }
inline int sign_of(const Rational& v, double) { return sgn(v); }

inline double abs_of(double v) { return std::fabs(v); }
inline Rational abs_of(const Rational& v) { return abs(v); }

}  // namespace ein
