#include <cstdlib>
#include <string>

#include "ein3/crooked.hpp"
#include "ein3/errors.hpp"
#include "ein3/forms.hpp"
#include "ein3/scalar.hpp"
#include "ein3/tolerance.hpp"

namespace ein {

Rational parse_rational(std::string_view sv) {
  std::string s(sv);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  if (s.empty()) throw GeometryError(Err::BadInput, "empty number");
  try {
    auto dot_at = s.find('.');
    auto exp_at = s.find_first_of("eE");
    if (dot_at == std::string::npos && exp_at == std::string::npos) {
      Rational q(s, 10);
      if (q.get_den() == 0) throw GeometryError(Err::BadInput, "zero denominator: " + s);
      q.canonicalize();
      return q;
    }
    std::string mant = s.substr(0, exp_at);
    long ex = exp_at == std::string::npos ? 0 : std::stol(s.substr(exp_at + 1));
    bool neg = !mant.empty() && mant[0] == '-';
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) mant = mant.substr(1);
    std::string digits;
    long frac = 0;
    bool seen = false;
    for (char c : mant) {
      if (c == '.') {
        if (seen) throw GeometryError(Err::BadInput, "bad number: " + s);
        seen = true;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) throw GeometryError(Err::BadInput, "bad number: " + s);
      digits.push_back(c);
      if (seen) ++frac;
    }
    if (digits.empty()) throw GeometryError(Err::BadInput, "bad number: " + s);
    mpz_class num(digits, 10);
    long shift = ex - frac;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift >= 0 ? Rational(num * p10) : Rational(num, p10);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw GeometryError(Err::BadInput, "bad number: " + s);
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

const char* err_name(Err e) {
  switch (e) {
    case Err::NotSpacelike: return "NotSpacelike";
    case Err::BadWingData: return "BadWingData";
    case Err::NotConsistentlyOriented: return "NotConsistentlyOriented";
    case Err::NotAllowable: return "NotAllowable";
    case Err::AtInfinity: return "AtInfinity";
    case Err::SamePoint: return "SamePoint";
    case Err::IncidentPoints: return "IncidentPoints";
    case Err::DegenerateData: return "DegenerateData";
    case Err::ResolutionTooSmall: return "ResolutionTooSmall";
    case Err::NotLorentz: return "NotLorentz";
    case Err::NotInGroup: return "NotInGroup";
    case Err::NotHyperbolic: return "NotHyperbolic";
    case Err::NotPaired: return "NotPaired";
    case Err::EmptySequence: return "EmptySequence";
    case Err::UngluedMesh: return "UngluedMesh";
    case Err::IrrationalFrame: return "IrrationalFrame";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

namespace {

double env_or(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  double x = std::strtod(v, &end);
  return (end && *end == '\0' && x > 0) ? x : fallback;
}

}  // namespace

const Tolerances& default_tol() {
  static const Tolerances t = [] {
    Tolerances r;
    r.causal = env_or("EIN3_EPS_CAUSAL", r.causal);
    r.pred = env_or("EIN3_EPS_PRED", r.pred);
    r.mesh = env_or("EIN3_EPS_MESH", r.mesh);
    r.group = env_or("EIN3_EPS_GROUP", r.group);
    return r;
  }();
  return t;
}

std::string to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Lightlike: return "lightlike";
    default: return "zero";
  }
}

}  // namespace ein
