#pragma once

// Orbifold circle bundles over orbifold surfaces. Normalization: regular
// fibers have length 2 pi and the base has area -2 pi d.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "crsf/error.hpp"
#include "crsf/exactq.hpp"

namespace crsf {

/// Local data over an orbifold point: Z/alpha acts on the base chart by
/// exp(2 pi i rho/alpha) and on the fiber by exp(2 pi i beta/alpha).
struct ConePoint {
  std::int64_t alpha = 1;
  std::int64_t rho = 1;
  std::int64_t beta = 1;

  friend bool operator==(const ConePoint&, const ConePoint&) = default;
};

struct SeifertData {
  Rational degree;
  Rational chi_orb;
  std::vector<ConePoint> cone_points;

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

/// Integrals over M of the constant-curvature pseudohermitian structure.
struct GeomIntegrals {
  PiLaurent vol;       // int theta ^ dtheta
  PiLaurent int_R;     // int R theta ^ dtheta
  PiLaurent int_R2;    // int R^2 theta ^ dtheta
  PiLaurent int_tau2;  // int |tau|^2 theta ^ dtheta
};

struct Diagnostic {
  Errc code;
  std::string message;
};

inline std::vector<Diagnostic> validate(const ConePoint& c) {
  std::vector<Diagnostic> out;
  const std::string tag = "(" + std::to_string(c.alpha) + "," + std::to_string(c.rho) + "," +
                          std::to_string(c.beta) + ")";
  if (c.alpha < 2 || c.rho < 1 || c.rho >= c.alpha || c.beta < 1 || c.beta >= c.alpha) {
    out.push_back({Errc::InvalidConePoint, "cone point " + tag + " needs alpha >= 2 and 1 <= rho, beta < alpha"});
    return out;
  }
  if (std::gcd(c.rho, c.alpha) != 1 || std::gcd(c.beta, c.alpha) != 1)
    out.push_back({Errc::NonCoprime, "cone point " + tag + " has rho or beta not prime to alpha"});
  return out;
}

/// Reports every violated invariant; never throws.
inline std::vector<Diagnostic> validate(const SeifertData& data) {
  std::vector<Diagnostic> out;
  if (data.degree.sign() >= 0)
    out.push_back({Errc::NotPseudoconvex, "degree " + data.degree.str() + " is not negative"});
  for (const auto& c : data.cone_points) {
    auto d = validate(c);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

namespace detail {

inline void require_pseudoconvex(const Rational& degree) {
  if (degree.sign() >= 0)
    throw Error(Errc::NotPseudoconvex, "degree " + degree.str() + " must be negative");
}

inline void require_valid_cones(const std::vector<ConePoint>& cones) {
  for (const auto& c : cones) {
    auto d = validate(c);
    if (!d.empty()) throw Error(Errc::InvalidConePoint, d.front().message);
  }
}

}  // namespace detail

inline Rational orbifold_euler_characteristic(std::int64_t genus, const std::vector<ConePoint>& cones) {
  Rational chi = Rational(2 - 2 * genus);
  for (const auto& c : cones) chi -= Rational(1) - Rational(1, c.alpha);
  return chi;
}

inline SeifertData from_genus(std::int64_t genus, const Rational& degree, std::vector<ConePoint> cones) {
  if (genus < 0) throw Error(Errc::DomainError, "genus must be non-negative");
  detail::require_pseudoconvex(degree);
  detail::require_valid_cones(cones);
  Rational chi = orbifold_euler_characteristic(genus, cones);
  return SeifertData{degree, std::move(chi), std::move(cones)};
}

/// Direct constructor for callers that already know chi_orb.
inline SeifertData from_chi(const Rational& chi_orb, const Rational& degree, std::vector<ConePoint> cones) {
  detail::require_pseudoconvex(degree);
  detail::require_valid_cones(cones);
  return SeifertData{degree, chi_orb, std::move(cones)};
}

/// The standard CR sphere: Hopf bundle of degree -1 over the round sphere.
inline SeifertData sphere() { return SeifertData{Rational(-1), Rational(2), {}}; }

/// L(p, q) as an orbifold bundle over a sphere with two Z/p points. Only the
/// case gcd(q - 1, p) = 1 is supported.
inline SeifertData lens_space(std::int64_t p, std::int64_t q) {
  if (p < 2) throw Error(Errc::DomainError, "lens space needs p >= 2");
  if (std::gcd(p, q) != 1)
    throw Error(Errc::NonCoprime, "q=" + std::to_string(q) + " is not prime to p=" + std::to_string(p));
  if (std::gcd(q - 1, p) != 1)
    throw Error(Errc::GcdCondition, "q-1=" + std::to_string(q - 1) + " is not prime to p=" + std::to_string(p));
  std::vector<ConePoint> cones{
      {p, mod_floor(q - 1, p), 1},
      {p, mod_floor(1 - q, p), mod_floor(q, p)},
  };
  return SeifertData{Rational(-1, p), Rational(2, p), std::move(cones)};
}

/// Constant Tanaka-Webster curvature R = -chi/d.
inline Rational webster_curvature_const(const SeifertData& data) { return -data.chi_orb / data.degree; }

inline GeomIntegrals geom_integrals_const(const SeifertData& data) {
  const Rational r = webster_curvature_const(data);
  const PiLaurent vol = PiLaurent::monomial(Rational(-4) * data.degree, 2);
  return GeomIntegrals{vol, vol * r, vol * (r * r), PiLaurent()};
}

}  // namespace crsf
