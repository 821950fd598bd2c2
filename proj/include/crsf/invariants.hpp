#pragma once

// The nu-invariant, the renormalized eta-invariant eta_0, the contact
// eta-invariant eta(D*), Ouyang's eta family and the diabatic expansion for
// CR-Seifert manifolds.

#include <array>
#include <variant>

#include "crsf/dedekind.hpp"
#include "crsf/exactq.hpp"
#include "crsf/seifert.hpp"

namespace crsf {

/// t^2 for which t^2 theta^2 + gamma is the round metric on S^3 (and its
/// quotients) in the 2 pi fiber-length normalization.
inline Rational round_metric_t2() { return Rational(2); }

/// A user-supplied curvature integral: exact as a pi-Laurent value or floating-point.
using CurvatureIntegral = std::variant<PiLaurent, double>;

/// Sum of s(alpha_j, rho_j, beta_j) over the cone points.
inline Rational dedekind_total(const SeifertData& data) {
  Rational acc(0);
  for (const auto& c : data.cone_points) acc += dedekind_rademacher(c.alpha, c.rho, c.beta);
  return acc;
}

inline Rational eta0(const SeifertData& data) {
  return Rational(1) + data.degree / Rational(3) + Rational(4) * dedekind_total(data);
}

/// Constant-curvature formula: nu = -d - 3 - chi^2/(4d) - 12 sum s.
inline Rational nu(const SeifertData& data) {
  const Rational& d = data.degree;
  const Rational& chi = data.chi_orb;
  return -d - Rational(3) - chi * chi / (Rational(4) * d) - Rational(12) * dedekind_total(data);
}

/// General formula: nu = -d - 3 - 12 sum s + (1/8 pi) int_Sigma R^2 dtheta, with
/// the base integral supplied by the caller. An exact integral must be a
/// multiple of pi, otherwise ExponentMismatch is raised.
inline Scalar nu(const SeifertData& data, const CurvatureIntegral& int_R2_base) {
  const Rational topological = -data.degree - Rational(3) - Rational(12) * dedekind_total(data);
  if (const auto* exact = std::get_if<PiLaurent>(&int_R2_base)) {
    const PiLaurent local = *exact * PiLaurent::monomial(Rational(1, 8), -1);
    return topological + local.to_rational();
  }
  return topological.to_double() + std::get<double>(int_R2_base) / (8.0 * std::numbers::pi);
}

/// nu = -3 eta_0 + (1/16 pi^2) int_M R^2 theta ^ dtheta.
inline Rational nu_from_eta0(const Rational& eta_0, const PiLaurent& int_R2) {
  const PiLaurent local = int_R2 * PiLaurent::monomial(Rational(1, 16), -2);
  return Rational(-3) * eta_0 + local.to_rational();
}

inline double nu_from_eta0(const Rational& eta_0, double int_R2) {
  return -3.0 * eta_0.to_double() + int_R2 / (16.0 * std::numbers::pi * std::numbers::pi);
}

/// zeta(Delta_H)(0) = (1/512) int_M R^2 theta ^ dtheta.
inline PiLaurent zeta_deltaH(const PiLaurent& int_R2) { return int_R2 * PiLaurent(Rational(1, 512)); }

/// eta(D*) = eta_0 - zeta(Delta_H)(0) on constant-curvature data.
inline PiLaurent eta_dstar(const SeifertData& data) {
  return PiLaurent(eta0(data)) - zeta_deltaH(geom_integrals_const(data).int_R2);
}

/// The normalizing area in Ouyang's formula: the base area -2 pi d.
inline PiLaurent ouyang_volume(const SeifertData& data) {
  return PiLaurent::monomial(Rational(-2) * data.degree, 1);
}

/// Ouyang's eta-invariant of t^2 theta^2 + gamma,
///   (1/3)(d + 3 + 2d(pi t^2 chi/V - pi^2 t^4 d^2/V^2)) + 4 sum s,
/// evaluated symbolically in pi; the pi's cancel.
inline Rational ouyang_eta(const SeifertData& data, const Rational& t2) {
  if (t2.sign() <= 0) throw Error(Errc::DomainError, "t^2 must be positive");
  const Rational& d = data.degree;
  const PiLaurent v = ouyang_volume(data);
  const PiLaurent pi = PiLaurent::pi_pow(1);
  const PiLaurent bracket = pi * PiLaurent(t2 * data.chi_orb) / v - pi * pi * PiLaurent(t2 * t2 * d * d) / (v * v);
  const PiLaurent total =
      PiLaurent(Rational(1, 3)) * (PiLaurent(d + Rational(3)) + PiLaurent(Rational(2) * d) * bracket) +
      PiLaurent(Rational(4) * dedekind_total(data));
  return total.to_rational();
}

/// eta(t) = c0 + c1 t^2 + c2 t^4.
struct OuyangEta {
  Rational c0, c1, c2;

  Rational operator()(const Rational& t2) const { return c0 + c1 * t2 + c2 * t2 * t2; }
};

/// Coefficients of ouyang_eta as a polynomial in t^2, recovered by exact
/// quadratic interpolation through t^2 = 1, 2, 3.
inline OuyangEta ouyang_polynomial(const SeifertData& data) {
  const Rational y1 = ouyang_eta(data, Rational(1));
  const Rational y2 = ouyang_eta(data, Rational(2));
  const Rational y3 = ouyang_eta(data, Rational(3));
  const Rational c2 = (y3 - Rational(2) * y2 + y1) / Rational(2);
  const Rational c1 = y2 - y1 - Rational(3) * c2;
  const Rational c0 = y1 - c1 - c2;
  return OuyangEta{c0, c1, c2};
}

/// eta(h_eps) = sum_i eta_i eps^i with eps = t^{-2}.
inline LaurentEps diabatic_expansion(const SeifertData& data) {
  const OuyangEta poly = ouyang_polynomial(data);
  LaurentEps out;
  out.set(-2, poly.c2);
  out.set(-1, poly.c1);
  out.set(0, poly.c0);
  return out;
}

/// zeta(Q+_eps)(0) = (1/48 pi^2 eps^2)(vol - 2 eps int_R + eps^2 int_tau2), from
/// Scal(g_eps) = -1/2 + 2 eps R - eps^2 |tau|^2.
inline LaurentEps zeta_Q_expansion(const GeomIntegrals& g) {
  const PiLaurent scale = PiLaurent::monomial(Rational(1, 48), -2);
  LaurentEps out;
  out.set(-2, scale * g.vol);
  out.set(-1, scale * PiLaurent(Rational(-2)) * g.int_R);
  out.set(0, scale * g.int_tau2);
  return out;
}

/// zeta_0(Q) = 2 * [eps^0] zeta(Q+_eps)(0) = (1/24 pi^2) int |tau|^2.
inline PiLaurent zeta0_Q(const GeomIntegrals& g) {
  return PiLaurent(Rational(2)) * zeta_Q_expansion(g).coefficient(0);
}

/// nu = -3 eta(D*) + (1/16 pi^2 - 3/512) int R^2, checked exactly.
inline bool check_cor15(const SeifertData& data) {
  const PiLaurent int_R2 = geom_integrals_const(data).int_R2;
  const PiLaurent factor = PiLaurent::monomial(Rational(1, 16), -2) - PiLaurent(Rational(3, 512));
  const PiLaurent rhs = PiLaurent(Rational(-3)) * eta_dstar(data) + factor * int_R2;
  return rhs == PiLaurent(nu(data));
}

}  // namespace crsf
