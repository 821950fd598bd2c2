#pragma once

// Left-invariant metrics on S^3 (Berger spheres). All closed forms are
// rational in lambda^2, which is what the functions take.

#include <array>

#include "crsf/error.hpp"
#include "crsf/exactq.hpp"

namespace crsf {

/// Volume of the coframe, int alpha_3 ^ alpha_1 ^ alpha_2, under d alpha_1 = alpha_2 ^ alpha_3.
inline PiLaurent berger_frame_volume() { return PiLaurent::monomial(Rational(16), 2); }

namespace detail {

inline void require_positive(const Rational& x, const char* name) {
  if (x.sign() <= 0) throw Error(Errc::DomainError, std::string(name) + " must be positive, got " + x.str());
}

}  // namespace detail

/// Hitchin's eta for l1 a1^2 + l2 a2^2 + l3 a3^2 (li = lambda_i^2):
/// (2/3)((s1^3 - 4 s1 s2)/s3 + 9) with s_i the elementary symmetric polynomials.
inline Rational hitchin_eta(const Rational& l1, const Rational& l2, const Rational& l3) {
  detail::require_positive(l1, "lambda_1^2");
  detail::require_positive(l2, "lambda_2^2");
  detail::require_positive(l3, "lambda_3^2");
  const Rational s1 = l1 + l2 + l3;
  const Rational s2 = l1 * l2 + l1 * l3 + l2 * l3;
  const Rational s3 = l1 * l2 * l3;
  return Rational(2, 3) * ((s1 * s1 * s1 - Rational(4) * s1 * s2) / s3 + Rational(9));
}

/// eta_0(a1^2 + lambda^2 a2^2) = (2/(3 lambda^2))(-lambda^4 + 3 lambda^2 - 1).
inline Rational berger_eta0(const Rational& lambda2) {
  detail::require_positive(lambda2, "lambda^2");
  return Rational(2) / (Rational(3) * lambda2) * (-lambda2 * lambda2 + Rational(3) * lambda2 - Rational(1));
}

/// Laurent coefficients of hitchin_eta(1, lambda^2, x) in x = lambda_3^2:
/// index 0..3 holds the x^2, x^1, x^0, x^-1 coefficients. x * eta is a cubic
/// polynomial in x, recovered exactly from its values at x = 1..4.
inline std::array<Rational, 4> hitchin_adiabatic_coefficients(const Rational& lambda2) {
  std::array<Rational, 4> y;
  for (int i = 0; i < 4; ++i) y[i] = Rational(i + 1) * hitchin_eta(Rational(1), lambda2, Rational(i + 1));
  // Newton forward differences at x = 1, 2, 3, 4.
  const Rational d1 = y[1] - y[0], d2 = y[2] - Rational(2) * y[1] + y[0];
  const Rational d3 = y[3] - Rational(3) * y[2] + Rational(3) * y[1] - y[0];
  // p(x) = y0 + d1 (x-1) + d2 (x-1)(x-2)/2 + d3 (x-1)(x-2)(x-3)/6, expanded.
  const Rational a3 = d3 / Rational(6);
  const Rational a2 = d2 / Rational(2) - a3 * Rational(6);
  const Rational a1 = d1 - d2 * Rational(3, 2) + a3 * Rational(11);
  const Rational a0 = y[0] - d1 + d2 - a3 * Rational(6);
  return {a3, a2, a1, a0};
}

struct WebsterSquares {
  Rational R2;
  Rational tau2;
};

/// R = (1 + lambda^2)/(2 lambda), |tau| = (1 - lambda^2)/(2 lambda), squared.
inline WebsterSquares berger_webster(const Rational& lambda2) {
  detail::require_positive(lambda2, "lambda^2");
  const Rational four_l2 = Rational(4) * lambda2;
  const Rational plus = Rational(1) + lambda2, minus = Rational(1) - lambda2;
  return WebsterSquares{plus * plus / four_l2, minus * minus / four_l2};
}

/// Burns-Epstein mu of lambda^{-1} a1^2 + lambda a2^2.
inline Rational berger_mu(const Rational& lambda2) {
  detail::require_positive(lambda2, "lambda^2");
  const Rational minus = Rational(1) - lambda2;
  return Rational(-1) + Rational(3) * minus * minus / (Rational(4) * lambda2);
}

inline Rational berger_nu(const Rational& lambda2) {
  detail::require_positive(lambda2, "lambda^2");
  const Rational minus = Rational(1) - lambda2;
  return Rational(-1) + Rational(9) * minus * minus / (Rational(4) * lambda2);
}

}  // namespace crsf
